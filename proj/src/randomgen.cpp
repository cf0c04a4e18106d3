#include "ahx/randomgen.hpp"

#include "ahx/charp.hpp"

namespace ahx {

FpSeries random_property_series(std::uint64_t p, long T, Rng& rng) {
    FpElem c(rng.below(p), p);
    long gdeg = T / static_cast<long>(p);
    FpSeries g = FpSeries::make(p, gdeg, FpElem(0, p));
    g.at(0) = FpElem(1, p);
    for (long m = 1; m <= gdeg; ++m) g.at(m) = FpElem(rng.below(p), p);
    return synthesize(c, g, T);
}

FpSeries random_arbitrary_series(std::uint64_t p, long T, Rng& rng) {
    FpSeries f = FpSeries::make(p, T, FpElem(0, p));
    f.at(0) = FpElem(1, p);
    for (long k = 1; k <= T; ++k) f.at(k) = FpElem(rng.below(p), p);
    return f;
}

namespace {
constexpr std::uint64_t kDrawRange = 64;  // small integer draws keep chains readable

PadicNum draw_zp(const PrecisionPolicy& pol, Rng& rng) {
    return PadicNum::from_mpz(mpz_class(static_cast<unsigned long>(rng.below(kDrawRange))), pol);
}
}  // namespace

LogCoefficients random_cond2_log(std::uint64_t p, long T, const PrecisionPolicy& pol, Rng& rng) {
    LogCoefficients g;
    g.p = p;
    g.trunc = T;
    g.c.assign(static_cast<std::size_t>(T) + 1, PadicNum::exact_zero(pol));
    long lp = static_cast<long>(p);
    for (long r = 1; r <= T; ++r) {
        if (r > 1 && r % lp == 0) continue;  // chain roots only: r = 1 or p not| r
        PadicNum base = draw_zp(pol, rng);
        if (r > 1) base = base.times_int(lp);  // off-chain roots start in pZ_p
        g.c[static_cast<std::size_t>(r)] = base;
        PadicNum prev = base;
        for (long j = r * lp; j <= T; j *= lp) {
            // c_(pj) = c_j / p + fresh Z_p draw: telescopes p*c_(pj) - c_j into pZ_p.
            PadicNum next = prev.div_int(static_cast<unsigned long>(p)) + draw_zp(pol, rng);
            g.c[static_cast<std::size_t>(j)] = next;
            prev = next;
        }
    }
    return g;
}

LogCoefficients random_cond2_violator(std::uint64_t p, long T, const PrecisionPolicy& pol,
                                      Rng& rng, int* family_out) {
    LogCoefficients g = random_cond2_log(p, T, pol, rng);
    long lp = static_cast<long>(p);
    int family = static_cast<int>(rng.below(3)) + 1;

    // Candidates that keep the failure provably inside the truncation window.
    std::vector<long> family3_roots;
    for (long j = 2; j <= T; ++j)
        if (j % lp != 0) family3_roots.push_back(j);
    if (family == 3 && family3_roots.empty()) family = 2;
    if (family == 1 && T < lp) family = 2;

    auto add_at = [&](long j, const PadicNum& delta) {
        g.c[static_cast<std::size_t>(j)] = g.c[static_cast<std::size_t>(j)] + delta;
    };
    PadicNum one = PadicNum::from_int(1, pol);

    if (family == 2) {
        // c_1 leaves Z_p; the whole chain above absorbs matching 1/p^(k+1) shifts
        // so every family-1 congruence along it is untouched.
        add_at(1, one.div_int(static_cast<unsigned long>(p)));
        unsigned long pk = static_cast<unsigned long>(p);
        for (long j = lp; j <= T; j *= lp) {
            pk *= static_cast<unsigned long>(p);
            add_at(j, one.div_int(pk));
        }
    } else if (family == 3) {
        long j = family3_roots[static_cast<std::size_t>(rng.below(family3_roots.size()))];
        add_at(j, one);  // a unit: c_j lands outside pZ_p
        unsigned long pk = 1;
        for (long m = j * lp; m <= T; m *= lp) {
            pk *= static_cast<unsigned long>(p);
            add_at(m, one.div_int(pk));
        }
    } else {
        // Break p*c_(pj) - c_j at a pair with pj <= T; compensate above.
        long j = static_cast<long>(rng.below(static_cast<std::uint64_t>(T / lp))) + 1;
        add_at(j * lp, one.div_int(static_cast<unsigned long>(p)));
        unsigned long pk = static_cast<unsigned long>(p);
        for (long m = j * lp * lp; m <= T; m *= lp) {
            pk *= static_cast<unsigned long>(p);
            add_at(m, one.div_int(pk));
        }
    }
    if (family_out) *family_out = family;
    return g;
}

}  // namespace ahx

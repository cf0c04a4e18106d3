#include "ahx/artinhasse.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ahx {

namespace {

// Exact-rational truncated series helpers (local: only this module expands in Q).
std::vector<mpq_class> rat_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> r(a.size(), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<mpq_class> rat_inv(const std::vector<mpq_class>& a) {
    std::vector<mpq_class> r(a.size(), mpq_class(0));
    r[0] = 1 / a[0];
    for (std::size_t k = 1; k < a.size(); ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += a[i] * r[k - i];
        r[k] = -r[0] * acc;
    }
    return r;
}

}  // namespace

long mpq_valuation_p(const mpq_class& q, std::uint64_t p) {
    if (q == 0) raise(errc::invalid_argument, "valuation of exact rational zero");
    mpz_class scratch;
    mpz_class pz(static_cast<unsigned long>(p));
    long vn = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

FpElem mpq_reduce_modp(const mpq_class& q, std::uint64_t p) {
    if (q == 0) return FpElem(0, p);
    long v = mpq_valuation_p(q, p);
    if (v < 0) raise(errc::not_integral, "rational with negative p-valuation");
    if (v > 0) return FpElem(0, p);
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz;
    mpz_class den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den < 0) den += pz;
    return FpElem(num.get_ui(), p) * FpElem(den.get_ui(), p).inv();
}

std::vector<mpq_class> ah_rational_oracle(std::uint64_t p, long T) {
    std::vector<mpq_class> a(static_cast<std::size_t>(T) + 1, mpq_class(0));
    a[0] = 1;
    for (long n = 1; n <= T; ++n) {
        mpq_class s = 0;
        for (long q = 1; q <= n; q *= static_cast<long>(p)) {
            s += a[static_cast<std::size_t>(n - q)];
            if (q > n / static_cast<long>(p)) break;  // avoid overflow on q *= p
        }
        a[static_cast<std::size_t>(n)] = s / n;
    }
    return a;
}

AHSeries ah_build(std::uint64_t p, long T, const PrecisionPolicy& pol) {
    require_prime_modulus(p);
    PadicSeries g = PadicSeries::make(p, T, PadicNum::exact_zero(pol));
    PadicNum one = PadicNum::from_int(1, pol);
    unsigned long q = 1;
    for (long i = 0;; ++i) {
        if (static_cast<long>(q) > T) break;
        g.at(static_cast<long>(q)) = one.div_int(q);  // X^(p^i) / p^i
        if (q > static_cast<unsigned long>(T) / p) break;
        q *= static_cast<unsigned long>(p);
    }
    PadicSeries f = (T >= 1) ? ser_exp(g) : [&] {
        PadicSeries c = PadicSeries::make(p, 0, PadicNum::exact_zero(pol));
        c.at(0) = one;
        return c;
    }();

    // Certify integrality coefficient by coefficient before reducing.
    for (long k = 0; k <= T; ++k) {
        Trit t = f.at(k).in_p_power_zp(0);
        if (t == Trit::no)
            raise_at(errc::integrality_violation,
                     "coefficient at degree " + std::to_string(k) +
                         " has certified negative valuation",
                     k);
        if (t == Trit::unknown)
            raise_at(errc::insufficient_precision,
                     "integrality undecidable at degree " + std::to_string(k), k);
    }
    AHSeries out;
    out.p = p;
    out.trunc = T;
    out.exact = f;
    out.modp = reduce_series(f);
    return out;
}

AHSeries ah_build(std::uint64_t p, long T) {
    return with_precision_ladder(PrecisionPolicy::for_truncation(p, T),
                                 [&](const PrecisionPolicy& pol) { return ah_build(p, T, pol); });
}

const FpSeries& ah_modp_cached(std::uint64_t p, long T) {
    static std::map<std::pair<std::uint64_t, long>, FpSeries> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, T);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ah_build(p, T).modp).first;
    return it->second;
}

FpSeries gerstenhaber_series(std::uint64_t p, long T) {
    std::size_t n = static_cast<std::size_t>(T) + 1;
    std::vector<mpq_class> expx(n, mpq_class(0));
    mpz_class fact = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        expx[k] = mpq_class(1) / mpq_class(fact);
    }
    std::vector<mpq_class> den(n, mpq_class(0));
    for (std::size_t m = 0; m * p < n; ++m)
        den[m * p] = expx[m * p];  // X^(mp)/(mp)! shares exp(X)'s coefficients
    std::vector<mpq_class> prod = rat_mul(expx, rat_inv(den));

    FpSeries r = FpSeries::make(p, T, FpElem(0, p));
    for (long k = 0; k <= T; ++k) {
        const mpq_class& q = prod[static_cast<std::size_t>(k)];
        if (q != 0 && mpq_valuation_p(q, p) < 0)
            raise_at(errc::integrality_violation,
                     "coefficient at degree " + std::to_string(k) + " is not p-integral", k);
        r.at(k) = mpq_reduce_modp(q, p);
    }
    return r;
}

FpSeries logderiv_target(std::uint64_t p, long T) {
    FpSeries r = FpSeries::make(p, T, FpElem(0, p));
    mpz_class q = 1;
    while (q - 1 <= T) {
        r.at(mpz_class(q - 1).get_si()) = FpElem(1, p);
        q *= static_cast<unsigned long>(p);
    }
    return r;
}

}  // namespace ahx

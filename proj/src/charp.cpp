#include "ahx/charp.hpp"

#include "ahx/artinhasse.hpp"

namespace ahx {

namespace {
void require_unit_one(const FpSeries& f) {
    if (f.at(0).value() != 1)
        raise(errc::non_unit_constant_term, "series must have constant term 1");
}
}  // namespace

const FpElem& AdditiveLogDeriv::at(long i) const {
    for (const auto& e : b)
        if (e.first == i) return e.second;
    raise(errc::invalid_argument, "no additive coefficient at index " + std::to_string(i));
}

CheckReport check_defect_support(const FpSeries& f) {
    require_unit_one(f);
    return support_multiple_p(defect(f), f.p);
}

FpSeries synthesize(const FpElem& c, const FpSeries& g, long T) {
    if (c.modulus() != g.p) raise(errc::context_mismatch, "scalar and series with different p");
    require_unit_one(g);
    FpSeries ec = ser_compose_scale(ah_modp_cached(g.p, T), c);
    return ser_mul(ec, ser_plug_xp(g, g.p, T));
}

DecompResult decompose(const FpSeries& f) {
    require_unit_one(f);
    long T = f.trunc;
    std::uint64_t p = f.p;
    FpElem c = T >= 1 ? f.at(1) : FpElem(0, p);  // c is forced to a_1
    FpSeries ec = ser_compose_scale(ah_modp_cached(p, T), c);
    FpSeries q = ser_mul(f, ser_inv(ec));

    DecompResult out;
    out.c = c;
    for (long k = 1; k <= q.known_to; ++k) {
        if (k % static_cast<long>(p) != 0 && !q.at(k).is_zero()) {
            out.residual_ok = false;
            out.g = FpSeries::make(p, T / static_cast<long>(p), FpElem(0, p));
            out.g.at(0) = FpElem(1, p);
            out.report =
                CheckReport::failing(q.known_to, Violation{{k}, q.at(k).str()}, "not_p_supported");
            return out;
        }
    }
    out.residual_ok = true;
    out.g = ser_extract_pth(q, p);
    out.report = CheckReport::passing(q.known_to);
    return out;
}

LogDerivConstant logderiv_constant(const FpSeries& f) {
    require_unit_one(f);
    FpSeries L = ser_mul(ser_derivative(f), ser_inv(f));
    FpElem c = L.known_to >= 0 ? L.at(0) : FpElem(0, f.p);
    FpSeries target = logderiv_target(f.p, f.trunc);
    LogDerivConstant out;
    for (long k = 0; k <= L.known_to; ++k) {
        FpElem want = c * target.at(k);
        if (L.at(k) != want) {
            out.report = CheckReport::failing(L.known_to, Violation{{k}, L.at(k).str()},
                                              "logderiv_mismatch");
            return out;
        }
    }
    out.c = c;
    out.report = CheckReport::passing(L.known_to);
    return out;
}

AdditiveLogDerivResult additive_logderiv(const FpSeries& f) {
    require_unit_one(f);
    FpSeries L = ser_mul(ser_derivative(f), ser_inv(f));
    // h = X * f'/f: shifting fills the top coefficient back in, so h is
    // certified through degree min(T, known(L)+1).
    FpSeries h = FpSeries::make(f.p, f.trunc, FpElem(0, f.p));
    h.known_to = std::min(f.trunc, L.known_to + 1);
    for (long k = 1; k <= f.trunc; ++k) h.at(k) = L.at(k - 1);

    AdditiveLogDerivResult out;
    out.report = is_additive(h);
    if (!out.report.pass) return out;
    AdditiveLogDeriv b;
    long q = 1;
    for (long i = 0; q <= h.known_to; ++i) {
        b.b.emplace_back(i, h.at(q));
        if (q > h.known_to / static_cast<long>(f.p)) break;
        q *= static_cast<long>(f.p);
    }
    out.b = std::move(b);
    return out;
}

CheckReport recurrence_check(const FpSeries& f, const AdditiveLogDeriv& b) {
    require_unit_one(f);
    if (!b.b.empty() && f.at(1) != b.b.front().second)
        return CheckReport::failing(f.trunc, Violation{{1L}, f.at(1).str()}, "a1_b0_mismatch");
    for (long k = 1; k <= f.known_to - 1; ++k) {
        FpElem lhs = f.at(k).times_int(k);
        FpElem rhs(0, f.p);
        for (const auto& [i, bi] : b.b) {
            long q = 1;
            for (long t = 0; t < i; ++t) q *= static_cast<long>(f.p);
            if (q > k) break;
            rhs = rhs + bi * f.at(k - q);
        }
        if (lhs != rhs)
            return CheckReport::failing(f.known_to - 1, Violation{{k}, lhs.str()},
                                        "recurrence_mismatch");
    }
    return CheckReport::passing(f.known_to - 1);
}

EnumerationSets enumerate_small(std::uint64_t p, long T) {
    mpz_class total = 1;
    for (long k = 0; k < T; ++k) total *= static_cast<unsigned long>(p);
    if (T > 10 || total > 1024)
        raise(errc::too_large,
              "enumeration bound exceeded (need T <= 10 and p^T <= 1024)");
    std::uint64_t count = total.get_ui();

    EnumerationSets out;
    // Every candidate 1 + a_1 X + ... + a_T X^T, tested by full defect computation.
    for (std::uint64_t n = 0; n < count; ++n) {
        FpSeries f = FpSeries::make(p, T, FpElem(0, p));
        f.at(0) = FpElem(1, p);
        std::uint64_t d = n;
        for (long k = 1; k <= T; ++k) {
            f.at(k) = FpElem(d % p, p);
            d /= p;
        }
        if (check_defect_support(f).pass) {
            std::vector<std::uint64_t> key;
            key.reserve(static_cast<std::size_t>(T) + 1);
            for (long k = 0; k <= T; ++k) key.push_back(f.at(k).value());
            out.s_property.insert(std::move(key));
        }
    }
    // Every synthesize(c, g) truncation over all c and all g of degree floor(T/p).
    long gdeg = T / static_cast<long>(p);
    std::uint64_t gcount = 1;
    for (long k = 0; k < gdeg; ++k) gcount *= p;
    for (std::uint64_t cv = 0; cv < p; ++cv) {
        for (std::uint64_t n = 0; n < gcount; ++n) {
            FpSeries g = FpSeries::make(p, gdeg, FpElem(0, p));
            g.at(0) = FpElem(1, p);
            std::uint64_t d = n;
            for (long k = 1; k <= gdeg; ++k) {
                g.at(k) = FpElem(d % p, p);
                d /= p;
            }
            FpSeries f = synthesize(FpElem(cv, p), g, T);
            std::vector<std::uint64_t> key;
            key.reserve(static_cast<std::size_t>(T) + 1);
            for (long k = 0; k <= T; ++k) key.push_back(f.at(k).value());
            out.s_form.insert(std::move(key));
        }
    }
    return out;
}

}  // namespace ahx

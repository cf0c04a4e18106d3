#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ahx/errors.hpp"
#include "ahx/fp.hpp"
#include "ahx/padic.hpp"

namespace ahx {

// Univariate truncated power series a_0 + a_1 X + ... + a_T X^T over a scalar
// ring S (FpElem or PadicNum). The series is known modulo X^(trunc+1).
//
// known_to tracks how far the coefficients are assertions rather than
// bookkeeping: positions above known_to are stored as zeros but carry no
// claim (a formal derivative, for instance, says nothing about its top
// coefficient). Predicates only ever scan up to known_to and report that
// degree as the certified truncation.
template <class S>
struct UniSeries {
    std::uint64_t p = 2;
    long trunc = 0;
    long known_to = 0;
    std::vector<S> c;

    static UniSeries make(std::uint64_t p, long trunc, const S& zero) {
        UniSeries s;
        s.p = p;
        s.trunc = trunc;
        s.known_to = trunc;
        s.c.assign(static_cast<std::size_t>(trunc) + 1, zero);
        return s;
    }

    const S& at(long k) const { return c[static_cast<std::size_t>(k)]; }
    S& at(long k) { return c[static_cast<std::size_t>(k)]; }
};

using FpSeries = UniSeries<FpElem>;
using PadicSeries = UniSeries<PadicNum>;

namespace detail {
template <class S>
void require_match(const UniSeries<S>& f, const UniSeries<S>& g) {
    if (f.p != g.p || f.trunc != g.trunc)
        raise(errc::context_mismatch, "series with different (p, truncation) contexts");
}
inline FpElem zero_of(const FpElem& a) { return a.make_zero(); }
inline FpElem one_of(const FpElem& a) { return a.make_one(); }
inline PadicNum zero_of(const PadicNum& a) { return PadicNum::exact_zero(a.policy()); }
inline PadicNum one_of(const PadicNum& a) { return PadicNum::from_int(1, a.policy()); }
template <class S>
S zero_like(const UniSeries<S>& f) {
    return zero_of(f.at(0));
}
}  // namespace detail

template <class S>
UniSeries<S> ser_add(const UniSeries<S>& f, const UniSeries<S>& g) {
    detail::require_match(f, g);
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = std::min(f.known_to, g.known_to);
    for (long k = 0; k <= f.trunc; ++k) r.at(k) = f.at(k) + g.at(k);
    return r;
}

template <class S>
UniSeries<S> ser_sub(const UniSeries<S>& f, const UniSeries<S>& g) {
    detail::require_match(f, g);
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = std::min(f.known_to, g.known_to);
    for (long k = 0; k <= f.trunc; ++k) r.at(k) = f.at(k) - g.at(k);
    return r;
}

// Cauchy product truncated at X^trunc.
template <class S>
UniSeries<S> ser_mul(const UniSeries<S>& f, const UniSeries<S>& g) {
    detail::require_match(f, g);
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = std::min(f.known_to, g.known_to);
    for (long i = 0; i <= f.trunc; ++i) {
        for (long j = 0; i + j <= f.trunc; ++j) {
            r.at(i + j) = r.at(i + j) + f.at(i) * g.at(j);
        }
    }
    return r;
}

namespace detail {
inline void require_invertible_constant(const FpElem& a0) {
    if (a0.is_zero()) raise(errc::non_unit_constant_term, "series has constant term 0");
}
inline void require_invertible_constant(const PadicNum& a0) {
    if (a0.is_exact_zero())
        raise(errc::non_unit_constant_term, "series has constant term 0");
    if (a0.is_bounded())
        raise(errc::insufficient_precision,
              "constant term known only as O(p^m); invertibility uncertifiable");
}
}  // namespace detail

// Multiplicative inverse: b_0 = a_0^{-1}, b_k = -a_0^{-1} * sum a_i b_{k-i}.
template <class S>
UniSeries<S> ser_inv(const UniSeries<S>& f) {
    detail::require_invertible_constant(f.at(0));
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = f.known_to;
    S a0i = f.at(0).inv();
    r.at(0) = a0i;
    for (long k = 1; k <= f.trunc; ++k) {
        S acc = detail::zero_like(f);
        for (long i = 1; i <= k; ++i) acc = acc + f.at(i) * r.at(k - i);
        r.at(k) = -(a0i * acc);
    }
    return r;
}

// Formal derivative. The result's top stored coefficient is bookkeeping only:
// the X^trunc coefficient of f' would need a_(trunc+1), so known_to drops by 1.
template <class S>
UniSeries<S> ser_derivative(const UniSeries<S>& f) {
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = std::max(f.known_to - 1, -1L);
    for (long k = 0; k < f.trunc; ++k) r.at(k) = f.at(k + 1).times_int(k + 1);
    return r;
}

// X -> cX: coefficient k becomes c^k * a_k.
template <class S>
UniSeries<S> ser_compose_scale(const UniSeries<S>& f, const S& cs) {
    UniSeries<S> r = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    r.known_to = f.known_to;
    S pw = detail::one_of(f.at(0));
    for (long k = 0; k <= f.trunc; ++k) {
        r.at(k) = pw * f.at(k);
        if (k < f.trunc) pw = pw * cs;
    }
    return r;
}

// X -> X^p, re-truncated at X^trunc. Non-multiple positions are exact zeros,
// so knowledge extends through the gap after the last known multiple of p.
template <class S>
UniSeries<S> ser_plug_xp(const UniSeries<S>& g, std::uint64_t p, long trunc) {
    if (g.p != p) raise(errc::context_mismatch, "series prime differs from requested p");
    long lp = static_cast<long>(p);
    if (g.trunc < trunc / lp)
        raise(errc::context_mismatch, "series too short for the requested truncation");
    UniSeries<S> r = UniSeries<S>::make(p, trunc, detail::zero_like(g));
    for (long m = 0; m * lp <= trunc; ++m) r.at(m * lp) = g.at(m);
    r.known_to = (g.known_to >= trunc / lp) ? trunc
                                            : std::min(trunc, g.known_to * lp + lp - 1);
    return r;
}

// Inverse of ser_plug_xp on series supported on multiples of p (F_p only:
// exact zero tests are meaningful there).
inline FpSeries ser_extract_pth(const FpSeries& f, std::uint64_t p) {
    if (f.p != p) raise(errc::context_mismatch, "series prime differs from requested p");
    long lp = static_cast<long>(p);
    for (long k = 1; k <= f.known_to; ++k) {
        if (k % lp != 0 && !f.at(k).is_zero())
            raise_at(errc::not_p_supported,
                     "coefficient at degree " + std::to_string(k) +
                         " is nonzero but the degree is not a multiple of p",
                     k);
    }
    FpSeries g = FpSeries::make(p, f.trunc / lp, FpElem(0, p));
    g.known_to = f.known_to / lp;
    for (long m = 0; m <= g.trunc; ++m) g.at(m) = f.at(m * lp);
    return g;
}

// exp(g) for g with zero constant term, via the derivative recurrence
// n f_n = sum_{j=1..n} (j g_j) f_{n-j}. Defined over p-adic scalars only;
// in characteristic p the defining series does not converge coefficientwise.
inline PadicSeries ser_exp(const PadicSeries& g) {
    if (!g.at(0).is_exact_zero())
        raise(errc::nonzero_constant_term, "exp needs an exactly-zero constant term");
    const PrecisionPolicy& pol = g.at(0).policy();
    PadicSeries f = PadicSeries::make(g.p, g.trunc, PadicNum::exact_zero(pol));
    f.known_to = g.known_to;
    f.at(0) = PadicNum::from_int(1, pol);
    std::vector<PadicNum> jg;
    jg.reserve(static_cast<std::size_t>(g.trunc) + 1);
    for (long j = 0; j <= g.trunc; ++j) jg.push_back(g.at(j).times_int(j));
    for (long n = 1; n <= g.trunc; ++n) {
        PadicNum acc = PadicNum::exact_zero(pol);
        for (long j = 1; j <= n; ++j) acc = acc + jg[static_cast<std::size_t>(j)] * f.at(n - j);
        f.at(n) = acc.div_int(static_cast<unsigned long>(n));
    }
    return f;
}

// log(f) for f with constant term exactly 1: Horner evaluation of
// sum_{i>=1} (-1)^(i+1) (f-1)^i / i, with each 1/i taken as an exact scalar so
// no digits are lost beyond the per-term division.
inline PadicSeries ser_log(const PadicSeries& f) {
    if (!f.at(0).is_one())
        raise(errc::constant_term_not_one, "log needs a constant term equal to 1");
    const PrecisionPolicy& pol = f.at(0).policy();
    PadicSeries h = f;
    h.at(0) = PadicNum::exact_zero(pol);
    auto coeff = [&pol](long i) {
        return PadicNum::from_int(i % 2 == 1 ? 1 : -1, pol).div_int(static_cast<unsigned long>(i));
    };
    if (f.trunc == 0) {
        PadicSeries r = PadicSeries::make(f.p, 0, PadicNum::exact_zero(pol));
        r.known_to = f.known_to;
        return r;
    }
    PadicSeries acc = PadicSeries::make(f.p, f.trunc, PadicNum::exact_zero(pol));
    acc.known_to = h.known_to;
    acc.at(0) = coeff(f.trunc);
    for (long i = f.trunc - 1; i >= 1; --i) {
        acc = ser_mul(acc, h);
        acc.at(0) = acc.at(0) + coeff(i);
    }
    PadicSeries r = ser_mul(acc, h);
    r.at(0) = PadicNum::exact_zero(pol);  // log(1 + X*...) has no constant term
    return r;
}

// f^e by binary powering.
template <class S>
UniSeries<S> ser_pow_uint(const UniSeries<S>& f, unsigned long e) {
    UniSeries<S> acc = UniSeries<S>::make(f.p, f.trunc, detail::zero_like(f));
    acc.known_to = f.known_to;
    acc.at(0) = detail::one_of(f.at(0));
    UniSeries<S> base = f;
    while (e) {
        if (e & 1) acc = ser_mul(acc, base);
        e >>= 1;
        if (e) base = ser_mul(base, base);
    }
    return acc;
}

// Coefficientwise reduction mod p of an (integrality-certified) p-adic series.
inline FpSeries reduce_series(const PadicSeries& f) {
    FpSeries r = FpSeries::make(f.p, f.trunc, FpElem(0, f.p));
    r.known_to = f.known_to;
    for (long k = 0; k <= f.trunc; ++k) r.at(k) = f.at(k).reduce_modp();
    return r;
}

inline bool operator==(const FpSeries& a, const FpSeries& b) {
    if (a.p != b.p || a.trunc != b.trunc) return false;
    for (long k = 0; k <= a.trunc; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}
inline bool operator!=(const FpSeries& a, const FpSeries& b) { return !(a == b); }

}  // namespace ahx

#include "ahx/padic.hpp"

#include <algorithm>

namespace ahx {

mpz_class mpz_pow_p(std::uint64_t p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

int PrecisionPolicy::digits_of(std::uint64_t p, long T) {
    long t = std::max(T, 2L);
    int g = 0;
    mpz_class pw = 1;
    while (pw < t) {
        pw *= static_cast<unsigned long>(p);
        ++g;
    }
    return g;
}

PrecisionPolicy PrecisionPolicy::for_truncation(std::uint64_t p, long T) {
    int g = digits_of(p, T) + 2;
    int N = std::max(2 * g, 16);
    return {p, N, static_cast<long>(N) + 2 * std::max(T, 0L) + 8, g};
}

PrecisionPolicy PrecisionPolicy::with_digits(std::uint64_t p, int N, long T) {
    int g = digits_of(p, T) + 2;
    if (N < g + 1) N = g + 1;
    return {p, N, static_cast<long>(N) + 2 * std::max(T, 0L) + 8, g};
}

// ---------------------------------------------------------------------------

PadicNum PadicNum::exact_zero(const PrecisionPolicy& pol) {
    return PadicNum(Kind::zero, 0, 0, 0, pol);
}

PadicNum PadicNum::make_bounded(long bound, const PrecisionPolicy& pol) {
    PadicNum r(Kind::bounded, bound, 0, 0, pol);
    r.check_floor(bound);
    return r;
}

PadicNum PadicNum::from_mpz(const mpz_class& n, const PrecisionPolicy& pol) {
    if (n == 0) return exact_zero(pol);
    mpz_class u;
    long e = static_cast<long>(
        mpz_remove(u.get_mpz_t(), n.get_mpz_t(), mpz_class(pol.p).get_mpz_t()));
    mpz_class mod = mpz_pow_p(pol.p, pol.N);
    u %= mod;
    if (u < 0) u += mod;
    return PadicNum(Kind::finite, e, u, pol.N, pol);
}

PadicNum PadicNum::from_int(long n, const PrecisionPolicy& pol) {
    return from_mpz(mpz_class(n), pol);
}

PadicNum PadicNum::make_finite(long val, const mpz_class& unit, int digits,
                               const PrecisionPolicy& pol) {
    if (digits < 1) raise(errc::invalid_argument, "finite p-adic value needs >= 1 digit");
    mpz_class mod = mpz_pow_p(pol.p, digits);
    mpz_class u = unit % mod;
    if (u < 0) u += mod;
    if (u % static_cast<unsigned long>(pol.p) == 0)
        raise(errc::invalid_argument, "finite p-adic unit must be coprime to p");
    PadicNum r(Kind::finite, val, u, digits, pol);
    r.check_floor(val);
    return r;
}

long PadicNum::valuation() const {
    if (kind_ == Kind::zero)
        raise(errc::invalid_argument, "exact zero has no finite valuation");
    return val_;
}

long PadicNum::abs_precision() const {
    switch (kind_) {
        case Kind::zero: return LONG_MAX;
        case Kind::finite: return val_ + digits_;
        case Kind::bounded: return val_;
    }
    return 0;
}

void PadicNum::require_same_context(const PadicNum& o) const {
    if (pol_.p != o.pol_.p)
        raise(errc::context_mismatch, "p-adic values with different primes");
}

void PadicNum::check_floor(long v) const {
    if (v < -pol_.M)
        raise(errc::valuation_underflow,
              "valuation " + std::to_string(v) + " below the fractional floor -" +
                  std::to_string(pol_.M));
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    require_same_context(o);
    if (kind_ == Kind::zero) return o;
    if (o.kind_ == Kind::zero) return *this;

    long q = std::min(abs_precision(), o.abs_precision());
    if (kind_ == Kind::bounded && o.kind_ == Kind::bounded) return make_bounded(q, pol_);
    if (kind_ == Kind::bounded || o.kind_ == Kind::bounded) {
        const PadicNum& f = (kind_ == Kind::finite) ? *this : o;
        // The finite part survives only where it pokes above the noise bound.
        if (f.val_ >= q) return make_bounded(q, pol_);
        mpz_class mod = mpz_pow_p(pol_.p, q - f.val_);
        return PadicNum(Kind::finite, f.val_, f.unit_ % mod, static_cast<int>(q - f.val_), pol_);
    }

    // Both finite: align at the lower valuation, add, re-normalize.
    long w = std::min(val_, o.val_);
    long L = q - w;  // >= 1 because digits >= 1 on both sides
    mpz_class mod = mpz_pow_p(pol_.p, L);
    mpz_class r = unit_ * mpz_pow_p(pol_.p, val_ - w) + o.unit_ * mpz_pow_p(pol_.p, o.val_ - w);
    r %= mod;
    if (r < 0) r += mod;
    if (r == 0) return make_bounded(q, pol_);
    mpz_class u;
    long e = static_cast<long>(
        mpz_remove(u.get_mpz_t(), r.get_mpz_t(), mpz_class(pol_.p).get_mpz_t()));
    return PadicNum(Kind::finite, w + e, u, static_cast<int>(q - (w + e)), pol_);
}

PadicNum PadicNum::operator-() const {
    if (kind_ != Kind::finite) return *this;
    mpz_class mod = mpz_pow_p(pol_.p, digits_);
    return PadicNum(Kind::finite, val_, (mod - unit_) % mod, digits_, pol_);
}

PadicNum PadicNum::operator-(const PadicNum& o) const { return *this + (-o); }

PadicNum PadicNum::operator*(const PadicNum& o) const {
    require_same_context(o);
    if (kind_ == Kind::zero || o.kind_ == Kind::zero) return exact_zero(pol_);
    if (kind_ == Kind::bounded || o.kind_ == Kind::bounded) {
        // O(p^m) * (p^v * unit or O(p^v)) lies in O(p^(m+v)).
        return make_bounded(val_ + o.val_, pol_);
    }
    long v = val_ + o.val_;
    check_floor(v);
    int k = std::min(digits_, o.digits_);
    mpz_class mod = mpz_pow_p(pol_.p, k);
    mpz_class u = (unit_ * o.unit_) % mod;
    return PadicNum(Kind::finite, v, u, k, pol_);
}

PadicNum PadicNum::inv() const {
    if (kind_ == Kind::zero) raise(errc::division_by_zero, "inverse of exact zero");
    if (kind_ == Kind::bounded)
        raise(errc::insufficient_precision,
              "cannot certify invertibility of a value known only as O(p^m)");
    check_floor(-val_);
    mpz_class mod = mpz_pow_p(pol_.p, digits_);
    mpz_class u;
    if (mpz_invert(u.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
        raise(errc::internal_check_failed, "unit lost coprimality");  // unreachable
    return PadicNum(Kind::finite, -val_, u, digits_, pol_);
}

PadicNum PadicNum::div_int(unsigned long j) const {
    if (j == 0) raise(errc::division_by_zero, "division by integer 0");
    if (kind_ == Kind::zero) return *this;
    long e = 0;
    unsigned long ju = j;
    while (ju % pol_.p == 0) {
        ju /= pol_.p;
        ++e;
    }
    if (kind_ == Kind::bounded) {
        return make_bounded(val_ - e, pol_);
    }
    long v = val_ - e;
    check_floor(v);
    // Pessimistic rule: each power of p in the divisor costs one known digit.
    int k = digits_ - static_cast<int>(e);
    if (k <= 0)
        raise(errc::precision_exhausted,
              "division by " + std::to_string(j) + " exhausts the known digits");
    mpz_class mod = mpz_pow_p(pol_.p, k);
    mpz_class ji;
    mpz_class jm = mpz_class(ju) % mod;
    if (mpz_invert(ji.get_mpz_t(), jm.get_mpz_t(), mod.get_mpz_t()) == 0)
        raise(errc::internal_check_failed, "unit part of divisor not invertible");
    mpz_class u = (unit_ % mod) * ji % mod;
    return PadicNum(Kind::finite, v, u, k, pol_);
}

PadicNum PadicNum::times_int(long k) const {
    if (k == 0) return exact_zero(pol_);
    if (kind_ == Kind::zero) return *this;
    mpz_class n(k < 0 ? -k : k);
    mpz_class u;
    long e = static_cast<long>(
        mpz_remove(u.get_mpz_t(), n.get_mpz_t(), mpz_class(pol_.p).get_mpz_t()));
    if (kind_ == Kind::bounded) return make_bounded(val_ + e, pol_);
    mpz_class mod = mpz_pow_p(pol_.p, digits_);
    mpz_class nu = (unit_ * (u % mod)) % mod;
    PadicNum r(Kind::finite, val_ + e, nu, digits_, pol_);
    return k < 0 ? -r : r;
}

PadicNum PadicNum::pow_uint(unsigned long e) const {
    PadicNum acc = from_int(1, pol_);
    PadicNum base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Trit PadicNum::in_p_power_zp(long s) const {
    switch (kind_) {
        case Kind::zero: return Trit::yes;
        case Kind::finite: return val_ >= s ? Trit::yes : Trit::no;
        case Kind::bounded: return val_ >= s ? Trit::yes : Trit::unknown;
    }
    return Trit::unknown;
}

FpElem PadicNum::reduce_modp() const {
    switch (kind_) {
        case Kind::zero: return FpElem(0, pol_.p);
        case Kind::bounded:
            if (val_ >= 1) return FpElem(0, pol_.p);
            raise(errc::insufficient_precision,
                  "reduction mod p of a value known only as O(p^" + std::to_string(val_) + ")");
        case Kind::finite:
            if (val_ < 0) raise(errc::not_integral, "reduction mod p of a non-integral value");
            if (val_ >= 1) return FpElem(0, pol_.p);
            return FpElem(mpz_class(unit_ % static_cast<unsigned long>(pol_.p)).get_ui(), pol_.p);
    }
    raise(errc::internal_check_failed, "corrupt p-adic kind");
}

bool PadicNum::agrees_with(const PadicNum& o) const {
    // The difference of two values that agree can never certify a nonzero digit.
    return (*this - o).kind() != Kind::finite;
}

std::string PadicNum::str() const {
    switch (kind_) {
        case Kind::zero: return "0";
        case Kind::bounded: return "O(p^" + std::to_string(val_) + ")";
        case Kind::finite:
            return "p^" + std::to_string(val_) + "*" + unit_.get_str() + " (" +
                   std::to_string(digits_) + " digits)";
    }
    return "?";
}

}  // namespace ahx

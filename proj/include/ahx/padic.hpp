#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>

#include "ahx/errors.hpp"
#include "ahx/fp.hpp"

namespace ahx {

// Working-precision parameters shared by every p-adic value in a computation.
//
//   N     digits granted to fresh integer literals,
//   M     fractional floor: any valuation below -M aborts (underflow tripwire),
//   guard digits reserved so divisions by indices <= T cannot silently
//         exhaust a result (guard >= ceil(log_p T) + 2).
//
// Precision errors are retryable: rebuild from exact sources with doubled().
struct PrecisionPolicy {
    std::uint64_t p = 2;
    int N = 16;
    long M = 64;
    int guard = 4;

    // ceil(log_p max(T,2)): number of base-p digits of T.
    static int digits_of(std::uint64_t p, long T);
    // Default sizing for a computation truncated at degree T.
    static PrecisionPolicy for_truncation(std::uint64_t p, long T);
    // Same, but with an explicit digit count (e.g. a --prec override).
    static PrecisionPolicy with_digits(std::uint64_t p, int N, long T);

    PrecisionPolicy doubled() const { return {p, 2 * N, M + N, guard}; }
};

enum class Trit { yes, no, unknown };

// A fixed-precision p-adic number in floating-valuation form.
//
// Three kinds:
//   zero      the exact zero (valuation +infinity);
//   finite    p^val * unit with unit coprime to p, canonical in [0, p^digits):
//             the value is known modulo p^(val + digits), digits >= 1;
//   bounded   O(p^val): a sum that cancelled to the last known digit. Nothing
//             is known beyond membership in p^val * Z_p (digits = 0, unit = 0).
//
// Precision accounting is pessimistic by rule: multiplication and addition
// keep the minimum digit count, and dividing by an integer j costs v_p(j)
// digits (and valuation). Claims are therefore always sound: the true value
// lies inside every stated ball.
class PadicNum {
  public:
    enum class Kind { zero, finite, bounded };

    PadicNum() : PadicNum(exact_zero(PrecisionPolicy{})) {}

    static PadicNum exact_zero(const PrecisionPolicy& pol);
    static PadicNum from_int(long n, const PrecisionPolicy& pol);
    static PadicNum from_mpz(const mpz_class& n, const PrecisionPolicy& pol);
    // Assemble a finite value from its parts (unit is canonicalized mod p^digits).
    static PadicNum make_finite(long val, const mpz_class& unit, int digits,
                                const PrecisionPolicy& pol);
    static PadicNum make_bounded(long bound, const PrecisionPolicy& pol);

    Kind kind() const { return kind_; }
    bool is_exact_zero() const { return kind_ == Kind::zero; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_bounded() const { return kind_ == Kind::bounded; }
    // Reads "the value is exactly 1 to its known digits".
    bool is_one() const { return kind_ == Kind::finite && val_ == 0 && unit_ == 1; }

    const PrecisionPolicy& policy() const { return pol_; }
    std::uint64_t prime() const { return pol_.p; }

    // finite: the exact valuation; bounded: the bound m of O(p^m).
    long valuation() const;
    const mpz_class& unit() const { return unit_; }
    int digits() const { return digits_; }
    // The value is known modulo p^abs_precision (LONG_MAX for exact zero).
    long abs_precision() const;

    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const;
    PadicNum operator*(const PadicNum& o) const;
    PadicNum operator-() const;

    // Reciprocal of a (certified) unit-or-shifted-unit value.
    PadicNum inv() const;
    // Division by a positive machine integer; costs v_p(j) digits.
    PadicNum div_int(unsigned long j) const;
    // Exact scaling by a machine integer (no digit loss).
    PadicNum times_int(long k) const;
    PadicNum pow_uint(unsigned long e) const;

    // Certified membership in p^s * Z_p: yes / no / unknown-at-this-precision.
    Trit in_p_power_zp(long s) const;
    // Reduction modulo p; requires certified integrality.
    FpElem reduce_modp() const;

    // True when (a - b) is indistinguishable from zero at the shared precision.
    bool agrees_with(const PadicNum& o) const;

    std::string str() const;

  private:
    PadicNum(Kind k, long v, mpz_class u, int d, const PrecisionPolicy& pol)
        : kind_(k), val_(v), unit_(std::move(u)), digits_(d), pol_(pol) {}

    void require_same_context(const PadicNum& o) const;
    void check_floor(long v) const;

    Kind kind_;
    long val_;        // finite: valuation; bounded: the O(p^val) bound; zero: unused
    mpz_class unit_;  // finite: canonical unit in [0, p^digits); otherwise 0
    int digits_;      // finite: known unit digits >= 1; otherwise 0
    PrecisionPolicy pol_;
};

// Free-function spellings used throughout the higher modules.
inline PadicNum padic_mul(const PadicNum& a, const PadicNum& b) { return a * b; }
inline PadicNum padic_div_int(const PadicNum& a, unsigned long j) { return a.div_int(j); }

// Boolean membership in p^s Z_p; undecidable-at-precision raises instead of guessing.
inline bool padic_in_p_zp(const PadicNum& a, long s) {
    Trit t = a.in_p_power_zp(s);
    if (t == Trit::unknown)
        raise(errc::insufficient_precision,
              "membership in p^" + std::to_string(s) + " Z_p undecidable at current precision");
    return t == Trit::yes;
}

inline FpElem padic_reduce_modp(const PadicNum& a) { return a.reduce_modp(); }

// p^k as an mpz.
mpz_class mpz_pow_p(std::uint64_t p, long k);

// Runs build(policy), retrying with doubled working digits on a precision
// error; up to three retries, then the error propagates. Only callers that can
// re-materialize their inputs from exact sources should use this.
template <class Fn>
auto with_precision_ladder(PrecisionPolicy pol, Fn&& build) {
    for (int attempt = 0;; ++attempt) {
        try {
            return build(pol);
        } catch (const Error& e) {
            if (!is_precision_error(e.code()) || attempt >= 3) throw;
            pol = pol.doubled();
        }
    }
}

}  // namespace ahx

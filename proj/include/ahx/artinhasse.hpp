#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ahx/padic.hpp"
#include "ahx/series.hpp"

namespace ahx {

// The Artin-Hasse exponential exp(sum_{i>=0} X^(p^i)/p^i) truncated at X^trunc,
// held both p-adically and as its mod-p reduction. The two representations are
// tied together by construction: modp is the certified coefficientwise
// reduction of exact.
struct AHSeries {
    PadicSeries exact;
    FpSeries modp;
    std::uint64_t p = 2;
    long trunc = 0;
};

// Production path: assemble the exponent series (terms X^(p^i)/p^i with
// p^i <= T; higher terms cannot touch degrees <= T) and run the power-series
// exponential. Every coefficient's integrality is certified before reduction;
// a certified-negative valuation aborts (that would be a bug, not bad data).
// The no-policy overload sizes precision from T and retries on precision
// exhaustion with doubled working digits.
AHSeries ah_build(std::uint64_t p, long T);
AHSeries ah_build(std::uint64_t p, long T, const PrecisionPolicy& pol);

// Independent oracle in exact rational arithmetic: the recurrence
// n a_n = sum_{p^i <= n} a_(n - p^i), a_0 = 1, which is the coefficient form
// of the derivative identity E' = E * sum X^(p^i - 1). No precision policy is
// involved, so a disagreement with ah_build indicts the p-adic digit rules.
std::vector<mpq_class> ah_rational_oracle(std::uint64_t p, long T);

// Valuation v_p of an exact rational (q must be nonzero).
long mpq_valuation_p(const mpq_class& q, std::uint64_t p);
// Reduction mod p of a p-integral rational; raises not_integral otherwise.
FpElem mpq_reduce_modp(const mpq_class& q, std::uint64_t p);

// exp(X) * (sum_{mp <= T} X^(mp)/(mp)!)^(-1), built in exact rationals,
// verified p-integral, reduced mod p. A second nontrivial series whose
// multiplicativity defect is supported on multiples of p.
FpSeries gerstenhaber_series(std::uint64_t p, long T);

// sum of X^(p^i - 1) over p^i - 1 <= T: the target shape of F'/F for series
// with p-supported defect (coefficient 1 at each degree p^i - 1).
FpSeries logderiv_target(std::uint64_t p, long T);

// Shared-cache access to the mod-p Artin-Hasse series (decompose/synthesize
// call this in loops; builds are memoized per (p, T)).
const FpSeries& ah_modp_cached(std::uint64_t p, long T);

}  // namespace ahx

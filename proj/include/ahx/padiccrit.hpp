#pragma once

#include <cstdint>
#include <vector>

#include "ahx/charp.hpp"
#include "ahx/padic.hpp"
#include "ahx/report.hpp"
#include "ahx/series.hpp"

namespace ahx {

// Coefficients c_1..c_T of a log-series G(X) = sum c_j X^j (c[0] is kept as
// an exact zero so indices line up with degrees).
struct LogCoefficients {
    std::uint64_t p = 2;
    long trunc = 0;
    std::vector<PadicNum> c;

    static LogCoefficients from_series(const PadicSeries& g);
    PadicSeries to_series() const;
};

// Exponent coefficients b_0..b_m of exp(sum b_i X^(p^i)).
struct PurePPowerExp {
    std::uint64_t p = 2;
    std::vector<PadicNum> b;
};

// Integrality congruence: F(X)^p / F(X^p) = 1 + (series in p Z_p) up to X^T.
// Holds iff F has p-integral coefficients, so the report cross-asserts direct
// valuation integrality; a disagreement between the two readings is an
// internal error. The violation index is the first failing congruence degree.
CheckReport dwork_check(const PadicSeries& f);

// Same criterion read on log-coefficients: p*c_j - [p | j] c_(j/p) in pZ_p
// for every j <= T.
CheckReport dwork_check_exp(const LogCoefficients& g);

// The three coefficient-condition families for exp(sum c_j X^j) to be
// p-integral with p-supported defect:
//   family 1:  p*c_(pj) - c_j in pZ_p          (reported as (1, j))
//   family 2:  c_1 in Z_p                       (reported as (2, 1))
//   family 3:  c_j in pZ_p for j > 1, p not | j (reported as (3, j))
// Scanned by coefficient position ascending; the first failure is reported.
CheckReport log_coeff_conditions(const LogCoefficients& g);

// Direct form of the same property on the series side: every coefficient
// valuation >= 0 (reported as a structured failure, not an exception) and the
// mod-p reduction passes check_defect_support.
CheckReport integral_defect_check(const PadicSeries& f);

// Evaluates integral_defect_check(f) and log_coeff_conditions(log f) and
// passes iff the two verdicts agree. The sub-reports are returned so callers
// can surface both; a disagreement (never expected at adequate precision) is
// reported as an equivalence violation, not thrown.
struct AgreementReport {
    CheckReport report;  // pass == "the verdicts agree"
    CheckReport cond_series;
    CheckReport cond_logcoeffs;
};
AgreementReport criteria_agreement(const PadicSeries& f);

// p*b_i - b_(i-1) in pZ_p for i = 0..m (b_(-1) = 0), cross-checked by
// exponentiating sum b_i X^(p^i) to degree p^m and testing integrality
// directly; the two verdicts must agree.
CheckReport ppower_exp_check(const PurePPowerExp& b);

// Additivity congruence of X G'(X) mod p, which must match the membership
// formulation "j*c_j in pZ_p unless j is a power of p". Precondition
// j*c_j in Z_p for all j (raised as precondition_violated otherwise).
CheckReport logderiv_congruence(const LogCoefficients& g);

// Coefficientwise canonical lift with digits in [0, p).
PadicSeries lift_modp(const FpSeries& f, const PrecisionPolicy& pol);
PadicSeries lift_modp(const FpSeries& f);

// Decomposition through the p-adic route: lift f, split its log into the
// degree-1 part and the p-multiple part, re-exponentiate, divide by the
// scaled p-adic Artin-Hasse series, reduce, extract. The result is
// cross-asserted against decompose(f); property_absent when f fails
// check_defect_support. The two-argument form takes a caller-supplied lift
// (any series reducing to f), used to demonstrate lift independence.
DecompResult decompose_via_padic(const FpSeries& f);
DecompResult decompose_via_padic(const FpSeries& f, const PadicSeries& lifted);

}  // namespace ahx

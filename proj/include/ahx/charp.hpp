#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ahx/bivariate.hpp"
#include "ahx/report.hpp"
#include "ahx/series.hpp"

namespace ahx {

// Outcome of factoring f as (Artin-Hasse mod p)(cX) * g(X^p): the scalar c,
// the inner series g (truncated at floor(T/p)), and whether the residual
// quotient really was supported on multiples of p. When residual_ok is false,
// g is the constant series 1 and report names the first offending degree.
struct DecompResult {
    FpElem c;
    FpSeries g;
    bool residual_ok = false;
    CheckReport report;
};

// Coefficients b_i of an additive log-derivative X f'/f = sum b_i X^(p^i),
// one entry per p^i <= T (zero entries included).
struct AdditiveLogDeriv {
    std::vector<std::pair<long, FpElem>> b;  // (i, b_i), i ascending

    const FpElem& at(long i) const;
};

struct AdditiveLogDerivResult {
    std::optional<AdditiveLogDeriv> b;  // present iff X f'/f is additive
    CheckReport report;
};

struct LogDerivConstant {
    std::optional<FpElem> c;  // present iff f'/f = c * sum X^(p^i - 1)
    CheckReport report;
};

// Is the multiplicativity defect of f supported on total degrees divisible
// by p? (f must have constant term 1.)
CheckReport check_defect_support(const FpSeries& f);

// (Artin-Hasse mod p)(cX) * g(X^p) truncated at T. Every output passes
// check_defect_support.
FpSeries synthesize(const FpElem& c, const FpSeries& g, long T);

// Inverse of synthesize: c is forced to a_1, then the quotient by the scaled
// Artin-Hasse series must be supported on multiples of p.
DecompResult decompose(const FpSeries& f);

// f'/f against c * sum X^(p^i - 1): returns the constant c when the shapes
// match up to degree T-1, or the first mismatch degree.
LogDerivConstant logderiv_constant(const FpSeries& f);

// X f'/f as an additive series: on success, its p-power-degree coefficients.
AdditiveLogDerivResult additive_logderiv(const FpSeries& f);

// The coefficient recurrence k a_k = sum_{p^i + j = k} b_i a_j for k = 1..T-1,
// plus the anchor a_1 = b_0.
CheckReport recurrence_check(const FpSeries& f, const AdditiveLogDeriv& b);

// Brute-force enumeration for small (p, T): the set of all series with the
// defect-support property versus the set of all synthesize(c, g) truncations.
// Members are canonical coefficient arrays a_0..a_T.
struct EnumerationSets {
    std::set<std::vector<std::uint64_t>> s_property;
    std::set<std::vector<std::uint64_t>> s_form;
};
EnumerationSets enumerate_small(std::uint64_t p, long T);

}  // namespace ahx

#pragma once

#include <cstdint>
#include <vector>

#include "ahx/fp.hpp"
#include "ahx/report.hpp"
#include "ahx/series.hpp"

namespace ahx {

// Two-variable series over F_p truncated by total degree: rows[d][i] is the
// coefficient of X^i Y^(d-i) for 0 <= i <= d <= trunc. Dense triangle —
// (T+1)(T+2)/2 entries — which is the honest shape at this scale.
struct BiSeries {
    std::uint64_t p = 2;
    long trunc = 0;
    std::vector<std::vector<FpElem>> rows;

    static BiSeries make(std::uint64_t p, long trunc);
    const FpElem& at(long i, long j) const { return rows[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)]; }
    FpElem& at(long i, long j) { return rows[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)]; }
};

// C(n, k) mod p for all n <= nmax, built by the exact big-integer row
// recurrence C(n,k) = C(n,k-1) * (n-k+1) / k (exact division), each entry
// stored reduced mod p. No inversions mod p are ever attempted.
std::vector<std::vector<std::uint64_t>> binomial_table_modp(std::uint64_t p, long nmax);

// F(X+Y): coefficient of X^i Y^j is binom(i+j, i) * a_(i+j).
// The triangle extends to the certified part of f (min of trunc, known_to).
BiSeries bi_subst_sum(const FpSeries& f);

// f(X) * g(Y) as a bivariate series.
BiSeries bi_outer(const FpSeries& f, const FpSeries& g);

BiSeries bi_mul(const BiSeries& a, const BiSeries& b);
BiSeries bi_inv(const BiSeries& a);

// The multiplicativity defect (F(X+Y))^{-1} F(X) F(Y).
BiSeries defect(const FpSeries& f);

// Passes iff every nonzero entry has total degree divisible by p. The first
// offending entry is reported scanning total degree ascending, then
// Y-exponent ascending within a degree (the tie-break that makes the
// defect(1+X) example report (2,1), i.e. the X^2 Y term).
CheckReport support_multiple_p(const BiSeries& b, std::uint64_t p);

// Additivity of h: two independent verdicts that must agree —
//   (a) h(X+Y) equals h(X) + h(Y) coefficientwise up to the total degree, and
//   (b) every nonzero coefficient sits at a power-of-p degree.
// Disagreement is an internal error (the equivalence is exact); the report
// carries verdict (b)'s first offending degree.
CheckReport is_additive(const FpSeries& h);

}  // namespace ahx

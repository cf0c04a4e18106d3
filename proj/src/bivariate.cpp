#include "ahx/bivariate.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace ahx {

BiSeries BiSeries::make(std::uint64_t p, long trunc) {
    BiSeries b;
    b.p = p;
    b.trunc = trunc;
    b.rows.resize(static_cast<std::size_t>(trunc) + 1);
    for (long d = 0; d <= trunc; ++d)
        b.rows[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, FpElem(0, p));
    return b;
}

std::vector<std::vector<std::uint64_t>> binomial_table_modp(std::uint64_t p, long nmax) {
    std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) {
        auto& row = table[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        mpz_class r = 1;
        row[0] = 1 % p;
        for (long k = 1; k <= n; ++k) {
            r *= (n - k + 1);
            mpz_class q;
            mpz_divexact_ui(q.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
            r = q;
            row[static_cast<std::size_t>(k)] =
                mpz_class(r % static_cast<unsigned long>(p)).get_ui();
        }
    }
    return table;
}

namespace {
long certified_degree(const FpSeries& f) { return std::min(f.trunc, f.known_to); }
}  // namespace

BiSeries bi_subst_sum(const FpSeries& f) {
    long T = certified_degree(f);
    BiSeries b = BiSeries::make(f.p, T);
    auto binom = binomial_table_modp(f.p, T);
    for (long d = 0; d <= T; ++d) {
        for (long i = 0; i <= d; ++i) {
            b.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] =
                f.at(d).times_int(static_cast<long>(binom[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]));
        }
    }
    return b;
}

BiSeries bi_outer(const FpSeries& f, const FpSeries& g) {
    if (f.p != g.p) raise(errc::context_mismatch, "bivariate factors with different p");
    long T = std::min(certified_degree(f), certified_degree(g));
    BiSeries b = BiSeries::make(f.p, T);
    for (long i = 0; i <= T; ++i)
        for (long j = 0; i + j <= T; ++j) b.at(i, j) = f.at(i) * g.at(j);
    return b;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    if (a.p != b.p || a.trunc != b.trunc)
        raise(errc::context_mismatch, "bivariate series with different contexts");
    BiSeries r = BiSeries::make(a.p, a.trunc);
    for (long d1 = 0; d1 <= a.trunc; ++d1) {
        for (long i1 = 0; i1 <= d1; ++i1) {
            const FpElem& av = a.rows[static_cast<std::size_t>(d1)][static_cast<std::size_t>(i1)];
            if (av.is_zero()) continue;
            for (long d2 = 0; d1 + d2 <= a.trunc; ++d2) {
                const auto& brow = b.rows[static_cast<std::size_t>(d2)];
                auto& rrow = r.rows[static_cast<std::size_t>(d1 + d2)];
                for (long i2 = 0; i2 <= d2; ++i2) {
                    FpElem& tgt = rrow[static_cast<std::size_t>(i1 + i2)];
                    tgt = tgt + av * brow[static_cast<std::size_t>(i2)];
                }
            }
        }
    }
    return r;
}

BiSeries bi_inv(const BiSeries& a) {
    const FpElem& a00 = a.rows[0][0];
    if (a00.is_zero()) raise(errc::non_unit_constant_term, "bivariate constant term 0");
    FpElem a00i = a00.inv();
    BiSeries r = BiSeries::make(a.p, a.trunc);
    r.rows[0][0] = a00i;
    // Degree-graded recursion: the degree-d component of a*r must vanish.
    for (long d = 1; d <= a.trunc; ++d) {
        std::vector<FpElem> acc(static_cast<std::size_t>(d) + 1, FpElem(0, a.p));
        for (long e = 1; e <= d; ++e) {
            const auto& arow = a.rows[static_cast<std::size_t>(e)];
            const auto& rrow = r.rows[static_cast<std::size_t>(d - e)];
            for (long i1 = 0; i1 <= e; ++i1) {
                if (arow[static_cast<std::size_t>(i1)].is_zero()) continue;
                for (long i2 = 0; i2 <= d - e; ++i2) {
                    acc[static_cast<std::size_t>(i1 + i2)] =
                        acc[static_cast<std::size_t>(i1 + i2)] +
                        arow[static_cast<std::size_t>(i1)] * rrow[static_cast<std::size_t>(i2)];
                }
            }
        }
        auto& out = r.rows[static_cast<std::size_t>(d)];
        for (long i = 0; i <= d; ++i)
            out[static_cast<std::size_t>(i)] = -(a00i * acc[static_cast<std::size_t>(i)]);
    }
    return r;
}

BiSeries defect(const FpSeries& f) {
    if (f.at(0).is_zero())
        raise(errc::non_unit_constant_term, "defect needs an invertible constant term");
    return bi_mul(bi_inv(bi_subst_sum(f)), bi_outer(f, f));
}

CheckReport support_multiple_p(const BiSeries& b, std::uint64_t p) {
    long lp = static_cast<long>(p);
    for (long d = 0; d <= b.trunc; ++d) {
        if (d % lp == 0) continue;
        for (long j = 0; j <= d; ++j) {
            long i = d - j;
            const FpElem& v = b.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
            if (!v.is_zero())
                return CheckReport::failing(b.trunc, Violation{{i, j}, v.str()}, "not_p_supported");
        }
    }
    return CheckReport::passing(b.trunc);
}

CheckReport is_additive(const FpSeries& h) {
    long T = certified_degree(h);

    // Verdict (a): h(X+Y) - h(X) - h(Y) vanishes on the triangle.
    BiSeries s = bi_subst_sum(h);
    bool additive = h.at(0).is_zero();  // the (0,0) entry of the difference is -h_0
    std::optional<Violation> va;
    if (!additive) va = Violation{{0L, 0L}, h.at(0).str()};
    for (long d = 1; d <= T && additive; ++d) {
        for (long j = 1; j < d; ++j) {  // pure X^d / Y^d entries cancel identically
            long i = d - j;
            const FpElem& v = s.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
            if (!v.is_zero()) {
                additive = false;
                va = Violation{{i, j}, v.str()};
                break;
            }
        }
    }

    // Verdict (b): support only at degrees p^0, p^1, ...
    bool p_power_support = h.at(0).is_zero();
    std::optional<Violation> vb;
    if (!p_power_support) vb = Violation{{0L}, h.at(0).str()};
    for (long k = 1; k <= T && p_power_support; ++k) {
        if (h.at(k).is_zero()) continue;
        long m = k;
        while (m % static_cast<long>(h.p) == 0) m /= static_cast<long>(h.p);
        if (m != 1) {
            p_power_support = false;
            vb = Violation{{k}, h.at(k).str()};
        }
    }

    if (additive != p_power_support)
        raise(errc::internal_check_failed,
              "additivity and p-power support disagreed on the same series");
    if (additive) return CheckReport::passing(T);
    return CheckReport::failing(T, vb ? *vb : *va, "support_not_p_power");
}

}  // namespace ahx

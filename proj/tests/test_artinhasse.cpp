#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "ahx/artinhasse.hpp"

using namespace ahx;

namespace {
std::vector<std::uint64_t> values(const FpSeries& f) {
    std::vector<std::uint64_t> v;
    for (long k = 0; k <= f.trunc; ++k) v.push_back(f.at(k).value());
    return v;
}
}  // namespace

TEST_CASE("rational recurrence oracle, small prefix at p = 2") {
    std::vector<mpq_class> a = ah_rational_oracle(2, 4);
    REQUIRE(a.size() == 5);
    CHECK(a[0] == 1);
    CHECK(a[1] == 1);
    CHECK(a[2] == 1);
    CHECK(a[3] == mpq_class(2, 3));
    CHECK(a[4] == mpq_class(2, 3));
}

TEST_CASE("oracle coefficients are p-integral with a_0 = a_1 = 1") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        std::vector<mpq_class> a = ah_rational_oracle(p, 40);
        CHECK(a[0] == 1);
        CHECK(a[1] == 1);
        for (const mpq_class& q : a) {
            if (q == 0) continue;
            // denominators never contain p: the whole series lives in Z_(p)
            CHECK(mpz_divisible_ui_p(q.get_den().get_mpz_t(),
                                     static_cast<unsigned long>(p)) == 0);
            CHECK(mpq_valuation_p(q, p) >= 0);
        }
    }
}

TEST_CASE("rational valuation and reduction helpers") {
    CHECK(mpq_valuation_p(mpq_class(8, 3), 2) == 3);
    CHECK(mpq_valuation_p(mpq_class(3, 8), 2) == -3);
    CHECK(mpq_valuation_p(mpq_class(7, 5), 2) == 0);
    CHECK(mpq_reduce_modp(mpq_class(2, 3), 2).value() == 0);
    CHECK(mpq_reduce_modp(mpq_class(1, 3), 5).value() == 2);  // 3^{-1} = 2 mod 5
    CHECK_THROWS_AS((void)mpq_reduce_modp(mpq_class(1, 2), 2), Error);
}

TEST_CASE("dual-path construction agrees with the oracle") {
    AHSeries ah2 = ah_build(2, 4);
    CHECK(values(ah2.modp) == std::vector<std::uint64_t>{1, 1, 1, 0, 0});
    CHECK(ah2.exact.at(3).agrees_with(PadicNum::from_int(2, ah2.exact.at(0).policy()) *
                                      PadicNum::from_int(3, ah2.exact.at(0).policy()).inv()));

    for (std::uint64_t p : {2ull, 5ull}) {
        long T = 60;
        AHSeries ah = ah_build(p, T);
        std::vector<mpq_class> a = ah_rational_oracle(p, T);
        const PrecisionPolicy& pol = ah.exact.at(0).policy();
        for (long k = 0; k <= T; ++k) {
            PadicNum want = a[static_cast<std::size_t>(k)] == 0
                                ? PadicNum::exact_zero(pol)
                                : PadicNum::from_mpz(a[static_cast<std::size_t>(k)].get_num(), pol) *
                                      PadicNum::from_mpz(a[static_cast<std::size_t>(k)].get_den(), pol)
                                          .inv();
            CHECK(ah.exact.at(k).agrees_with(want));
            CHECK(ah.modp.at(k) == mpq_reduce_modp(a[static_cast<std::size_t>(k)], p));
        }
    }
}

TEST_CASE("mod-p reduction ties the two representations together") {
    for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        AHSeries ah = ah_build(p, 30);
        CHECK(ah.modp == reduce_series(ah.exact));
        CHECK(ah.modp.at(0).value() == 1);
        CHECK(ah.modp.at(1).value() == 1);
    }
}

TEST_CASE("derivative identity: E' equals E times the p-power-tail sum") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        long T = 25;
        FpSeries e = ah_build(p, T).modp;
        FpSeries lhs = ser_derivative(e);
        FpSeries rhs = ser_mul(e, logderiv_target(p, T));
        for (long k = 0; k <= std::min(lhs.known_to, rhs.known_to); ++k)
            CHECK(lhs.at(k) == rhs.at(k));
    }
}

TEST_CASE("log-derivative target shapes") {
    CHECK(values(logderiv_target(2, 8)) ==
          std::vector<std::uint64_t>{1, 1, 0, 1, 0, 0, 0, 1, 0});
    CHECK(values(logderiv_target(5, 4)) == std::vector<std::uint64_t>{1, 0, 0, 0, 1});
    CHECK(values(logderiv_target(3, 1)) == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("alternative multiplicative construction") {
    // exp(X) * (sum X^(mp)/(mp)!)^{-1} at p = 2, T = 3:
    // (1 + X + X^2/2 + X^3/6)(1 + X^2/2)^{-1} = 1 + X - X^3/3
    FpSeries g = gerstenhaber_series(2, 3);
    CHECK(values(g) == std::vector<std::uint64_t>{1, 1, 0, 1});

    // in-test rational rebuild of the same formula, then reduction
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        long T = 20;
        std::vector<mpq_class> expx(static_cast<std::size_t>(T) + 1);
        mpq_class fact = 1;
        for (long k = 0; k <= T; ++k) {
            if (k > 0) fact *= k;
            expx[static_cast<std::size_t>(k)] = mpq_class(1) / fact;
        }
        std::vector<mpq_class> den(static_cast<std::size_t>(T) + 1, 0);
        for (long m = 0; m * static_cast<long>(p) <= T; ++m)
            den[static_cast<std::size_t>(m * static_cast<long>(p))] =
                expx[static_cast<std::size_t>(m * static_cast<long>(p))];
        // res = expx / den by the standard quotient recurrence
        std::vector<mpq_class> res(static_cast<std::size_t>(T) + 1);
        for (long k = 0; k <= T; ++k) {
            mpq_class acc = expx[static_cast<std::size_t>(k)];
            for (long j = 1; j <= k; ++j)
                acc -= den[static_cast<std::size_t>(j)] * res[static_cast<std::size_t>(k - j)];
            res[static_cast<std::size_t>(k)] = acc;  // den[0] = 1
        }
        FpSeries got = gerstenhaber_series(p, T);
        for (long k = 0; k <= T; ++k)
            CHECK(got.at(k) == mpq_reduce_modp(res[static_cast<std::size_t>(k)], p));
        CHECK(got.at(0).value() == 1);
        CHECK(got.at(1).value() == 1);
    }
}

TEST_CASE("the alternative construction differs from the primary one") {
    // same unit constant and same linear coefficient, different tails: the two
    // series differ by a nontrivial factor in X^p
    for (std::uint64_t p : {2ull, 3ull}) {
        FpSeries a = ah_build(p, 12).modp;
        FpSeries b = gerstenhaber_series(p, 12);
        CHECK(a.at(1) == b.at(1));
        CHECK(a != b);
    }
}

TEST_CASE("cached mod-p access is stable and identical to a fresh build") {
    const FpSeries& c1 = ah_modp_cached(3, 15);
    const FpSeries& c2 = ah_modp_cached(3, 15);
    CHECK(&c1 == &c2);
    CHECK(c1 == ah_build(3, 15).modp);
    CHECK(ah_modp_cached(3, 7) == ah_build(3, 7).modp);
}

TEST_CASE("degenerate truncations") {
    AHSeries t0 = ah_build(7, 0);
    CHECK(t0.modp.trunc == 0);
    CHECK(t0.modp.at(0).value() == 1);
    CHECK(values(ah_build(5, 1).modp) == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS((void)ah_build(4, 5), Error);
}

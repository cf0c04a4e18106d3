// End-to-end acceptance checks for the toolkit. Each criterion is a
// self-contained scenario exercising the public API (and, for the pathway
// test, the CLI entry point) with a hard wall-clock budget. Run with a
// criterion number 1..10 to execute one scenario, or with no arguments to
// run all ten; one line is printed per criterion.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ahx/artinhasse.hpp"
#include "ahx/charp.hpp"
#include "ahx/commands.hpp"
#include "ahx/padiccrit.hpp"
#include "ahx/randomgen.hpp"

using namespace ahx;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

std::string at_p_tag(std::uint64_t p) { return " (p=" + std::to_string(p) + ")"; }

FpSeries random_unit_series(std::uint64_t p, long T, Rng& rng) {
    FpSeries g = FpSeries::make(p, T, FpElem(0, p));
    g.at(0) = FpElem(1, p);
    for (long k = 1; k <= T; ++k) g.at(k) = FpElem(rng.below(p), p);
    return g;
}

// ---------------------------------------------------------------------------
// 1. The production Artin-Hasse build and the exact-rational recurrence
//    oracle agree coefficient-for-coefficient mod p up to degree 60.
void criterion_1() {
    const long T = 60;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        AHSeries ah = ah_build(p, T);
        std::vector<mpq_class> oracle = ah_rational_oracle(p, T);
        require(oracle.size() == static_cast<std::size_t>(T) + 1,
                "oracle length mismatch" + at_p_tag(p));
        for (long k = 0; k <= T; ++k) {
            FpElem want = mpq_reduce_modp(oracle[static_cast<std::size_t>(k)], p);
            require(ah.modp.at(k) == want,
                    "dual-path disagreement at degree " + std::to_string(k) + at_p_tag(p));
        }
    }
    // pinned prefix for p = 2: 1, 1, 1, 0, 0
    AHSeries ah2 = ah_build(2, 4);
    const std::uint64_t prefix[] = {1, 1, 1, 0, 0};
    for (long k = 0; k <= 4; ++k)
        require(ah2.modp.at(k) == FpElem(prefix[k], 2), "p=2 spot prefix mismatch");
}

// ---------------------------------------------------------------------------
// 2. Every exact Artin-Hasse coefficient up to degree 60 has certified
//    valuation >= 0, and the integrality congruence check passes on it.
void criterion_2() {
    const long T = 60;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        AHSeries ah = ah_build(p, T);
        for (long k = 0; k <= T; ++k)
            require(ah.exact.at(k).in_p_power_zp(0) == Trit::yes,
                    "coefficient " + std::to_string(k) + " not certified integral" + at_p_tag(p));
        require(dwork_check(ah.exact).pass, "integrality congruence failed" + at_p_tag(p));
    }
}

// ---------------------------------------------------------------------------
// 3. Sufficiency: every synthesized series (random scalar and inner series)
//    passes the defect-support check. 200 draws per prime, degree 40.
void criterion_3() {
    const long T = 40;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 200; ++iter) {
            Rng rng(0xA3000000ull + 1000 * p + static_cast<std::uint64_t>(iter));
            FpElem c(rng.below(p), p);
            FpSeries g = random_unit_series(p, T / static_cast<long>(p), rng);
            FpSeries f = synthesize(c, g, T);
            CheckReport r = check_defect_support(f);
            require(r.pass, "synthesized series failed the support check, iteration " +
                                std::to_string(iter) + at_p_tag(p));
        }
    }
}

// ---------------------------------------------------------------------------
// 4. Necessity by exhaustion: for p = 2 and several truncations, the set of
//    series with the defect-support property equals the set of synthesized
//    forms, as exact set equality.
void criterion_4() {
    for (long T : {4L, 6L, 8L, 9L}) {
        EnumerationSets sets = enumerate_small(2, T);
        require(sets.s_property == sets.s_form,
                "property and form sets differ at truncation " + std::to_string(T));
        require(!sets.s_property.empty(), "empty enumeration at truncation " + std::to_string(T));
    }
}

// ---------------------------------------------------------------------------
// 5. Three-way equivalence on the full p=2, T=8 enumeration: support check
//    passes <=> log-derivative has the target shape <=> X f'/f is additive
//    with all p-power coefficients equal; and the coefficient recurrence
//    holds on every member of the passing set.
void criterion_5() {
    const std::uint64_t p = 2;
    const long T = 8;
    long members = 0;
    for (std::uint64_t mask = 0; mask < (1ull << T); ++mask) {
        FpSeries f = FpSeries::make(p, T, FpElem(0, p));
        f.at(0) = FpElem(1, p);
        for (long k = 1; k <= T; ++k) f.at(k) = FpElem((mask >> (k - 1)) & 1, p);

        bool support_pass = check_defect_support(f).pass;
        LogDerivConstant lc = logderiv_constant(f);
        AdditiveLogDerivResult al = additive_logderiv(f);

        bool additive_constant = false;
        if (al.b.has_value()) {
            additive_constant = true;
            for (const auto& [i, bi] : al.b->b)
                if (!(bi == al.b->b.front().second)) additive_constant = false;
        }

        require(support_pass == lc.c.has_value(),
                "support check and log-derivative shape disagree on mask " + std::to_string(mask));
        require(support_pass == additive_constant,
                "support check and additive log-derivative disagree on mask " +
                    std::to_string(mask));

        if (support_pass) {
            ++members;
            require(recurrence_check(f, *al.b).pass,
                    "coefficient recurrence failed on mask " + std::to_string(mask));
        }
    }
    require(members == 32, "unexpected member count " + std::to_string(members));
}

// ---------------------------------------------------------------------------
// 6. Condition-family equivalence: exponentiating log-coefficient documents
//    that satisfy the three condition families always yields an integral
//    series with supported defect; targeted single-violation documents fail
//    both readings; the agreement checker reports zero disagreements.
void criterion_6() {
    const long T = 20;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 100; ++iter) {
            std::uint64_t seed = 0xA6000000ull + 4000 * p + static_cast<std::uint64_t>(iter);

            // passing draw
            with_precision_ladder(
                PrecisionPolicy::with_digits(p, 64, T), [&](const PrecisionPolicy& pol) {
                    Rng rng(seed);
                    LogCoefficients g = random_cond2_log(p, T, pol, rng);
                    PadicSeries f = ser_exp(g.to_series());
                    require(log_coeff_conditions(g).pass,
                            "condition draw violates its own families" + at_p_tag(p));
                    require(integral_defect_check(f).pass,
                            "exponentiated condition draw failed the direct check" + at_p_tag(p));
                    AgreementReport agree = criteria_agreement(f);
                    require(agree.report.pass, "verdict disagreement on passing draw" + at_p_tag(p));
                    require(agree.cond_series.pass && agree.cond_logcoeffs.pass,
                            "sub-verdicts not both passing" + at_p_tag(p));
                    return 0;
                });

            // violating draw: one membership broken, both readings must fail
            with_precision_ladder(
                PrecisionPolicy::with_digits(p, 64, T), [&](const PrecisionPolicy& pol) {
                    Rng rng(~seed);
                    int family = 0;
                    LogCoefficients g = random_cond2_violator(p, T, pol, rng, &family);
                    require(family >= 1 && family <= 3, "violator family out of range");
                    PadicSeries f = ser_exp(g.to_series());
                    CheckReport cond2 = log_coeff_conditions(g);
                    CheckReport cond1 = integral_defect_check(f);
                    require(!cond2.pass, "violator passed the coefficient conditions" + at_p_tag(p));
                    require(!cond1.pass, "violator passed the direct check" + at_p_tag(p));
                    AgreementReport agree = criteria_agreement(f);
                    require(agree.report.pass,
                            "verdict disagreement on violating draw" + at_p_tag(p));
                    require(!agree.cond_series.pass && !agree.cond_logcoeffs.pass,
                            "sub-verdicts not both failing" + at_p_tag(p));
                    return 0;
                });
        }
    }
}

// ---------------------------------------------------------------------------
// 7. Negative control: the truncated exponential series fails the
//    integrality congruence with first violation exactly at degree p.
void criterion_7() {
    const long T = 10;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        PrecisionPolicy pol = PrecisionPolicy::for_truncation(p, T);
        PadicSeries x = PadicSeries::make(p, T, PadicNum::exact_zero(pol));
        x.at(1) = PadicNum::from_int(1, pol);
        CheckReport r = dwork_check(ser_exp(x));
        require(!r.pass, "exponential series unexpectedly passed" + at_p_tag(p));
        require(r.first_violation.has_value(), "missing violation record" + at_p_tag(p));
        require(r.first_violation->index == std::vector<long>{static_cast<long>(p)},
                "first violation not at degree p" + at_p_tag(p));
    }
}

// ---------------------------------------------------------------------------
// 8. The exp(X)-times-inverse-factorial-comb series: passes the support
//    check and decomposes with scalar 1.
void criterion_8() {
    const long T = 30;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        FpSeries f = gerstenhaber_series(p, T);
        require(check_defect_support(f).pass, "support check failed" + at_p_tag(p));
        DecompResult d = decompose(f);
        require(d.residual_ok && d.report.pass, "decomposition failed" + at_p_tag(p));
        require(d.c == FpElem(1, p), "decomposition scalar is not 1" + at_p_tag(p));
    }
}

// ---------------------------------------------------------------------------
// 9. Pathway agreement: both decomposition routes produce byte-identical
//    CLI output on a seeded 100-document corpus of property series.
void criterion_9() {
    const std::uint64_t primes[] = {2, 3, 5};
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = primes[i % 3];
        long T = 10 + (7 * i) % 21;
        std::string seed = std::to_string(9000 + i);

        std::istringstream none;
        std::ostringstream doc, err;
        int rc = run_cli({"random", "--kind", "property", "--p", std::to_string(p), "--deg",
                          std::to_string(T), "--seed", seed},
                         none, doc, err);
        require(rc == 0 && err.str().empty(), "corpus generation failed at index " +
                                                  std::to_string(i));

        std::string out[2];
        int code[2];
        const char* vias[] = {"direct", "padic"};
        for (int v = 0; v < 2; ++v) {
            std::istringstream in(doc.str());
            std::ostringstream o, e;
            code[v] = run_cli({"decompose", "--via", vias[v]}, in, o, e);
            require(e.str().empty(), std::string("stderr not empty via ") + vias[v] +
                                         " at index " + std::to_string(i));
            out[v] = o.str();
        }
        require(code[0] == 0 && code[1] == 0,
                "decompose exit codes nonzero at index " + std::to_string(i));
        require(out[0] == out[1], "pathway outputs differ at index " + std::to_string(i));
    }
}

// ---------------------------------------------------------------------------
// 10. Round trips: decompose after synthesize recovers (c, g); reduction
//     after lifting recovers the mod-p series; series exp and log are
//     mutually inverse on coefficients of valuation >= 1. 300 draws each.
void criterion_10() {
    const std::uint64_t primes[] = {2, 3, 5};

    // decompose(synthesize(c, g)) == (c, g)
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = primes[i % 3];
        long T = 9 + (i % 22);
        Rng rng(0xAA100000ull + static_cast<std::uint64_t>(i));
        FpElem c(rng.below(p), p);
        FpSeries g = random_unit_series(p, T / static_cast<long>(p), rng);
        FpSeries f = synthesize(c, g, T);
        DecompResult d = decompose(f);
        require(d.residual_ok && d.report.pass, "round-trip decompose failed at " +
                                                    std::to_string(i));
        require(d.c == c, "scalar not recovered at " + std::to_string(i));
        require(d.g == g, "inner series not recovered at " + std::to_string(i));
        require(synthesize(d.c, d.g, T) == f, "re-synthesis mismatch at " + std::to_string(i));
    }

    // reduce(lift(f)) == f
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = primes[i % 3];
        long T = 8 + (i % 25);
        Rng rng(0xAA200000ull + static_cast<std::uint64_t>(i));
        FpSeries f = FpSeries::make(p, T, FpElem(0, p));
        for (long k = 0; k <= T; ++k) f.at(k) = FpElem(rng.below(p), p);
        require(reduce_series(lift_modp(f)) == f, "lift round trip failed at " +
                                                      std::to_string(i));
    }

    // log(exp(h)) == h and exp(log(exp(h))) == exp(h) for h with coefficient
    // valuations >= 1 and zero constant term
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = primes[i % 3];
        long T = 8 + (i % 13);
        with_precision_ladder(
            PrecisionPolicy::with_digits(p, 48, T), [&](const PrecisionPolicy& pol) {
                Rng rng(0xAA300000ull + static_cast<std::uint64_t>(i));
                PadicSeries h = PadicSeries::make(p, T, PadicNum::exact_zero(pol));
                for (long k = 1; k <= T; ++k) {
                    long m = static_cast<long>(rng.below(125));
                    h.at(k) = PadicNum::from_int(static_cast<long>(p) * m, pol);
                }
                PadicSeries f = ser_exp(h);
                PadicSeries back = ser_log(f);
                for (long k = 0; k <= T; ++k)
                    require(back.at(k).agrees_with(h.at(k)),
                            "log(exp(h)) mismatch at draw " + std::to_string(i) + ", degree " +
                                std::to_string(k));
                PadicSeries again = ser_exp(back);
                for (long k = 0; k <= T; ++k)
                    require(again.at(k).agrees_with(f.at(k)),
                            "exp(log(f)) mismatch at draw " + std::to_string(i) + ", degree " +
                                std::to_string(k));
                return 0;
            });
    }
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    void (*fn)();
};

const Criterion kCriteria[] = {
    {1, "Artin-Hasse dual-path agreement mod p (p=2,3,5,7, degree 60)", 5.0, criterion_1},
    {2, "certified integrality and congruence check on exact coefficients", 5.0, criterion_2},
    {3, "synthesized series always pass the support check (600 draws)", 30.0, criterion_3},
    {4, "exhaustive property set equals synthesized form set (p=2)", 60.0, criterion_4},
    {5, "three-way equivalence and recurrence on the full p=2 T=8 census", 60.0, criterion_5},
    {6, "condition families match the direct check on 600 documents", 60.0, criterion_6},
    {7, "exponential series fails the congruence first at degree p", 1.0, criterion_7},
    {8, "factorial-comb quotient series decomposes with scalar 1", 10.0, criterion_8},
    {9, "both decomposition routes byte-identical on a 100-document corpus", 30.0, criterion_9},
    {10, "decompose/synthesize, lift/reduce, exp/log round trips (900 draws)", 30.0, criterion_10},
};

bool run_criterion(const Criterion& c) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    std::string verdict = "pass";
    std::string why;
    try {
        c.fn();
    } catch (const Failure& f) {
        verdict = "FAIL";
        why = f.what();
    } catch (const Error& e) {
        verdict = "FAIL";
        why = std::string("unexpected error ") + errc_name(e.code()) + ": " + e.what();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        why = std::string("unexpected exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
    if (verdict == "pass" && elapsed > c.budget_seconds) {
        verdict = "FAIL";
        why = "time budget exceeded (" + std::to_string(elapsed) + " s > " +
              std::to_string(c.budget_seconds) + " s)";
    }
    std::ostringstream line;
    line << "criterion " << c.number << ": " << verdict << " - " << c.title;
    if (!why.empty()) line << " [" << why << "]";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << elapsed << "s)";
    std::cout << line.str() << std::endl;
    return verdict == "pass";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::cerr << "usage: " << argv[0] << " [criterion 1..10]" << std::endl;
        return 2;
    }
    int failures = 0;
    if (argc == 2) {
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::cerr << "criterion number must be 1..10" << std::endl;
            return 2;
        }
        if (!run_criterion(kCriteria[n - 1])) ++failures;
    } else {
        for (const Criterion& c : kCriteria)
            if (!run_criterion(c)) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

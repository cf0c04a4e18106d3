#include "ahx/padiccrit.hpp"

#include "ahx/artinhasse.hpp"

namespace ahx {

namespace {

void require_one_constant(const PadicSeries& f) {
    if (!f.at(0).is_one())
        raise(errc::constant_term_not_one, "series must have constant term exactly 1");
}

// Certified membership or bust: unknown raises, so every reported verdict is
// a theorem about the value, never a guess.
bool certified_in(const PadicNum& a, long s, const char* what, long index) {
    Trit t = a.in_p_power_zp(s);
    if (t == Trit::unknown)
        raise_at(errc::insufficient_precision,
                 std::string(what) + " undecidable at index " + std::to_string(index), index);
    return t == Trit::yes;
}

bool is_p_power(long k, long p) {
    if (k < 1) return false;
    while (k % p == 0) k /= p;
    return k == 1;
}

}  // namespace

LogCoefficients LogCoefficients::from_series(const PadicSeries& g) {
    LogCoefficients lc;
    lc.p = g.p;
    lc.trunc = g.trunc;
    lc.c = g.c;
    return lc;
}

PadicSeries LogCoefficients::to_series() const {
    PadicSeries g;
    g.p = p;
    g.trunc = trunc;
    g.known_to = trunc;
    g.c = c;
    return g;
}

CheckReport dwork_check(const PadicSeries& f) {
    require_one_constant(f);
    PadicSeries fp = ser_pow_uint(f, static_cast<unsigned long>(f.p));
    PadicSeries fxp = ser_plug_xp(f, f.p, f.trunc);
    PadicSeries q = ser_mul(fp, ser_inv(fxp));

    bool congruence_ok = true;
    Violation viol;
    for (long k = 1; k <= q.known_to; ++k) {
        if (!certified_in(q.at(k), 1, "congruence coefficient membership in pZ_p", k)) {
            congruence_ok = false;
            viol = Violation{{k}, q.at(k).str()};
            break;
        }
    }
    bool direct_ok = true;
    for (long k = 0; k <= f.known_to; ++k) {
        if (!certified_in(f.at(k), 0, "coefficient integrality", k)) {
            direct_ok = false;
            break;
        }
    }
    if (congruence_ok != direct_ok)
        raise(errc::internal_check_failed,
              "integrality congruence and direct valuations disagreed");
    if (congruence_ok) return CheckReport::passing(q.known_to);
    return CheckReport::failing(q.known_to, viol, "dwork_congruence");
}

CheckReport dwork_check_exp(const LogCoefficients& g) {
    long lp = static_cast<long>(g.p);
    for (long j = 1; j <= g.trunc; ++j) {
        PadicNum d = g.c[static_cast<std::size_t>(j)].times_int(lp);
        if (j % lp == 0) d = d - g.c[static_cast<std::size_t>(j / lp)];
        if (!certified_in(d, 1, "log-coefficient congruence", j))
            return CheckReport::failing(g.trunc, Violation{{j}, d.str()}, "dwork_exp_congruence");
    }
    return CheckReport::passing(g.trunc);
}

CheckReport log_coeff_conditions(const LogCoefficients& g) {
    long lp = static_cast<long>(g.p);
    for (long m = 1; m <= g.trunc; ++m) {
        const PadicNum& cm = g.c[static_cast<std::size_t>(m)];
        if (m == 1) {
            if (!certified_in(cm, 0, "c_1 in Z_p", m))
                return CheckReport::failing(g.trunc, Violation{{2L, 1L}, cm.str()},
                                            "log_coeff_condition");
        } else if (m % lp != 0) {
            if (!certified_in(cm, 1, "off-chain coefficient in pZ_p", m))
                return CheckReport::failing(g.trunc, Violation{{3L, m}, cm.str()},
                                            "log_coeff_condition");
        } else {
            long j = m / lp;
            PadicNum d = cm.times_int(lp) - g.c[static_cast<std::size_t>(j)];
            if (!certified_in(d, 1, "chain congruence", m))
                return CheckReport::failing(g.trunc, Violation{{1L, j}, d.str()},
                                            "log_coeff_condition");
        }
    }
    return CheckReport::passing(g.trunc);
}

CheckReport integral_defect_check(const PadicSeries& f) {
    require_one_constant(f);
    for (long k = 0; k <= f.known_to; ++k) {
        if (!certified_in(f.at(k), 0, "coefficient integrality", k))
            return CheckReport::failing(f.known_to, Violation{{k}, f.at(k).str()},
                                        "not_integral");
    }
    CheckReport inner = check_defect_support(reduce_series(f));
    if (inner.pass) return CheckReport::passing(inner.trunc);
    return inner;  // carries the (i, j) pair and "not_p_supported"
}

AgreementReport criteria_agreement(const PadicSeries& f) {
    require_one_constant(f);
    AgreementReport out;
    out.cond_series = integral_defect_check(f);
    out.cond_logcoeffs = log_coeff_conditions(LogCoefficients::from_series(ser_log(f)));
    if (out.cond_series.pass == out.cond_logcoeffs.pass) {
        out.report = CheckReport::passing(f.known_to,
                                          out.cond_series.pass ? "agree_pass" : "agree_fail");
    } else {
        const CheckReport& failed =
            out.cond_series.pass ? out.cond_logcoeffs : out.cond_series;
        Violation v = failed.first_violation ? *failed.first_violation : Violation{{}, ""};
        out.report = CheckReport::failing(f.known_to, v, "equivalence_violation");
    }
    return out;
}

CheckReport ppower_exp_check(const PurePPowerExp& b) {
    if (b.b.empty()) raise(errc::invalid_argument, "empty exponent coefficient list");
    long m = static_cast<long>(b.b.size()) - 1;
    long lp = static_cast<long>(b.p);

    bool cond_ok = true;
    Violation viol;
    for (long i = 0; i <= m; ++i) {
        PadicNum d = b.b[static_cast<std::size_t>(i)].times_int(lp);
        if (i >= 1) d = d - b.b[static_cast<std::size_t>(i - 1)];
        if (!certified_in(d, 1, "exponent chain congruence", i)) {
            cond_ok = false;
            viol = Violation{{i}, d.str()};
            break;
        }
    }

    // Independent reading: exponentiate to degree p^m and inspect valuations.
    mpz_class T_mpz = 1;
    for (long i = 0; i < m; ++i) T_mpz *= static_cast<unsigned long>(b.p);
    if (T_mpz > 4096)
        raise(errc::too_large, "cross-check expansion to degree p^m exceeds the 4096 bound");
    long T = T_mpz.get_si();
    const PrecisionPolicy& pol = b.b[0].policy();
    PadicSeries g = PadicSeries::make(b.p, T, PadicNum::exact_zero(pol));
    long q = 1;
    for (long i = 0; i <= m; ++i) {
        g.at(q) = b.b[static_cast<std::size_t>(i)];
        q *= lp;
        if (q > T) break;
    }
    PadicSeries f = ser_exp(g);
    bool direct_ok = true;
    for (long k = 0; k <= f.known_to; ++k) {
        if (!certified_in(f.at(k), 0, "exponentiated coefficient integrality", k)) {
            direct_ok = false;
            break;
        }
    }
    if (cond_ok != direct_ok)
        raise(errc::internal_check_failed,
              "exponent chain conditions and direct exponentiation disagreed");
    if (cond_ok) return CheckReport::passing(m);
    return CheckReport::failing(m, viol, "ppower_exp_chain");
}

CheckReport logderiv_congruence(const LogCoefficients& g) {
    long lp = static_cast<long>(g.p);
    std::vector<PadicNum> jc(g.c.size(), PadicNum::exact_zero(g.c[0].policy()));
    for (long j = 1; j <= g.trunc; ++j) {
        jc[static_cast<std::size_t>(j)] = g.c[static_cast<std::size_t>(j)].times_int(j);
        Trit t = jc[static_cast<std::size_t>(j)].in_p_power_zp(0);
        if (t == Trit::no)
            raise_at(errc::precondition_violated,
                     "j*c_j is not p-integral at j = " + std::to_string(j), j);
        if (t == Trit::unknown)
            raise_at(errc::insufficient_precision,
                     "integrality of j*c_j undecidable at j = " + std::to_string(j), j);
    }

    // Reading 1: reduce X G'(X) mod p and test additivity bivariately.
    FpSeries h = FpSeries::make(g.p, g.trunc, FpElem(0, g.p));
    for (long j = 1; j <= g.trunc; ++j) h.at(j) = jc[static_cast<std::size_t>(j)].reduce_modp();
    CheckReport additive = is_additive(h);

    // Reading 2: j*c_j in pZ_p unless j is a power of p.
    bool member_ok = true;
    Violation viol;
    for (long j = 1; j <= g.trunc; ++j) {
        if (is_p_power(j, lp)) continue;
        if (!certified_in(jc[static_cast<std::size_t>(j)], 1, "j*c_j in pZ_p", j)) {
            member_ok = false;
            viol = Violation{{j}, jc[static_cast<std::size_t>(j)].str()};
            break;
        }
    }
    if (additive.pass != member_ok)
        raise(errc::internal_check_failed,
              "additivity of X G' mod p and the pZ_p membership reading disagreed");
    if (member_ok) return CheckReport::passing(g.trunc);
    return CheckReport::failing(g.trunc, viol, "logderiv_not_additive");
}

PadicSeries lift_modp(const FpSeries& f, const PrecisionPolicy& pol) {
    PadicSeries r = PadicSeries::make(f.p, f.trunc, PadicNum::exact_zero(pol));
    r.known_to = f.known_to;
    for (long k = 0; k <= f.trunc; ++k) {
        std::uint64_t d = f.at(k).value();
        if (d != 0)
            r.at(k) = PadicNum::make_finite(0, mpz_class(static_cast<unsigned long>(d)),
                                            pol.N, pol);
    }
    return r;
}

PadicSeries lift_modp(const FpSeries& f) {
    return lift_modp(f, PrecisionPolicy::for_truncation(f.p, f.trunc));
}

DecompResult decompose_via_padic(const FpSeries& f, const PadicSeries& lifted) {
    CheckReport property = check_defect_support(f);
    if (!property.pass)
        raise(errc::property_absent,
              "series defect is not supported on multiples of p; nothing to decompose");
    long T = f.trunc;
    long lp = static_cast<long>(f.p);
    const PrecisionPolicy& pol = lifted.at(0).policy();

    PadicSeries G = ser_log(lifted);
    CheckReport conds = log_coeff_conditions(LogCoefficients::from_series(G));
    if (!conds.pass)
        raise(errc::internal_check_failed,
              "log coefficients of a property-passing series violated the conditions");

    // Split exp(G) = exp(c_1 X) * exp(sum c_(pj) X^(pj)) * (factor that dies mod p).
    PadicNum c1 = T >= 1 ? G.at(1) : PadicNum::exact_zero(pol);
    PadicSeries lin = PadicSeries::make(f.p, T, PadicNum::exact_zero(pol));
    if (T >= 1) lin.at(1) = c1;
    PadicSeries mult = PadicSeries::make(f.p, T, PadicNum::exact_zero(pol));
    for (long j = lp; j <= T; j += lp) mult.at(j) = G.at(j);
    PadicSeries split = ser_mul(ser_exp(lin), ser_exp(mult));

    // Quotient by the p-adic Artin-Hasse series at c_1 X; the result must be
    // an integral series in X^p.
    PadicSeries E = ah_build(f.p, T, pol).exact;
    PadicSeries Ec1 = ser_compose_scale(E, c1);
    PadicSeries q = ser_mul(split, ser_inv(Ec1));
    for (long k = 0; k <= q.known_to; ++k) {
        if (!certified_in(q.at(k), 0, "quotient integrality", k))
            raise(errc::internal_check_failed, "split quotient lost integrality");
    }
    FpSeries qbar = reduce_series(q);
    for (long k = 1; k <= qbar.known_to; ++k) {
        if (k % lp != 0 && !qbar.at(k).is_zero())
            raise(errc::internal_check_failed, "split quotient not supported on X^p");
    }

    DecompResult out;
    out.c = T >= 1 ? f.at(1) : FpElem(0, f.p);
    out.g = ser_extract_pth(qbar, f.p);
    out.residual_ok = true;
    out.report = CheckReport::passing(qbar.known_to);

    DecompResult direct = decompose(f);
    if (!direct.residual_ok || direct.c != out.c || !(direct.g == out.g))
        raise(errc::internal_check_failed,
              "p-adic decomposition route disagreed with the direct route");
    return out;
}

DecompResult decompose_via_padic(const FpSeries& f) {
    return with_precision_ladder(
        PrecisionPolicy::for_truncation(f.p, f.trunc), [&](const PrecisionPolicy& pol) {
            return decompose_via_padic(f, lift_modp(f, pol));
        });
}

}  // namespace ahx

#include "ahx/json_io.hpp"

#include <cctype>

namespace ahx {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(errc::invalid_argument, what); }

bool is_nonneg_int(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !is_nonneg_int(j[key]))
        bad(std::string("field '") + key + "' must be a non-negative integer");
    return j[key].get<std::uint64_t>();
}

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

json padic_to_json(const PadicNum& a) {
    json j = json::object();
    switch (a.kind()) {
        case PadicNum::Kind::zero:
            j["val"] = "inf";
            j["unit"] = "0";
            j["digits"] = 0;
            break;
        case PadicNum::Kind::bounded:
            j["val"] = a.valuation();
            j["unit"] = "0";
            j["digits"] = 0;
            break;
        case PadicNum::Kind::finite:
            j["val"] = a.valuation();
            j["unit"] = a.unit().get_str();
            j["digits"] = a.digits();
            break;
    }
    return j;
}

PadicNum padic_from_json(const json& j, const PrecisionPolicy& pol) {
    if (!j.is_object() || !j.contains("val") || !j.contains("unit") || !j.contains("digits"))
        bad("padic coefficient must be an object with fields val, unit, digits");
    const json& jd = j["digits"];
    if (!jd.is_number_integer() || jd.get<long>() < 0)
        bad("padic field 'digits' must be a non-negative integer");
    int digits = jd.get<int>();
    const json& ju = j["unit"];
    if (!ju.is_string() || !is_decimal(ju.get<std::string>()))
        bad("padic field 'unit' must be a decimal string");
    mpz_class unit(ju.get<std::string>(), 10);
    const json& jv = j["val"];
    if (jv.is_string()) {
        if (jv.get<std::string>() != "inf") bad("padic field 'val' must be an integer or \"inf\"");
        if (digits != 0 || unit != 0) bad("the exact zero carries unit \"0\" and digits 0");
        return PadicNum::exact_zero(pol);
    }
    if (!jv.is_number_integer()) bad("padic field 'val' must be an integer or \"inf\"");
    long val = jv.get<long>();
    if (digits == 0) {
        if (unit != 0) bad("a bound O(p^val) carries unit \"0\"");
        return PadicNum::make_bounded(val, pol);
    }
    if (unit % pol.p == 0) bad("padic unit must be coprime to p");
    if (unit >= mpz_pow_p(pol.p, digits)) bad("padic unit exceeds p^digits");
    return PadicNum::make_finite(val, unit, digits, pol);
}

SeriesDocument SeriesDocument::from_fp(const FpSeries& f) {
    SeriesDocument d;
    d.p = f.p;
    d.trunc = f.trunc;
    d.ring = "fp";
    d.fp_coeffs.reserve(f.c.size());
    for (const FpElem& a : f.c) d.fp_coeffs.push_back(a.value());
    return d;
}

SeriesDocument SeriesDocument::from_padic(const PadicSeries& f) {
    SeriesDocument d;
    d.p = f.p;
    d.trunc = f.trunc;
    d.ring = "padic";
    d.padic_coeffs = f.c;
    return d;
}

FpSeries SeriesDocument::to_fp() const {
    if (ring != "fp") bad("operation requires an fp-ring document");
    FpSeries f = FpSeries::make(p, trunc, FpElem(0, p));
    for (long k = 0; k <= trunc; ++k) f.at(k) = FpElem(fp_coeffs[static_cast<std::size_t>(k)], p);
    return f;
}

PadicSeries SeriesDocument::to_padic() const {
    return to_padic(PrecisionPolicy::for_truncation(p, trunc));
}

PadicSeries SeriesDocument::to_padic(const PrecisionPolicy& pol) const {
    if (ring != "padic") bad("operation requires a padic-ring document");
    if (pol.p != p) bad("precision policy prime does not match the document");
    PadicSeries f = PadicSeries::make(p, trunc, PadicNum::exact_zero(pol));
    // Re-anchor every coefficient under pol so the whole computation shares
    // one policy (stored digit counts are data and are preserved).
    for (long k = 0; k <= trunc; ++k) {
        const PadicNum& a = padic_coeffs[static_cast<std::size_t>(k)];
        switch (a.kind()) {
            case PadicNum::Kind::zero:
                break;
            case PadicNum::Kind::bounded:
                f.at(k) = PadicNum::make_bounded(a.valuation(), pol);
                break;
            case PadicNum::Kind::finite:
                f.at(k) = PadicNum::make_finite(a.valuation(), a.unit(), a.digits(), pol);
                break;
        }
    }
    return f;
}

json doc_to_json(const SeriesDocument& doc) {
    json j = json::object();
    j["p"] = doc.p;
    j["trunc"] = doc.trunc;
    j["ring"] = doc.ring;
    json coeffs = json::array();
    if (doc.ring == "fp")
        for (std::uint64_t v : doc.fp_coeffs) coeffs.push_back(v);
    else
        for (const PadicNum& a : doc.padic_coeffs) coeffs.push_back(padic_to_json(a));
    j["coeffs"] = std::move(coeffs);
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j;
}

SeriesDocument doc_from_json(const json& j) {
    if (!j.is_object()) bad("a series document must be a JSON object");
    SeriesDocument d;
    d.p = get_u64(j, "p");
    require_prime_modulus(d.p);
    if (!j.contains("trunc") || !j["trunc"].is_number_integer() || j["trunc"].get<long>() < 0)
        bad("field 'trunc' must be a non-negative integer");
    d.trunc = j["trunc"].get<long>();
    if (!j.contains("ring") || !j["ring"].is_string()) bad("field 'ring' must be \"fp\" or \"padic\"");
    d.ring = j["ring"].get<std::string>();
    if (d.ring != "fp" && d.ring != "padic") bad("field 'ring' must be \"fp\" or \"padic\"");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        bad("field 'coeffs' must be an array of trunc+1 entries");
    const json& coeffs = j["coeffs"];
    if (static_cast<long>(coeffs.size()) != d.trunc + 1)
        bad("field 'coeffs' must hold exactly trunc+1 entries, got " +
            std::to_string(coeffs.size()));
    if (d.ring == "fp") {
        d.fp_coeffs.reserve(coeffs.size());
        for (const json& e : coeffs) {
            if (!is_nonneg_int(e) || e.get<std::uint64_t>() >= d.p)
                bad("fp coefficients must be integers in [0, p)");
            d.fp_coeffs.push_back(e.get<std::uint64_t>());
        }
    } else {
        PrecisionPolicy pol = PrecisionPolicy::for_truncation(d.p, d.trunc);
        d.padic_coeffs.reserve(coeffs.size());
        for (const json& e : coeffs) d.padic_coeffs.push_back(padic_from_json(e, pol));
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) bad("field 'meta' must be an object");
        d.meta = j["meta"];
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "p" && k != "trunc" && k != "ring" && k != "coeffs" && k != "meta")
            bad("unknown document field '" + k + "'");
    }
    return d;
}

json report_to_json(const CheckReport& r) {
    json j = json::object();
    j["pass"] = r.pass;
    j["trunc"] = r.trunc;
    j["detail"] = r.detail;
    if (r.first_violation) {
        json v = json::object();
        v["index"] = r.first_violation->index;
        v["coeff"] = r.first_violation->coeff;
        j["first_violation"] = std::move(v);
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ahx

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ahx/padic.hpp"
#include "ahx/report.hpp"
#include "ahx/series.hpp"

namespace ahx {

using json = nlohmann::json;

// The on-disk interchange form for a truncated series.
//
// Top-level object (keys emitted alphabetically):
//   coeffs  array of trunc+1 entries, ascending by degree
//           fp ring:    plain integers in [0, p)
//           padic ring: objects {digits, unit, val} where
//                         val    integer valuation, or the string "inf" for
//                                the exact zero,
//                         unit   canonical unit written as a decimal string
//                                (units outgrow every safe integer range),
//                         digits number of certified unit digits; 0 encodes
//                                a pure bound O(p^val) (unit "0")
//   meta    optional free-form provenance object (preserved verbatim)
//   p       prime modulus
//   ring    "fp" | "padic"
//   trunc   truncation order T
//
// Documents are emitted with two-space indentation and a trailing newline, so
// equal documents are byte-identical across runs and platforms.
struct SeriesDocument {
    std::uint64_t p = 2;
    long trunc = 0;
    std::string ring = "fp";
    std::vector<std::uint64_t> fp_coeffs;  // ring == "fp"
    std::vector<PadicNum> padic_coeffs;    // ring == "padic"
    json meta = json::object();

    static SeriesDocument from_fp(const FpSeries& f);
    static SeriesDocument from_padic(const PadicSeries& f);

    FpSeries to_fp() const;        // requires ring == "fp"
    PadicSeries to_padic() const;  // requires ring == "padic"
    // Same, under an explicit working-precision policy (e.g. a --prec override).
    PadicSeries to_padic(const PrecisionPolicy& pol) const;
};

// Document <-> JSON. Parsing validates every schema invariant and raises
// errc::invalid_argument (never a bare library exception) on violations.
json doc_to_json(const SeriesDocument& doc);
SeriesDocument doc_from_json(const json& j);

// One padic coefficient <-> its {digits, unit, val} object.
json padic_to_json(const PadicNum& a);
PadicNum padic_from_json(const json& j, const PrecisionPolicy& pol);

// Check outcome as JSON: {detail, first_violation: null | {coeff, index}, pass, trunc}.
json report_to_json(const CheckReport& r);

// Canonical bytes: dump with 2-space indent plus a trailing newline.
std::string dump_canonical(const json& j);

}  // namespace ahx

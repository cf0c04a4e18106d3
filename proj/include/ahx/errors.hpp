#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ahx {

// Every failure mode of the toolkit is an Error with a machine-readable code.
// Codes are stable: the CLI maps them to exit codes and the JSON reports quote
// their names.
enum class errc {
    division_by_zero,
    valuation_underflow,     // a computation walked below the fractional floor M
    precision_exhausted,     // an integer division consumed the last known digit
    insufficient_precision,  // a certified yes/no answer is not available at this precision
    not_integral,
    context_mismatch,        // operands with different p / truncation / ring
    non_unit_constant_term,
    constant_term_not_one,
    nonzero_constant_term,
    not_p_supported,
    too_large,               // enumeration or expansion bounds exceeded
    property_absent,         // decomposition requested for a series without the property
    precondition_violated,
    integrality_violation,   // a value that must be integral is certifiably not (bug signal)
    internal_check_failed,   // two routes that must agree disagreed (bug signal)
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "division_by_zero";
        case errc::valuation_underflow: return "valuation_underflow";
        case errc::precision_exhausted: return "precision_exhausted";
        case errc::insufficient_precision: return "insufficient_precision";
        case errc::not_integral: return "not_integral";
        case errc::context_mismatch: return "context_mismatch";
        case errc::non_unit_constant_term: return "non_unit_constant_term";
        case errc::constant_term_not_one: return "constant_term_not_one";
        case errc::nonzero_constant_term: return "nonzero_constant_term";
        case errc::not_p_supported: return "not_p_supported";
        case errc::too_large: return "too_large";
        case errc::property_absent: return "property_absent";
        case errc::precondition_violated: return "precondition_violated";
        case errc::integrality_violation: return "integrality_violation";
        case errc::internal_check_failed: return "internal_check_failed";
        case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Error(errc code, const std::string& what, long index)
        : std::runtime_error(what), code_(code), index_(index) {}

    errc code() const { return code_; }
    // Optional payload: the offending degree / index, when one exists.
    std::optional<long> index() const { return index_; }

  private:
    errc code_;
    std::optional<long> index_;
};

// Precision errors are the retryable class: callers owning exact sources may
// rebuild at doubled working precision (see PrecisionPolicy::doubled()).
inline bool is_precision_error(errc c) {
    return c == errc::precision_exhausted || c == errc::insufficient_precision;
}

[[noreturn]] inline void raise(errc c, const std::string& msg) { throw Error(c, msg); }
[[noreturn]] inline void raise_at(errc c, const std::string& msg, long index) {
    throw Error(c, msg, index);
}

}  // namespace ahx

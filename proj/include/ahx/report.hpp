#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ahx {

// First offending position of a failed check. `index` holds one entry for a
// univariate degree, two for a bivariate exponent pair (i, j) or a
// (family, j) condition label; `coeff` renders the offending value.
struct Violation {
    std::vector<long> index;
    std::string coeff;
};

// Outcome of a predicate over truncated data. Every verdict is certified only
// up to `trunc`; `detail` is a stable machine-readable reason code.
struct CheckReport {
    bool pass = true;
    long trunc = 0;
    std::string detail;
    std::optional<Violation> first_violation;

    static CheckReport passing(long trunc, std::string detail = "") {
        CheckReport r;
        r.pass = true;
        r.trunc = trunc;
        r.detail = std::move(detail);
        return r;
    }
    static CheckReport failing(long trunc, Violation v, std::string detail) {
        CheckReport r;
        r.pass = false;
        r.trunc = trunc;
        r.detail = std::move(detail);
        r.first_violation = std::move(v);
        return r;
    }
};

}  // namespace ahx

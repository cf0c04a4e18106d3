#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ahx/json_io.hpp"

namespace ahx {

// Full command-line entry point, shared verbatim by the `ahx` executable and
// the Python bindings so both surfaces produce byte-identical output.
//
// Subcommands:
//   ep         build the Artin-Hasse exponential (mod-p or exact document)
//   check      run one of the checks (--mode theorem|corollary|dwork|prop)
//   decompose  factor a series as (Artin-Hasse)(cX) * g(X^p) (--via direct|padic)
//   enumerate  exhaustive small-(p,T) property/form sets
//   random     seeded deterministic document generation (--kind property|arbitrary|cond2)
//
// Exit codes: 0 pass, 1 property failure, 2 usage error, 3 precision
// exhaustion, 4 internal cross-check failure (a bug, never expected).
//
// `args` excludes the program name. Documents are read from --in FILE or the
// `in` stream, and written to --out FILE or the `out` stream.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

// Maps a raised Error to the process exit code documented above.
int exit_code_for(const Error& e);

// Rendering helpers shared by commands and tests.
std::string render_series_text(const SeriesDocument& doc);
std::string render_report_text(const CheckReport& r);

}  // namespace ahx

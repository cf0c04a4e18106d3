#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ahx/artinhasse.hpp"
#include "ahx/charp.hpp"
#include "ahx/commands.hpp"
#include "ahx/padiccrit.hpp"

namespace py = pybind11;

namespace {

using ahx::json;

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

ahx::FpSeries fp_from_list(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
    ahx::require_prime_modulus(p);
    if (coeffs.empty())
        ahx::raise(ahx::errc::invalid_argument, "coefficient list must be nonempty");
    for (std::uint64_t v : coeffs)
        if (v >= p) ahx::raise(ahx::errc::invalid_argument, "coefficients must lie in [0, p)");
    ahx::FpSeries f =
        ahx::FpSeries::make(p, static_cast<long>(coeffs.size()) - 1, ahx::FpElem(0, p));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        f.at(static_cast<long>(k)) = ahx::FpElem(coeffs[k], p);
    return f;
}

std::vector<std::uint64_t> list_from_fp(const ahx::FpSeries& f) {
    std::vector<std::uint64_t> out;
    out.reserve(f.c.size());
    for (const ahx::FpElem& a : f.c) out.push_back(a.value());
    return out;
}

py::dict report_to_py(const ahx::CheckReport& r) {
    return py::dict(json_to_py(ahx::report_to_json(r)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Artin-Hasse exponentials and p-supported multiplicativity defects";

    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const ahx::Error& e) {
            std::string msg = std::string(ahx::errc_name(e.code())) + ": " + e.what();
            if (ahx::exit_code_for(e) == 2)
                PyErr_SetString(PyExc_ValueError, msg.c_str());
            else
                PyErr_SetString(PyExc_RuntimeError, msg.c_str());
        }
    });

    m.def(
        "run",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            int code = ahx::run_cli(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin_text") = std::string(),
        "Run the command-line interface in-process; returns (exit_code, stdout, stderr).");

    m.def(
        "artin_hasse_modp",
        [](std::uint64_t p, long trunc) {
            return list_from_fp(ahx::ah_build(p, trunc).modp);
        },
        py::arg("p"), py::arg("trunc"),
        "Mod-p Artin-Hasse exponential coefficients a_0..a_trunc.");

    m.def(
        "check_defect_support",
        [](std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
            return report_to_py(ahx::check_defect_support(fp_from_list(p, coeffs)));
        },
        py::arg("p"), py::arg("coeffs"),
        "Is the multiplicativity defect supported on total degrees divisible by p?");

    m.def(
        "synthesize",
        [](std::uint64_t p, std::uint64_t c, const std::vector<std::uint64_t>& g, long trunc) {
            return list_from_fp(
                ahx::synthesize(ahx::FpElem(c, p), fp_from_list(p, g), trunc));
        },
        py::arg("p"), py::arg("c"), py::arg("g"), py::arg("trunc"),
        "(Artin-Hasse mod p)(cX) * g(X^p), truncated at trunc.");

    m.def(
        "decompose",
        [](std::uint64_t p, const std::vector<std::uint64_t>& coeffs, const std::string& via) {
            ahx::FpSeries f = fp_from_list(p, coeffs);
            ahx::DecompResult r =
                via == "padic" ? ahx::decompose_via_padic(f) : ahx::decompose(f);
            py::dict out;
            out["c"] = r.c.value();
            out["g"] = list_from_fp(r.g);
            out["residual_ok"] = r.residual_ok;
            out["report"] = report_to_py(r.report);
            return out;
        },
        py::arg("p"), py::arg("coeffs"), py::arg("via") = "direct",
        "Factor as (Artin-Hasse mod p)(cX) * g(X^p); via = 'direct' or 'padic'.");

    m.def(
        "logderiv_constant",
        [](std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
            ahx::LogDerivConstant r = ahx::logderiv_constant(fp_from_list(p, coeffs));
            py::dict out;
            out["c"] = r.c ? py::object(py::int_(r.c->value())) : py::object(py::none());
            out["report"] = report_to_py(r.report);
            return out;
        },
        py::arg("p"), py::arg("coeffs"),
        "The constant c with f'/f = c * sum X^(p^i - 1), when that shape holds.");

    m.def(
        "enumerate_small",
        [](std::uint64_t p, long trunc) {
            ahx::EnumerationSets s = ahx::enumerate_small(p, trunc);
            auto to_list = [](const std::set<std::vector<std::uint64_t>>& in) {
                py::list out;
                for (const auto& m : in) out.append(m);
                return out;
            };
            return py::make_tuple(to_list(s.s_property), to_list(s.s_form));
        },
        py::arg("p"), py::arg("trunc"),
        "Exhaustive (property set, synthesized-form set) for small p^trunc.");
}

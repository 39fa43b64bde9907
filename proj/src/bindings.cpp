#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qloz/enumerate.hpp"
#include "qloz/exponents.hpp"
#include "qloz/formulas.hpp"
#include "qloz/json_io.hpp"
#include "qloz/partitions.hpp"
#include "qloz/svg.hpp"
#include "qloz/verify.hpp"

namespace py = pybind11;
using namespace qloz;

namespace {

WeightScheme scheme_of(const std::string& w) {
    auto s = weight_scheme_from_string(w);
    if (!s) throw std::invalid_argument("unknown weight: " + w);
    return *s;
}

std::string count_str(const std::string& spec_json) {
    return count_tilings(build_region(region_spec_from_json(spec_json))).str();
}

std::string qpoly_json(const std::string& spec_json, const std::string& weight,
                       const std::string& engine) {
    RegionSpec spec = region_spec_from_json(spec_json);
    WeightScheme s = scheme_of(weight);
    QPoly p;
    if (engine == "dp")
        p = tiling_polynomial(build_region(spec), s).value;
    else if (engine == "naive")
        p = tiling_polynomial_naive(build_region(spec), s).value;
    else
        throw std::invalid_argument("unknown engine: " + engine);
    return qpoly_to_json(p);
}

std::string formula_value(const std::string& name, const std::vector<long long>& p) {
    auto id = formula_id_from_string(name);
    if (!id) throw std::invalid_argument("unknown formula id: " + name);
    auto need = [&](std::size_t n) {
        if (p.size() != n)
            throw std::invalid_argument(name + " expects " + std::to_string(n) + " parameters");
    };
    switch (*id) {
        case FormulaId::MacMahonQ: need(3); return qpoly_to_json(f_macmahon_q(p[0], p[1], p[2]).expand());
        case FormulaId::MainCount: need(9); return f_main_count(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]).str();
        case FormulaId::MainQ: need(9); return qpoly_to_json(f_main_q(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]).expand());
        case FormulaId::HexWt1: need(3); return qpoly_to_json(f_hex_wt1(p[0], p[1], p[2]).expand());
        case FormulaId::HexWt2: need(3); return qpoly_to_json(f_hex_wt2(p[0], p[1], p[2]).expand());
        case FormulaId::KWt2: need(5); return qpoly_to_json(f_k_wt2(p[0], p[1], p[2], p[3], p[4]).expand());
        case FormulaId::QWt2: need(6); return qpoly_to_json(f_q_wt2(p[0], p[1], p[2], p[3], p[4], p[5]).expand());
        case FormulaId::QWt3: need(6); return qpoly_to_json(f_q_wt3(p[0], p[1], p[2], p[3], p[4], p[5]).expand());
        case FormulaId::BWt2: need(8); return qpoly_to_json(f_b_wt2(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]).expand());
        case FormulaId::ExpG: need(9); return std::to_string(exp_g(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]));
        case FormulaId::ExpH: need(9); return std::to_string(exp_h(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]));
        case FormulaId::ExpE: need(6); return std::to_string(exp_E(p[0], p[1], p[2], p[3], p[4], p[5]));
        case FormulaId::ExpA: need(8); return std::to_string(exp_A(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]));
        case FormulaId::CorollaryPP: need(6); return f_corollary_pp(p[0], p[1], p[2], p[3], p[4], p[5]).str();
    }
    throw std::logic_error("unhandled formula id");
}

std::string gpp_volume_json(const std::string& spec_json) {
    return qpoly_to_json(gpp_volume_poly(region_spec_from_json(spec_json)));
}

std::string verify_json(const std::string& suite, long long max_n, int jobs) {
    return run_suite(suite, max_n, jobs).to_json();
}

std::string render_svg(const std::string& spec_json, bool lex_first_tiling) {
    RegionSpec spec = region_spec_from_json(spec_json);
    std::optional<std::vector<Lozenge>> tiling;
    if (lex_first_tiling) {
        auto tilings = enumerate_tilings(build_region(spec), 1);
        if (tilings.empty()) throw std::runtime_error("region is untileable");
        tiling = tilings.front();
    }
    return render_region_svg(spec, tiling);
}

}  // namespace

PYBIND11_MODULE(_qloz, m) {
    m.doc() = "Exact q-enumeration of lozenge tilings of dented hexagons";

    m.def("count", &count_str, py::arg("spec_json"),
          "Number of lozenge tilings of the region, as a decimal string.");
    m.def("qpoly", &qpoly_json, py::arg("spec_json"), py::arg("weight") = "none",
          py::arg("engine") = "dp",
          "Weighted tiling generating polynomial as {\"poly\": [[e, \"c\"], ...]} JSON.");
    m.def("formula", &formula_value, py::arg("name"), py::arg("params"),
          "Closed-form value: polynomial JSON for q-formulas, a decimal string for counts, "
          "a plain integer string for exponents.");
    m.def("gpp_volume", &gpp_volume_json, py::arg("spec_json"),
          "Volume generating polynomial of the generalized piles of an F region.");
    m.def("verify", &verify_json, py::arg("suite") = "all", py::arg("max") = 1,
          py::arg("jobs") = 1, "Run a verification suite, returning the report JSON.");
    m.def("render_svg", &render_svg, py::arg("spec_json"), py::arg("lex_first_tiling") = false,
          "Deterministic SVG drawing of the region, optionally with its first tiling.");
    m.def("suites", &suite_names, "Names of the verification suites.");
    m.def("formula_names", &formula_id_names, "Names of the closed-form evaluators.");
}

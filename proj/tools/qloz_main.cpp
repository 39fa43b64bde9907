#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "qloz/enumerate.hpp"
#include "qloz/errors.hpp"
#include "qloz/exponents.hpp"
#include "qloz/formulas.hpp"
#include "qloz/json_io.hpp"
#include "qloz/partitions.hpp"
#include "qloz/svg.hpp"
#include "qloz/verify.hpp"

namespace {

using namespace qloz;

constexpr int kExitParse = 2;
constexpr int kExitRegion = 3;
constexpr int kExitCapability = 4;

RegionSpec parse_spec_arg(const std::string& arg) {
    if (arg == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        return region_spec_from_json(text);
    }
    return region_spec_from_json(arg);
}

// Formula-engine polynomial for a family/weight pair; nullopt when no closed
// form covers the combination.
std::optional<QPoly> formula_poly(const RegionSpec& spec, WeightScheme scheme) {
    using F = RegionSpec::Family;
    const auto& p = spec.params;
    switch (spec.family) {
        case F::Hex:
            if (scheme == WeightScheme::Wt1) return f_hex_wt1(p[0], p[1], p[2]).expand();
            if (scheme == WeightScheme::Wt2) return f_hex_wt2(p[0], p[1], p[2]).expand();
            if (scheme == WeightScheme::Unweighted)
                return QPoly(f_macmahon_q(p[0], p[1], p[2]).eval_at_one());
            return std::nullopt;
        case F::K:
            if (scheme == WeightScheme::Wt2)
                return f_k_wt2(p[0], p[1], p[2], p[3], p[4]).expand();
            if (scheme == WeightScheme::Unweighted)
                return QPoly(f_k_wt2(p[0], p[1], p[2], p[3], p[4]).eval_at_one());
            return std::nullopt;
        case F::Q:
            if (scheme == WeightScheme::Wt2)
                return f_q_wt2(p[0], p[1], p[2], p[3], p[4], p[5]).expand();
            if (scheme == WeightScheme::Wt3)
                return f_q_wt3(p[0], p[1], p[2], p[3], p[4], p[5]).expand();
            if (scheme == WeightScheme::Unweighted)
                return QPoly(f_q_wt2(p[0], p[1], p[2], p[3], p[4], p[5]).eval_at_one());
            return std::nullopt;
        case F::B:
            if (scheme == WeightScheme::Wt2)
                return f_b_wt2(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]).expand();
            if (scheme == WeightScheme::Unweighted)
                return QPoly(
                    f_b_wt2(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]).eval_at_one());
            return std::nullopt;
        case F::F: {
            const auto& v = p;
            long long h = exp_h(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
            long long g = exp_g(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
            if (scheme == WeightScheme::Wt2)
                return f_main_q(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8])
                    .expand()
                    .shifted(h);
            if (scheme == WeightScheme::Wt1)
                return f_main_q(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8])
                    .expand()
                    .shifted(g);
            if (scheme == WeightScheme::Unweighted)
                return QPoly(
                    f_main_count(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-enumeration of lozenge tilings of dented hexagons"};
    app.require_subcommand(1);

    std::string spec_json;
    std::string weight = "none";
    std::string engine = "dp";
    std::string suite = "all";
    std::string tiling_mode = "none";
    std::string out_path;
    long long max_n = 1;
    int jobs = 1;

    auto* cmd_count = app.add_subcommand("count", "Number of lozenge tilings of a region");
    cmd_count->add_option("spec", spec_json, "Region spec JSON (or - for stdin)")->required();

    auto* cmd_qpoly = app.add_subcommand("qpoly", "Weighted tiling generating polynomial");
    cmd_qpoly->add_option("spec", spec_json, "Region spec JSON (or - for stdin)")->required();
    cmd_qpoly->add_option("--weight", weight, "none|wt1|wt2|wt3")->capture_default_str();
    cmd_qpoly->add_option("--engine", engine, "dp|naive|formula")->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "Formula-vs-enumeration suites");
    cmd_verify
        ->add_option("--suite", suite,
                     "hex|k|q|b|f|kuo|recurrences|corollary|qalgebra|oracle|calibration|all")
        ->capture_default_str();
    cmd_verify->add_option("--max", max_n, "parameter bound")->capture_default_str();
    cmd_verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* cmd_render = app.add_subcommand("render", "Region (and optional tiling) as SVG");
    cmd_render->add_option("spec", spec_json, "Region spec JSON (or - for stdin)")->required();
    cmd_render->add_option("--tiling", tiling_mode, "none|lex-first")->capture_default_str();
    cmd_render->add_option("--out", out_path, "output path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_count->parsed()) {
            RegionSpec spec = parse_spec_arg(spec_json);
            std::cout << count_tilings(build_region(spec)).str() << "\n";
            return 0;
        }

        if (cmd_qpoly->parsed()) {
            RegionSpec spec = parse_spec_arg(spec_json);
            auto scheme = weight_scheme_from_string(weight);
            if (!scheme) throw ParseError("unknown weight: " + weight);
            QPoly poly;
            if (engine == "dp") {
                poly = tiling_polynomial(build_region(spec), *scheme).value;
            } else if (engine == "naive") {
                poly = tiling_polynomial_naive(build_region(spec), *scheme).value;
            } else if (engine == "formula") {
                auto p = formula_poly(spec, *scheme);
                if (!p) {
                    std::cerr << "no closed formula for family "
                              << RegionSpec::family_name(spec.family) << " with weight "
                              << weight << "\n";
                    return kExitCapability;
                }
                poly = *p;
            } else {
                throw ParseError("unknown engine: " + engine);
            }
            std::cout << qpoly_to_json(poly) << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            SuiteReport report = run_suite(suite, max_n, jobs);
            std::cout << report.to_json() << "\n";
            if (!report.all_pass()) {
                for (const auto& c : report.cases)
                    if (!c.pass) {
                        std::cerr << "first failure: " << c.name
                                  << "\n  formula: " << c.expected
                                  << "\n  enumerated: " << c.got << "\n";
                        break;
                    }
                return 1;
            }
            return 0;
        }

        if (cmd_render->parsed()) {
            RegionSpec spec = parse_spec_arg(spec_json);
            Region region = build_region(spec);
            if (region.empty()) {
                std::cerr << "region is empty\n";
                return kExitRegion;
            }
            std::optional<std::vector<Lozenge>> tiling;
            if (tiling_mode == "lex-first") {
                auto tilings = enumerate_tilings(region, 1);
                if (tilings.empty()) {
                    std::cerr << "region is untileable, no tiling to draw\n";
                    return kExitRegion;
                }
                tiling = tilings.front();
            } else if (tiling_mode != "none") {
                throw ParseError("unknown tiling mode: " + tiling_mode);
            }
            std::string svg = render_region_svg(spec, tiling);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot open " << out_path << "\n";
                    return 1;
                }
                out << svg;
            }
            return 0;
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const RegionTooLargeError& ex) {
        std::cerr << "region error: " << ex.what() << "\n";
        return kExitRegion;
    } catch (const FrontierTooWideError& ex) {
        std::cerr << "region error: " << ex.what() << "\n";
        return kExitRegion;
    } catch (const BoxTooLargeError& ex) {
        std::cerr << "region error: " << ex.what() << "\n";
        return kExitRegion;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

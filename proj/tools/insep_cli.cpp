// Command-line front end: scenario analysis, the reference regression
// suite, local resolution of order pairs, catalog listing, and zeta data.
//
// Exit codes: 0 success, 2 invalid input, 3 unclassified singularity
// (partial report emitted).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "insep/paper_suite.hpp"

using namespace insep;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

int cmd_analyze(const std::string& file, bool json_only, int budget, int precision) {
    Scenario s = parse_scenario(read_json_file(file));
    if (budget > 0) s.budget = budget;
    if (precision > 0) s.precision = precision;
    RunResult r = run_scenario(s);
    if (json_only) {
        std::cout << r.json.dump(2) << "\n";
    } else {
        std::cout << r.human << "\n" << r.json.dump(2) << "\n";
    }
    return r.exit_code;
}

int cmd_paper_suite(bool json_only) {
    auto lines = run_paper_suite();
    bool all = true;
    Json arr = Json::array();
    for (auto& l : lines) {
        all = all && l.pass;
        if (json_only) {
            arr.push_back(Json{{"scenario", l.scenario}, {"pass", l.pass}, {"diffs", l.diffs}});
        } else {
            std::cout << (l.pass ? "PASS " : "FAIL ") << l.scenario << "\n";
            for (auto& d : l.diffs) std::cout << "      " << d << "\n";
        }
    }
    if (json_only) std::cout << arr.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_resolve_local(int a, int b, const std::string& configuration, int precision) {
    if (configuration != "zeros" && configuration != "poles")
        throw ValidationError("configuration must be 'zeros' or 'poles'");
    ResolutionResult r = resolve_orders(Fq::make(1), a, b, configuration == "poles",
                                        precision > 0 ? precision : 24);
    Json j;
    Json verts = Json::array();
    for (int s : r.graph.selfint) verts.push_back(Json{{"selfint", s}});
    Json edges = Json::array();
    for (auto& [x, y] : r.graph.edges) edges.push_back(Json::array({x, y}));
    j["vertices"] = verts;
    j["edges"] = edges;
    j["shape"] = r.shape;
    j["type"] = r.matched.str();
    j["table_type"] = classify_pair(a, b).str();
    j["blowups"] = r.blowups;
    j["fundamental_cycle"] = Json{{"mult", r.fc.mult}, {"z2", r.fc.z2}, {"pa", r.fc.pa}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_catalog() {
    Json j;
    j["curves"] = Json::array({
        Json{{"type", "p1"}, {"parameters", Json::array()}},
        Json{{"type", "elliptic_deuring"}, {"parameters", Json::array({"alpha (coeff bits, alpha^3 != 1)"})}},
        Json{{"type", "hyperelliptic"},
             {"parameters", Json::array({"branch (distinct coeff bits)", "gpoly (coeff bits, deg = #branch)"})}},
        Json{{"type", "artin_schreier"}, {"parameters", Json::array({"h (genus h-1)"})}},
    });
    j["vector_fields"] = Json::array({
        Json{{"catalog", "delta1"}, {"curve", "p1"}, {"description", "(x^-4 + x^-2) d/dx"}},
        Json{{"catalog", "delta2"}, {"curve", "p1"}, {"description", "(x^-2 + x^4) d/dx"}},
        Json{{"catalog", "delta_prime"}, {"curve", "p1"}, {"parameters", Json::array({"a[]", "b[]"})},
             {"description", "prod (x-a_i)^2 (x-b_i)^-2 d/dx"}},
        Json{{"catalog", "delta_elliptic"}, {"curve", "elliptic_deuring"},
             {"parameters", Json::array({"alpha", "a", "b"})},
             {"description", "(a + b x)((1+alpha x) d/dx + (alpha y + x^2) d/dy)"}},
        Json{{"catalog", "as_ddx"}, {"curve", "artin_schreier"}, {"parameters", Json::array({"h"})},
             {"description", "lift of d/dx along z^2 - z = x^(2h-1)"}},
        Json{{"base", "ddx"}, {"parameters", Json::array({"scale_num[]", "scale_den[]"})},
             {"description", "pullback of scale(x) d/dx to the declared curve"}},
    });
    j["named_scenarios"] = all_named_scenarios();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_zeta(const std::string& file, int budget) {
    Json in = read_json_file(file);
    int k = in.at("k").get<int>();
    Fq F = Fq::make(k);
    CurveModel C = scenario_detail::curve_from_json(F, in.at("curve_C"));
    CurveModel Fc = in.contains("curve_F") ? scenario_detail::curve_from_json(F, in.at("curve_F")) : CurveModel::p1(F);
    ZetaData z = p2_kunneth(C, Fc, budget > 0 ? budget : 24);
    double dev = reciprocal_root_abs_deviation(z.p2, static_cast<double>(z.q));
    Json j;
    j["q"] = z.q;
    j["P1_C"] = report_detail::zpoly_json(z.p1_C);
    j["P1_F"] = report_detail::zpoly_json(z.p1_F);
    j["P2_product"] = report_detail::zpoly_json(z.p2);
    j["root_abs_deviation_max"] = dev;
    j["roots_on_weil_circle"] = dev < 1e-9;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inseparable-quotient surface toolkit (characteristic 2)"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_only = false;
    int budget = 0, precision = 0;
    app.add_flag("--json", json_only, "emit JSON only");
    app.add_option("--budget", budget, "point-counting budget in bits");
    app.add_option("--precision", precision, "local truncation precision");

    std::string analyze_file;
    auto* analyze_cmd = app.add_subcommand("analyze", "run one scenario from a JSON file");
    analyze_cmd->add_option("file", analyze_file, "scenario JSON")->required();

    auto* suite_cmd = app.add_subcommand("paper-suite", "run the named reference scenarios against golden values");

    int ra = 0, rb = 0;
    std::string rconf = "zeros", rl_input;
    auto* rl_cmd = app.add_subcommand("resolve-local", "resolve a local order pair and print the dual graph");
    rl_cmd->add_option("input", rl_input, "JSON file or inline object {a, b, configuration}");
    rl_cmd->add_option("--a", ra, "order |ord_x f|");
    rl_cmd->add_option("--b", rb, "order |ord_y g|");
    rl_cmd->add_option("--configuration", rconf, "zeros|poles");

    auto* cat_cmd = app.add_subcommand("catalog", "list curve and vector-field constructors");

    std::string zeta_file;
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta data for a product of curves from a JSON file");
    zeta_cmd->add_option("file", zeta_file, "JSON with k, curve_C and optional curve_F")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) return cmd_analyze(analyze_file, json_only, budget, precision);
        if (*suite_cmd) return cmd_paper_suite(json_only);
        if (*rl_cmd) {
            if (!rl_input.empty()) {
                Json j;
                if (rl_input.front() == '{') {
                    j = Json::parse(rl_input);
                } else {
                    j = read_json_file(rl_input);
                }
                ra = j.at("a").get<int>();
                rb = j.at("b").get<int>();
                if (j.contains("configuration")) rconf = j.at("configuration").get<std::string>();
            }
            if (ra <= 0 || rb <= 0) throw ValidationError("resolve-local: need positive orders a and b");
            return cmd_resolve_local(ra, rb, rconf, precision);
        }
        if (*cat_cmd) return cmd_catalog();
        if (*zeta_cmd) return cmd_zeta(zeta_file, budget);
    } catch (const ValidationError& e) {
        std::cerr << "invalid scenario: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#ifndef INSEP_PAPER_SUITE_HPP
#define INSEP_PAPER_SUITE_HPP

/// Golden regression values for the named scenarios.  Each expectation is a
/// JSON pointer into the report, the required value, and the statement the
/// number comes from.

#include "scenario.hpp"

namespace insep {

inline const char* golden_fixtures_json() {
    return R"GOLD(
{
  "bmy": {
    "exit": 0,
    "expect": {
      "/singularities/0/type":            {"value": "(19)_0", "by": "Thm 7.1 proof"},
      "/singularities/0/orders":           {"value": [4, 4], "by": "Eq. 6 and Eq. 1 pole orders"},
      "/invariants/K2_singular/value":     {"value": 16, "by": "Prop 4.2 substitution"},
      "/invariants/K2_resolved/value":     {"value": 14, "by": "Thm 7.1"},
      "/invariants/chi_Oxprime/value":     {"value": 2, "by": "Riemann-Roch chain"},
      "/invariants/chi/value":             {"value": 1, "by": "Thm 7.1"},
      "/invariants/c2/value":              {"value": -2, "by": "Noether"},
      "/invariants/b1/value":              {"value": 6, "by": "Prop 4.1"},
      "/predicates/bmy_violated":          {"value": true, "by": "Thm 7.1"},
      "/predicates/disjoint_minus2":       {"value": 5, "by": "star tips"},
      "/fibrations/over_C/fiber_arithmetic_genus/value": {"value": 2, "by": "Prop 4.4"},
      "/artin/alpha":                      {"value": 3, "by": "Prop 6.2"},
      "/artin/artin_tate/rhs_power":       {"value": 8, "by": "Prop 6.2"},
      "/zeta/P2_product":                  {"value": [1, -4, 4], "by": "rational F factor"},
      "/zeta/roots_on_weil_circle":        {"value": true, "by": "Weil bound"}
    }
  },
  "minustwo_d4": {
    "exit": 0,
    "expect": {
      "/singularities/0/type":            {"value": "D4", "by": "Thm 7.3 proof"},
      "/singularities/1/type":            {"value": "D4", "by": "Thm 7.3 proof"},
      "/invariants/K2_resolved/value":     {"value": 4, "by": "Thm 7.3"},
      "/invariants/chi/value":             {"value": 1, "by": "Thm 7.3"},
      "/invariants/c2/value":              {"value": 8, "by": "Thm 7.3"},
      "/predicates/disjoint_minus2":       {"value": 6, "by": "Thm 7.3 proof"},
      "/predicates/miyaoka_bound/str":     {"value": "20/9", "by": "substitution"},
      "/predicates/sb_bound/str":          {"value": "8", "by": "substitution"},
      "/predicates/uniruled":              {"value": false, "by": "Abelian domination"},
      "/predicates/bmy_violated":          {"value": false, "by": "4 < 9"},
      "/invariants/h01/value":             {"value": 2, "by": "reduced Picard scheme"},
      "/invariants/h02/value":             {"value": 2, "by": "chi consistency"},
      "/artin/sigma_lo":                   {"value": 0, "by": "torsion-freeness not certified"},
      "/artin/sigma_hi":                   {"value": 7, "by": "b2/2"},
      "/zeta/roots_on_weil_circle":        {"value": true, "by": "Weil bound"}
    }
  },
  "minustwo_d8": {
    "exit": 0,
    "expect": {
      "/singularities/0/type":            {"value": "D8", "by": "Thm 7.3 proof"},
      "/singularities/0/orders":           {"value": [2, 4], "by": "pole orders"},
      "/invariants/K2_resolved/value":     {"value": 8, "by": "Thm 7.3"},
      "/invariants/chi/value":             {"value": 1, "by": "Thm 7.3"},
      "/invariants/c2/value":              {"value": 4, "by": "Thm 7.3"},
      "/invariants/b1/value":              {"value": 4, "by": "Prop 4.1"},
      "/invariants/b2/value":              {"value": 10, "by": "Thm 7.3 proof"},
      "/invariants/h01/value":             {"value": 4, "by": "Prop 5.1"},
      "/invariants/h02/value":             {"value": 4, "by": "Kunneth"},
      "/predicates/disjoint_minus2":       {"value": 5, "by": "Thm 7.3 proof"},
      "/predicates/hodge_index_cap":       {"value": 9, "by": "Thm 7.3 proof"},
      "/predicates/frolicher_degenerates": {"value": true, "by": "Thm 5.5"},
      "/predicates/slope_degenerates":     {"value": false, "by": "Thm 5.6"},
      "/predicates/ordinary":              {"value": false, "by": "Cor 5.7"},
      "/artin/sigma_lo":                   {"value": 4, "by": "Prop 6.1 with p_g"},
      "/artin/sigma_hi":                   {"value": 5, "by": "Prop 6.1 with b2"},
      "/artin/artin_tate/rhs_power":       {"value": 4, "by": "Prop 6.2"},
      "/zeta/P2_product":                  {"value": [1, -4, 4], "by": "rational F factor"}
    }
  },
  "picard_family(2,4)": {
    "exit": 0,
    "expect": {
      "/invariants/h01/value": {"value": 4, "by": "Thm 8.3 proof, g + dF/2"},
      "/invariants/b1/value":  {"value": 4, "by": "Prop 4.1"},
      "/predicates/picard_reduced": {"value": false, "by": "Thm 8.1"}
    }
  },
  "picard_family(2,8)": {
    "exit": 0,
    "expect": {
      "/invariants/h01/value": {"value": 6, "by": "Thm 8.3 proof, g + dF/2"},
      "/invariants/b1/value":  {"value": 4, "by": "Prop 4.1"},
      "/predicates/picard_reduced": {"value": false, "by": "Thm 8.1"}
    }
  },
  "picard_family(2,16)": {
    "exit": 0,
    "expect": {
      "/invariants/h01/value": {"value": 10, "by": "Thm 8.3 proof, g + dF/2"},
      "/invariants/b1/value":  {"value": 4, "by": "Prop 4.1"},
      "/predicates/picard_reduced": {"value": false, "by": "Thm 8.1"}
    }
  },
  "albanese_family(2,4)": {
    "exit": 0,
    "expect": {
      "/invariants/h10/lo": {"value": 5, "by": "d-closed chain, g + dF - 1"},
      "/invariants/h10/status": {"value": "interval", "by": "Open Question bound"}
    }
  },
  "albanese_family(2,8)": {
    "exit": 0,
    "expect": {
      "/invariants/h10/lo": {"value": 9, "by": "d-closed chain, g + dF - 1"}
    }
  },
  "vf_family_rational(1)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 2, "by": "Prop 5.1 chain"},
      "/invariants/K2_resolved/value": {"value": 0, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Prop 8.4"},
      "/predicates/uniruled": {"value": true, "by": "rational factors"},
      "/predicates/unirational": {"value": true, "by": "rational factors"}
    }
  },
  "vf_family_rational(2)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 5, "by": "Prop 5.1 chain"},
      "/invariants/K2_resolved/value": {"value": 4, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Prop 8.4"}
    }
  },
  "vf_family_rational(3)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 10, "by": "Prop 5.1 chain"},
      "/invariants/K2_resolved/value": {"value": 16, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Prop 8.4"}
    }
  },
  "vf_family_abelian(1)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 16, "by": "Riemann-Roch via N"},
      "/invariants/K2_resolved/value": {"value": 64, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Thm 8.5"},
      "/predicates/uniruled": {"value": false, "by": "Abelian domination"}
    }
  },
  "vf_family_abelian(2)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 36, "by": "Riemann-Roch via N"},
      "/invariants/K2_resolved/value": {"value": 144, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Thm 8.5"},
      "/predicates/uniruled": {"value": false, "by": "Abelian domination"}
    }
  },
  "vf_family_abelian(3)": {
    "exit": 0,
    "expect": {
      "/invariants/chi/value": {"value": 64, "by": "Riemann-Roch via N"},
      "/invariants/K2_resolved/value": {"value": 256, "by": "Prop 4.2"},
      "/predicates/has_global_vector_fields": {"value": true, "by": "Thm 8.5"},
      "/predicates/uniruled": {"value": false, "by": "Abelian domination"}
    }
  },
  "bmy_genus4": {
    "exit": 3,
    "expect": {
      "/unclassified":                  {"value": [6, 4], "by": "Remark 7.2 order pair"},
      "/singularities/0/type":          {"value": "unclassified(6,4)", "by": "outside Prop 3.4"},
      "/invariants/K2_singular/value":  {"value": 24, "by": "Prop 4.2 substitution"}
    }
  }
}
)GOLD";
}

struct SuiteLine {
    std::string scenario;
    bool pass = false;
    std::vector<std::string> diffs;
};

/// Run every named scenario against the golden values.  One line per
/// scenario; all-pass means exit 0 for the CLI.
inline std::vector<SuiteLine> run_paper_suite() {
    Json gold = Json::parse(golden_fixtures_json());
    std::vector<SuiteLine> lines;
    for (auto& id : all_named_scenarios()) {
        SuiteLine line;
        line.scenario = id;
        Json g = gold.at(id);
        try {
            Scenario s = named_scenario(id);
            RunResult r = run_scenario(s);
            if (r.exit_code != g.at("exit").get<int>())
                line.diffs.push_back("exit code: expected " + std::to_string(g.at("exit").get<int>()) + " got " +
                                     std::to_string(r.exit_code));
            for (auto& [path, spec] : g.at("expect").items()) {
                Json want = spec.at("value");
                Json got;
                try {
                    got = r.json.at(Json::json_pointer(path));
                } catch (const std::exception&) {
                    line.diffs.push_back(path + ": missing from report");
                    continue;
                }
                if (got != want) line.diffs.push_back(path + ": expected " + want.dump() + " got " + got.dump());
            }
        } catch (const std::exception& e) {
            line.diffs.push_back(std::string("exception: ") + e.what());
        }
        line.pass = line.diffs.empty();
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace insep

#endif

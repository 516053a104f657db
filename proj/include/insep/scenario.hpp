#ifndef INSEP_SCENARIO_HPP
#define INSEP_SCENARIO_HPP

/// Scenario input (JSON), the named reference scenarios, and report
/// emission.  Reports are deterministic: the same input yields the same
/// bytes, field order included.
///
/// Exit code conventions used by the CLI: 0 for a full report, 2 for an
/// invalid scenario, 3 when a singularity falls outside the classification
/// table (a partial report is still emitted).

#include <sstream>

#include "json.hpp"

#include "arithmetic.hpp"

namespace insep {

using Json = nlohmann::ordered_json;

struct Scenario {
    int k = 1;
    CurveModel curve_C, curve_F;
    CurveVectorField vf_C, vf_F;
    bool zeta = false;
    int budget = 24;
    int precision = 24;
    std::string name;  // optional identifier

    SurfaceData data() const { return SurfaceData{Fq::make(k), vf_C, vf_F}; }
};

namespace scenario_detail {

inline FqPoly poly_from_json(Fq F, const Json& j) {
    std::vector<uint64_t> c;
    for (auto& v : j) c.push_back(v.get<uint64_t>());
    return FqPoly(F, c);
}

inline CurveModel curve_from_json(Fq F, const Json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "p1") return CurveModel::p1(F);
    if (type == "elliptic_deuring") return CurveModel::elliptic_deuring(FqElem(F, j.at("alpha").get<uint64_t>()));
    if (type == "hyperelliptic") {
        std::vector<uint64_t> branch;
        for (auto& v : j.at("branch")) branch.push_back(v.get<uint64_t>());
        return CurveModel::hyperelliptic(F, branch, poly_from_json(F, j.at("gpoly")));
    }
    if (type == "artin_schreier") return CurveModel::artin_schreier(F, j.at("h").get<int>());
    throw ValidationError("unknown curve type: " + type);
}

inline CurveVectorField vf_from_json(Fq F, const CurveModel& curve, const Json& j) {
    if (j.contains("catalog")) {
        std::string c = j.at("catalog").get<std::string>();
        if (c == "delta1") return make_delta1(F);
        if (c == "delta2") return make_delta2(F);
        if (c == "delta_prime") {
            std::vector<uint64_t> as, bs;
            for (auto& v : j.at("a")) as.push_back(v.get<uint64_t>());
            for (auto& v : j.at("b")) bs.push_back(v.get<uint64_t>());
            return make_delta_prime(F, as, bs);
        }
        if (c == "delta_elliptic")
            return make_delta_elliptic(FqElem(F, j.at("alpha").get<uint64_t>()), FqElem(F, j.at("a").get<uint64_t>()),
                                       FqElem(F, j.at("b").get<uint64_t>()));
        if (c == "as_ddx") return make_as_ddx(F, j.at("h").get<int>());
        throw ValidationError("unknown catalog field: " + c);
    }
    if (j.contains("base")) {
        if (j.at("base").get<std::string>() != "ddx") throw ValidationError("unknown base field kind");
        FqPoly num = poly_from_json(F, j.at("scale_num"));
        FqPoly den = j.contains("scale_den") ? poly_from_json(F, j.at("scale_den")) : FqPoly::constant(F, 1);
        return make_pullback(curve, RatFun(num, den));
    }
    throw ValidationError("vector field entry needs 'catalog' or 'base'");
}

/// The vector field must live on the declared curve.
inline void check_vf_matches_curve(const CurveVectorField& v, const CurveModel& c, const char* side) {
    if (!(v.curve == c))
        throw ValidationError(std::string("vector field on ") + side + " does not live on the declared curve");
}

}  // namespace scenario_detail

inline Scenario parse_scenario(const Json& j) {
    if (j.at("characteristic").get<int>() != 2) throw ValidationError("characteristic must be 2");
    Scenario s;
    s.k = j.at("k").get<int>();
    Fq F = Fq::make(s.k);
    s.curve_C = scenario_detail::curve_from_json(F, j.at("curve_C"));
    s.curve_F = scenario_detail::curve_from_json(F, j.at("curve_F"));
    s.vf_C = scenario_detail::vf_from_json(F, s.curve_C, j.at("vf_C"));
    s.vf_F = scenario_detail::vf_from_json(F, s.curve_F, j.at("vf_F"));
    scenario_detail::check_vf_matches_curve(s.vf_C, s.curve_C, "C");
    scenario_detail::check_vf_matches_curve(s.vf_F, s.curve_F, "F");
    if (j.contains("options")) {
        auto& o = j.at("options");
        if (o.contains("zeta")) s.zeta = o.at("zeta").get<bool>();
        if (o.contains("budget")) s.budget = o.at("budget").get<int>();
        if (o.contains("precision")) s.precision = o.at("precision").get<int>();
    }
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    return s;
}

/// ---- named reference scenarios ----

inline Scenario named_scenario(const std::string& id);

namespace scenario_detail {

inline int field_bits_for(int count) {
    int k = 1;
    while ((1 << k) < count) ++k;
    return k;
}

inline Scenario bmy_scenario(int h) {
    Scenario s;
    s.k = 1;
    Fq F = Fq::make(1);
    s.curve_C = CurveModel::artin_schreier(F, h);
    s.curve_F = CurveModel::p1(F);
    s.vf_C = make_as_ddx(F, h);
    s.vf_F = make_delta1(F);
    s.zeta = true;
    return s;
}

inline Scenario minustwo_d4_scenario() {
    Scenario s;
    s.k = 3;
    Fq F = Fq::make(3);
    FqElem alpha(F, 2);
    s.curve_C = s.curve_F = CurveModel::elliptic_deuring(alpha);
    s.vf_C = s.vf_F = make_delta_elliptic(alpha, FqElem(F, 1), alpha);
    s.zeta = true;
    return s;
}

inline Scenario picard_scenario(int q, int dF) {
    if (q < 2 || dF < 4 || dF % 2) throw ValidationError("picard_family: need q >= 2 and even dF >= 4");
    int n = dF / 2;
    Scenario s;
    s.k = field_bits_for(2 * n);
    Fq F = Fq::make(s.k);
    s.curve_C = CurveModel::artin_schreier(F, q + 1);
    s.curve_F = CurveModel::p1(F);
    int m = (q - 1) / 2;
    FqPoly den = FqPoly::constant(F, 1);
    for (int i = 0; i < m; ++i) {
        FqPoly l = FqPoly::linear_root(F, static_cast<uint64_t>(i));
        den = den * l * l;
    }
    s.vf_C = make_pullback(s.curve_C, RatFun(FqPoly::constant(F, 1), den));
    std::vector<uint64_t> as, bs;
    for (int i = 0; i < n; ++i) as.push_back(static_cast<uint64_t>(i));
    for (int i = n; i < 2 * n; ++i) bs.push_back(static_cast<uint64_t>(i));
    s.vf_F = make_delta_prime(F, as, bs);
    return s;
}

inline Scenario vf_rational_scenario(int n) {
    Scenario s;
    s.k = field_bits_for(2 * n);
    Fq F = Fq::make(s.k);
    s.curve_C = s.curve_F = CurveModel::p1(F);
    std::vector<uint64_t> as, bs;
    for (int i = 0; i < n; ++i) as.push_back(static_cast<uint64_t>(i));
    for (int i = n; i < 2 * n; ++i) bs.push_back(static_cast<uint64_t>(i));
    s.vf_C = s.vf_F = make_delta_prime(F, as, bs);
    return s;
}

inline Scenario vf_abelian_scenario(int n) {
    Scenario s;
    s.k = std::max(2, field_bits_for(2 * n + 2));
    Fq F = Fq::make(s.k);
    FqPoly gp(F, {1, 1, 1});
    if (gp.eval(0) == 0 || gp.eval(1) == 0) gp = FqPoly(F, {1, 0, 1});
    s.curve_C = s.curve_F = CurveModel::hyperelliptic(F, {0, 1}, gp);
    FqPoly num = FqPoly::constant(F, 1), den = FqPoly::constant(F, 1);
    uint64_t v = 2;
    for (int i = 0; i < n; ++i) {
        FqPoly l = FqPoly::linear_root(F, v++);
        num = num * l * l;
    }
    for (int i = 0; i < n; ++i) {
        FqPoly l = FqPoly::linear_root(F, v++);
        den = den * l * l;
    }
    s.vf_C = s.vf_F = make_pullback(s.curve_C, RatFun(num, den));
    return s;
}

}  // namespace scenario_detail

/// Identifiers: bmy, bmy_genus4, minustwo_d4, minustwo_d8,
/// picard_family(q,dF), albanese_family(q,dF), vf_family_rational(n),
/// vf_family_abelian(n).
inline Scenario named_scenario(const std::string& id) {
    auto args = [&](size_t paren) {
        std::vector<int> out;
        std::string inner = id.substr(paren + 1, id.size() - paren - 2);
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    Scenario s;
    size_t paren = id.find('(');
    std::string base = id.substr(0, paren == std::string::npos ? id.size() : paren);
    if (base == "bmy")
        s = scenario_detail::bmy_scenario(4);
    else if (base == "bmy_genus4")
        s = scenario_detail::bmy_scenario(5);
    else if (base == "minustwo_d4")
        s = scenario_detail::minustwo_d4_scenario();
    else if (base == "minustwo_d8")
        s = scenario_detail::bmy_scenario(3);
    else if (base == "picard_family" || base == "albanese_family") {
        auto a = args(paren);
        if (a.size() != 2) throw ValidationError(base + ": expected (q,dF)");
        s = scenario_detail::picard_scenario(a[0], a[1]);
    } else if (base == "vf_family_rational") {
        auto a = args(paren);
        if (a.size() != 1) throw ValidationError(base + ": expected (n)");
        s = scenario_detail::vf_rational_scenario(a[0]);
    } else if (base == "vf_family_abelian") {
        auto a = args(paren);
        if (a.size() != 1) throw ValidationError(base + ": expected (n)");
        s = scenario_detail::vf_abelian_scenario(a[0]);
    } else {
        throw ValidationError("unknown named scenario: " + id);
    }
    s.name = id;
    return s;
}

/// Identifier-sorted, which also fixes the suite output order.
inline std::vector<std::string> all_named_scenarios() {
    return {"albanese_family(2,4)",
            "albanese_family(2,8)",
            "bmy",
            "bmy_genus4",
            "minustwo_d4",
            "minustwo_d8",
            "picard_family(2,16)",
            "picard_family(2,4)",
            "picard_family(2,8)",
            "vf_family_abelian(1)",
            "vf_family_abelian(2)",
            "vf_family_abelian(3)",
            "vf_family_rational(1)",
            "vf_family_rational(2)",
            "vf_family_rational(3)"};
}

/// ---- report emission ----

namespace report_detail {

inline Json tagged(long long v, const std::string& by) {
    return Json{{"value", v}, {"status", "exact"}, {"by", by}};
}
inline Json tagged(const IVal& v) {
    if (v.exact()) return Json{{"value", v.lo}, {"status", "exact"}, {"by", v.by}};
    return Json{{"lo", v.lo}, {"hi", v.hi}, {"status", "interval"}, {"by", v.by}};
}
inline Json tri(Tri t) {
    if (t == Tri::Unknown) return nullptr;
    return t == Tri::True;
}
inline Json frac(const Frac& f) { return Json{{"num", f.num}, {"den", f.den}, {"str", f.str()}}; }

inline Json field_elem(Fq F, uint64_t v) {
    return Json{{"k", F.k}, {"modulus_bits", F.mod}, {"coeff_bits", v}};
}

inline Json curve_json(const CurveModel& c) {
    Json j;
    if (std::holds_alternative<ProjectiveLine>(c.m)) {
        j["type"] = "p1";
    } else if (auto* e = std::get_if<EllipticDeuring>(&c.m)) {
        j["type"] = "elliptic_deuring";
        j["alpha"] = field_elem(c.F, e->alpha.v);
    } else if (auto* hy = std::get_if<HyperellipticChar2>(&c.m)) {
        j["type"] = "hyperelliptic";
        j["branch"] = hy->branch;
        j["gpoly"] = hy->gpoly.c;
    } else {
        j["type"] = "artin_schreier";
        j["h"] = std::get<ArtinSchreier>(c.m).h;
    }
    j["genus"] = c.genus();
    return j;
}

inline Json divisor_json(const CurveDivisor& d) {
    Json arr = Json::array();
    for (auto& [p, m] : d.support)
        arr.push_back(Json{{"place", p.str()}, {"branch", p.branch}, {"ram_index", p.e},
                           {"residue_degree", p.residue_degree}, {"mult", m}});
    return arr;
}

inline Json zpoly_json(const ZPoly& p) {
    Json arr = Json::array();
    for (auto v : p) arr.push_back(v);
    return arr;
}

}  // namespace report_detail

struct RunResult {
    int exit_code = 0;
    Json json;
    std::string human;
};

inline Json report_to_json(const Scenario& s, const SurfaceData& d, const InvariantReport& r) {
    using namespace report_detail;
    Json j;
    if (!s.name.empty()) j["scenario"] = s.name;
    j["base_field"] = Json{{"k", s.k}, {"modulus_bits", d.base.mod}};
    j["curves"] = Json{{"C", curve_json(d.C())}, {"F", curve_json(d.F())}};
    j["vector_fields"] = Json{
        {"C", Json{{"divisor", divisor_json(d.vC.divisor())}, {"type", d.vC.classify().str()}}},
        {"F", Json{{"divisor", divisor_json(d.vF.divisor())}, {"type", d.vF.classify().str()}}},
        // matching types make the sum 2-closed of the same kind: the bracket
        // of the two factor fields vanishes, so the cross terms drop out
        {"sum", d.vC.classify().str()}};
    j["pole_degrees"] = Json{{"d_C", r.d_C}, {"d_F", r.d_F}};
    Json sings = Json::array();
    for (auto& e : r.inventory.entries)
        sings.push_back(Json{{"on_C", e.on_C.str()},
                             {"on_F", e.on_F.str()},
                             {"orders", Json::array({e.order_C, e.order_F})},
                             {"configuration", e.poles ? "poles" : "zeros"},
                             {"type", e.type.str()},
                             {"geometric_points", e.geo_count}});
    j["singularities"] = sings;
    j["invariants"] = Json{
        {"K2_singular", tagged(r.k2_singular, "Prop 4.2")},
        {"K2_resolved", tagged(r.k2_resolved, "Prop 4.2 + fundamental cycle")},
        {"chi_Oxprime", tagged(r.chi_xprime, "Riemann-Roch via N")},
        {"chi", tagged(r.chi, "Riemann-Roch via N + elliptic correction")},
        {"c2", tagged(r.c2, "Noether")},
        {"b0", tagged(1, "trivial")},
        {"b1", tagged(r.b1, r.b1_product_route ? "product homeomorphism (F not rational)" : "Prop 4.1")},
        {"b2", tagged(r.b2, "Noether + Poincare")},
        {"b3", tagged(r.b1, "Poincare duality")},
        {"b4", tagged(1, "trivial")},
        {"h01", tagged(r.h01)},
        {"h02", tagged(r.h02)},
        {"h10", tagged(r.h10)}};
    auto cusps = [&](const std::vector<CuspPoint>& cs) {
        Json arr = Json::array();
        for (auto& c : cs)
            arr.push_back(Json{{"place", c.place}, {"pole_order", c.order}, {"genus_drop", c.genus_drop},
                               {"geometric_points", c.geo_count}});
        return arr;
    };
    j["fibrations"] = Json{
        {"over_C", Json{{"fiber_arithmetic_genus", tagged(r.fiber_genus_over_C, "Prop 4.4")},
                        {"cusps", cusps(r.cusps_over_C)}}},
        {"over_F", Json{{"fiber_arithmetic_genus", tagged(r.fiber_genus_over_F, "Prop 4.4")},
                        {"cusps", cusps(r.cusps_over_F)}}}};
    const PredicateBlock& P = r.pred;
    j["predicates"] = Json{{"picard_reduced", tri(P.picard_reduced)},
                           {"frolicher_degenerates", tri(P.frolicher_degenerates)},
                           {"crystalline_torsion_free", tri(P.crystalline_torsion_free)},
                           {"slope_degenerates", tri(P.slope_degenerates)},
                           {"ordinary", tri(P.ordinary)},
                           {"has_global_vector_fields", tri(P.has_global_vector_fields)},
                           {"uniruled", tri(P.uniruled)},
                           {"unirational", P.unirational},
                           {"bmy_violated", P.bmy_violated},
                           {"miyaoka_bound", frac(P.miyaoka_bound)},
                           {"sb_bound", frac(P.sb_bound)},
                           {"disjoint_minus2", P.disjoint_minus2},
                           {"hodge_index_cap", P.hodge_index_cap}};
    ArtinData a = artin_tate_product(d, r);
    j["artin"] = Json{{"shioda_supersingular", true},
                      {"picard_number", r.b2},
                      {"alpha", a.alpha},
                      {"sigma_lo", a.sigma_lo},
                      {"sigma_hi", a.sigma_hi},
                      {"lower_bound_applied", a.lower_bound_applied},
                      {"disc_shape", "-2^(2*sigma)"},
                      {"even_intersection_form", a.even_intersection_form},
                      {"artin_tate", Json{{"q", a.q},
                                          {"exponent", a.at_exponent},
                                          {"rhs_power", a.rhs_power_fits ? Json(a.rhs_power) : Json(nullptr)},
                                          {"identity", "disc NS * |Br| = " + std::to_string(a.q) + "^" +
                                                           std::to_string(a.at_exponent) + " * |NS_tors|"}}}};
    if (s.zeta) {
        ZetaData z = p2_kunneth(d.C(), d.F(), s.budget);
        double dev = reciprocal_root_abs_deviation(z.p2, static_cast<double>(z.q));
        j["zeta"] = Json{{"q", z.q},
                         {"P1_C", report_detail::zpoly_json(z.p1_C)},
                         {"P1_F", report_detail::zpoly_json(z.p1_F)},
                         {"P2_product", report_detail::zpoly_json(z.p2)},
                         {"root_abs_deviation_max", dev},
                         {"roots_on_weil_circle", dev < 1e-9}};
    }
    return j;
}

inline std::string human_report(const InvariantReport& r) {
    std::ostringstream o;
    auto ival = [](const IVal& v) {
        return v.exact() ? std::to_string(v.lo) : "[" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "]";
    };
    o << "surface from genus " << r.genus_C << " x genus " << r.genus_F << " over F_" << (1LL << r.base_k) << "\n";
    o << "  pole degrees        d_C = " << r.d_C << ", d_F = " << r.d_F << "\n";
    o << "  singularities      ";
    for (auto& e : r.inventory.entries)
        o << " " << e.type.str() << (e.poles ? "[poles]" : "[zeros]") << "x" << e.geo_count;
    o << "\n";
    o << "  K^2 (singular)      " << r.k2_singular << "\n";
    o << "  K^2                 " << r.k2_resolved << "\n";
    o << "  chi(O)              " << r.chi << "  (on X': " << r.chi_xprime << ")\n";
    o << "  c_2                 " << r.c2 << "\n";
    o << "  b_1 = b_3           " << r.b1 << ",  b_2 = " << r.b2 << "\n";
    o << "  h^01                " << ival(r.h01) << "  [" << r.h01.by << "]\n";
    o << "  h^02 = p_g          " << ival(r.h02) << "  [" << r.h02.by << "]\n";
    o << "  h^10                " << ival(r.h10) << "  [" << r.h10.by << "]\n";
    o << "  fibre genus         " << r.fiber_genus_over_C << " over C^(-1), " << r.fiber_genus_over_F
      << " over F^(-1)\n";
    if (r.pred.bmy_violated)
        o << "  BMY violated: c_1^2 = " << r.k2_resolved << " > 9 chi = " << 9 * r.chi << "\n";
    o << "  disjoint (-2)-curves " << r.pred.disjoint_minus2 << " vs Miyaoka " << r.pred.miyaoka_bound.str()
      << ", Shepherd-Barron " << r.pred.sb_bound.str() << "\n";
    return o.str();
}

inline RunResult run_scenario(const Scenario& s) {
    RunResult out;
    SurfaceData d = s.data();
    try {
        InvariantReport r = analyze(d);
        out.json = report_to_json(s, d, r);
        out.human = human_report(r);
        out.exit_code = 0;
    } catch (const UnclassifiedSingularity& u) {
        // partial report: inventory, pole degrees and the singular-model K^2
        Json j;
        if (!s.name.empty()) j["scenario"] = s.name;
        j["error"] = std::string(u.what());
        j["unclassified"] = Json::array({u.a, u.b});
        SingularityInventory inv = singular_points(d);
        Json sings = Json::array();
        for (auto& e : inv.entries)
            sings.push_back(Json{{"on_C", e.on_C.str()},
                                 {"on_F", e.on_F.str()},
                                 {"orders", Json::array({e.order_C, e.order_F})},
                                 {"configuration", e.poles ? "poles" : "zeros"},
                                 {"type", e.type.str()},
                                 {"geometric_points", e.geo_count}});
        j["singularities"] = sings;
        long long dC = d.vC.divisor().poles_part().degree();
        long long dF = d.vF.divisor().poles_part().degree();
        j["pole_degrees"] = Json{{"d_C", dC}, {"d_F", dF}};
        long long k2s = (2 * d.C().genus() - 2 + dC) * (2 * d.F().genus() - 2 + dF);
        j["invariants"] = Json{{"K2_singular", report_detail::tagged(k2s, "Prop 4.2")}};
        out.json = j;
        out.human = "unclassified singularity with orders (" + std::to_string(u.a) + "," + std::to_string(u.b) +
                    "); partial report only, K^2 of the singular model = " + std::to_string(k2s) + "\n";
        out.exit_code = 3;
    }
    return out;
}

}  // namespace insep

#endif

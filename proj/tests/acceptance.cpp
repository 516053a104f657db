// Acceptance suite: the nine shipped criteria, one pass/fail line each.
// Every expected value is pinned here as an exact integer (or an exact
// tolerance where a numeric check is involved) and computed end to end
// through the public scenario interface.

#include <cmath>
#include <iostream>
#include <vector>

#include "insep/paper_suite.hpp"

using namespace insep;

namespace {

struct Criterion {
    std::string name;
    bool (*fn)();
};

#define REQUIRE_EQ(a, b)                                                                   \
    do {                                                                                   \
        auto va = (a);                                                                     \
        auto vb = (b);                                                                     \
        if (!(va == vb)) {                                                                 \
            std::cout << "    mismatch at " << __LINE__ << ": " << #a << " = " << va       \
                      << ", expected " << vb << "\n";                                      \
            return false;                                                                  \
        }                                                                                  \
    } while (0)

#define REQUIRE_THAT(cond)                                                       \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::cout << "    failed at " << __LINE__ << ": " << #cond << "\n";  \
            return false;                                                        \
        }                                                                        \
    } while (0)

bool c1_bmy() {
    RunResult r = run_scenario(named_scenario("bmy"));
    REQUIRE_EQ(r.exit_code, 0);
    auto& j = r.json;
    REQUIRE_EQ(j.at("singularities").size(), size_t{1});
    REQUIRE_EQ(j.at(Json::json_pointer("/singularities/0/type")).get<std::string>(), std::string("(19)_0"));
    REQUIRE_EQ(j.at(Json::json_pointer("/singularities/0/geometric_points")).get<int>(), 1);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/chi/value")).get<long long>(), 1);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/K2_resolved/value")).get<long long>(), 14);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/K2_singular/value")).get<long long>(), 16);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/chi_Oxprime/value")).get<long long>(), 2);
    return true;
}

bool c2_minustwo_d4() {
    RunResult r = run_scenario(named_scenario("minustwo_d4"));
    REQUIRE_EQ(r.exit_code, 0);
    auto& j = r.json;
    REQUIRE_EQ(j.at("singularities").size(), size_t{2});
    for (int i = 0; i < 2; ++i)
        REQUIRE_EQ(j.at(Json::json_pointer("/singularities/" + std::to_string(i) + "/type")).get<std::string>(),
                   std::string("D4"));
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/chi/value")).get<long long>(), 1);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/K2_resolved/value")).get<long long>(), 4);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/c2/value")).get<long long>(), 8);
    long long dm2 = j.at(Json::json_pointer("/predicates/disjoint_minus2")).get<long long>();
    REQUIRE_EQ(dm2, 6);
    // 6 > 20/9 (Miyaoka exceeded), 6 < 8 (Shepherd-Barron not reached)
    REQUIRE_EQ(j.at(Json::json_pointer("/predicates/miyaoka_bound/str")).get<std::string>(), std::string("20/9"));
    REQUIRE_THAT(dm2 * 9 > 20);
    REQUIRE_EQ(j.at(Json::json_pointer("/predicates/sb_bound/str")).get<std::string>(), std::string("8"));
    REQUIRE_THAT(dm2 < 8);
    return true;
}

bool c3_minustwo_d8() {
    RunResult r = run_scenario(named_scenario("minustwo_d8"));
    REQUIRE_EQ(r.exit_code, 0);
    auto& j = r.json;
    REQUIRE_EQ(j.at("singularities").size(), size_t{1});
    REQUIRE_EQ(j.at(Json::json_pointer("/singularities/0/type")).get<std::string>(), std::string("D8"));
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/chi/value")).get<long long>(), 1);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/K2_resolved/value")).get<long long>(), 8);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/c2/value")).get<long long>(), 4);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/b1/value")).get<long long>(), 4);
    REQUIRE_EQ(j.at(Json::json_pointer("/invariants/b2/value")).get<long long>(), 10);
    REQUIRE_EQ(j.at(Json::json_pointer("/predicates/disjoint_minus2")).get<long long>(), 5);
    REQUIRE_EQ(j.at(Json::json_pointer("/predicates/hodge_index_cap")).get<long long>(), 9);
    return true;
}

bool c4_family() {
    std::vector<std::pair<int, long long>> want = {{4, 4}, {8, 6}, {16, 10}};
    for (auto& [dF, h01] : want) {
        RunResult r = run_scenario(named_scenario("picard_family(2," + std::to_string(dF) + ")"));
        REQUIRE_EQ(r.exit_code, 0);
        REQUIRE_EQ(r.json.at(Json::json_pointer("/invariants/h01/status")).get<std::string>(), std::string("exact"));
        REQUIRE_EQ(r.json.at(Json::json_pointer("/invariants/h01/value")).get<long long>(), h01);
        REQUIRE_EQ(h01, 2 + dF / 2);
        REQUIRE_EQ(r.json.at(Json::json_pointer("/invariants/b1/value")).get<long long>(), 4);
        REQUIRE_EQ(r.json.at(Json::json_pointer("/predicates/picard_reduced")).get<bool>(), false);
    }
    return true;
}

bool c5_oracle_equivalence() {
    Fq F2 = Fq::make(1);
    struct Case {
        int a, b;
    };
    for (auto c : {Case{1, 1}, Case{2, 2}, Case{4, 2}, Case{2, 4}, Case{4, 4}}) {
        SingularityType table = classify_pair(c.a, c.b);
        ResolutionResult engine = resolve_orders(F2, c.a, c.b, false);
        REQUIRE_EQ(static_cast<int>(engine.matched.kind), static_cast<int>(table.kind));
    }
    ResolutionResult e19 = resolve_orders(F2, 4, 4, false);
    REQUIRE_EQ(e19.fc.z2, -2);
    REQUIRE_EQ(e19.fc.pa, 1);
    REQUIRE_EQ(e19.shape, std::string("star(-3;5)"));
    return true;
}

bool c6_property_suite() {
    // >= 200 random catalog fields with divisor degree 2 - 2g
    Fq F16 = Fq::make(4);
    uint64_t seed = 0x1234abcd9876ull;
    auto next = [&]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return seed;
    };
    int done = 0;
    while (done < 200) {
        CurveVectorField v = [&]() -> CurveVectorField {
            switch (next() % 4) {
                case 0: {
                    std::vector<uint64_t> pool;
                    for (uint64_t i = 0; i < 16; ++i) pool.push_back(i);
                    for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[next() % i]);
                    size_t n = 1 + next() % 3;
                    return make_delta_prime(F16, {pool.begin(), pool.begin() + static_cast<long>(n)},
                                            {pool.begin() + static_cast<long>(n), pool.begin() + static_cast<long>(2 * n)});
                }
                case 1: {
                    uint64_t a;
                    do {
                        a = next() & 15;
                    } while (F16.pow(a, 3) == 1);
                    uint64_t av = next() & 15, bv = next() & 15;
                    if (av == 0 && bv == 0) av = 1;
                    return make_delta_elliptic(FqElem(F16, a), FqElem(F16, av), FqElem(F16, bv));
                }
                case 2: return make_as_ddx(F16, 1 + static_cast<int>(next() % 5));
                default: {
                    FqPoly num(F16, {next() & 15, next() & 15, next() & 15});
                    FqPoly den(F16, {next() & 15, next() & 15, 1});
                    if (num.is_zero()) num = FqPoly::constant(F16, 1);
                    return make_pullback(CurveModel::p1(F16), RatFun(num, den));
                }
            }
        }();
        ++done;
        REQUIRE_EQ(v.divisor().degree(), 2 - 2 * v.curve.genus());
    }

    // Noether on every emitted report
    for (auto& id : all_named_scenarios()) {
        RunResult r = run_scenario(named_scenario(id));
        if (r.exit_code != 0) continue;
        long long chi = r.json.at(Json::json_pointer("/invariants/chi/value")).get<long long>();
        long long k2 = r.json.at(Json::json_pointer("/invariants/K2_resolved/value")).get<long long>();
        long long c2 = r.json.at(Json::json_pointer("/invariants/c2/value")).get<long long>();
        REQUIRE_EQ(12 * chi, k2 + c2);
    }

    // chi oracle: Riemann-Roch route vs the Kunneth route on 9 instances
    for (int q : {2, 3, 5}) {
        for (int dF : {4, 8, 12}) {
            Scenario s = scenario_detail::picard_scenario(q, dF);
            InvariantReport rep = analyze(s.data());
            long long h01 = q + dF / 2, h02 = static_cast<long long>(q) * (dF / 2);
            REQUIRE_EQ(rep.chi, 1 - h01 + h02);
            REQUIRE_THAT(rep.h01.exact() && rep.h01.value() == h01);
            REQUIRE_THAT(rep.h02.exact() && rep.h02.value() == h02);
        }
    }

    // classification spot checks
    Fq F2 = Fq::make(1);
    REQUIRE_THAT(make_delta1(F2).classify().kind == PClass::Additive);
    REQUIRE_THAT(make_delta2(F2).classify().kind == PClass::Additive);
    REQUIRE_THAT(make_as_ddx(F2, 4).classify().kind == PClass::Additive);
    Fq F8 = Fq::make(3);
    REQUIRE_THAT(make_delta_elliptic(FqElem(F8, 2), FqElem(F8, 1), FqElem(F8, 2)).classify().kind ==
                 PClass::Additive);
    CurveVectorField mult = make_pullback(CurveModel::p1(F2), RatFun(FqPoly(F2, {0, 1, 1})));
    REQUIRE_THAT(mult.classify().kind == PClass::Multiplicative);
    return true;
}

bool c7_fiber_genus() {
    for (auto& id : all_named_scenarios()) {
        Scenario s = named_scenario(id);
        RunResult r = run_scenario(s);
        if (r.exit_code != 0) continue;
        InvariantReport rep = analyze(s.data());
        REQUIRE_EQ(rep.fiber_genus_over_C, rep.genus_F + rep.d_F / 2);
        REQUIRE_EQ(rep.fiber_genus_over_F, rep.genus_C + rep.d_C / 2);
        long long drop = 0;
        for (auto& c : rep.cusps_over_C) drop += static_cast<long long>(c.genus_drop) * c.geo_count;
        REQUIRE_EQ(rep.fiber_genus_over_C - rep.genus_F, drop);
        long long dropF = 0;
        for (auto& c : rep.cusps_over_F) dropF += static_cast<long long>(c.genus_drop) * c.geo_count;
        REQUIRE_EQ(rep.fiber_genus_over_F - rep.genus_C, dropF);
    }
    return true;
}

bool c8_arithmetic() {
    // Artin bounds and the leading-term identity for the D8 surface over F_2
    RunResult d8 = run_scenario(named_scenario("minustwo_d8"));
    REQUIRE_EQ(d8.json.at(Json::json_pointer("/artin/sigma_lo")).get<long long>(), 4);
    REQUIRE_EQ(d8.json.at(Json::json_pointer("/artin/sigma_hi")).get<long long>(), 5);
    REQUIRE_EQ(d8.json.at(Json::json_pointer("/artin/artin_tate/q")).get<long long>(), 2);
    REQUIRE_EQ(d8.json.at(Json::json_pointer("/artin/artin_tate/exponent")).get<long long>(), 2);
    REQUIRE_EQ(d8.json.at(Json::json_pointer("/artin/artin_tate/rhs_power")).get<long long>(), 4);

    // P2 = (1 - 2t)^2 for the F_2 scenarios with rational F-side, and
    // (1 - qt)^2 across every other rational-F scenario
    for (auto& id : {std::string("bmy"), std::string("minustwo_d8")}) {
        RunResult r = run_scenario(named_scenario(id));
        REQUIRE_THAT(r.json.contains("zeta"));
        REQUIRE_EQ(r.json.at(Json::json_pointer("/zeta/P2_product")), Json::array({1, -4, 4}));
    }
    for (auto& id : all_named_scenarios()) {
        Scenario s = named_scenario(id);
        if (s.curve_F.genus() != 0) continue;
        if (run_scenario(s).exit_code != 0) continue;
        ZetaData z = p2_kunneth(s.curve_C, s.curve_F, s.budget);
        REQUIRE_THAT(z.p2 == (ZPoly{1, -2 * z.q, z.q * z.q}));
    }

    // supersingular self-product: all reciprocal roots of absolute value 2
    Fq F2 = Fq::make(1);
    CurveModel E0 = CurveModel::elliptic_deuring(FqElem(F2, 0));
    ZetaData z = p2_kunneth(E0, E0);
    REQUIRE_EQ(static_cast<int>(z.p2.size()) - 1, 6);
    double dev = reciprocal_root_abs_deviation(z.p2, 2.0);
    REQUIRE_THAT(dev < 1e-9);
    return true;
}

bool c9_negative_path() {
    RunResult r = run_scenario(named_scenario("bmy_genus4"));
    REQUIRE_EQ(r.exit_code, 3);
    REQUIRE_EQ(r.json.at(Json::json_pointer("/unclassified")), Json::array({6, 4}));
    REQUIRE_EQ(r.json.at(Json::json_pointer("/singularities/0/type")).get<std::string>(),
               std::string("unclassified(6,4)"));
    REQUIRE_EQ(r.json.at(Json::json_pointer("/invariants/K2_singular/value")).get<long long>(), 24);
    return true;
}

bool monotone_families() {
    // strict monotonicity stands in for the unboundedness statements
    long long prev = -1;
    for (int dF : {4, 8, 16}) {
        RunResult r = run_scenario(named_scenario("picard_family(2," + std::to_string(dF) + ")"));
        long long h01 = r.json.at(Json::json_pointer("/invariants/h01/value")).get<long long>();
        REQUIRE_THAT(h01 > prev);
        prev = h01;
    }
    long long pchi = -1, pk2 = -1, pa = -1;
    for (int n : {1, 2, 3}) {
        RunResult r = run_scenario(named_scenario("vf_family_rational(" + std::to_string(n) + ")"));
        long long chi = r.json.at(Json::json_pointer("/invariants/chi/value")).get<long long>();
        long long k2 = r.json.at(Json::json_pointer("/invariants/K2_resolved/value")).get<long long>();
        REQUIRE_THAT(chi > pchi);
        REQUIRE_THAT(k2 >= pk2);
        pchi = chi;
        pk2 = k2;
        RunResult ab = run_scenario(named_scenario("vf_family_abelian(" + std::to_string(n) + ")"));
        long long achi = ab.json.at(Json::json_pointer("/invariants/chi/value")).get<long long>();
        REQUIRE_THAT(achi > pa);
        pa = achi;
        REQUIRE_EQ(ab.json.at(Json::json_pointer("/predicates/has_global_vector_fields")).get<bool>(), true);
        REQUIRE_EQ(ab.json.at(Json::json_pointer("/predicates/uniruled")).get<bool>(), false);
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"criterion 1: one elliptic (19)_0, chi 1, K^2 14 (16 before resolving), chi(X') 2", c1_bmy},
        {"criterion 2: two D4, (chi,K^2,c2) = (1,4,8), 6 disjoint (-2) between the bounds", c2_minustwo_d4},
        {"criterion 3: one D8, (chi,K^2,c2,b1,b2) = (1,8,4,4,10), 5 disjoint (-2), cap 9", c3_minustwo_d8},
        {"criterion 4: family q=2, h01 = {4,6,10} with b1 = 4 constant, Picard nonreduced", c4_family},
        {"criterion 5: blow-up engine agrees with the order table; star cycle Z^2 = -2, p_a = 1", c5_oracle_equivalence},
        {"criterion 6: 200 divisor degrees, Noether everywhere, chi oracle x9, classifications", c6_property_suite},
        {"criterion 7: fiber genus g(F) + d_F/2 and cusp drops on every scenario", c7_fiber_genus},
        {"criterion 8: Artin bounds 4<=sigma<=5, rhs 2^2, P2 = (1-2t)^2, Weil circle to 1e-9", c8_arithmetic},
        {"criterion 9: genus-4 variant exits 3 with unclassified (6,4) and K^2_singular 24", c9_negative_path},
        {"families: strict monotonicity of h01, chi, K^2 along the three-step families", monotone_families},
    };
    int failed = 0;
    for (auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS  " : "FAIL  ") << c.name << "\n";
        if (!ok) ++failed;
    }
    if (failed) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria satisfied\n";
    return 0;
}

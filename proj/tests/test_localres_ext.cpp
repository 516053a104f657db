#include "doctest.h"
#include "insep/localres.hpp"

using namespace insep;

TEST_CASE("resolution over larger base fields, with mid-run extensions") {
    // poles (2,2) over F_8: the three tips sit at the cube roots of unity,
    // two of which live only in F_64; the engine must extend and continue
    Fq F8 = Fq::make(3);
    ResolutionResult r = resolve_orders(F8, 2, 2, true);
    CHECK(r.shape == "D4");
    CHECK(r.blowups == 4);

    // zeros (4,4) over F_4: the cube-root tips are rational here
    Fq F4 = Fq::make(2);
    ResolutionResult s = resolve_orders(F4, 4, 4, false);
    CHECK(s.shape == "star(-3;5)");

    // poles (4,4) over F_16: the fifth roots of unity already live here
    Fq F16 = Fq::make(4);
    ResolutionResult t = resolve_orders(F16, 4, 4, true);
    CHECK(t.shape == "star(-3;5)");
    CHECK(t.blowups == 6);
}

TEST_CASE("unit-series perturbations do not change the catalog types") {
    Fq F2 = Fq::make(1);
    // additive germs need square units: perturb by squares in each variable
    FqPoly u1(F2, {0, 0, 0, 0, 1, 0, 1});      // x^4 (1 + x^2)
    FqPoly v1(F2, {0, 0, 1, 0, 0, 0, 1});      // y^2 (1 + y^4)
    CHECK(resolve(LocalVF::separated(u1, v1, 32)).shape == "D8");

    FqPoly u2(F2, {0, 0, 0, 0, 1, 0, 0, 0, 1});  // x^4 (1 + x^4)
    FqPoly v2(F2, {0, 0, 0, 0, 1, 0, 1});        // y^4 (1 + y^2)
    ResolutionResult r = resolve(LocalVF::separated(u2, v2, 32));
    CHECK(r.shape == "star(-3;5)");
    CHECK(r.fc.pa == 1);

    Fq F4 = Fq::make(2);
    FqPoly u3(F4, {0, 0, 2, 0, 3});  // x^2 (g + (g+1) x^2), both square series
    FqPoly v3(F4, {0, 0, 1, 0, 2});  // y^2 (1 + g y^2)
    CHECK(resolve(LocalVF::separated(u3, v3, 32)).shape == "D4");
}

TEST_CASE("fundamental cycles of chains and forks match the closed forms") {
    // A_n chains: all multiplicities 1, Z^2 = -2, rational
    for (int n = 1; n <= 6; ++n) {
        DualGraph g;
        g.selfint.assign(static_cast<size_t>(n), -2);
        for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
        FundamentalCycle fc = fundamental_cycle(g);
        CHECK(fc.mult == std::vector<int>(static_cast<size_t>(n), 1));
        CHECK(fc.z2 == -2);
        CHECK(fc.pa == 0);
        CHECK(g.shape() == "A" + std::to_string(n));
    }
    // D_n forks: chain multiplicities 1,2,...,2 with two 1-tips
    for (int n = 4; n <= 8; ++n) {
        DualGraph g;
        g.selfint.assign(static_cast<size_t>(n), -2);
        for (int i = 0; i + 1 < n - 2; ++i) g.edges.push_back({i, i + 1});
        g.edges.push_back({n - 3, n - 2});
        g.edges.push_back({n - 3, n - 1});
        FundamentalCycle fc = fundamental_cycle(g);
        CHECK(fc.z2 == -2);
        CHECK(fc.pa == 0);
        CHECK(fc.mult[0] == 1);
        CHECK(fc.mult[static_cast<size_t>(n - 2)] == 1);
        CHECK(fc.mult[static_cast<size_t>(n - 1)] == 1);
        for (int i = 1; i <= n - 3; ++i) CHECK(fc.mult[static_cast<size_t>(i)] == 2);
        CHECK(g.shape() == "D" + std::to_string(n));
    }
}

TEST_CASE("deeper blow-up data: the D8 chain carries the expected upstairs curves") {
    Fq F2 = Fq::make(1);
    ResolutionResult r = resolve_orders(F2, 4, 2, false);
    // three integral curves of self-intersection -4 and five transverse (-1)-tips
    int integral4 = 0, tips = 0;
    for (size_t i = 0; i < r.upstairs_selfint.size(); ++i) {
        if (r.integral[i]) {
            CHECK(r.upstairs_selfint[i] == -4);
            ++integral4;
        } else {
            CHECK(r.upstairs_selfint[i] == -1);
            ++tips;
        }
    }
    CHECK(integral4 == 3);
    CHECK(tips == 5);
}

TEST_CASE("precision recovery: a tight initial precision still resolves") {
    Fq F2 = Fq::make(1);
    // precision 6 is too small for the (4,4) substitution growth; the
    // driver doubles it internally and still terminates
    LocalVF v = LocalVF::canonical_zeros(F2, 4, 4, 6);
    ResolutionResult r = resolve(v);
    CHECK(r.shape == "star(-3;5)");
}

TEST_CASE("depth guard rejects endless inputs") {
    // a non-2-closed germ assembled by hand: x*unit d/dx + y*unit d/dy with
    // distinct unit constants cannot arise from a 2-closed field over F_4
    // and makes the blow-up loop self-similar
    Fq F4 = Fq::make(2);
    BiPoly A = BiPoly::monomial(F4, 24, 1, 0, 2);  // g * x
    BiPoly B = BiPoly::monomial(F4, 24, 0, 1, 3);  // (g+1) * y
    CHECK_THROWS(resolve(LocalVF{A, B}));
}

#include "doctest.h"
#include "insep/poly.hpp"

#include <cstdlib>

using namespace insep;

namespace {

// deterministic xorshift for reproducible random polynomials
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    FqPoly poly(Fq F, int maxdeg) {
        int d = static_cast<int>(next() % static_cast<uint64_t>(maxdeg + 1));
        std::vector<uint64_t> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = next() & (F.order() - 1);
        return FqPoly(F, c);
    }
};

}  // namespace

TEST_CASE("division with remainder round-trips") {
    Rng rng;
    Fq F = Fq::make(3);
    for (int i = 0; i < 200; ++i) {
        FqPoly a = rng.poly(F, 9), b = rng.poly(F, 5);
        if (b.is_zero()) continue;
        auto [q, r] = FqPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("derivative of any square vanishes in characteristic 2") {
    Rng rng;
    Fq F = Fq::make(4);
    for (int i = 0; i < 100; ++i) {
        FqPoly a = rng.poly(F, 7);
        CHECK((a * a).derivative().is_zero());
    }
}

TEST_CASE("poly_sqrt inverts squaring") {
    Rng rng;
    Fq F = Fq::make(2);
    for (int i = 0; i < 100; ++i) {
        FqPoly a = rng.poly(F, 6);
        CHECK((a * a).poly_sqrt() == a.monic().scaled(a.lead()));
    }
}

TEST_CASE("x^6+1 over F_2 factors as (x+1)^2 (x^2+x+1)^2") {
    Fq F2 = Fq::make(1);
    FqPoly f(F2, {1, 0, 0, 0, 0, 0, 1});
    auto fac = factor(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == FqPoly(F2, {1, 1}));
    CHECK(fac[0].second == 2);
    CHECK(fac[1].first == FqPoly(F2, {1, 1, 1}));
    CHECK(fac[1].second == 2);
}

TEST_CASE("factor against brute-force refactoring on random inputs") {
    Rng rng;
    for (int k : {1, 2, 3}) {
        Fq F = Fq::make(k);
        for (int i = 0; i < 60; ++i) {
            FqPoly a = rng.poly(F, 8);
            if (a.deg() < 1) continue;
            auto fac = factor(a);
            FqPoly prod = FqPoly::constant(F, a.lead());
            for (auto& [p, m] : fac) {
                CHECK(p.lead() == 1);
                for (int j = 0; j < m; ++j) prod = prod * p;
                // irreducibility: no roots below half degree via gcd ladder
                if (p.deg() > 1) {
                    for (int d = 1; 2 * d <= p.deg(); ++d) {
                        FqPoly h = frob_power_x(p, static_cast<uint64_t>(F.k * d));
                        FqPoly g = gcd(p, h + (FqPoly::x(F) % p));
                        CHECK(g.deg() == 0);
                    }
                }
            }
            CHECK(prod == a);
        }
    }
}

TEST_CASE("roots_in_field finds exactly the evaluation roots") {
    Rng rng;
    Fq F = Fq::make(4);
    for (int i = 0; i < 60; ++i) {
        FqPoly a = rng.poly(F, 6);
        if (a.is_zero()) continue;
        auto rts = roots_in_field(a);
        std::vector<uint64_t> found;
        for (auto& [r, m] : rts) {
            CHECK(m >= 1);
            CHECK(a.eval(r) == 0);
            found.push_back(r);
        }
        for (uint64_t v = 0; v < F.order(); ++v) {
            bool is_root = (a.eval(v) == 0);
            bool listed = std::find(found.begin(), found.end(), v) != found.end();
            CHECK(is_root == listed);
        }
    }
}

TEST_CASE("x^2+x+1 over F_2 has two simple roots in F_4") {
    Fq F2 = Fq::make(1);
    FqPoly f(F2, {1, 1, 1});
    auto roots = roots_in_splitting_field(f);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        CHECK(r.ext_degree == 2);
        CHECK(r.mult == 1);
        CHECK(r.minpoly == f);
        // both roots satisfy r^2 + r + 1 = 0 in F_4
        Fq F4 = r.ext_field;
        CHECK(F4.add(F4.add(F4.sqr(r.root), r.root), 1) == 0);
    }
    CHECK(roots[0].root_index == 0);
    CHECK(roots[1].root_index == 1);
}

TEST_CASE("x+1 has the single root 1") {
    Fq F2 = Fq::make(1);
    auto roots = roots_in_splitting_field(FqPoly(F2, {1, 1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].root == 1);
    CHECK(roots[0].ext_degree == 1);
    CHECK(roots[0].mult == 1);
}

TEST_CASE("x^6+1 splitting-field roots: 1 twice, two conjugates in F_4 twice") {
    Fq F2 = Fq::make(1);
    FqPoly f(F2, {1, 0, 0, 0, 0, 0, 1});
    auto roots = roots_in_splitting_field(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].root == 1);
    CHECK(roots[0].mult == 2);
    CHECK(roots[1].ext_degree == 2);
    CHECK(roots[1].mult == 2);
    CHECK(roots[2].ext_degree == 2);
    CHECK(roots[2].mult == 2);
}

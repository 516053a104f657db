#include "doctest.h"
#include "insep/vectorfields.hpp"

using namespace insep;

namespace {

Fq F2 = Fq::make(1);

struct Rng {
    uint64_t s = 0xdeadbeefcafef00dull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

}  // namespace

TEST_CASE("delta_1: pole of order 4 at 0, zeros 2(1) + 4(inf)") {
    CurveVectorField v = make_delta1(F2);
    CurveDivisor d = v.divisor();
    CHECK(d.support.size() == 3);
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F2, 0), 0, 1, 1}) == -4);
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F2, 1), 0, 1, 1}) == 2);
    CHECK(d.support.at(CurvePlace{PlaceP1::infty(F2), 0, 1, 1}) == 4);
    CHECK(v.pole_degree() == 4);
    CHECK(d.degree() == 2);
}

TEST_CASE("delta_2: poles of order 2 at 0 and infinity, zeros at the cube roots of 1") {
    CurveVectorField v = make_delta2(F2);
    CurveDivisor d = v.divisor();
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F2, 0), 0, 1, 1}) == -2);
    CHECK(d.support.at(CurvePlace{PlaceP1::infty(F2), 0, 1, 1}) == -2);
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F2, 1), 0, 1, 1}) == 2);
    // omega and omega^2 form one closed place of residue degree 2
    CurvePlace quad{PlaceP1::from_minpoly(FqPoly(F2, {1, 1, 1})), 0, 1, 2};
    CHECK(d.support.at(quad) == 2);
    CHECK(d.degree() == 2);
    CHECK(v.pole_degree() == 4);
}

TEST_CASE("delta'_1: zeros 2(a) + 2(inf), poles 2(b)") {
    Fq F4 = Fq::make(2);
    CurveVectorField v = make_delta_prime(F4, {2}, {3});
    CurveDivisor d = v.divisor();
    CHECK(d.support.size() == 3);
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F4, 2), 0, 1, 1}) == 2);
    CHECK(d.support.at(CurvePlace{PlaceP1::infty(F4), 0, 1, 1}) == 2);
    CHECK(d.support.at(CurvePlace{PlaceP1::rational(F4, 3), 0, 1, 1}) == -2);
    CHECK_THROWS_AS(make_delta_prime(F4, {1}, {1}), std::invalid_argument);
}

TEST_CASE("elliptic catalog field: one zero and one pole of order 2") {
    Fq F8 = Fq::make(3);
    FqElem alpha(F8, 2);
    CurveVectorField v = make_delta_elliptic(alpha, FqElem(F8, 1), alpha);
    CurveDivisor d = v.divisor();
    REQUIRE(d.support.size() == 2);
    int zeros = 0, poles = 0;
    for (auto& [p, m] : d.support) {
        if (m == 2) {
            ++zeros;
            CHECK(p.e == 2);  // the fiber over x = 1/alpha is ramified for this scalar
            CHECK_FALSE(p.base.infinity);
        }
        if (m == -2) {
            ++poles;
            CHECK(p.base.infinity);
        }
    }
    CHECK(zeros == 1);
    CHECK(poles == 1);
    CHECK(d.degree() == 0);
}

TEST_CASE("as_ddx(4): divisor -4 P_inf on the genus-3 cover") {
    CurveVectorField v = make_as_ddx(F2, 4);
    CurveDivisor d = v.divisor();
    REQUIRE(d.support.size() == 1);
    auto& [p, m] = *d.support.begin();
    CHECK(p.base.infinity);
    CHECK(m == -4);
    CHECK(v.pole_degree() == 4);
}

TEST_CASE("pullback field with only double poles: (g-1) poles of order 2") {
    // genus 3 cover, scalar (x-0)^-2; the fiber over 0 splits
    CurveModel C = CurveModel::artin_schreier(F2, 4);
    RatFun scalar(FqPoly::constant(F2, 1), FqPoly(F2, {0, 0, 1}));
    CurveVectorField v = make_pullback(C, scalar);
    CurveDivisor d = v.divisor();
    CHECK(d.degree() == 2 - 2 * C.genus());
    CHECK(d.zeros_part().support.empty());
    long long npoles = 0;
    for (auto& [p, m] : d.poles_part().support) {
        CHECK(m == 2);
        npoles += p.residue_degree;
    }
    CHECK(npoles == C.genus() - 1);  // 2 geometric points over x=0
    CHECK(v.pole_degree() == 4);
}

TEST_CASE("classification: catalog fields additive, x^2+x multiplicative") {
    CHECK(make_delta1(F2).classify().kind == PClass::Additive);
    CHECK(make_delta2(F2).classify().kind == PClass::Additive);
    Fq F4 = Fq::make(2);
    CHECK(make_delta_prime(F4, {0, 1}, {2, 3}).classify().kind == PClass::Additive);
    CHECK(make_as_ddx(F2, 3).classify().kind == PClass::Additive);

    CurveVectorField mult = make_pullback(CurveModel::p1(F2), RatFun(FqPoly(F2, {0, 1, 1})));
    CHECK(mult.classify().kind == PClass::Multiplicative);

    // r = x^3: eigenfunction x^2, neither 0 nor 1
    CurveVectorField gen = make_pullback(CurveModel::p1(F2), RatFun(FqPoly(F2, {0, 0, 0, 1})));
    PClosureType t = gen.classify();
    CHECK(t.kind == PClass::General);
    CHECK(t.eigenfunction == RatFun(FqPoly(F2, {0, 0, 1})));
}

TEST_CASE("elliptic classification: closed form agrees with differentiation of the value on x") {
    Fq F8 = Fq::make(3);
    FqElem alpha(F8, 2);
    for (uint64_t av = 0; av < 8; ++av)
        for (uint64_t bv = 0; bv < 8; ++bv) {
            if (av == 0 && bv == 0) continue;
            CurveVectorField v = make_delta_elliptic(alpha, FqElem(F8, av), FqElem(F8, bv));
            PClosureType closed = v.classify();
            // differentiation route: d/dx of (a+bx)(1+alpha x)
            CurveVectorField raw = v;
            raw.deuring_ab.reset();
            PClosureType derived = raw.classify();
            CHECK(closed.kind == derived.kind);
            if (closed.kind == PClass::General) CHECK(closed.eigenfunction == derived.eigenfunction);
            // the closed-form criterion on a*alpha + b
            uint64_t f = F8.add(F8.mul(av, alpha.v), bv);
            CHECK((closed.kind == PClass::Additive) == (f == 0));
            CHECK((closed.kind == PClass::Multiplicative) == (f == 1));
        }
}

TEST_CASE("every scalar that is a square classifies additive") {
    Rng rng;
    Fq F4 = Fq::make(2);
    int done = 0;
    while (done < 50) {
        std::vector<uint64_t> c(1 + rng.next() % 4), cd(1 + rng.next() % 4);
        for (auto& x : c) x = rng.next() & 3;
        for (auto& x : cd) x = rng.next() & 3;
        FqPoly n(F4, c), d(F4, cd);
        if (n.is_zero() || d.is_zero()) continue;
        ++done;
        RatFun r(n, d);
        if (r.is_zero()) continue;
        CurveVectorField v = make_pullback(CurveModel::p1(F4), r * r);
        CHECK(v.classify().kind == PClass::Additive);
    }
}

TEST_CASE("divisor degree is 2-2g over 200 random catalog fields") {
    Rng rng;
    Fq F16 = Fq::make(4);
    int done = 0;
    while (done < 200) {
        CurveVectorField v = [&]() -> CurveVectorField {
            switch (rng.next() % 5) {
                case 0: {
                    // delta'_n with distinct random points
                    std::vector<uint64_t> pool;
                    for (uint64_t i = 0; i < 16; ++i) pool.push_back(i);
                    for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.next() % i]);
                    size_t n = 1 + rng.next() % 3;
                    std::vector<uint64_t> as(pool.begin(), pool.begin() + static_cast<long>(n));
                    std::vector<uint64_t> bs(pool.begin() + static_cast<long>(n), pool.begin() + static_cast<long>(2 * n));
                    return make_delta_prime(F16, as, bs);
                }
                case 1: {
                    uint64_t a;
                    do {
                        a = rng.next() & 15;
                    } while (F16.pow(a, 3) == 1);
                    uint64_t av = rng.next() & 15, bv = rng.next() & 15;
                    if (av == 0 && bv == 0) av = 1;
                    return make_delta_elliptic(FqElem(F16, a), FqElem(F16, av), FqElem(F16, bv));
                }
                case 2: return make_as_ddx(F16, 1 + static_cast<int>(rng.next() % 5));
                case 3: {
                    // pullback along a genus-2 cover with a random nonzero scalar
                    CurveModel hy = CurveModel::hyperelliptic(F16, {0, 1, 2}, FqPoly(F16, {1, 0, 14, 1}));
                    FqPoly n(F16, {rng.next() & 15, rng.next() & 15, 1});
                    FqPoly d(F16, {rng.next() & 15, 1});
                    return make_pullback(hy, RatFun(n, d));
                }
                default: {
                    FqPoly n(F16, {rng.next() & 15, rng.next() & 15, rng.next() & 15});
                    FqPoly d(F16, {rng.next() & 15, rng.next() & 15, 1});
                    if (n.is_zero()) n = FqPoly::constant(F16, 1);
                    return make_pullback(CurveModel::p1(F16), RatFun(n, d));
                }
            }
        }();
        ++done;
        CHECK(v.divisor().degree() == 2 - 2 * v.curve.genus());
    }
}

TEST_CASE("catalog pole degrees are even") {
    Fq F4 = Fq::make(2);
    CHECK(make_delta1(F2).pole_degree() % 2 == 0);
    CHECK(make_delta2(F2).pole_degree() % 2 == 0);
    CHECK(make_delta_prime(F4, {0, 1}, {2, 3}).pole_degree() % 2 == 0);
    CHECK(make_as_ddx(F2, 4).pole_degree() % 2 == 0);
    Fq F8 = Fq::make(3);
    CHECK(make_delta_elliptic(FqElem(F8, 2), FqElem(F8, 1), FqElem(F8, 2)).pole_degree() % 2 == 0);
}

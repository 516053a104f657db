#ifndef INSEP_VECTORFIELDS_HPP
#define INSEP_VECTORFIELDS_HPP

/// Rational vector fields on the catalog curves.
///
/// Every field is stored as scalar(x) times the canonical lift of d/dx
/// (for the Deuring cubic the lift is (1+a*x) d/dx + (a*y+x^2) d/dy, whose
/// value on x is 1+a*x; elsewhere the lift has value 1 on x).  Divisors
/// combine the ramification-aware pullback of div(scalar) with the lift
/// divisor of the model; classification reads the formal derivative of the
/// field's value on x, which is the eigenfunction of the 2-nd power
/// operation.

#include <optional>

#include "curves.hpp"

namespace insep {

enum class PClass { Additive, Multiplicative, General };

struct PClosureType {
    PClass kind = PClass::Additive;
    RatFun eigenfunction;  // the f with delta^[2] = f * delta

    static PClosureType additive(Fq F) { return {PClass::Additive, RatFun::zero(F)}; }
    static PClosureType multiplicative(Fq F) { return {PClass::Multiplicative, RatFun::one(F)}; }
    static PClosureType general(RatFun f) { return {PClass::General, std::move(f)}; }

    std::string str() const {
        switch (kind) {
            case PClass::Additive: return "additive";
            case PClass::Multiplicative: return "multiplicative";
            default: return "p-closed, eigenfunction " + eigenfunction.str();
        }
    }
};

struct CurveVectorField {
    CurveModel curve;
    RatFun scalar;  // multiplier of the distinguished lift, nonzero
    std::optional<std::pair<FqElem, FqElem>> deuring_ab;  // (a, b) for the cubic's catalog field

    CurveDivisor divisor() const {
        CurveDivisor d = distinguished_lift_divisor(curve);
        if (!scalar.is_one()) d = d + pullback_divisor(curve, divisor_of_ratfun(scalar));
        return d;
    }

    /// Value of the field on the coordinate x, as a rational function of x.
    RatFun value_on_x() const {
        if (auto* e = std::get_if<EllipticDeuring>(&curve.m)) {
            FqPoly lift(curve.F, {1, e->alpha.v});  // 1 + a*x
            return scalar * RatFun(lift);
        }
        return scalar;
    }

    PClosureType classify() const {
        const Fq F = curve.F;
        if (deuring_ab) {
            // closed form for the cubic: eigenfunction a*alpha + b
            auto& e = std::get<EllipticDeuring>(curve.m);
            FqElem f = deuring_ab->first * e.alpha + deuring_ab->second;
            if (f.is_zero()) return PClosureType::additive(F);
            if (f.v == 1) return PClosureType::multiplicative(F);
            return PClosureType::general(RatFun(FqPoly::constant(F, f.v)));
        }
        RatFun eig = value_on_x().derivative();
        if (eig.is_zero()) return PClosureType::additive(F);
        if (eig.is_one()) return PClosureType::multiplicative(F);
        return PClosureType::general(eig);
    }

    /// Degree of the divisor of poles.
    long long pole_degree() const { return divisor().poles_part().degree(); }
};

/// delta_1 = (x^-4 + x^-2) d/dx on the projective line.
inline CurveVectorField make_delta1(Fq F) {
    RatFun r(FqPoly(F, {1, 0, 1}), FqPoly(F, {0, 0, 0, 0, 1}));
    return CurveVectorField{CurveModel::p1(F), r, std::nullopt};
}

/// delta_2 = (x^-2 + x^4) d/dx on the projective line.
inline CurveVectorField make_delta2(Fq F) {
    RatFun r(FqPoly(F, {1, 0, 0, 0, 0, 0, 1}), FqPoly(F, {0, 0, 1}));
    return CurveVectorField{CurveModel::p1(F), r, std::nullopt};
}

/// delta'_n = prod (x-a_i)^2 (x-b_i)^-2 d/dx; zeros at the a_i and at
/// infinity, poles at the b_i, all of order 2.
inline CurveVectorField make_delta_prime(Fq F, const std::vector<uint64_t>& as, const std::vector<uint64_t>& bs) {
    if (as.size() != bs.size() || as.empty()) throw std::invalid_argument("delta_prime: need equally many a_i and b_i");
    std::vector<uint64_t> all;
    all.insert(all.end(), as.begin(), as.end());
    all.insert(all.end(), bs.begin(), bs.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) throw std::invalid_argument("delta_prime: points must be pairwise distinct");
    FqPoly num = FqPoly::constant(F, 1), den = FqPoly::constant(F, 1);
    for (uint64_t a : as) {
        FqPoly l = FqPoly::linear_root(F, a);
        num = num * l * l;
    }
    for (uint64_t b : bs) {
        FqPoly l = FqPoly::linear_root(F, b);
        den = den * l * l;
    }
    return CurveVectorField{CurveModel::p1(F), RatFun(num, den), std::nullopt};
}

/// (a + b*x) ((1+alpha*x) d/dx + (alpha*y+x^2) d/dy) on the Deuring cubic.
inline CurveVectorField make_delta_elliptic(FqElem alpha, FqElem a, FqElem b) {
    CurveModel E = CurveModel::elliptic_deuring(alpha);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("delta_elliptic: scalar a + b*x is zero");
    RatFun scalar(FqPoly(alpha.F, {a.v, b.v}));
    return CurveVectorField{E, scalar, std::make_pair(a, b)};
}

/// The lift of d/dx along z^2 - z = x^(2h-1).
inline CurveVectorField make_as_ddx(Fq F, int h) {
    return CurveVectorField{CurveModel::artin_schreier(F, h), RatFun::one(F), std::nullopt};
}

/// Pullback of scalar(x) d/dx along the cover of any catalog model.
inline CurveVectorField make_pullback(CurveModel base, RatFun scalar) {
    if (scalar.is_zero()) throw std::invalid_argument("pullback: zero scalar");
    if (std::holds_alternative<EllipticDeuring>(base.m))
        throw std::invalid_argument("pullback: use delta_elliptic for the Deuring cubic");
    return CurveVectorField{std::move(base), std::move(scalar), std::nullopt};
}

}  // namespace insep

#endif

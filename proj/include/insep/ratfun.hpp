#ifndef INSEP_RATFUN_HPP
#define INSEP_RATFUN_HPP

/// Rational functions over F_{2^k} in reduced form, places of the projective
/// line, valuations, and divisors.
///
/// A finite place is a closed point of P^1: a monic irreducible polynomial
/// over the base field.  The place at infinity is kept separate.  Divisor
/// degrees weight each place by its residue degree, so deg div(r) = 0 for
/// every nonzero rational function r.

#include <map>
#include <string>
#include <vector>

#include "poly.hpp"

namespace insep {

class RatFun {
  public:
    FqPoly num, den;

    RatFun() = default;
    explicit RatFun(FqPoly n) : num(std::move(n)), den(FqPoly::constant(num.F, 1)) {}
    RatFun(FqPoly n, FqPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFun zero(Fq F) { return RatFun(FqPoly::zero(F)); }
    static RatFun one(Fq F) { return RatFun(FqPoly::constant(F, 1)); }
    static RatFun x(Fq F) { return RatFun(FqPoly::x(F)); }

    Fq field() const { return num.F; }
    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num.is_zero()) {
            den = FqPoly::constant(num.F, 1);
            return;
        }
        FqPoly g = gcd(num, den);
        if (g.deg() > 0) {
            num = num / g;
            den = den / g;
        }
        // canonical form: monic denominator
        uint64_t lc = den.lead();
        if (lc != 1) {
            uint64_t li = num.F.inv(lc);
            num = num.scaled(li);
            den = den.scaled(li);
        }
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + b; }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.num, a.den * b.den);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    bool is_one() const { return num.deg() == 0 && num.coeff(0) == 1 && den.deg() == 0; }

    RatFun derivative() const {
        // (n/d)' = (n'd - nd')/d^2; minus is plus here
        return RatFun(num.derivative() * den + num * den.derivative(), den * den);
    }

    std::string str(const std::string& var = "x") const {
        if (den.deg() == 0 && den.coeff(0) == 1) return num.str(var);
        return "(" + num.str(var) + ")/(" + den.str(var) + ")";
    }
};

/// A place of P^1 over the base field.
struct PlaceP1 {
    bool infinity = false;
    FqPoly minpoly;  // monic irreducible; empty when infinity

    static PlaceP1 infty(Fq F) {
        PlaceP1 p;
        p.infinity = true;
        p.minpoly = FqPoly::zero(F);
        return p;
    }
    static PlaceP1 rational(Fq F, uint64_t a) {
        PlaceP1 p;
        p.minpoly = FqPoly::linear_root(F, a);
        return p;
    }
    static PlaceP1 from_minpoly(FqPoly m) {
        PlaceP1 p;
        p.minpoly = m.monic();
        return p;
    }

    int residue_degree() const { return infinity ? 1 : minpoly.deg(); }

    /// Canonical root value when residue degree is 1.
    uint64_t rational_value() const {
        if (infinity || minpoly.deg() != 1) throw std::logic_error("PlaceP1: not a rational finite place");
        return minpoly.coeff(0);
    }

    bool operator<(const PlaceP1& o) const {
        if (infinity != o.infinity) return !infinity && o.infinity;  // finite sorts first
        if (infinity) return false;
        return FqPoly::less(minpoly, o.minpoly);
    }
    bool operator==(const PlaceP1& o) const {
        return infinity == o.infinity && (infinity || minpoly == o.minpoly);
    }

    std::string str() const {
        if (infinity) return "inf";
        if (minpoly.deg() == 1) return "x=" + minpoly.F.elem_str(minpoly.coeff(0));
        return "[" + minpoly.str() + "]";
    }
};

/// Finitely supported Z-linear combination of places.
struct Divisor {
    std::map<PlaceP1, int> support;

    void add(const PlaceP1& p, int m) {
        if (m == 0) return;
        auto it = support.find(p);
        if (it == support.end()) {
            support.emplace(p, m);
        } else {
            it->second += m;
            if (it->second == 0) support.erase(it);
        }
    }

    int mult(const PlaceP1& p) const {
        auto it = support.find(p);
        return it == support.end() ? 0 : it->second;
    }

    long long degree() const {
        long long d = 0;
        for (auto& [p, m] : support) d += static_cast<long long>(m) * p.residue_degree();
        return d;
    }

    Divisor zeros_part() const {
        Divisor z;
        for (auto& [p, m] : support)
            if (m > 0) z.add(p, m);
        return z;
    }
    Divisor poles_part() const {  // positive multiplicities of the poles
        Divisor z;
        for (auto& [p, m] : support)
            if (m < 0) z.add(p, -m);
        return z;
    }

    friend Divisor operator+(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (auto& [p, m] : b.support) r.add(p, m);
        return r;
    }

    bool operator==(const Divisor& o) const { return support == o.support; }

    std::string str() const {
        if (support.empty()) return "0";
        std::string s;
        for (auto& [p, m] : support) {
            if (!s.empty()) s += " ";
            s += (m > 0 ? "+" : "") + std::to_string(m) + "(" + p.str() + ")";
        }
        return s;
    }
};

/// Order of vanishing of r at a place (negative at poles).
/// val_inf(r) = deg(den) - deg(num).
inline int valuation(const RatFun& r, const PlaceP1& p) {
    if (r.is_zero()) throw std::domain_error("valuation: zero function");
    if (p.infinity) return r.den.deg() - r.num.deg();
    auto count = [&](const FqPoly& f) {
        int m = 0;
        FqPoly t = f;
        while (t.deg() >= p.minpoly.deg()) {
            auto [q, rem] = FqPoly::divmod(t, p.minpoly);
            if (!rem.is_zero()) break;
            ++m;
            t = q;
        }
        return m;
    };
    return count(r.num) - count(r.den);
}

/// Full divisor of a nonzero rational function over the base field.
inline Divisor divisor_of_ratfun(const RatFun& r) {
    if (r.is_zero()) throw std::domain_error("divisor_of_ratfun: zero function");
    Divisor d;
    for (auto& [p, m] : factor(r.num))
        if (p.deg() > 0) d.add(PlaceP1::from_minpoly(p), m);
    for (auto& [p, m] : factor(r.den))
        if (p.deg() > 0) d.add(PlaceP1::from_minpoly(p), -m);
    int vinf = r.den.deg() - r.num.deg();
    if (vinf != 0) d.add(PlaceP1::infty(r.field()), vinf);
    return d;
}

}  // namespace insep

#endif

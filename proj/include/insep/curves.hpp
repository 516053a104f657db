#ifndef INSEP_CURVES_HPP
#define INSEP_CURVES_HPP

/// The four curve families used by the construction, as explicit covers of
/// the projective line in characteristic 2:
///
///  - the projective line itself,
///  - elliptic curves in Deuring normal form  y^2 + a*x*y + y = x^3,
///  - hyperelliptic curves  z^2 + f(x) z + f(x) g(x) = 0  with f the monic
///    product over the branch points and deg g = genus + 1,
///  - covers  z^2 - z = x^(2h-1), wildly ramified over infinity.
///
/// Each model knows its genus, the fiber of the cover over any place, the
/// divisor of the canonical lift of d/dx, and how to count rational points
/// over extension fields (by direct fiber enumeration; this also drives the
/// zeta numerator through the logarithmic expansion and the functional
/// equation).

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "ratfun.hpp"

namespace insep {

struct ProjectiveLine {};

struct EllipticDeuring {
    FqElem alpha;
};

struct HyperellipticChar2 {
    Fq F;
    std::vector<uint64_t> branch;  // g+1 distinct branch values
    FqPoly gpoly;                  // degree g+1, nonvanishing at the branch values
};

struct ArtinSchreier {
    Fq F;
    int h = 2;  // z^2 - z = x^(2h-1), genus h-1
};

using CurveModelVariant = std::variant<ProjectiveLine, EllipticDeuring, HyperellipticChar2, ArtinSchreier>;

struct CurveModel {
    Fq F;
    CurveModelVariant m;

    static CurveModel p1(Fq f) { return CurveModel{f, ProjectiveLine{}}; }

    static CurveModel elliptic_deuring(FqElem alpha) {
        const Fq f = alpha.F;
        uint64_t a3 = f.pow(alpha.v, 3);
        if (a3 == 1) throw std::invalid_argument("EllipticDeuring: alpha^3 must differ from 1");
        return CurveModel{f, EllipticDeuring{alpha}};
    }

    static CurveModel hyperelliptic(Fq f, std::vector<uint64_t> branch, FqPoly gpoly) {
        for (size_t i = 0; i < branch.size(); ++i)
            for (size_t j = i + 1; j < branch.size(); ++j)
                if (branch[i] == branch[j]) throw std::invalid_argument("Hyperelliptic: repeated branch point");
        if (gpoly.deg() != static_cast<int>(branch.size()))
            throw std::invalid_argument("Hyperelliptic: deg gpoly must equal number of branch points");
        for (uint64_t b : branch)
            if (gpoly.eval(b) == 0) throw std::invalid_argument("Hyperelliptic: gpoly vanishes at a branch point");
        if (branch.size() < 2) throw std::invalid_argument("Hyperelliptic: need at least 2 branch points");
        return CurveModel{f, HyperellipticChar2{f, std::move(branch), std::move(gpoly)}};
    }

    static CurveModel artin_schreier(Fq f, int h) {
        if (h < 1) throw std::invalid_argument("ArtinSchreier: h must be positive");
        return CurveModel{f, ArtinSchreier{f, h}};
    }

    bool is_p1() const { return std::holds_alternative<ProjectiveLine>(m); }

    friend bool operator==(const CurveModel& a, const CurveModel& b) {
        if (a.F != b.F || a.m.index() != b.m.index()) return false;
        if (auto* e = std::get_if<EllipticDeuring>(&a.m)) return e->alpha == std::get<EllipticDeuring>(b.m).alpha;
        if (auto* h = std::get_if<HyperellipticChar2>(&a.m)) {
            auto& o = std::get<HyperellipticChar2>(b.m);
            return h->branch == o.branch && h->gpoly == o.gpoly;
        }
        if (auto* s = std::get_if<ArtinSchreier>(&a.m)) return s->h == std::get<ArtinSchreier>(b.m).h;
        return true;
    }

    int genus() const {
        if (std::holds_alternative<ProjectiveLine>(m)) return 0;
        if (std::holds_alternative<EllipticDeuring>(m)) return 1;
        if (auto* h = std::get_if<HyperellipticChar2>(&m)) return static_cast<int>(h->branch.size()) - 1;
        return std::get<ArtinSchreier>(m).h - 1;
    }

    int cover_degree() const { return is_p1() ? 1 : 2; }

    /// f(x) = prod (x - branch_i) for the hyperelliptic model.
    FqPoly hyperelliptic_fpoly() const {
        auto& h = std::get<HyperellipticChar2>(m);
        FqPoly f = FqPoly::constant(F, 1);
        for (uint64_t b : h.branch) f = f * FqPoly::linear_root(F, b);
        return f;
    }
};

/// A place of the curve: the place of P^1 below it plus a branch label.
struct CurvePlace {
    PlaceP1 base;
    int branch = 0;      // 0 or 1; distinguishes the two places of a split fiber
    int e = 1;           // ramification index over the base place
    int residue_degree = 1;

    bool operator<(const CurvePlace& o) const {
        if (!(base == o.base)) return base < o.base;
        return branch < o.branch;
    }
    bool operator==(const CurvePlace& o) const { return base == o.base && branch == o.branch; }

    std::string str() const {
        std::string s = base.str();
        if (branch) s += "'";
        return s;
    }
};

struct CurveDivisor {
    std::map<CurvePlace, int> support;

    void add(const CurvePlace& p, int m) {
        if (m == 0) return;
        auto it = support.find(p);
        if (it == support.end()) {
            support.emplace(p, m);
        } else {
            it->second += m;
            if (it->second == 0) support.erase(it);
        }
    }
    long long degree() const {
        long long d = 0;
        for (auto& [p, m] : support) d += static_cast<long long>(m) * p.residue_degree;
        return d;
    }
    CurveDivisor zeros_part() const {
        CurveDivisor z;
        for (auto& [p, m] : support)
            if (m > 0) z.add(p, m);
        return z;
    }
    CurveDivisor poles_part() const {
        CurveDivisor z;
        for (auto& [p, m] : support)
            if (m < 0) z.add(p, -m);
        return z;
    }
    friend CurveDivisor operator+(const CurveDivisor& a, const CurveDivisor& b) {
        CurveDivisor r = a;
        for (auto& [p, m] : b.support) r.add(p, m);
        return r;
    }
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

namespace detail {

/// Absolute trace of an element of the residue field of a finite place,
/// evaluated on value(x0) where x0 is a canonical root of the place.
/// Returns the pair (trace, residue field + root) for further use.
struct ResidueData {
    Fq ext;
    FqEmbedding emb;  // base -> ext
    uint64_t x0;
};

inline ResidueData residue_data(const Fq& base, const PlaceP1& p) {
    int d = p.residue_degree();
    Fq ext = Fq::make(base.k * d);
    FqEmbedding emb = make_embedding(base, ext);
    uint64_t x0;
    if (d == 1) {
        x0 = emb.map(p.rational_value());
    } else {
        FqPoly lifted = emb.map_poly(p.minpoly);
        auto roots = roots_in_field(lifted);
        if (roots.empty()) throw std::logic_error("residue_data: no root in residue field");
        x0 = roots.front().first;
    }
    return ResidueData{ext, emb, x0};
}

}  // namespace detail

/// The places of the curve above a place of P^1, with ramification indices.
/// Residue degrees are relative to the model's base field.
inline std::vector<CurvePlace> places_over(const CurveModel& c, const PlaceP1& p) {
    std::vector<CurvePlace> out;
    const int d = p.residue_degree();
    auto split_pair = [&](const PlaceP1& base) {
        out.push_back(CurvePlace{base, 0, 1, d});
        out.push_back(CurvePlace{base, 1, 1, d});
    };
    auto inert = [&](const PlaceP1& base) { out.push_back(CurvePlace{base, 0, 1, 2 * d}); };
    auto ramified = [&](const PlaceP1& base) { out.push_back(CurvePlace{base, 0, 2, d}); };

    if (std::holds_alternative<ProjectiveLine>(c.m)) {
        out.push_back(CurvePlace{p, 0, 1, d});
        return out;
    }

    if (auto* e = std::get_if<EllipticDeuring>(&c.m)) {
        if (p.infinity) {
            ramified(p);  // the single point at infinity of the Deuring cubic
            return out;
        }
        auto rd = detail::residue_data(c.F, p);
        uint64_t cval = rd.ext.add(rd.ext.mul(rd.emb.map(e->alpha.v), rd.x0), 1);  // a*x0 + 1
        if (cval == 0) {
            ramified(p);
            return out;
        }
        // y^2 + c y = x0^3  <=>  w^2 + w = x0^3 / c^2
        uint64_t t = rd.ext.mul(rd.ext.pow(rd.x0, 3), rd.ext.inv(rd.ext.sqr(cval)));
        rd.ext.trace(t) == 0 ? split_pair(p) : inert(p);
        return out;
    }

    if (auto* hy = std::get_if<HyperellipticChar2>(&c.m)) {
        if (p.infinity) {
            // w^2 + w = g/f tends to the ratio of leading coefficients
            uint64_t rho = c.F.mul(hy->gpoly.lead(), c.F.inv(c.F.pow(1, 1)));  // f is monic
            c.F.trace(rho) == 0 ? split_pair(p) : inert(p);
            return out;
        }
        if (d == 1) {
            uint64_t x0 = p.rational_value();
            for (uint64_t b : hy->branch)
                if (b == x0) {
                    ramified(p);
                    return out;
                }
        }
        auto rd = detail::residue_data(c.F, p);
        FqPoly fp = rd.emb.map_poly(c.hyperelliptic_fpoly());
        FqPoly gp = rd.emb.map_poly(hy->gpoly);
        uint64_t fv = fp.eval(rd.x0);
        if (fv == 0) {  // branch point in an extension cannot occur: branch values are rational
            ramified(p);
            return out;
        }
        uint64_t t = rd.ext.mul(gp.eval(rd.x0), rd.ext.inv(fv));
        rd.ext.trace(t) == 0 ? split_pair(p) : inert(p);
        return out;
    }

    auto& as = std::get<ArtinSchreier>(c.m);
    if (p.infinity) {
        ramified(p);
        return out;
    }
    auto rd = detail::residue_data(c.F, p);
    uint64_t t = rd.ext.pow(rd.x0, static_cast<uint64_t>(2 * as.h - 1));
    rd.ext.trace(t) == 0 ? split_pair(p) : inert(p);
    return out;
}

/// Divisor on the curve of the canonical lift of d/dx.
///  - P^1:            2 (inf)
///  - Deuring cubic:  0
///  - hyperelliptic:  2 P'_inf + 2 P''_inf - 2 sum_i P'_i
///  - Artin-Schreier: -2(h-2) P_inf, the pole normalization making the
///    degree equal 2 - 2g.
inline CurveDivisor distinguished_lift_divisor(const CurveModel& c) {
    CurveDivisor d;
    PlaceP1 inf = PlaceP1::infty(c.F);
    if (std::holds_alternative<ProjectiveLine>(c.m)) {
        d.add(CurvePlace{inf, 0, 1, 1}, 2);
        return d;
    }
    if (std::holds_alternative<EllipticDeuring>(c.m)) return d;
    if (auto* hy = std::get_if<HyperellipticChar2>(&c.m)) {
        for (auto& q : places_over(c, inf)) d.add(q, 2);
        for (uint64_t b : hy->branch)
            for (auto& q : places_over(c, PlaceP1::rational(c.F, b))) d.add(q, -2);
        return d;
    }
    int h = std::get<ArtinSchreier>(c.m).h;
    if (h != 2) d.add(CurvePlace{inf, 0, 2, 1}, -2 * (h - 2));
    return d;
}

/// Pullback of a divisor on P^1: multiplicity e_Q * m at every place Q above P.
inline CurveDivisor pullback_divisor(const CurveModel& c, const Divisor& d) {
    CurveDivisor out;
    for (auto& [p, m] : d.support)
        for (auto& q : places_over(c, p)) out.add(q, q.e * m);
    return out;
}

/// Number of points rational over F_{2^(k0*ext)} where k0 is the base field
/// degree of the model, including all points of the smooth completion.
inline long long count_points(const CurveModel& c, int ext) {
    if (ext < 1) throw std::invalid_argument("count_points: extension must be positive");
    Fq E = Fq::make(c.F.k * ext);
    FqEmbedding emb = make_embedding(c.F, E);
    const uint64_t q = E.order();

    if (std::holds_alternative<ProjectiveLine>(c.m)) return static_cast<long long>(q) + 1;

    long long n = 0;
    if (auto* e = std::get_if<EllipticDeuring>(&c.m)) {
        uint64_t a = emb.map(e->alpha.v);
        for (uint64_t x = 0; x < q; ++x) {
            uint64_t cval = E.add(E.mul(a, x), 1);
            uint64_t x3 = E.pow(x, 3);
            if (cval == 0)
                n += 1;
            else
                n += (E.trace(E.mul(x3, E.inv(E.sqr(cval)))) == 0) ? 2 : 0;
        }
        return n + 1;  // single point at infinity
    }
    if (auto* hy = std::get_if<HyperellipticChar2>(&c.m)) {
        FqPoly fp = emb.map_poly(c.hyperelliptic_fpoly());
        FqPoly gp = emb.map_poly(hy->gpoly);
        for (uint64_t x = 0; x < q; ++x) {
            uint64_t fv = fp.eval(x);
            if (fv == 0)
                n += 1;
            else
                n += (E.trace(E.mul(gp.eval(x), E.inv(fv))) == 0) ? 2 : 0;
        }
        uint64_t rho = emb.map(hy->gpoly.lead());
        n += (E.trace(rho) == 0) ? 2 : 0;  // the fiber over infinity
        return n;
    }
    auto& as = std::get<ArtinSchreier>(c.m);
    for (uint64_t x = 0; x < q; ++x)
        n += (E.trace(E.pow(x, static_cast<uint64_t>(2 * as.h - 1))) == 0) ? 2 : 0;
    return n + 1;  // wildly ramified point at infinity
}

/// Integer polynomial as a coefficient vector, index = degree.
using ZPoly = std::vector<long long>;

/// Numerator P1(t) of the zeta function over F_{2^k0}: degree 2g, constant
/// term 1, recovered from the point counts N_1..N_g and the functional
/// equation c_{2g-j} = q^(g-j) c_j.
inline ZPoly zeta_numerator(const CurveModel& c, int budget_bits = 24) {
    const int g = c.genus();
    const int k0 = c.F.k;
    if (g == 0) return ZPoly{1};
    if (g > 4 || k0 * 2 * g > budget_bits)
        throw std::domain_error("zeta_numerator: counting budget exceeded");

    const long long q = 1LL << k0;
    // power sums of the reciprocal roots: p_m = q^m + 1 - N_m
    std::vector<long long> p(static_cast<size_t>(g) + 1, 0);
    long long qm = 1;
    for (int m = 1; m <= g; ++m) {
        qm *= q;
        p[static_cast<size_t>(m)] = qm + 1 - count_points(c, m);
    }
    // Newton: m*e_m = sum_{i=1}^{m} (-1)^(i-1) e_{m-i} p_i
    std::vector<long long> e(static_cast<size_t>(2 * g) + 1, 0);
    e[0] = 1;
    for (int m = 1; m <= g; ++m) {
        long long s = 0;
        for (int i = 1; i <= m; ++i) {
            long long term = e[static_cast<size_t>(m - i)] * p[static_cast<size_t>(i)];
            s += (i % 2 == 1) ? term : -term;
        }
        if (s % m != 0) throw std::logic_error("zeta_numerator: Newton identity not integral");
        e[static_cast<size_t>(m)] = s / m;
    }
    // functional equation e_j = q^(j-g) e_(2g-j) fills the upper half
    for (int j = g + 1; j <= 2 * g; ++j) {
        long long qp = 1;
        for (int i = 0; i < j - g; ++i) qp *= q;
        e[static_cast<size_t>(j)] = e[static_cast<size_t>(2 * g - j)] * qp;
    }
    ZPoly c1(static_cast<size_t>(2 * g) + 1, 0);
    for (int j = 0; j <= 2 * g; ++j) c1[static_cast<size_t>(j)] = (j % 2 == 0) ? e[static_cast<size_t>(j)] : -e[static_cast<size_t>(j)];
    return c1;
}

inline long long zpoly_eval(const ZPoly& p, long long t) {
    long long r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * t + p[i];
    return r;
}

}  // namespace insep

#endif

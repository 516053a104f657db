#ifndef INSEP_SURFACE_HPP
#define INSEP_SURFACE_HPP

/// The product construction: two curves with p-closed vector fields of
/// matching type, the quotient of the product by the sum field, and the
/// invariants of its resolution.
///
/// Numeric invariants are computed on the singular quotient X' through the
/// line bundle N on the product with N^(-2) = omega_S ((delta)), avoiding
/// the resolution bookkeeping entirely: rational double points change
/// nothing, and the one elliptic catalog type corrects K^2 by the
/// self-intersection of its fundamental cycle and chi by one.
///
/// Hodge numbers are exact where the Kunneth factors of N are pinned down
/// (rational F-side, rational singularities, and a square root resolvable
/// on the C-side); otherwise they degrade to certified intervals, each
/// carrying the name of the statement that licensed it.

#include <limits>

#include "localres.hpp"
#include "vectorfields.hpp"

namespace insep {

/// Exact-or-interval value with a justification tag.
struct IVal {
    long long lo = 0, hi = 0;
    std::string by;

    IVal() = default;
    IVal(long long v, std::string tag) : lo(v), hi(v), by(std::move(tag)) {}
    IVal(long long l, long long h, std::string tag) : lo(l), hi(h), by(std::move(tag)) {
        if (l > h) throw std::logic_error("IVal: empty interval");
    }
    bool exact() const { return lo == hi; }
    long long value() const {
        if (!exact()) throw std::logic_error("IVal: not exact");
        return lo;
    }
    friend IVal operator+(const IVal& a, const IVal& b) { return IVal(a.lo + b.lo, a.hi + b.hi, a.by); }
    friend IVal operator*(const IVal& a, const IVal& b) {
        // nonnegative intervals only
        return IVal(a.lo * b.lo, a.hi * b.hi, a.by);
    }
    void intersect(long long l, long long h) {
        lo = std::max(lo, l);
        hi = std::min(hi, h);
        if (lo > hi) throw std::logic_error("IVal: inconsistent tightening");
    }
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct UnclassifiedSingularity : std::runtime_error {
    int a, b;
    UnclassifiedSingularity(int a_, int b_)
        : std::runtime_error("singularity with order pair (" + std::to_string(a_) + "," + std::to_string(b_) +
                             ") outside the classification table"),
          a(a_), b(b_) {}
};

struct SurfaceData {
    Fq base;
    CurveVectorField vC, vF;

    const CurveModel& C() const { return vC.curve; }
    const CurveModel& F() const { return vF.curve; }
};

/// 2-rank of the catalog models (count of branch points minus one for the
/// separable double covers; zero for the wild covers of the line).
inline int two_rank(const CurveModel& c) {
    if (std::holds_alternative<ProjectiveLine>(c.m)) return 0;
    if (auto* e = std::get_if<EllipticDeuring>(&c.m)) return e->alpha.is_zero() ? 0 : 1;
    if (std::holds_alternative<HyperellipticChar2>(c.m)) return c.genus();
    return 0;  // Artin-Schreier covers have 2-rank zero
}

/// Both fields additive, or both multiplicative; anything else is rejected.
/// The sum is then p-closed of the same type (the bracket of the two factor
/// fields vanishes on the product, killing the Jacobson cross terms).
inline void validate(const SurfaceData& d) {
    if (d.vC.scalar.is_zero()) throw ValidationError("the first vector field is trivial");
    PClosureType tc = d.vC.classify(), tf = d.vF.classify();
    auto bad = [&](const char* side, const PClosureType& t) {
        throw ValidationError(std::string("vector field on ") + side +
                              " is neither additive nor multiplicative (" + t.str() + ")");
    };
    if (tc.kind == PClass::General) bad("C", tc);
    if (tf.kind == PClass::General) bad("F", tf);
    if (tc.kind != tf.kind)
        throw ValidationError("mixed types: " + tc.str() + " on C, " + tf.str() + " on F");
}

struct SingEntry {
    CurvePlace on_C, on_F;
    int order_C = 0, order_F = 0;  // absolute orders
    bool poles = false;            // common-pole pair (else common-zero pair)
    SingularityType type;
    int geo_count = 1;  // product of the residue degrees
};

struct SingularityInventory {
    std::vector<SingEntry> entries;

    int count_geometric() const {
        int n = 0;
        for (auto& e : entries) n += e.geo_count;
        return n;
    }
    int count_elliptic_geometric() const {
        int n = 0;
        for (auto& e : entries)
            if (e.type.elliptic()) n += e.geo_count;
        return n;
    }
    bool all_classified() const {
        for (auto& e : entries)
            if (e.type.kind == SingularityType::Unclassified) return false;
        return true;
    }
    bool all_rational() const {
        for (auto& e : entries)
            if (!e.type.rational()) return false;
        return true;
    }
    const SingEntry* first_unclassified() const {
        for (auto& e : entries)
            if (e.type.kind == SingularityType::Unclassified) return &e;
        return nullptr;
    }
};

/// The isolated singularities sit below the common zeros and the common
/// poles of the two fields, with the order pair read off the divisors.
inline SingularityInventory singular_points(const SurfaceData& d) {
    SingularityInventory inv;
    CurveDivisor dc = d.vC.divisor(), df = d.vF.divisor();
    auto cross = [&](const CurveDivisor& a, const CurveDivisor& b, bool poles) {
        for (auto& [pc, mc] : a.support)
            for (auto& [pf, mf] : b.support) {
                SingEntry e;
                e.on_C = pc;
                e.on_F = pf;
                e.order_C = mc;
                e.order_F = mf;
                e.poles = poles;
                e.type = classify_pair(mc, mf);
                e.geo_count = pc.residue_degree * pf.residue_degree;
                inv.entries.push_back(e);
            }
    };
    cross(dc.zeros_part(), df.zeros_part(), false);
    cross(dc.poles_part(), df.poles_part(), true);
    return inv;
}

struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n, long long d) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

enum class Tri { False, True, Unknown };

struct PredicateBlock {
    Tri picard_reduced = Tri::Unknown;
    Tri frolicher_degenerates = Tri::Unknown;
    Tri crystalline_torsion_free = Tri::Unknown;
    Tri slope_degenerates = Tri::Unknown;
    Tri ordinary = Tri::Unknown;
    Tri has_global_vector_fields = Tri::Unknown;
    Tri uniruled = Tri::Unknown;
    bool unirational = false;
    bool bmy_violated = false;
    Frac miyaoka_bound;   // (3 c_2 - K^2)/9
    Frac sb_bound;        // K^2 + c_2/2
    long long disjoint_minus2 = 0;
    long long hodge_index_cap = 0;
};

struct CuspPoint {
    std::string place;
    int order = 0;       // pole order m of the fiber-side field
    int genus_drop = 0;  // m/2
    int geo_count = 1;
};

struct InvariantReport {
    int base_k = 1;
    int genus_C = 0, genus_F = 0;
    long long d_C = 0, d_F = 0;
    SingularityInventory inventory;

    long long k2_singular = 0, k2_resolved = 0;
    long long chi_xprime = 0;  // before the elliptic correction
    long long chi = 0;
    long long c2 = 0;
    long long b1 = 0, b2 = 0;
    bool b1_product_route = false;  // F not rational: b1 from the product

    IVal h01, h02, h10;

    long long fiber_genus_over_C = 0, fiber_genus_over_F = 0;
    std::vector<CuspPoint> cusps_over_C;  // cusps of the fibration over C^(-1)
    std::vector<CuspPoint> cusps_over_F;

    PredicateBlock pred;
};

namespace detail {

enum class Triv { Trivial, Nontrivial, Unknown };

struct CurveCoh {
    IVal h0, h1;
};

/// Cohomology of a line bundle of degree d on a genus-g curve, with optional
/// knowledge of triviality (for d = 0) and effectivity (h0 >= 1).
inline CurveCoh curve_coh(int g, long long d, Triv triv = Triv::Unknown, bool effective = false,
                          const std::string& tag = "Riemann-Roch") {
    if (g == 0) {
        long long h0 = std::max<long long>(0, d + 1), h1 = std::max<long long>(0, -d - 1);
        return {IVal(h0, tag), IVal(h1, tag)};
    }
    if (d < 0) return {IVal(0, tag), IVal(-d + g - 1, tag)};
    if (d > 2 * g - 2) return {IVal(d + 1 - g, tag), IVal(0, tag)};
    if (d == 0) {
        if (triv == Triv::Trivial || effective) return {IVal(1, tag), IVal(g, tag)};
        if (triv == Triv::Nontrivial) return {IVal(0, tag), IVal(g - 1, tag)};
        return {IVal(0, 1, tag), IVal(g - 1, g, tag)};
    }
    // special range: Clifford cap; h1 follows from Riemann-Roch
    long long lo0 = std::max<long long>(effective ? 1 : 0, d + 1 - g);
    long long hi0 = d / 2 + 1;
    IVal h0(lo0, hi0, tag);
    IVal h1(h0.lo + g - 1 - d, h0.hi + g - 1 - d, tag);
    return {h0, h1};
}

}  // namespace detail

/// Full invariant computation.  Throws UnclassifiedSingularity when an order
/// pair falls outside the table (callers can still emit the inventory, the
/// pole degrees and k2_singular).
inline InvariantReport analyze(const SurfaceData& d) {
    validate(d);
    InvariantReport r;
    r.base_k = d.base.k;
    const int gC = d.C().genus(), gF = d.F().genus();
    r.genus_C = gC;
    r.genus_F = gF;
    CurveDivisor divC = d.vC.divisor(), divF = d.vF.divisor();
    r.d_C = divC.poles_part().degree();
    r.d_F = divF.poles_part().degree();
    if (r.d_C % 2 || r.d_F % 2) throw std::logic_error("analyze: odd pole degree on a catalog field");
    r.inventory = singular_points(d);

    // canonical self-intersection on the singular quotient
    r.k2_singular = (2 * gC - 2 + r.d_C) * (2 * gF - 2 + r.d_F);

    if (auto* u = r.inventory.first_unclassified()) throw UnclassifiedSingularity(u->order_C, u->order_F);

    long long ell = r.inventory.count_elliptic_geometric();
    long long z2sum = 0;
    for (auto& e : r.inventory.entries) z2sum += static_cast<long long>(e.geo_count) * e.type.fundamental_cycle_sq();
    r.k2_resolved = r.k2_singular + z2sum;

    // chi through N on the product: N = nC [C] + nF [F]
    const long long nC = r.d_F / 2 + 1 - gF;
    const long long nF = r.d_C / 2 + 1 - gC;
    const long long chiOS = static_cast<long long>(1 - gC) * (1 - gF);
    const long long N2 = 2 * nC * nF;
    const long long KN = (2 * gF - 2) * nF + (2 * gC - 2) * nC;
    if ((N2 + KN) % 2) throw std::logic_error("analyze: odd Riemann-Roch term");
    const long long chiNdual = chiOS + (N2 + KN) / 2;
    r.chi_xprime = chiOS + chiNdual;
    r.chi = r.chi_xprime - ell;

    // Betti numbers
    const bool F_rational = (gF == 0);
    r.b1_product_route = !F_rational;
    r.b1 = F_rational ? 2 * gC : 2 * (gC + gF);
    r.c2 = 12 * r.chi - r.k2_resolved;
    r.b2 = r.c2 - 2 + 2 * r.b1;

    // cross-check against the exceptional curve count
    long long curves = 0;
    for (auto& e : r.inventory.entries) curves += static_cast<long long>(e.geo_count) * e.type.graph_size();
    if (r.b2 != 2 + 4 * static_cast<long long>(gC) * gF + curves)
        throw std::logic_error("analyze: second Betti number mismatch against the blow-up count");

    // Kunneth factors of N^(-1) and N^(-2)
    const bool zerosC_empty = divC.zeros_part().support.empty();
    const bool zerosF_empty = divF.zeros_part().support.empty();
    auto sqrt_triv = [&](const CurveModel& c, bool zeros_empty) {
        if (!zeros_empty) return detail::Triv::Unknown;           // nonzero degree; triviality not used
        return two_rank(c) == 0 ? detail::Triv::Trivial : detail::Triv::Unknown;
    };
    detail::CurveCoh cohA = detail::curve_coh(gF, gF - 1 - r.d_F / 2, sqrt_triv(d.F(), zerosF_empty));
    detail::CurveCoh cohB = detail::curve_coh(gC, gC - 1 - r.d_C / 2, sqrt_triv(d.C(), zerosC_empty));
    IVal h0N = cohA.h0 * cohB.h0;
    IVal h1N = cohA.h1 * cohB.h0 + cohA.h0 * cohB.h1;
    IVal h2N = cohA.h1 * cohB.h1;

    const bool rational_sings = r.inventory.all_rational();
    const long long alb_dim = r.b1 / 2;

    if (F_rational && rational_sings && h0N.exact() && h0N.lo == 0) {
        r.h01 = IVal(gC + h1N.lo, gC + h1N.hi, "Prop 5.1");
        r.h02 = IVal(h2N.lo, h2N.hi, "Prop 5.1");
    } else {
        // on X' with interval slack for the connecting maps, then the
        // elliptic correction moving from X' to X
        const long long h1OS = gC + gF, h2OS = static_cast<long long>(gC) * gF;
        if (h0N.exact() && h0N.lo == 0) {
            long long r_max = std::min(h1N.hi, h2OS);
            IVal h1Xp(h1OS + std::max<long long>(0, h1N.lo - r_max), h1OS + h1N.hi, "RR/Kunneth on X'");
            IVal h2Xp(h2N.lo, h2OS + h2N.hi, "RR/Kunneth on X'");
            r.h01 = IVal(h1Xp.lo, h1Xp.hi + ell, h1Xp.by);
            r.h02 = IVal(std::max<long long>(0, h2Xp.lo - ell), h2Xp.hi, h2Xp.by);
        } else {
            long long crude = h1OS + h1N.hi + h0N.hi + ell;
            r.h01 = IVal(alb_dim, std::max(alb_dim, crude), "interval (unresolved square root)");
            r.h02 = IVal(0, h2OS + h2N.hi, "interval (unresolved square root)");
        }
    }
    r.h01.intersect(alb_dim, std::numeric_limits<long long>::max());
    // chi = 1 - h01 + h02 ties the two together
    r.h02.intersect(r.chi - 1 + r.h01.lo, r.chi - 1 + r.h01.hi);
    r.h01.intersect(1 - r.chi + r.h02.lo, 1 - r.chi + r.h02.hi);

    // h10
    if (F_rational && rational_sings && r.d_C > 2 * gC - 2) {
        r.h10 = IVal(gC, "Prop 5.4");
    } else {
        long long lo = alb_dim;
        std::string tag = "Igusa bound";
        if (F_rational && rational_sings) {
            // d-closed 1-forms through the second symmetric chain
            detail::CurveCoh cA2 = detail::curve_coh(gF, 2 * gF - 2 - r.d_F,
                                                     zerosF_empty ? detail::Triv::Trivial : detail::Triv::Unknown);
            detail::CurveCoh cB2 = detail::curve_coh(gC, 2 * gC - 2 - r.d_C,
                                                     zerosC_empty ? detail::Triv::Trivial : detail::Triv::Unknown);
            IVal h0N2 = cA2.h0 * cB2.h0;
            IVal h1N2 = cA2.h1 * cB2.h0 + cA2.h0 * cB2.h1;
            if (h0N2.exact() && h0N2.lo == 0 && h1N2.exact()) {
                long long h1Omega = 2 + 2 * static_cast<long long>(gC) * gF;
                long long chain = gC + gF + std::max<long long>(0, h1N2.lo - h1Omega);
                if (chain > lo) {
                    lo = chain;
                    tag = "d-closed 1-form chain";
                }
            }
        }
        // upper bound: sections through the pole box bundle plus h02
        detail::CurveCoh upC = detail::curve_coh(gC, r.d_C, detail::Triv::Unknown, true);
        detail::CurveCoh upF = detail::curve_coh(gF, r.d_F, detail::Triv::Unknown, true);
        long long hi = upC.h0.hi * upF.h0.hi + r.h02.hi;
        r.h10 = IVal(lo, std::max(lo, hi), tag);
    }

    // fibrations
    r.fiber_genus_over_C = gF + r.d_F / 2;
    r.fiber_genus_over_F = gC + r.d_C / 2;
    for (auto& [p, m] : divF.poles_part().support)
        r.cusps_over_C.push_back(CuspPoint{p.str(), m, m / 2, p.residue_degree});
    for (auto& [p, m] : divC.poles_part().support)
        r.cusps_over_F.push_back(CuspPoint{p.str(), m, m / 2, p.residue_degree});

    // predicates
    PredicateBlock& P = r.pred;
    if (h1N.exact())
        P.picard_reduced = (h1N.lo == 0) ? Tri::True : Tri::False;
    else if (h1N.lo > 0)
        P.picard_reduced = Tri::False;
    if (F_rational && rational_sings) {
        P.frolicher_degenerates = Tri::True;
        P.crystalline_torsion_free = Tri::True;
        P.slope_degenerates = (r.chi > 1 - gC) ? Tri::False : Tri::Unknown;
        if (P.slope_degenerates == Tri::False) P.ordinary = Tri::False;
    }
    if (gC <= 1 && gF <= 1) {
        if (r.h02.lo > 0)
            P.has_global_vector_fields = Tri::True;
        else if (r.h02.exact() && r.h02.lo == 0)
            P.has_global_vector_fields = Tri::False;
    } else {
        P.has_global_vector_fields = Tri::Unknown;  // hypotheses of the criterion fail
    }
    if (gC == 0 || gF == 0)
        P.uniruled = Tri::True;
    else if (gC == 1 && gF == 1)
        P.uniruled = Tri::False;  // dominated by an Abelian surface
    P.unirational = (gC == 0 && gF == 0);
    P.bmy_violated = (r.k2_resolved > 9 * r.chi);
    P.miyaoka_bound = Frac(3 * r.c2 - r.k2_resolved, 9);
    P.sb_bound = Frac(2 * r.k2_resolved + r.c2, 2);
    long long dm2 = 0;
    for (auto& e : r.inventory.entries) dm2 += static_cast<long long>(e.geo_count) * e.type.disjoint_minus2();
    P.disjoint_minus2 = dm2;
    P.hodge_index_cap = r.b2 - 1;

    return r;
}

}  // namespace insep

#endif

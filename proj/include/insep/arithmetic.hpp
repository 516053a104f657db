#ifndef INSEP_ARITHMETIC_HPP
#define INSEP_ARITHMETIC_HPP

/// Supersingularity bookkeeping over finite fields: the degree-2 factor of
/// the zeta function of the product assembled from the curve numerators, the
/// Artin-invariant bounds for the Neron-Severi discriminant, and the
/// leading-term identity relating the discriminant, the Brauer order and the
/// torsion.  The Brauer and torsion orders are reported symbolically; only
/// their product is pinned by the identity.

#include <complex>

#include "surface.hpp"

namespace insep {

/// Power sums of the reciprocal roots of P (constant term 1), via Newton.
inline std::vector<long long> power_sums(const ZPoly& p, int upto) {
    // p = prod (1 - a_i t) = sum c_j t^j with c_0 = 1; e_j = (-1)^j c_j
    std::vector<long long> e(p.size());
    for (size_t j = 0; j < p.size(); ++j) e[j] = (j % 2 == 0) ? p[j] : -p[j];
    int r = static_cast<int>(p.size()) - 1;  // number of roots
    std::vector<long long> ps(static_cast<size_t>(upto) + 1, 0);
    for (int m = 1; m <= upto; ++m) {
        long long s = 0;
        for (int i = 1; i < m; ++i) {
            long long term = ((i % 2 == 0) ? -1 : 1) * (i <= r ? e[static_cast<size_t>(i)] : 0) * ps[static_cast<size_t>(m - i)];
            s += term;
        }
        long long em = (m <= r) ? e[static_cast<size_t>(m)] : 0;
        long long lead = ((m % 2 == 0) ? -1 : 1) * static_cast<long long>(m) * em;
        ps[static_cast<size_t>(m)] = s + lead;
    }
    return ps;
}

/// Reconstruct prod (1 - b_i t) of degree n from the power sums of the b_i.
inline ZPoly from_power_sums(const std::vector<long long>& ps, int n) {
    std::vector<long long> e(static_cast<size_t>(n) + 1, 0);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int i = 1; i <= m; ++i) {
            long long term = e[static_cast<size_t>(m - i)] * ps[static_cast<size_t>(i)];
            s += (i % 2 == 1) ? term : -term;
        }
        if (s % m != 0) throw std::logic_error("from_power_sums: non-integral Newton step");
        e[static_cast<size_t>(m)] = s / m;
    }
    ZPoly out(static_cast<size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) out[static_cast<size_t>(j)] = (j % 2 == 0) ? e[static_cast<size_t>(j)] : -e[static_cast<size_t>(j)];
    return out;
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

struct ZetaData {
    long long q = 2;
    ZPoly p1_C, p1_F;
    ZPoly p2;  // of the product surface, degree 2 + 4 g(C) g(F)
};

/// P2 of the product: (1 - q t)^2 times the polynomial whose reciprocal
/// roots are the pairwise products of those of the two curve numerators.
inline ZetaData p2_kunneth(const CurveModel& C, const CurveModel& F, int budget_bits = 24) {
    if (C.F != F.F) throw std::invalid_argument("p2_kunneth: base field mismatch");
    ZetaData z;
    z.q = 1LL << C.F.k;
    z.p1_C = zeta_numerator(C, budget_bits);
    z.p1_F = zeta_numerator(F, budget_bits);
    int nC = static_cast<int>(z.p1_C.size()) - 1, nF = static_cast<int>(z.p1_F.size()) - 1;
    int n = nC * nF;
    ZPoly cross{1};
    if (n > 0) {
        auto psC = power_sums(z.p1_C, n), psF = power_sums(z.p1_F, n);
        std::vector<long long> ps(static_cast<size_t>(n) + 1, 0);
        for (int m = 1; m <= n; ++m) ps[static_cast<size_t>(m)] = psC[static_cast<size_t>(m)] * psF[static_cast<size_t>(m)];
        cross = from_power_sums(ps, n);
    }
    ZPoly hyperplane{1, -z.q};
    z.p2 = zpoly_mul(zpoly_mul(hyperplane, hyperplane), cross);
    return z;
}

namespace zdetail {

using I128 = __int128;

inline ZPoly zpoly_derivative(const ZPoly& p) {
    if (p.size() <= 1) return ZPoly{0};
    ZPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = static_cast<long long>(i) * p[i];
    return r;
}

inline long long content(const std::vector<I128>& p) {
    I128 g = 0;
    for (I128 v : p) {
        if (v < 0) v = -v;
        // gcd
        I128 a = g, b = v;
        while (b) {
            I128 t = a % b;
            a = b;
            b = t;
        }
        g = a;
    }
    return static_cast<long long>(g == 0 ? 1 : g);
}

inline void divide_content(std::vector<I128>& p) {
    long long c = content(p);
    if (c > 1)
        for (auto& v : p) v /= c;
}

inline void trim(std::vector<I128>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// primitive pseudo-remainder sequence gcd over the integers
inline ZPoly zpoly_gcd(ZPoly a0, ZPoly b0) {
    std::vector<I128> a(a0.begin(), a0.end()), b(b0.begin(), b0.end());
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        divide_content(a);
        divide_content(b);
        // pseudo-remainder of a by b
        std::vector<I128> r = a;
        I128 lb = b.back();
        while (r.size() >= b.size()) {
            I128 lr = r.back();
            size_t shift = r.size() - b.size();
            for (auto& v : r) v *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
            trim(r);
            divide_content(r);
            if (r.size() >= b.size() && r.back() == 0) trim(r);
        }
        a = b;
        b = r;
    }
    divide_content(a);
    ZPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<long long>(a[i]);
    if (!out.empty() && out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

/// exact division (throws if not divisible)
inline ZPoly zpoly_div_exact(const ZPoly& a0, const ZPoly& b0) {
    std::vector<I128> a(a0.begin(), a0.end()), b(b0.begin(), b0.end());
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("zpoly_div_exact: zero divisor");
    std::vector<I128> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back() % b.back() != 0) throw std::logic_error("zpoly_div_exact: not divisible");
        I128 c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("zpoly_div_exact: nonzero remainder");
    ZPoly out(q.size());
    for (size_t i = 0; i < q.size(); ++i) out[i] = static_cast<long long>(q[i]);
    return out;
}

inline ZPoly squarefree_part(const ZPoly& p) {
    ZPoly d = zpoly_derivative(p);
    bool zero = true;
    for (auto v : d) zero = zero && v == 0;
    if (zero) return p;
    ZPoly g = zpoly_gcd(p, d);
    if (g.size() <= 1) return p;
    return zpoly_div_exact(p, g);
}

}  // namespace zdetail

/// Largest |root| deviation of the reciprocal roots of p from the target
/// absolute value.  Repeated roots are deflated exactly before the
/// Durand-Kerner iteration so the check is sharp.
inline double reciprocal_root_abs_deviation(const ZPoly& p0, double target) {
    ZPoly p = zdetail::squarefree_part(p0);
    using C = std::complex<double>;
    int n = static_cast<int>(p.size()) - 1;
    while (n > 0 && p[static_cast<size_t>(n)] == 0) --n;
    if (n <= 0) return 0.0;
    std::vector<C> a(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = C(static_cast<double>(p[static_cast<size_t>(i)]), 0.0);
    auto eval = [&](C x) {
        C r(0, 0);
        for (int i = n; i >= 0; --i) r = r * x + a[static_cast<size_t>(i)];
        return r;
    };
    std::vector<C> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = std::polar(1.0 / target, 0.7 + 2.3 * i);
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            C num = eval(roots[static_cast<size_t>(i)]);
            C den = a[static_cast<size_t>(n)];
            for (int j = 0; j < n; ++j)
                if (j != i) den *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            C delta = num / den;
            roots[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    // roots of p(t) are the inverses of the reciprocal roots
    double worst = 0;
    for (auto& r : roots) worst = std::max(worst, std::abs(1.0 / std::abs(r) - target));
    return worst;
}

struct ArtinData {
    long long alpha = 0;        // chi - 1 + b1/2
    long long sigma_lo = 0;     // p_g when torsion-freeness is certified
    long long sigma_hi = 0;     // b2 / 2
    bool lower_bound_applied = false;
    long long at_exponent = 0;  // alpha - g(C) g(F)
    long long q = 2;
    long long rhs_power = 0;    // q^at_exponent, or 0 when it exceeds 2^62
    bool rhs_power_fits = true;
    bool even_intersection_form = true;  // false when a (-3)-curve appears
};

/// Shioda-supersingularity bookkeeping: disc NS = -2^(2 sigma) with
/// p_g <= sigma <= b_2/2, the lower bound requiring torsion-free
/// crystalline cohomology.
inline ArtinData artin_invariant_bounds(const InvariantReport& r) {
    ArtinData a;
    if (r.b1 % 2 || r.b2 % 2) throw std::logic_error("artin_invariant_bounds: odd Betti number");
    a.alpha = r.chi - 1 + r.b1 / 2;
    a.sigma_hi = r.b2 / 2;
    if (r.pred.crystalline_torsion_free == Tri::True && r.h02.exact()) {
        a.sigma_lo = r.h02.value();
        a.lower_bound_applied = true;
    }
    if (a.sigma_lo > a.sigma_hi) throw std::logic_error("artin_invariant_bounds: empty range");
    a.even_intersection_form = (r.inventory.count_elliptic_geometric() == 0);
    return a;
}

/// The leading-term identity: disc NS * |Br| = q^(alpha - g(C) g(F)) * |NS_tors|.
inline ArtinData artin_tate_product(const SurfaceData& d, const InvariantReport& r) {
    ArtinData a = artin_invariant_bounds(r);
    a.q = 1LL << d.base.k;
    a.at_exponent = a.alpha - static_cast<long long>(r.genus_C) * r.genus_F;
    if (a.at_exponent < 0) throw std::logic_error("artin_tate_product: negative exponent");
    a.rhs_power_fits = a.at_exponent * d.base.k <= 62;
    a.rhs_power = 1;
    if (a.rhs_power_fits)
        for (long long i = 0; i < a.at_exponent; ++i) a.rhs_power *= a.q;
    else
        a.rhs_power = 0;
    return a;
}

}  // namespace insep

#endif

#ifndef INSEP_POLY_HPP
#define INSEP_POLY_HPP

/// Univariate polynomials over F_{2^k}: Euclidean arithmetic, formal
/// derivatives, squarefree splitting, distinct-degree and equal-degree
/// factorization, root finding, and subfield embeddings.
///
/// Factorization is deterministic: equal-degree splitting walks trace maps
/// of a fixed element sequence instead of drawing random polynomials, so
/// factor lists and root orderings are stable between runs.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fq.hpp"

namespace insep {

class FqPoly {
  public:
    Fq F;
    std::vector<uint64_t> c;  // c[i] = coefficient of x^i, no trailing zeros

    FqPoly() : F(Fq::make(1)) {}
    explicit FqPoly(Fq f) : F(f) {}
    FqPoly(Fq f, std::vector<uint64_t> coeffs) : F(f), c(std::move(coeffs)) { trim(); }

    static FqPoly zero(Fq f) { return FqPoly(f); }
    static FqPoly constant(Fq f, uint64_t a) { return FqPoly(f, {a}); }
    static FqPoly x(Fq f) { return FqPoly(f, {0, 1}); }
    /// x - a  (equals x + a in characteristic 2)
    static FqPoly linear_root(Fq f, uint64_t a) { return FqPoly(f, {a, 1}); }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }
    uint64_t lead() const { return c.empty() ? 0 : c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
        check(a, b);
        FqPoly r(a.F);
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) ^ b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + b; }

    friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.F);
        FqPoly r(a.F);
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (!a.c[i]) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j]) r.c[i + j] ^= a.F.mul(a.c[i], b.c[j]);
        }
        r.trim();
        return r;
    }

    FqPoly scaled(uint64_t s) const {
        FqPoly r(F);
        r.c.resize(c.size());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = F.mul(c[i], s);
        r.trim();
        return r;
    }

    static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
        check(a, b);
        if (b.is_zero()) throw std::domain_error("FqPoly: division by zero polynomial");
        FqPoly q(a.F), r = a;
        if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, 0);
        const uint64_t li = a.F.inv(b.lead());
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int shift = r.deg() - b.deg();
            uint64_t f = a.F.mul(r.lead(), li);
            q.c[shift] ^= f;
            for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] ^= a.F.mul(b.c[i], f);
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.F == b.F && a.c == b.c; }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

    FqPoly monic() const {
        if (is_zero()) return *this;
        return scaled(F.inv(lead()));
    }

    uint64_t eval(uint64_t x0) const {
        uint64_t r = 0;
        for (int i = deg(); i >= 0; --i) r = F.add(F.mul(r, x0), c[i]);
        return r;
    }

    /// Formal derivative.  In characteristic 2 only odd-degree terms survive.
    FqPoly derivative() const {
        FqPoly r(F);
        if (deg() < 1) return r;
        r.c.assign(c.size() - 1, 0);
        for (size_t i = 1; i < c.size(); i += 2) r.c[i - 1] = c[i];
        r.trim();
        return r;
    }

    bool is_square() const {
        for (size_t i = 1; i < c.size(); i += 2)
            if (c[i]) return false;
        return true;
    }

    /// For f with f' = 0 (all exponents even), the unique h with h^2 = f.
    FqPoly poly_sqrt() const {
        if (!is_square()) throw std::domain_error("FqPoly: not a square");
        FqPoly r(F);
        r.c.assign(c.size() / 2 + 1, 0);
        for (size_t i = 0; i < c.size(); i += 2) r.c[i / 2] = F.sqrt(c[i]);
        r.trim();
        return r;
    }

    /// Canonical ordering: by degree, then coefficient bits from the top.
    static bool less(const FqPoly& a, const FqPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = deg(); i >= 0; --i) {
            if (!c[i]) continue;
            if (!s.empty()) s += "+";
            std::string coeff_s = F.elem_str(c[i]);
            bool unit = (c[i] == 1);
            if (i == 0) {
                s += coeff_s;
            } else {
                if (!unit) s += "(" + coeff_s + ")*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    static void check(const FqPoly& a, const FqPoly& b) {
        if (a.F != b.F) throw std::invalid_argument("FqPoly: field mismatch");
    }
};

inline FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

inline FqPoly powmod(FqPoly base, uint64_t e, const FqPoly& m) {
    FqPoly r = FqPoly::constant(base.F, 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

/// x^(2^e) mod m via e squarings.
inline FqPoly frob_power_x(const FqPoly& m, uint64_t e) {
    FqPoly r = FqPoly::x(m.F) % m;
    for (uint64_t i = 0; i < e; ++i) r = (r * r) % m;
    return r;
}

namespace detail {

/// Split a monic squarefree product of linear factors into roots.
/// Uses the additive trace map Tr(c*x) over F_{2^k}; the maps for c running
/// through the field separate any two distinct roots.
inline void split_linear(const FqPoly& g, std::vector<uint64_t>& roots) {
    if (g.deg() <= 0) return;
    if (g.deg() == 1) {
        // monic x + a -> root a
        roots.push_back(g.coeff(0));
        return;
    }
    const Fq F = g.F;
    for (uint64_t cv = 1; cv < F.order(); ++cv) {
        // H = sum_{i<k} (c*x)^(2^i) mod g
        FqPoly cx = FqPoly(F, {0, cv}) % g;
        FqPoly h = cx, term = cx;
        for (int i = 1; i < F.k; ++i) {
            term = (term * term) % g;
            h = h + term;
        }
        FqPoly d = gcd(g, h);
        if (d.deg() > 0 && d.deg() < g.deg()) {
            split_linear(d, roots);
            split_linear(g / d, roots);
            return;
        }
    }
    throw std::logic_error("split_linear: trace maps failed to separate roots");
}

}  // namespace detail

/// All roots of f in its own coefficient field, with multiplicities,
/// sorted by bit value.
inline std::vector<std::pair<uint64_t, int>> roots_in_field(const FqPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots_in_field: zero polynomial");
    std::vector<std::pair<uint64_t, int>> out;
    FqPoly g = f.monic();
    // strip multiplicities by repeated gcd with the linear-split part
    FqPoly xq_minus_x = frob_power_x(g, static_cast<uint64_t>(g.F.k)) + (FqPoly::x(g.F) % g);
    FqPoly lin = gcd(g, xq_minus_x);
    std::vector<uint64_t> roots;
    detail::split_linear(lin, roots);
    std::sort(roots.begin(), roots.end());
    for (uint64_t r : roots) {
        FqPoly d = FqPoly::linear_root(g.F, r);
        int m = 0;
        FqPoly t = g;
        while (true) {
            auto [q, rem] = FqPoly::divmod(t, d);
            if (!rem.is_zero()) break;
            ++m;
            t = q;
        }
        out.emplace_back(r, m);
    }
    return out;
}

/// Irreducible factorization (monic factors, multiplicities), canonical order.
inline std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const Fq F = f.F;
    std::vector<std::pair<FqPoly, int>> out;

    // multiplicity-aware reduction to the squarefree case
    struct Item {
        FqPoly p;
        int mult;
    };
    std::vector<Item> work{{f.monic(), 1}};
    std::vector<Item> squarefree;
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.p.deg() <= 0) continue;
        FqPoly d = it.p.derivative();
        if (d.is_zero()) {
            // perfect square in characteristic 2
            work.push_back({it.p.poly_sqrt(), it.mult * 2});
            continue;
        }
        FqPoly g = gcd(it.p, d);
        if (g.deg() > 0) {
            work.push_back({g, it.mult});
            work.push_back({it.p / g, it.mult});
            continue;
        }
        squarefree.push_back(it);
    }

    std::map<std::vector<uint64_t>, int> acc;  // coeffs -> multiplicity
    std::vector<FqPoly> keyorder;
    auto record = [&](const FqPoly& p, int m) {
        auto [iter, fresh] = acc.emplace(p.c, 0);
        iter->second += m;
        if (fresh) keyorder.push_back(p);
    };

    // equal-degree splitting of a product of degree-d irreducibles
    auto edf = [&](const FqPoly& prod, int d, int mult) {
        std::vector<FqPoly> stack{prod.monic()};
        while (!stack.empty()) {
            FqPoly h = stack.back();
            stack.pop_back();
            if (h.deg() == d) {
                record(h, mult);
                continue;
            }
            bool split = false;
            // deterministic candidates: a*x^j
            for (int j = 1; j <= h.deg() && !split; ++j) {
                for (uint64_t a = 1; a < F.order() && !split; ++a) {
                    std::vector<uint64_t> cc(static_cast<size_t>(j) + 1, 0);
                    cc[static_cast<size_t>(j)] = a;
                    FqPoly cand = FqPoly(F, cc) % h;
                    FqPoly tr = cand, term = cand;
                    const int bits = F.k * d;
                    for (int i = 1; i < bits; ++i) {
                        term = (term * term) % h;
                        tr = tr + term;
                    }
                    FqPoly gg = gcd(h, tr);
                    if (gg.deg() > 0 && gg.deg() < h.deg()) {
                        stack.push_back(gg);
                        stack.push_back(h / gg);
                        split = true;
                    }
                }
            }
            if (!split) throw std::logic_error("factor: equal-degree split failed");
        }
    };

    for (auto& it : squarefree) {
        // distinct-degree stage
        FqPoly rest = it.p;
        FqPoly h = FqPoly::x(F) % rest;  // will hold x^(q^d) mod rest
        int d = 0;
        while (rest.deg() > 0) {
            ++d;
            if (2 * d > rest.deg()) {
                record(rest, it.mult);  // what is left is irreducible
                break;
            }
            for (int s = 0; s < F.k; ++s) h = (h * h) % rest;
            FqPoly g = gcd(rest, h + (FqPoly::x(F) % rest));
            if (g.deg() > 0) {
                edf(g, d, it.mult);
                rest = rest / g;
                if (rest.deg() > 0) h = h % rest;
            }
        }
    }

    std::sort(keyorder.begin(), keyorder.end(), FqPoly::less);
    for (auto& p : keyorder) out.emplace_back(p, acc[p.c]);
    return out;
}

/// Embedding of F_{2^k} into F_{2^K} for k | K, sending the generator of the
/// small field to the smallest root (by bit value) of its modulus in the
/// large field.
struct FqEmbedding {
    Fq from, to;
    std::vector<uint64_t> gen_pows;  // powers of the chosen root

    uint64_t map(uint64_t a) const {
        uint64_t r = 0;
        for (int i = 0; i < from.k; ++i)
            if (a >> i & 1) r ^= gen_pows[static_cast<size_t>(i)];
        return r;
    }

    FqPoly map_poly(const FqPoly& p) const {
        FqPoly r(to);
        r.c.resize(p.c.size());
        for (size_t i = 0; i < p.c.size(); ++i) r.c[i] = map(p.c[i]);
        r.trim();
        return r;
    }
};

inline FqEmbedding make_embedding(const Fq& from, const Fq& to) {
    if (to.k % from.k != 0) throw std::invalid_argument("make_embedding: not a subfield");
    FqEmbedding E{from, to, {}};
    if (from == to) {
        E.gen_pows.resize(static_cast<size_t>(from.k));
        for (int i = 0; i < from.k; ++i) E.gen_pows[static_cast<size_t>(i)] = uint64_t{1} << i;
        return E;
    }
    // the modulus of the small field has F_2 coefficients: lift and find roots
    FqPoly m(to);
    m.c.resize(static_cast<size_t>(from.k) + 1);
    for (int i = 0; i <= from.k; ++i) m.c[static_cast<size_t>(i)] = (from.mod >> i) & 1;
    auto roots = roots_in_field(m);
    if (roots.empty()) throw std::logic_error("make_embedding: modulus has no root in target");
    uint64_t r = roots.front().first;  // smallest by bit value
    E.gen_pows.resize(static_cast<size_t>(from.k));
    uint64_t p = 1;
    for (int i = 0; i < from.k; ++i) {
        E.gen_pows[static_cast<size_t>(i)] = p;
        p = to.mul(p, r);
    }
    return E;
}

/// Geometric roots of p over the splitting field of each irreducible factor.
struct GeomRoot {
    FqPoly minpoly;    // irreducible over the base field
    int root_index;    // position among the factor's roots, bit-value order
    int ext_degree;    // residue degree = deg(minpoly)
    uint64_t root;     // the root, as an element of F_{2^(k*ext_degree)}
    Fq ext_field;
    int mult;
};

inline std::vector<GeomRoot> roots_in_splitting_field(const FqPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots_in_splitting_field: zero polynomial");
    std::vector<GeomRoot> out;
    for (auto& [fac, mult] : factor(p)) {
        if (fac.deg() == 0) continue;
        int d = fac.deg();
        Fq ext = Fq::make(p.F.k * d);
        FqEmbedding emb = make_embedding(p.F, ext);
        FqPoly lifted = emb.map_poly(fac);
        auto roots = roots_in_field(lifted);
        int idx = 0;
        for (auto& [rv, rm] : roots) {
            (void)rm;
            out.push_back(GeomRoot{fac, idx++, d, rv, ext, mult});
        }
    }
    return out;
}

}  // namespace insep

#endif

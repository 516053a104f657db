#ifndef INSEP_LOCALRES_HPP
#define INSEP_LOCALRES_HPP

/// Local analysis at isolated singularities of fields f(x) d/dx + g(y) d/dy
/// in characteristic 2: iterated blow-up on charts, the dual graph of the
/// quotient singularity, fundamental cycles, and the classification table
/// keyed on the absolute orders of f and g.
///
/// The engine tracks exceptional curves upstairs (self-intersections drop by
/// one per blow-up at a point of the curve) and takes quotient
/// self-intersections by the tangency rule: a curve that is integral for the
/// foliation maps to a curve of self-intersection E^2/2, a transverse one to
/// 2*E^2.  Singular points in field extensions are handled by embedding the
/// whole local datum into the splitting field and continuing there.

#include <numeric>
#include <set>

#include "poly.hpp"

namespace insep {

struct PrecisionExhausted : std::runtime_error {
    PrecisionExhausted() : std::runtime_error("localres: truncation precision exhausted") {}
};

/// Dense bivariate polynomial truncated at a total degree bound.
class BiPoly {
  public:
    Fq F;
    int prec;                     // entries with i+j > prec are dropped
    std::vector<uint64_t> c;      // c[i*(prec+1)+j] = coefficient of x^i y^j
    bool truncated = false;       // a nonzero coefficient was dropped

    BiPoly(Fq f, int precision) : F(f), prec(precision), c(static_cast<size_t>(precision + 1) * (precision + 1), 0) {}

    uint64_t get(int i, int j) const {
        if (i < 0 || j < 0 || i > prec || j > prec || i + j > prec) return 0;
        return c[static_cast<size_t>(i) * (prec + 1) + j];
    }
    void set(int i, int j, uint64_t v) {
        if (i < 0 || j < 0) throw std::logic_error("BiPoly: negative exponent");
        if (i > prec || j > prec || i + j > prec) {
            if (v) truncated = true;
            return;
        }
        c[static_cast<size_t>(i) * (prec + 1) + j] = v;
    }
    void adde(int i, int j, uint64_t v) {
        if (!v) return;
        if (i > prec || j > prec || i + j > prec) {
            truncated = true;
            return;
        }
        c[static_cast<size_t>(i) * (prec + 1) + j] ^= v;
    }

    bool is_zero() const {
        for (uint64_t v : c)
            if (v) return false;
        return true;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.F, a.prec);
        r.truncated = a.truncated || b.truncated;
        for (int i = 0; i <= a.prec; ++i)
            for (int j = 0; i + j <= a.prec; ++j) r.set(i, j, a.get(i, j) ^ b.get(i, j));
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.F, a.prec);
        r.truncated = a.truncated || b.truncated;
        for (int i = 0; i <= a.prec; ++i)
            for (int j = 0; i + j <= a.prec; ++j) {
                uint64_t av = a.get(i, j);
                if (!av) continue;
                for (int k2 = 0; k2 <= b.prec; ++k2)
                    for (int l = 0; k2 + l <= b.prec; ++l) {
                        uint64_t bv = b.get(k2, l);
                        if (bv) r.adde(i + k2, j + l, a.F.mul(av, bv));
                    }
            }
        return r;
    }

    /// substitution x -> x*y: monomial (i,j) -> (i, i+j)
    BiPoly subst_x_xy() const {
        BiPoly r(F, prec);
        r.truncated = truncated;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) {
                uint64_t v = get(i, j);
                if (v) r.adde(i, i + j, v);
            }
        return r;
    }
    /// substitution y -> y*x: monomial (i,j) -> (i+j, j)
    BiPoly subst_y_yx() const {
        BiPoly r(F, prec);
        r.truncated = truncated;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) {
                uint64_t v = get(i, j);
                if (v) r.adde(i + j, j, v);
            }
        return r;
    }

    int ord_x() const {  // smallest i with a nonzero (i,j); prec+1 when zero
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j)
                if (get(i, j)) return i;
        return prec + 1;
    }
    int ord_y() const {
        int best = prec + 1;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec && j < best; ++j)
                if (get(i, j)) best = j;
        return best;
    }

    BiPoly shift_down(int dx, int dy) const {  // divide by x^dx y^dy
        BiPoly r(F, prec);
        r.truncated = truncated;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) {
                uint64_t v = get(i, j);
                if (!v) continue;
                if (i < dx || j < dy) throw std::logic_error("BiPoly: not divisible by monomial");
                r.set(i - dx, j - dy, v);
            }
        return r;
    }

    /// recenter x -> x + a (binomials mod 2 via the subset-of-bits rule)
    BiPoly translate_x(uint64_t a) const {
        BiPoly r(F, prec);
        r.truncated = truncated;
        std::vector<uint64_t> apow(static_cast<size_t>(prec) + 1);
        apow[0] = 1;
        for (int i = 1; i <= prec; ++i) apow[static_cast<size_t>(i)] = F.mul(apow[static_cast<size_t>(i - 1)], a);
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) {
                uint64_t v = get(i, j);
                if (!v) continue;
                for (int i2 = 0; i2 <= i; ++i2) {
                    // C(i, i2) mod 2 = 1 iff the bits of i2 are a subset of those of i
                    if ((i & i2) != i2) continue;
                    r.adde(i2, j, F.mul(v, apow[static_cast<size_t>(i - i2)]));
                }
            }
        return r;
    }

    /// restriction to y = 0, as a univariate polynomial in x
    FqPoly restrict_y0() const {
        std::vector<uint64_t> cf(static_cast<size_t>(prec) + 1, 0);
        for (int i = 0; i <= prec; ++i) cf[static_cast<size_t>(i)] = get(i, 0);
        return FqPoly(F, cf);
    }

    BiPoly embed(const FqEmbedding& e) const {
        BiPoly r(e.to, prec);
        r.truncated = truncated;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) {
                uint64_t v = get(i, j);
                if (v) r.set(i, j, e.map(v));
            }
        return r;
    }

    BiPoly swap_xy() const {
        BiPoly r(F, prec);
        r.truncated = truncated;
        for (int i = 0; i <= prec; ++i)
            for (int j = 0; i + j <= prec; ++j) r.set(j, i, get(i, j));
        return r;
    }

    static BiPoly monomial(Fq f, int prec, int i, int j, uint64_t v = 1) {
        BiPoly r(f, prec);
        r.set(i, j, v);
        return r;
    }
};

/// A local vector field A(x,y) d/dx + B(x,y) d/dy around the origin.
struct LocalVF {
    BiPoly A, B;

    /// canonical germ with zeros: x^a d/dx + y^b d/dy
    static LocalVF canonical_zeros(Fq F, int a, int b, int prec) {
        check_realizable(a, b);
        return LocalVF{BiPoly::monomial(F, prec, a, 0), BiPoly::monomial(F, prec, 0, b)};
    }

    /// canonical germ with poles of orders (a, b), after clearing the
    /// divisorial factor x^-a y^-b: y^b d/dx + x^a d/dy
    static LocalVF canonical_poles(Fq F, int a, int b, int prec) {
        if (a % 2 || b % 2) throw std::invalid_argument("LocalVF: pole orders must be even for a 2-closed germ");
        return LocalVF{BiPoly::monomial(F, prec, 0, b), BiPoly::monomial(F, prec, a, 0)};
    }

    /// separated germ f(x) d/dx + g(y) d/dy from univariate jets
    static LocalVF separated(const FqPoly& f, const FqPoly& g, int prec) {
        BiPoly A(f.F, prec), B(f.F, prec);
        for (int i = 0; i <= f.deg(); ++i) A.set(i, 0, f.coeff(i));
        for (int j = 0; j <= g.deg(); ++j) B.set(0, j, g.coeff(j));
        return LocalVF{A, B};
    }

    static void check_realizable(int a, int b) {
        bool ok = (a == 1 && b == 1) || (a % 2 == 0 && b % 2 == 0);
        if (!ok)
            throw std::invalid_argument(
                "LocalVF: no 2-closed germ with these orders (need both even, or the multiplicative pair 1,1)");
    }
};

/// Classification table keyed on the absolute orders (a, b).
struct SingularityType {
    enum Kind { A1, D4, D8, Elliptic19_0, Unclassified } kind = Unclassified;
    int a = 0, b = 0;  // retained for the Unclassified case

    bool rational() const { return kind == A1 || kind == D4 || kind == D8; }
    bool elliptic() const { return kind == Elliptic19_0; }

    std::string str() const {
        switch (kind) {
            case A1: return "A1";
            case D4: return "D4";
            case D8: return "D8";
            case Elliptic19_0: return "(19)_0";
            default: return "unclassified(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    }
    /// Number of vertices of the catalog dual graph.
    int graph_size() const {
        switch (kind) {
            case A1: return 1;
            case D4: return 4;
            case D8: return 8;
            case Elliptic19_0: return 6;
            default: return 0;
        }
    }
    /// Largest set of pairwise disjoint (-2)-curves in the catalog graph.
    int disjoint_minus2() const {
        switch (kind) {
            case A1: return 1;
            case D4: return 3;
            case D8: return 5;
            case Elliptic19_0: return 5;  // the five tips; the center is a (-3)
            default: return 0;
        }
    }
    /// Self-intersection of the fundamental cycle (0 for rational types).
    int fundamental_cycle_sq() const { return kind == Elliptic19_0 ? -2 : 0; }
};

inline SingularityType classify_pair(int a, int b) {
    if (a == 1 && b == 1) return {SingularityType::A1, a, b};
    if (a == 2 && b == 2) return {SingularityType::D4, a, b};
    if ((a == 4 && b == 2) || (a == 2 && b == 4)) return {SingularityType::D8, a, b};
    if (a == 4 && b == 4) return {SingularityType::Elliptic19_0, a, b};
    return {SingularityType::Unclassified, a, b};
}

/// Dual graph of a resolution: downstairs self-intersections and adjacency.
struct DualGraph {
    std::vector<int> selfint;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(selfint.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(selfint.size());
        for (auto& [a, b] : edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }

    /// intersection matrix: selfint on the diagonal, 1 for adjacent pairs
    std::vector<std::vector<long long>> matrix() const {
        size_t n = selfint.size();
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (size_t i = 0; i < n; ++i) m[i][i] = selfint[i];
        for (auto& [a, b] : edges) {
            m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
            m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
        }
        return m;
    }

    bool negative_definite() const {
        // Sylvester: leading principal minors of -M all positive.
        auto m = matrix();
        size_t n = selfint.size();
        for (auto& row : m)
            for (auto& v : row) v = -v;
        // fraction-free elimination, checking each leading minor sign
        long long prev = 1;
        for (size_t k2 = 0; k2 < n; ++k2) {
            if (m[k2][k2] <= 0) {
                // pivot must stay positive for definiteness (after Bareiss scaling)
                return false;
            }
            for (size_t i = k2 + 1; i < n; ++i)
                for (size_t j = k2 + 1; j < n; ++j) {
                    m[i][j] = (m[i][j] * m[k2][k2] - m[i][k2] * m[k2][j]) / prev;
                }
            prev = m[k2][k2];
        }
        return true;
    }

    bool connected() const {
        if (selfint.empty()) return true;
        auto adj = adjacency();
        std::vector<bool> seen(selfint.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        size_t cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == selfint.size();
    }

    /// canonical degree K.E_i = -2 - E_i^2
    int canonical_degree(int i) const { return -2 - selfint[static_cast<size_t>(i)]; }

    /// Shape label for trees of (-2)-curves plus the (19)_0 star.
    std::string shape() const {
        const int n = size();
        if (n == 0) return "empty";
        if (!connected()) return "disconnected";
        auto adj = adjacency();
        bool all_minus2 = true;
        int minus3 = 0, minus3_idx = -1;
        for (int i = 0; i < n; ++i) {
            if (selfint[static_cast<size_t>(i)] == -3) {
                ++minus3;
                minus3_idx = i;
            } else if (selfint[static_cast<size_t>(i)] != -2) {
                all_minus2 = false;
            }
        }
        if (static_cast<int>(edges.size()) != n - 1) return "not-a-tree";
        if (minus3 == 1 && all_minus2) {
            // star test: the (-3) center adjacent to all others, all others leaves
            if (static_cast<int>(adj[static_cast<size_t>(minus3_idx)].size()) == n - 1) {
                bool leaves = true;
                for (int i = 0; i < n; ++i)
                    if (i != minus3_idx && adj[static_cast<size_t>(i)].size() != 1) leaves = false;
                if (leaves) return "star(-3;" + std::to_string(n - 1) + ")";
            }
            return "tree-with-minus3";
        }
        if (!all_minus2 || minus3) return "tree";
        // ADE recognition on a tree of (-2)-curves
        std::vector<int> deg(static_cast<size_t>(n));
        int branch = -1, nbranch = 0;
        for (int i = 0; i < n; ++i) {
            deg[static_cast<size_t>(i)] = static_cast<int>(adj[static_cast<size_t>(i)].size());
            if (deg[static_cast<size_t>(i)] > 3) return "tree";
            if (deg[static_cast<size_t>(i)] == 3) {
                branch = i;
                ++nbranch;
            }
        }
        if (nbranch == 0) return "A" + std::to_string(n);
        if (nbranch > 1) return "tree";
        // arm lengths from the unique branch vertex
        std::vector<int> arms;
        for (int s : adj[static_cast<size_t>(branch)]) {
            int len = 1, prev = branch, cur = s;
            while (adj[static_cast<size_t>(cur)].size() == 2) {
                int nxt = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                                   : adj[static_cast<size_t>(cur)][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
        return "tree";
    }
};

/// Fundamental cycle data computed by the increment algorithm.
struct FundamentalCycle {
    std::vector<int> mult;  // coefficient of each vertex in Z
    long long z2 = 0;       // Z.Z
    long long pa = 0;       // arithmetic genus 1 + (Z^2 + K.Z)/2
};

inline FundamentalCycle fundamental_cycle(const DualGraph& g) {
    if (!g.negative_definite()) throw std::domain_error("fundamental_cycle: graph not negative definite");
    const int n = g.size();
    auto m = g.matrix();
    std::vector<int> z(static_cast<size_t>(n), 1);
    auto dot_row = [&](int i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * z[static_cast<size_t>(j)];
        return s;
    };
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 10000) throw std::logic_error("fundamental_cycle: no convergence");
        changed = false;
        for (int i = 0; i < n; ++i)
            if (dot_row(i) > 0) {
                ++z[static_cast<size_t>(i)];
                changed = true;
            }
    }
    FundamentalCycle fc;
    fc.mult = z;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            fc.z2 += static_cast<long long>(z[static_cast<size_t>(i)]) * z[static_cast<size_t>(j)] *
                     m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    long long kz = 0;
    for (int i = 0; i < n; ++i) kz += static_cast<long long>(z[static_cast<size_t>(i)]) * g.canonical_degree(i);
    fc.pa = 1 + (fc.z2 + kz) / 2;
    return fc;
}

/// One blow-up of an isolated singularity at the origin: the two charts with
/// the induced reduced fields and the extracted exceptional order.
struct BlowupChart {
    BiPoly A, B;       // reduced induced field in this chart
    int exc_mult;      // multiplicity of the exceptional curve in the divisor
    int strict_mult;   // multiplicity along the strict transform of the other axis
};

struct BlowupResult {
    BlowupChart chart_xy;  // coordinates (x, y) with old_x = x * y; exceptional = {y = 0}
    BlowupChart chart_yx;  // coordinates (x, y) with old_y = y * x; exceptional = {x = 0}
};

inline BlowupResult blowup_once(const LocalVF& v) {
    if (v.A.get(0, 0) != 0 || v.B.get(0, 0) != 0)
        throw std::domain_error("blowup_once: not an isolated singularity at the origin");
    const Fq F = v.A.F;
    const int prec = v.A.prec;

    auto reduce = [&](BiPoly S, BiPoly W) {
        int dx = std::min(S.ord_x(), W.ord_x());
        int dy = std::min(S.ord_y(), W.ord_y());
        if (dx > prec || dy > prec) throw PrecisionExhausted();
        return BlowupChart{S.shift_down(dx, dy), W.shift_down(dx, dy), dy, dx};
    };

    // chart with old_x = x*y, exceptional {y=0}:
    //   d(new_x) = (A(xy, y) - new_x * B(xy, y)) / y,  d(y) = B(xy, y)
    BiPoly Axy = v.A.subst_x_xy(), Bxy = v.B.subst_x_xy();
    BiPoly S = (Axy + BiPoly::monomial(F, prec, 1, 0) * Bxy).shift_down(0, 1);
    BlowupChart c1 = reduce(S, Bxy);

    // chart with old_y = y*x, exceptional {x=0}
    BiPoly Ayx = v.A.subst_y_yx(), Byx = v.B.subst_y_yx();
    BiPoly T = (Byx + BiPoly::monomial(F, prec, 0, 1) * Ayx).shift_down(1, 0);
    BlowupChart c2{BiPoly(F, prec), BiPoly(F, prec), 0, 0};
    {
        int dx = std::min(Ayx.ord_x(), T.ord_x());
        int dy = std::min(Ayx.ord_y(), T.ord_y());
        if (dx > prec || dy > prec) throw PrecisionExhausted();
        c2 = BlowupChart{Ayx.shift_down(dx, dy), T.shift_down(dx, dy), dx, dy};
        // here A is the d/dx coefficient and the exceptional is {x=0}
    }
    if (c1.A.truncated || c1.B.truncated || c2.A.truncated || c2.B.truncated) throw PrecisionExhausted();
    return BlowupResult{c1, c2};
}

/// Singular points of the induced field on the exceptional line: the finite
/// positions (roots in the splitting field, with their residue degrees over
/// the current coefficient field) plus the point at infinity when the second
/// chart's origin is singular.
struct ExceptionalSings {
    std::vector<GeomRoot> finite;  // common zeros of both restrictions
    bool at_infinity = false;
};

inline ExceptionalSings singular_points_on_exceptional(const BlowupResult& r) {
    ExceptionalSings out;
    FqPoly a = r.chart_xy.A.restrict_y0();
    FqPoly b = r.chart_xy.B.restrict_y0();
    if (a.is_zero() && b.is_zero()) throw PrecisionExhausted();
    FqPoly g = b.is_zero() ? a : (a.is_zero() ? b : gcd(a, b));
    if (g.deg() >= 1) out.finite = roots_in_splitting_field(g);
    out.at_infinity = (r.chart_yx.A.get(0, 0) == 0 && r.chart_yx.B.get(0, 0) == 0);
    return out;
}

/// Multiplicity dim O/(A, B) at the origin, by stabilized colength in the
/// truncated local ring.  Only for genuinely isolated singularities.
inline int multiplicity_at_origin(const BiPoly& A, const BiPoly& B, int maxdeg = 12) {
    const Fq F = A.F;
    int last = -1;
    for (int D = 1; D <= maxdeg; ++D) {
        // monomial index
        std::vector<std::pair<int, int>> mons;
        for (int i = 0; i <= D; ++i)
            for (int j = 0; i + j <= D; ++j) mons.emplace_back(i, j);
        auto idx = [&](int i, int j) {
            // position in mons: sum over rows
            int pos = 0;
            for (int r = 0; r < i; ++r) pos += D - r + 1;
            return pos + j;
        };
        std::vector<std::vector<uint64_t>> rows;
        for (auto& [mi, mj] : mons)
            for (const BiPoly* P : {&A, &B}) {
                std::vector<uint64_t> row(mons.size(), 0);
                bool nz = false;
                for (int i = 0; i + mi <= D; ++i)
                    for (int j = 0; i + j + mi + mj <= D; ++j) {
                        uint64_t v = P->get(i, j);
                        if (v) {
                            row[static_cast<size_t>(idx(i + mi, j + mj))] ^= v;
                            nz = true;
                        }
                    }
                if (nz) rows.push_back(std::move(row));
            }
        // rank over F
        size_t rank = 0;
        size_t ncols = mons.size();
        for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
            size_t piv = rank;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            uint64_t inv = F.inv(rows[rank][col]);
            for (size_t j = col; j < ncols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                uint64_t f = rows[r][col];
                for (size_t j = col; j < ncols; ++j) rows[r][j] ^= F.mul(f, rows[rank][j]);
            }
            ++rank;
        }
        int colength = static_cast<int>(mons.size() - rank);
        if (colength == last) return colength;  // stabilized
        last = colength;
    }
    return last;
}

/// Full resolution output.
struct ResolutionResult {
    DualGraph graph;
    std::vector<int> upstairs_selfint;
    std::vector<bool> integral;
    int blowups = 0;
    FundamentalCycle fc;
    std::string shape;
    SingularityType matched;  // catalog match of the computed graph
};

namespace detail {

struct ResState {
    std::vector<int> up;          // upstairs self-intersections
    std::vector<char> integral;   // tangency flag per curve
    std::set<std::pair<int, int>> edges;
    int blowups = 0;
    int depth_limit = 32;

    int new_curve() {
        up.push_back(-1);
        integral.push_back(0);
        return static_cast<int>(up.size()) - 1;
    }
    void add_edge(int a, int b) {
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
    }
    void remove_edge(int a, int b) {
        if (a > b) std::swap(a, b);
        edges.erase({a, b});
    }
};

struct PointTask {
    BiPoly A, B;  // field A d/dx + B d/dy at the origin of this chart
    int curve_x;  // curve along {x=0}, or -1
    int curve_y;  // curve along {y=0}, or -1
    int depth;
};

inline void resolve_point(ResState& st, PointTask t);

/// Handle the singular points on the exceptional curve visible in the chart
/// where the exceptional is {y=0} and the strict transform of the old {x=0}
/// is {x=0}.
inline void spawn_chart_sings(ResState& st, const BlowupChart& ch, int exc_id, int old_x_curve, int depth) {
    FqPoly a = ch.A.restrict_y0();
    FqPoly b = ch.B.restrict_y0();
    if (a.is_zero() && b.is_zero()) throw PrecisionExhausted();
    FqPoly g = b.is_zero() ? a : (a.is_zero() ? b : gcd(a, b));
    if (g.deg() < 1) return;

    // extension needed?
    int L = 1;
    for (auto& [p, m] : factor(g)) {
        (void)m;
        if (p.deg() > 0) L = std::lcm(L, p.deg());
    }
    BiPoly A = ch.A, B = ch.B;
    Fq F = A.F;
    if (L > 1) {
        Fq big = Fq::make(F.k * L);
        FqEmbedding emb = make_embedding(F, big);
        A = A.embed(emb);
        B = B.embed(emb);
        g = emb.map_poly(g);
        F = big;
    }
    for (auto& [root, mult] : roots_in_field(g)) {
        (void)mult;
        PointTask sub{A.translate_x(root), B.translate_x(root), root == 0 ? old_x_curve : -1, exc_id, depth + 1};
        resolve_point(st, sub);
    }
}

inline void resolve_point(ResState& st, PointTask t) {
    if (t.depth > st.depth_limit) throw std::runtime_error("localres: resolution did not terminate (depth cap)");
    if (t.A.get(0, 0) != 0 || t.B.get(0, 0) != 0) return;  // smooth for the foliation: nothing to do

    BlowupResult bu = blowup_once(LocalVF{t.A, t.B});
    ++st.blowups;
    int exc = st.new_curve();
    for (int c : {t.curve_x, t.curve_y})
        if (c >= 0) {
            st.up[static_cast<size_t>(c)] -= 1;
            st.add_edge(exc, c);
        }
    if (t.curve_x >= 0 && t.curve_y >= 0) st.remove_edge(t.curve_x, t.curve_y);

    // integrality: tangency of the reduced field along the new curve,
    // read off in the chart where the exceptional is {y=0}
    st.integral[static_cast<size_t>(exc)] = (bu.chart_xy.B.ord_y() >= 1);

    // finite points of the exceptional line
    spawn_chart_sings(st, bu.chart_xy, exc, t.curve_x, t.depth);

    // the remaining point (x-direction): origin of the other chart, where the
    // exceptional is {x=0} and the strict transform of the old {y=0} is {y=0}
    const BlowupChart& c2 = bu.chart_yx;
    if (c2.A.get(0, 0) == 0 && c2.B.get(0, 0) == 0) {
        PointTask sub{c2.A, c2.B, exc, t.curve_y, t.depth + 1};
        resolve_point(st, sub);
    }
}

}  // namespace detail

/// Resolve an isolated singularity by iterated blow-ups and assemble the
/// dual graph of the quotient singularity.
inline ResolutionResult resolve(const LocalVF& v0) {
    int prec = v0.A.prec;
    const int cap = 192;
    while (true) {
        try {
            detail::ResState st;
            detail::PointTask root{v0.A, v0.B, -1, -1, 0};
            if (prec != v0.A.prec) {
                // re-seat the input at higher precision
                BiPoly A(v0.A.F, prec), B(v0.B.F, prec);
                for (int i = 0; i <= v0.A.prec; ++i)
                    for (int j = 0; i + j <= v0.A.prec; ++j) {
                        A.set(i, j, v0.A.get(i, j));
                        B.set(i, j, v0.B.get(i, j));
                    }
                root.A = A;
                root.B = B;
            }
            detail::resolve_point(st, root);

            ResolutionResult r;
            r.blowups = st.blowups;
            r.upstairs_selfint.assign(st.up.begin(), st.up.end());
            r.integral.assign(st.integral.begin(), st.integral.end());
            for (size_t i = 0; i < st.up.size(); ++i) {
                int e2;
                if (st.integral[i]) {
                    if (st.up[i] % 2 != 0)
                        throw std::logic_error("resolve: integral curve with odd self-intersection");
                    e2 = st.up[i] / 2;
                } else {
                    e2 = 2 * st.up[i];
                }
                r.graph.selfint.push_back(e2);
            }
            r.graph.edges.assign(st.edges.begin(), st.edges.end());
            if (!r.graph.negative_definite())
                throw std::logic_error("resolve: quotient intersection matrix not negative definite");
            r.fc = fundamental_cycle(r.graph);
            r.shape = r.graph.shape();
            if (r.shape == "A1")
                r.matched = {SingularityType::A1, 0, 0};
            else if (r.shape == "D4")
                r.matched = {SingularityType::D4, 0, 0};
            else if (r.shape == "D8")
                r.matched = {SingularityType::D8, 0, 0};
            else if (r.shape == "star(-3;5)")
                r.matched = {SingularityType::Elliptic19_0, 0, 0};
            else
                r.matched = {SingularityType::Unclassified, 0, 0};
            return r;
        } catch (const PrecisionExhausted&) {
            prec *= 2;
            if (prec > cap) throw;
        }
    }
}

inline ResolutionResult resolve_orders(Fq F, int a, int b, bool poles, int prec = 24) {
    LocalVF v = poles ? LocalVF::canonical_poles(F, a, b, prec) : LocalVF::canonical_zeros(F, a, b, prec);
    return resolve(v);
}

}  // namespace insep

#endif

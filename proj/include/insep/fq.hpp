#ifndef INSEP_FQ_HPP
#define INSEP_FQ_HPP

/// Exact arithmetic in the binary fields F_{2^k}.
///
/// Elements are bit-packed polynomials over F_2 reduced modulo a fixed
/// irreducible modulus.  The modulus for each degree is chosen
/// deterministically (lowest bit pattern that is irreducible), so that
/// serialized values are reproducible across runs and platforms.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace insep {

namespace f2poly {

// Polynomials over F_2 packed into uint64_t, lowest coefficient in bit 0.

inline int degree(uint64_t p) {
    if (p == 0) return -1;
    int d = 63;
    while (!(p >> d)) --d;
    return d;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t mod) {
    const int dm = degree(mod);
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (degree(a) == dm) a ^= mod;
    }
    return r;
}

inline uint64_t mod(uint64_t a, uint64_t m) {
    const int dm = degree(m);
    int da = degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = degree(a);
    }
    return a;
}

inline uint64_t gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline uint64_t powmod_x(uint64_t e2, uint64_t m) {
    // x^(2^e2) mod m by repeated squaring of x
    uint64_t r = mod(2, m);
    for (uint64_t i = 0; i < e2; ++i) r = mulmod(r, r, m);
    return r;
}

/// Rabin irreducibility test for an F_2 polynomial of degree k.
inline bool is_irreducible(uint64_t p) {
    const int k = degree(p);
    if (k < 1) return false;
    if (k == 1) return true;
    if (!(p & 1)) return false;  // divisible by x
    if (powmod_x(static_cast<uint64_t>(k), p) != mod(2, p)) return false;
    for (int q = 2; q <= k; ++q) {
        if (k % q) continue;
        bool prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) continue;
        uint64_t t = powmod_x(static_cast<uint64_t>(k / q), p) ^ mod(2, p);
        if (gcd(p, t) != 1) return false;
    }
    return true;
}

}  // namespace f2poly

/// Descriptor of F_{2^k}.  Copyable by value; two descriptors denote the
/// same field iff k and modulus agree.
struct Fq {
    int k = 1;
    uint64_t mod = 2;  // bits of the irreducible modulus, degree k

    static uint64_t canonical_modulus(int k) {
        if (k < 1 || k > 32) throw std::invalid_argument("Fq: k out of range [1,32]");
        for (uint64_t m = (uint64_t{1} << k); m < (uint64_t{1} << (k + 1)); ++m)
            if (f2poly::is_irreducible(m)) return m;
        throw std::logic_error("Fq: no irreducible modulus found");
    }

    static Fq make(int k) { return Fq{k, canonical_modulus(k)}; }

    bool operator==(const Fq& o) const { return k == o.k && mod == o.mod; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    uint64_t order() const { return uint64_t{1} << k; }

    uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }

    uint64_t mul(uint64_t a, uint64_t b) const {
        uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> k) a ^= mod;
        }
        return r;
    }

    uint64_t sqr(uint64_t a) const { return mul(a, a); }

    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    uint64_t inv(uint64_t a) const {
        if (a == 0) throw std::domain_error("Fq: inversion of zero");
        return pow(a, order() - 2);
    }

    /// Absolute trace to F_2.
    int trace(uint64_t a) const {
        uint64_t t = 0, f = a;
        for (int i = 0; i < k; ++i) {
            t ^= f;
            f = sqr(f);
        }
        return static_cast<int>(t & 1);
    }

    /// Square roots exist and are unique in characteristic 2.
    uint64_t sqrt(uint64_t a) const { return pow(a, uint64_t{1} << (k - 1)); }

    std::string elem_str(uint64_t a) const {
        if (a == 0) return "0";
        if (a == 1) return "1";
        std::string s;
        bool first = true;
        for (int i = f2poly::degree(a); i >= 0; --i) {
            if (!(a >> i & 1)) continue;
            if (!first) s += "+";
            first = false;
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += "g";
            else
                s += "g^" + std::to_string(i);
        }
        return s;
    }
};

/// A field element carrying its field descriptor.  Self-contained value
/// type; mixed-field arithmetic throws.
struct FqElem {
    Fq F;
    uint64_t v = 0;

    FqElem() = default;
    FqElem(Fq f, uint64_t val) : F(f), v(val) {
        if (f.k < 64 && (val >> f.k)) throw std::invalid_argument("FqElem: value out of range");
    }

    bool is_zero() const { return v == 0; }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        return FqElem(a.F, a.F.add(a.v, b.v));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return a + b; }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        require_same(a, b);
        return FqElem(a.F, a.F.mul(a.v, b.v));
    }
    FqElem inverse() const { return FqElem(F, F.inv(v)); }
    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inverse(); }
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.F == b.F && a.v == b.v; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    static void require_same(const FqElem& a, const FqElem& b) {
        if (a.F != b.F) throw std::invalid_argument("FqElem: modulus mismatch");
    }
};

/// All elements of the field in canonical (bit value) order.
inline std::vector<uint64_t> all_elements(const Fq& F) {
    std::vector<uint64_t> out;
    out.reserve(F.order());
    for (uint64_t v = 0; v < F.order(); ++v) out.push_back(v);
    return out;
}

}  // namespace insep

#endif

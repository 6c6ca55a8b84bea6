#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "nfarith/errors.hpp"
#include "nfarith/intmath.hpp"

namespace nfarith {

// Univariate polynomial over F_p, p prime below 2^31.
// Coefficients stored low degree first, reduced into [0, p); the zero
// polynomial is the empty vector.
struct PrimePoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    PrimePoly() = default;
    PrimePoly(uint64_t modulus, std::vector<uint64_t> coeffs) : p(modulus), c(std::move(coeffs)) {
        for (auto& x : c) x %= p;
        trim();
    }

    static PrimePoly zero(uint64_t p) { return PrimePoly(p, {}); }
    static PrimePoly one(uint64_t p) { return PrimePoly(p, {1}); }
    static PrimePoly x(uint64_t p) { return PrimePoly(p, {0, 1}); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    uint64_t lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

namespace detail {
inline void require_same_modulus(const PrimePoly& f, const PrimePoly& g) {
    if (f.p != g.p) throw UsageError("PrimePoly operation on mismatched moduli");
}
}  // namespace detail

inline PrimePoly poly_scale(const PrimePoly& f, uint64_t s) {
    PrimePoly r = f;
    s %= f.p;
    for (auto& x : r.c) x = mulmod(x, s, f.p);
    r.trim();
    return r;
}

inline PrimePoly poly_monic(const PrimePoly& f) {
    if (f.is_zero() || f.lead() == 1) return f;
    uint64_t inv = powmod(f.lead(), f.p - 2, f.p);
    return poly_scale(f, inv);
}

inline PrimePoly poly_add(const PrimePoly& f, const PrimePoly& g) {
    detail::require_same_modulus(f, g);
    PrimePoly r;
    r.p = f.p;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = (r.c[i] + g.c[i]) % f.p;
    r.trim();
    return r;
}

inline PrimePoly poly_sub(const PrimePoly& f, const PrimePoly& g) {
    detail::require_same_modulus(f, g);
    PrimePoly r;
    r.p = f.p;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = (r.c[i] + f.p - g.c[i]) % f.p;
    r.trim();
    return r;
}

inline PrimePoly poly_mul(const PrimePoly& f, const PrimePoly& g) {
    detail::require_same_modulus(f, g);
    if (f.is_zero() || g.is_zero()) return PrimePoly::zero(f.p);
    std::vector<u128> acc(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j) acc[i + j] += u128(f.c[i]) * g.c[j];
    }
    PrimePoly r;
    r.p = f.p;
    r.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c[i] = uint64_t(acc[i] % f.p);
    r.trim();
    return r;
}

// f = q*g + r with deg r < deg g.
inline std::pair<PrimePoly, PrimePoly> poly_divmod(const PrimePoly& f, const PrimePoly& g) {
    detail::require_same_modulus(f, g);
    if (g.is_zero()) throw UsageError("PrimePoly division by zero");
    if (f.degree() < g.degree()) return {PrimePoly::zero(f.p), f};
    uint64_t p = f.p;
    uint64_t lg_inv = powmod(g.lead(), p - 2, p);
    std::vector<uint64_t> rem = f.c;
    std::vector<uint64_t> quo(f.c.size() - g.c.size() + 1, 0);
    for (int i = int(rem.size()) - 1; i >= g.degree(); --i) {
        if (rem[i] == 0) continue;
        uint64_t q = mulmod(rem[i], lg_inv, p);
        quo[i - g.degree()] = q;
        for (size_t j = 0; j < g.c.size(); ++j) {
            size_t idx = i - g.degree() + j;
            rem[idx] = (rem[idx] + p - mulmod(q, g.c[j], p)) % p;
        }
    }
    PrimePoly Q(p, std::move(quo));
    PrimePoly R(p, std::move(rem));
    return {std::move(Q), std::move(R)};
}

inline PrimePoly poly_mod(const PrimePoly& f, const PrimePoly& g) {
    return poly_divmod(f, g).second;
}

// Monic gcd; gcd(f, 0) = monic(f).
inline PrimePoly poly_gcd(PrimePoly f, PrimePoly g) {
    detail::require_same_modulus(f, g);
    while (!g.is_zero()) {
        PrimePoly r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(f);
}

inline PrimePoly poly_derivative(const PrimePoly& f) {
    if (f.c.size() <= 1) return PrimePoly::zero(f.p);
    PrimePoly r;
    r.p = f.p;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
    r.trim();
    return r;
}

// base^exp mod m by repeated squaring.
inline PrimePoly poly_powmod(const PrimePoly& base, uint64_t exp, const PrimePoly& m) {
    detail::require_same_modulus(base, m);
    PrimePoly result = PrimePoly::one(m.p);
    PrimePoly b = poly_mod(base, m);
    while (exp) {
        if (exp & 1) result = poly_mod(poly_mul(result, b), m);
        exp >>= 1;
        if (exp) b = poly_mod(poly_mul(b, b), m);
    }
    return result;
}

// x^(p^i) mod f.
inline PrimePoly frobenius_power(const PrimePoly& f, uint32_t i) {
    if (f.degree() < 1) throw UsageError("frobenius_power: modulus must have degree >= 1");
    PrimePoly g = PrimePoly::x(f.p);
    for (uint32_t step = 0; step < i; ++step) g = poly_powmod(g, f.p, f);
    return g;
}

// Distinct-degree factorization profile of a squarefree monic f: the multiset
// of (irreducible factor degree, count) pairs. Throws NotSquarefreeError when
// gcd(f, f') != 1.
inline std::vector<std::pair<uint32_t, uint32_t>> factor_degree_profile(const PrimePoly& f) {
    if (f.is_zero() || f.lead() != 1) throw UsageError("factor_degree_profile: f must be monic");
    if (f.degree() < 1) return {};
    PrimePoly fd = poly_derivative(f);
    if (fd.is_zero() || poly_gcd(f, fd).degree() != 0) throw NotSquarefreeError(f.p);

    std::vector<std::pair<uint32_t, uint32_t>> profile;
    PrimePoly fstar = f;
    PrimePoly h = PrimePoly::x(f.p);
    for (uint32_t d = 1; 2 * d <= uint32_t(fstar.degree()); ++d) {
        h = poly_powmod(h, f.p, fstar);
        PrimePoly hmx = poly_sub(h, PrimePoly::x(f.p));
        PrimePoly g = poly_gcd(hmx, fstar);
        if (g.degree() > 0) {
            profile.emplace_back(d, uint32_t(g.degree()) / d);
            fstar = poly_divmod(fstar, g).first;
            h = poly_mod(h, fstar);
        }
    }
    if (fstar.degree() > 0) profile.emplace_back(uint32_t(fstar.degree()), 1);
    return profile;
}

}  // namespace nfarith

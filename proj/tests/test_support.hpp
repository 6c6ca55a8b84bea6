#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nfarith/fppoly.hpp"
#include "nfarith/intmath.hpp"

namespace test_support {

using nfarith::PrimePoly;

// Divisors of n by trial division, unsorted.
inline std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    return out;
}

// Monic polynomial of degree d over F_p from an index in [0, p^d).
inline PrimePoly monic_from_index(uint64_t p, int d, uint64_t idx) {
    std::vector<uint64_t> c(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    c[d] = 1;
    return PrimePoly(p, std::move(c));
}

// All monic irreducibles over F_p of degree 1..3: a polynomial of degree 2 or
// 3 is irreducible iff it has no root.
inline std::vector<PrimePoly> irreducibles_up_to_3(uint64_t p) {
    std::vector<PrimePoly> out;
    auto has_root = [&](const PrimePoly& f) {
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t v = 0;
            for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
                v = (nfarith::mulmod(v, x, p) + *it) % p;
            if (v == 0) return true;
        }
        return false;
    };
    for (int d = 1; d <= 3; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly f = monic_from_index(p, d, idx);
            if (d == 1 || !has_root(f)) out.push_back(f);
        }
    }
    return out;
}

// Factor-degree multiset by trial division against all monic irreducibles of
// degree <= 3; a leftover of degree 4..6 is itself irreducible. Returns
// degrees with multiplicity (so non-squarefree inputs show repeats).
inline std::vector<uint32_t> trial_factor_degrees(PrimePoly f,
                                                  const std::vector<PrimePoly>& irreducibles) {
    std::vector<uint32_t> degrees;
    for (const auto& q : irreducibles) {
        while (f.degree() >= q.degree()) {
            auto [quo, rem] = nfarith::poly_divmod(f, q);
            if (!rem.is_zero()) break;
            degrees.push_back(uint32_t(q.degree()));
            f = quo;
        }
        if (f.degree() == 0) break;
    }
    if (f.degree() > 0) degrees.push_back(uint32_t(f.degree()));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

inline std::mt19937_64 rng(uint64_t seed = 20240817) { return std::mt19937_64(seed); }

}  // namespace test_support

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "nfarith/arith_functions.hpp"
#include "nfarith/errors.hpp"
#include "nfarith/intpoly.hpp"
#include "nfarith/number_field.hpp"

namespace nfarith {

// Coefficients c_1..c_N of a Dirichlet series, exact rationals. a[0] unused.
struct TruncatedDirichletSeries {
    std::vector<Rational> a;

    TruncatedDirichletSeries() = default;
    explicit TruncatedDirichletSeries(uint64_t N) : a(N + 1, Rational(0)) {}

    uint64_t length() const { return a.empty() ? 0 : a.size() - 1; }

    static TruncatedDirichletSeries delta(uint64_t N) {
        TruncatedDirichletSeries d(N);
        d.a[1] = 1;
        return d;
    }

    static TruncatedDirichletSeries ones(uint64_t N) {
        TruncatedDirichletSeries z(N);
        for (uint64_t n = 1; n <= N; ++n) z.a[n] = 1;
        return z;
    }

    bool operator==(const TruncatedDirichletSeries& o) const { return a == o.a; }
};

namespace detail {
inline void require_same_length(const TruncatedDirichletSeries& f,
                                const TruncatedDirichletSeries& g) {
    if (f.length() != g.length())
        throw UsageError("Dirichlet series length mismatch");
}
}  // namespace detail

// Exact Dirichlet convolution up to the truncation length.
inline TruncatedDirichletSeries dirichlet_mul(const TruncatedDirichletSeries& f,
                                              const TruncatedDirichletSeries& g) {
    detail::require_same_length(f, g);
    const uint64_t N = f.length();
    TruncatedDirichletSeries h(N);
    for (uint64_t i = 1; i <= N; ++i) {
        if (f.a[i] == 0) continue;
        for (uint64_t j = 1; j <= N / i; ++j) {
            if (g.a[j] != 0) h.a[i * j] += f.a[i] * g.a[j];
        }
    }
    return h;
}

// g with f*g = delta, by g_n = -(1/c_1) sum_{d | n, d > 1} c_d g_{n/d}.
inline TruncatedDirichletSeries dirichlet_inv(const TruncatedDirichletSeries& f) {
    const uint64_t N = f.length();
    if (N == 0 || f.a[1] == 0) throw ZeroLeadingCoefficientError();
    TruncatedDirichletSeries g(N);
    Rational c1_inv = Rational(1) / f.a[1];
    g.a[1] = c1_inv;
    for (uint64_t n = 2; n <= N; ++n) {
        Rational s(0);
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                if (f.a[d] != 0 && g.a[n / d] != 0) s += f.a[d] * g.a[n / d];
                uint64_t e = n / d;
                if (e != d && f.a[e] != 0 && g.a[d] != 0) s += f.a[e] * g.a[d];
            }
        }
        if (f.a[n] != 0) s += f.a[n] * g.a[1];
        if (s != 0) g.a[n] = -c1_inv * s;
    }
    return g;
}

inline TruncatedDirichletSeries dirichlet_pow(const TruncatedDirichletSeries& f, int64_t m) {
    const uint64_t N = f.length();
    if (m == 0) return TruncatedDirichletSeries::delta(N);
    TruncatedDirichletSeries base = m > 0 ? f : dirichlet_inv(f);
    uint64_t e = uint64_t(m > 0 ? m : -m);
    TruncatedDirichletSeries acc = TruncatedDirichletSeries::delta(N);
    while (e) {
        if (e & 1) acc = dirichlet_mul(acc, base);
        e >>= 1;
        if (e) base = dirichlet_mul(base, base);
    }
    return acc;
}

// U with L = Z^m * U at the coefficient level: U = L * Z^(-m). At every prime
// where the local factors agree, u_p = 0; always u_1 = 1 when L_1 = Z_1 = 1.
inline TruncatedDirichletSeries u_series(const TruncatedDirichletSeries& L,
                                         const TruncatedDirichletSeries& Z, uint32_t m) {
    detail::require_same_length(L, Z);
    if (Z.a.size() < 2 || Z.a[1] != 1) throw UsageError("u_series: Z_1 = 1 required");
    return dirichlet_mul(L, dirichlet_pow(Z, -int64_t(m)));
}

inline TruncatedDirichletSeries series_from_sequence(const std::vector<int64_t>& v) {
    TruncatedDirichletSeries s(v.size() - 1);
    for (size_t n = 1; n < v.size(); ++n) s.a[n] = v[n];
    return s;
}

// ---- prime coefficient identity check ------------------------------------

struct PrimeDisagreement {
    uint64_t p;
    BigInt lhs;  // summand value at p
    BigInt rhs;  // m * a_comp(p)
};

struct PrimeCheckReport {
    uint64_t prime_bound = 0;
    uint32_t multiplier = 0;
    std::vector<PrimeDisagreement> disagreements;
    std::vector<uint64_t> ramified;  // ramified primes of the compositum up to the bound

    // every disagreement sits at a ramified prime
    bool contained_in_ramified() const {
        for (const auto& d : disagreements) {
            bool found = false;
            for (uint64_t r : ramified) {
                if (r == d.p) found = true;
            }
            if (!found) return false;
        }
        return true;
    }
};

// Compares the summand function at primes with m * a_{K_1...K_l}(p). The
// compositum of the descriptor's distinct fields is formed on the fly (or the
// single field is used directly). Disagreements outside the ramified set are
// findings for the caller, not exceptions.
inline PrimeCheckReport prime_coefficient_check(const ArithFn& fn, uint32_t m, uint64_t P) {
    auto fields = fn.distinct_fields();
    FieldHandle comp = fields[0];
    for (size_t i = 1; i < fields.size(); ++i) comp = compositum(comp, fields[i]);

    PrimeCheckReport report;
    report.prime_bound = P;
    report.multiplier = m;
    report.ramified = ramified_primes(*comp, P);
    for (uint64_t p = 2; p <= P; ++p) {
        if (!is_prime(p)) continue;
        BigInt lhs = fn.value_at_prime(p);
        BigInt rhs = BigInt(m) * ideal_count_prime_power(*comp, p, 1);
        if (lhs != rhs) report.disagreements.push_back({p, lhs, rhs});
    }
    return report;
}

// Partial sums of sum |u_n| n^(-s0) over dyadic blocks; a logged diagnostic
// supporting (never certifying) absolute convergence beyond s0.
struct ConvergenceDiagnostic {
    double s0;
    std::vector<double> block_sums;    // contribution of (N/2^k, N/2^(k-1)]
    std::vector<double> partial_sums;  // running totals, monotone increasing
};

inline ConvergenceDiagnostic convergence_diagnostic(const TruncatedDirichletSeries& u,
                                                    double s0 = 0.75) {
    ConvergenceDiagnostic diag;
    diag.s0 = s0;
    const uint64_t N = u.length();
    std::vector<std::pair<uint64_t, uint64_t>> blocks;
    uint64_t hi = N;
    while (hi > 1) {
        uint64_t lo = hi / 2;
        blocks.emplace_back(lo + 1, hi);
        hi = lo;
    }
    blocks.emplace_back(1, 1);
    double running = 0;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        double s = 0;
        for (uint64_t n = it->first; n <= it->second; ++n) {
            if (u.a[n] != 0) {
                double v = std::abs(u.a[n].convert_to<double>());
                s += v * std::pow(double(n), -s0);
            }
        }
        diag.block_sums.push_back(s);
        running += s;
        diag.partial_sums.push_back(running);
    }
    return diag;
}

// CSV export: columns n, numerator, denominator.
inline void write_series_csv(std::ostream& os, const TruncatedDirichletSeries& f) {
    os << "n,numerator,denominator\n";
    for (uint64_t n = 1; n <= f.length(); ++n) {
        os << n << ',' << boost::multiprecision::numerator(f.a[n]) << ','
           << boost::multiprecision::denominator(f.a[n]) << '\n';
    }
}

}  // namespace nfarith

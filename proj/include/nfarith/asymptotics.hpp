#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "nfarith/dirichlet_series.hpp"
#include "nfarith/errors.hpp"
#include "nfarith/lfunctions.hpp"
#include "nfarith/sieve.hpp"

namespace nfarith {

// ---- main terms -------------------------------------------------------------

// Main term (c_K zeta(1+a)/(1+a)) x^(1+a) for sum sigma_a^K(n).
struct SigmaMainTerm {
    LValue residue;
    LValue zeta_1a;
    uint32_t a = 1;
    double constant = 0;

    double operator()(double x) const { return constant * std::pow(x, double(1 + a)); }
};

inline SigmaMainTerm main_term_sigma(const NumberField& K, uint32_t a) {
    if (a < 1) throw UsageError("main_term_sigma: a >= 1 required");
    SigmaMainTerm mt;
    mt.a = a;
    mt.residue = residue_dedekind(K);
    mt.zeta_1a = riemann_zeta(1.0 + a);
    mt.constant = mt.residue.value * mt.zeta_1a.value / (1.0 + a);
    return mt;
}

// zeta(1+a+b) zeta_K1(1+b) zeta_K2(1+a) c_{K1K2} x^(1+a+b) / (1+a+b) for
// sum sigma_a^K1(n) sigma_b^K2(n).
struct SigmaPairMainTerm {
    LValue zeta_ab;
    LValue zK1;
    LValue zK2;
    LValue residue12;
    uint32_t a = 1, b = 1;
    double constant = 0;
    double constant_rel_error = 0;

    double operator()(double x) const { return constant * std::pow(x, double(1 + a + b)); }
};

inline SigmaPairMainTerm main_term_sigma_pair(const FieldHandle& K1, const FieldHandle& K2,
                                              uint32_t a, uint32_t b) {
    if (a < 1 || b < 1) throw UsageError("main_term_sigma_pair: a, b >= 1 required");
    SigmaPairMainTerm mt;
    mt.a = a;
    mt.b = b;
    FieldHandle comp = compositum(K1, K2);  // validates Galois + coprime discriminants
    mt.zeta_ab = riemann_zeta(1.0 + a + b);
    mt.zK1 = dedekind_zeta_value(*K1, 1.0 + b);
    mt.zK2 = dedekind_zeta_value(*K2, 1.0 + a);
    mt.residue12 = residue_dedekind(*comp);
    mt.constant = mt.zeta_ab.value * mt.zK1.value * mt.zK2.value * mt.residue12.value /
                  (1.0 + a + b);
    for (const LValue* v : {&mt.zeta_ab, &mt.zK1, &mt.zK2, &mt.residue12})
        mt.constant_rel_error += v->abs_error / std::abs(v->value);
    return mt;
}

// Leading coefficient of the main-term polynomial for tau configurations:
// c^m U(1) / (m-1)!, with U(1) from the truncated u-series and a logged (not
// certified) truncation estimate from the last dyadic block.
struct TauLeadingTerm {
    LValue residue;
    uint32_t m = 1;
    double u_at_one = 1;
    double u_truncation_estimate = 0;
    double constant = 0;

    // M(x) = constant * x * (log x)^(m-1)
    double operator()(double x) const {
        return constant * x * std::pow(std::log(x), double(m - 1));
    }
};

inline TauLeadingTerm leading_coeff_tau(const LValue& residue, uint32_t m,
                                        const TruncatedDirichletSeries& U) {
    if (m < 1) throw UsageError("leading_coeff_tau: m >= 1 required");
    TauLeadingTerm t;
    t.residue = residue;
    t.m = m;
    const uint64_t N = U.length();
    long double u1 = 0, last_block = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        if (U.a[n] != 0) {
            long double term = U.a[n].convert_to<long double>() / n;
            u1 += term;
            if (n > N / 2) last_block += std::abs(term);
        }
    }
    t.u_at_one = double(u1);
    t.u_truncation_estimate = double(last_block);
    double fact = 1;
    for (uint32_t i = 2; i < m; ++i) fact *= i;
    t.constant = std::pow(residue.value, double(m)) * t.u_at_one / fact;
    return t;
}

// ---- grids, error terms, moments ---------------------------------------------

inline std::vector<uint64_t> geometric_grid(uint64_t xmax, double ratio, uint64_t xmin = 16) {
    if (ratio <= 1.0) throw UsageError("grid ratio must exceed 1");
    xmin = std::min(xmin, xmax);
    std::vector<uint64_t> pts;
    double x = double(xmax);
    while (x >= double(xmin) && x >= 1) {
        pts.push_back(uint64_t(x + 0.5));
        x /= ratio;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

struct ReportRow {
    uint64_t x;
    BigInt S;       // exact summatory value
    double M;       // predicted main term
    double delta;   // S - M
    double ratio;   // S / M
};

struct MomentRow {
    uint64_t X;
    double moment;
    double fitted_exponent_so_far;  // NaN until two points exist
};

struct AsymptoticReport {
    std::vector<ReportRow> rows;
    std::vector<MomentRow> moments;
    bool leading_term_only = false;  // delta is "up to lower-order main terms"
};

// Delta(x) = S(x) - M(x) on the grid points (streamed; the sequence's
// summatory need not be materialized).
template <class V>
AsymptoticReport error_term(const SievedSequence<V>& seq, const std::function<double(double)>& M,
                            const std::vector<uint64_t>& grid) {
    AsymptoticReport rep;
    V acc = 0;
    size_t gi = 0;
    for (uint64_t n = 1; n <= seq.xmax() && gi < grid.size(); ++n) {
        acc += seq.f[n];
        if (n == grid[gi]) {
            ReportRow row;
            row.x = n;
            row.S = detail::to_bigint(acc);
            row.M = M(double(n));
            double S = row.S.template convert_to<double>();
            row.delta = S - row.M;
            row.ratio = row.M != 0 ? S / row.M : std::numeric_limits<double>::quiet_NaN();
            rep.rows.push_back(std::move(row));
            ++gi;
        }
    }
    if (gi != grid.size()) throw UsageError("error_term: grid exceeds sequence bound");
    return rep;
}

namespace detail {

// 8-point Gauss-Legendre on [-1, 1]
inline const double gl8_x[8] = {-0.9602898564975362, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975362};
inline const double gl8_w[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss8(const F& f, double a, double b) {
    double c = (a + b) / 2, h = (b - a) / 2;
    double s = 0;
    for (int i = 0; i < 8; ++i) s += gl8_w[i] * f(c + h * gl8_x[i]);
    return s * h;
}

template <class F>
double adaptive_gauss(const F& f, double a, double b, double rel_tol, int depth = 0) {
    double whole = gauss8(f, a, b);
    double mid = (a + b) / 2;
    double halves = gauss8(f, a, mid) + gauss8(f, mid, b);
    if (depth >= 12 || std::abs(halves - whole) <= rel_tol * std::abs(halves) + 1e-300)
        return halves;
    return adaptive_gauss(f, a, mid, rel_tol, depth + 1) +
           adaptive_gauss(f, mid, b, rel_tol, depth + 1);
}

}  // namespace detail

// int_1^X (S(x) - M(x))^2 dx with S piecewise constant. Each unit interval is
// integrated by adaptive Gauss-Legendre (M is smooth); quadrature error target
// is relative 1e-6 overall.
template <class V>
double second_moment(const SievedSequence<V>& seq, const std::function<double(double)>& M,
                     uint64_t X) {
    if (X > seq.xmax()) throw UsageError("second_moment: X exceeds sequence bound");
    long double total = 0;
    V acc = 0;
    for (uint64_t n = 1; n < X; ++n) {
        acc += seq.f[n];
        double Sn = detail::to_bigint(acc).template convert_to<double>();
        auto integrand = [&](double x) {
            double d = Sn - M(x);
            return d * d;
        };
        total += detail::adaptive_gauss(integrand, double(n), double(n + 1), 1e-9);
    }
    return double(total);
}

// Same integral reported at several checkpoints (ascending), one pass.
template <class V>
std::vector<double> second_moment_checkpoints(const SievedSequence<V>& seq,
                                              const std::function<double(double)>& M,
                                              const std::vector<uint64_t>& Xs) {
    std::vector<double> out;
    if (Xs.empty()) return out;
    for (size_t i = 1; i < Xs.size(); ++i) {
        if (Xs[i] <= Xs[i - 1]) throw UsageError("checkpoints must be strictly increasing");
    }
    if (Xs.back() > seq.xmax()) throw UsageError("second_moment: X exceeds sequence bound");
    long double total = 0;
    V acc = 0;
    size_t ci = 0;
    while (ci < Xs.size() && Xs[ci] == 1) {
        out.push_back(0.0);  // empty integration range
        ++ci;
    }
    for (uint64_t n = 1; n < Xs.back() && ci < Xs.size(); ++n) {
        acc += seq.f[n];
        double Sn = detail::to_bigint(acc).template convert_to<double>();
        auto integrand = [&](double x) {
            double d = Sn - M(x);
            return d * d;
        };
        total += detail::adaptive_gauss(integrand, double(n), double(n + 1), 1e-9);
        while (ci < Xs.size() && n + 1 == Xs[ci]) {
            out.push_back(double(total));
            ++ci;
        }
    }
    return out;
}

// Least-squares slope of log V against log X.
inline double empirical_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw UsageError("empirical_exponent: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double prev_x = 0;
    for (const auto& [X, V] : points) {
        if (X <= prev_x) throw UsageError("empirical_exponent: X must be strictly increasing");
        if (V <= 0) throw UsageError("empirical_exponent: V must be positive");
        prev_x = X;
        double lx = std::log(X), ly = std::log(V);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = double(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace nfarith

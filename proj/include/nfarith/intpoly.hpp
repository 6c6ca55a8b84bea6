#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "nfarith/errors.hpp"
#include "nfarith/fppoly.hpp"

namespace nfarith {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer polynomial, low degree first, leading coefficient nonzero.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly from_int64(const std::vector<int64_t>& v) {
        std::vector<BigInt> w(v.begin(), v.end());
        return IntPoly(std::move(w));
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    const BigInt& lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    PrimePoly mod_p(uint64_t p) const {
        std::vector<uint64_t> w(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            BigInt r = c[i] % p;
            if (r < 0) r += p;
            w[i] = r.convert_to<uint64_t>();
        }
        return PrimePoly(p, std::move(w));
    }
};

inline IntPoly poly_derivative(const IntPoly& f) {
    if (f.c.size() <= 1) return IntPoly{};
    std::vector<BigInt> d(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) d[i - 1] = f.c[i] * int64_t(i);
    return IntPoly(std::move(d));
}

inline IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly{};
    std::vector<BigInt> h(f.c.size() + g.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < f.c.size(); ++i) {
        for (size_t j = 0; j < g.c.size(); ++j) h[i + j] += f.c[i] * g.c[j];
    }
    return IntPoly(std::move(h));
}

// Exact division; throws if the division leaves a remainder.
inline IntPoly poly_div_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw UsageError("IntPoly division by zero");
    std::vector<BigInt> rem = f.c;
    std::vector<BigInt> quo(f.c.size() >= g.c.size() ? f.c.size() - g.c.size() + 1 : 0, BigInt(0));
    for (int i = int(rem.size()) - 1; i >= g.degree(); --i) {
        if (rem[i] == 0) continue;
        if (rem[i] % g.lead() != 0) throw UsageError("IntPoly division is not exact");
        BigInt q = rem[i] / g.lead();
        quo[i - g.degree()] = q;
        for (size_t j = 0; j < g.c.size(); ++j) rem[i - g.degree() + j] -= q * g.c[j];
    }
    for (const auto& r : rem) {
        if (r != 0) throw UsageError("IntPoly division is not exact");
    }
    return IntPoly(std::move(quo));
}

// Bareiss fraction-free determinant; consumes its argument.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Res(f, g) via the Sylvester matrix.
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const int df = f.degree();
    const int dg = g.degree();
    if (df == 0) return boost::multiprecision::pow(f.c[0], unsigned(dg));
    if (dg == 0) return boost::multiprecision::pow(g.c[0], unsigned(df));
    const size_t n = size_t(df + dg);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int row = 0; row < dg; ++row) {
        for (int j = 0; j <= df; ++j) m[row][row + j] = f.c[df - j];
    }
    for (int row = 0; row < df; ++row) {
        for (int j = 0; j <= dg; ++j) m[dg + row][row + j] = g.c[dg - j];
    }
    return bareiss_determinant(std::move(m));
}

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
inline BigInt poly_discriminant(const IntPoly& f) {
    const int d = f.degree();
    if (d < 1) throw UsageError("discriminant requires degree >= 1");
    if (d == 1) return 1;
    BigInt r = resultant(f, poly_derivative(f));
    BigInt disc = r / f.lead();
    if ((int64_t(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

// Res_y(f2(y), f1(x - c*y)): the monic degree d1*d2 polynomial whose roots are
// alpha + c*beta over roots alpha of f1, beta of f2. Both inputs must be monic.
// Computed by integer evaluation at d1*d2+1 points followed by exact Lagrange
// interpolation.
inline IntPoly resultant_shifted(const IntPoly& f1, const IntPoly& f2, int64_t c) {
    if (!f1.is_monic() || !f2.is_monic()) throw UsageError("resultant_shifted requires monic inputs");
    const int d1 = f1.degree();
    const int d2 = f2.degree();
    const int dr = d1 * d2;
    std::vector<BigInt> xs(dr + 1), ys(dr + 1);
    for (int t = 0; t <= dr; ++t) {
        BigInt x0 = t - dr / 2;
        // f1(x0 - c*y) as a polynomial in y, by Horner with linear steps
        IntPoly lin(std::vector<BigInt>{x0, BigInt(-c)});
        IntPoly b(std::vector<BigInt>{f1.c[d1]});
        for (int i = d1 - 1; i >= 0; --i) {
            b = poly_mul(b, lin);
            std::vector<BigInt> cc = b.c;
            if (cc.empty()) cc.push_back(0);
            cc[0] += f1.c[i];
            b = IntPoly(std::move(cc));
        }
        xs[t] = x0;
        ys[t] = resultant(f2, b);
    }
    // Newton interpolation over the rationals; the result must be integral.
    std::vector<Rational> coef(dr + 1);
    std::vector<Rational> divided(dr + 1);
    for (int i = 0; i <= dr; ++i) divided[i] = Rational(ys[i]);
    for (int level = 1; level <= dr; ++level) {
        for (int i = dr; i >= level; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / Rational(xs[i] - xs[i - level]);
        }
    }
    // expand Newton form to monomial coefficients
    std::vector<Rational> poly(dr + 1, Rational(0));
    for (int i = dr; i >= 0; --i) {
        // poly = poly * (x - xs[i]) + divided[i]
        for (int j = dr; j >= 1; --j) poly[j] = poly[j - 1] - Rational(xs[i]) * poly[j];
        poly[0] = divided[i] - Rational(xs[i]) * poly[0];
    }
    std::vector<BigInt> out(dr + 1);
    for (int i = 0; i <= dr; ++i) {
        if (boost::multiprecision::denominator(poly[i]) != 1)
            throw UsageError("resultant interpolation produced a non-integer coefficient");
        out[i] = boost::multiprecision::numerator(poly[i]);
    }
    IntPoly r(std::move(out));
    if (r.degree() != dr) throw UsageError("resultant has unexpected degree");
    if (r.lead() < 0) {
        for (auto& v : r.c) v = -v;
    }
    return r;
}

// t-th cyclotomic polynomial: (x^t - 1) / prod_{d | t, d < t} Phi_d(x).
inline IntPoly cyclotomic_polynomial(uint32_t t) {
    if (t == 0) throw UsageError("cyclotomic_polynomial: t >= 1 required");
    std::vector<BigInt> xt(t + 1, BigInt(0));
    xt[0] = -1;
    xt[t] = 1;
    IntPoly num(std::move(xt));
    for (uint32_t d = 1; d < t; ++d) {
        if (t % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace nfarith

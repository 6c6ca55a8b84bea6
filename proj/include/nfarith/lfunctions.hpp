#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nfarith/errors.hpp"
#include "nfarith/intmath.hpp"
#include "nfarith/number_field.hpp"
#include "nfarith/sieve.hpp"

namespace nfarith {

// A numerical value together with an estimated absolute error and the method
// that produced it. Never silently precise: every consumer can see the bound.
struct LValue {
    double value = 0;
    double abs_error = 0;
    std::string method;
};

namespace detail {

// Partial sums of sum chi(n)/n over complete periods, pair-averaged and
// Richardson-extrapolated in the reciprocal period count. The tail after k
// periods has an asymptotic expansion in 1/k because the character sums to
// zero over each period.
template <class T>
std::pair<T, double> l_one_accelerated(const std::vector<T>& chi, double target) {
    const uint64_t q = chi.size();
    const int max_levels = 14;
    const uint64_t k0 = 8;
    std::vector<T> A;              // pair-averaged sums at k = k0 * 2^j
    long double racc_re = 0, racc_im = 0;
    uint64_t n = 0;

    auto accumulate_to = [&](uint64_t n_end) {
        while (n < n_end) {
            ++n;
            const T& c = chi[n % q];
            if (c != T(0)) {
                std::complex<long double> v(0, 0);
                if constexpr (std::is_same_v<T, std::complex<double>>) {
                    v = std::complex<long double>(c.real(), c.imag());
                } else {
                    v = std::complex<long double>(c, 0);
                }
                v /= (long double)n;
                racc_re += v.real();
                racc_im += v.imag();
            }
        }
    };
    auto current = [&]() -> T {
        if constexpr (std::is_same_v<T, std::complex<double>>) {
            return T(double(racc_re), double(racc_im));
        } else {
            return T(double(racc_re));
        }
    };

    T best{};
    double err = 1e300;
    std::vector<std::vector<T>> table;
    for (int j = 0; j <= max_levels; ++j) {
        uint64_t k = k0 << j;
        accumulate_to(k * q);
        T Ak = current();
        accumulate_to((k + 1) * q);
        T Ak1 = current();
        T B = (Ak + Ak1) * T(0.5);
        std::vector<T> row(size_t(j) + 1);
        row[0] = B;
        for (int i = 1; i <= j; ++i) {
            double w = double((uint64_t(1) << i) - 1);
            row[i] = row[i - 1] + (row[i - 1] - table[j - 1][i - 1]) * T(1.0 / w);
        }
        if (j >= 2) {
            double newerr = std::abs(row[j] - row[j - 1]) + std::abs(row[j] - table[j - 1][j - 1]);
            best = row[j];
            err = newerr + 1e-15 * (1.0 + std::abs(best));
            if (err <= target) {
                table.push_back(std::move(row));
                break;
            }
        }
        table.push_back(std::move(row));
    }
    if (err > 1e200) {
        best = table.back().back();
        err = 1e-3;
    }
    return {best, err};
}

}  // namespace detail

// L(1, chi_D) for a fundamental discriminant D, by accelerated partial sums.
inline LValue dirichlet_L_one(int64_t D, double target = 1e-10) {
    if (!is_fundamental_discriminant(D))
        throw UsageError("dirichlet_L_one: D must be a fundamental discriminant");
    uint64_t q = uint64_t(D < 0 ? -D : D);
    std::vector<double> chi(q);
    for (uint64_t r = 0; r < q; ++r) chi[r] = double(kronecker(D, int64_t(r)));
    // chi(0) must be chi at n = q, which is 0 for nonprincipal chi mod q
    chi[0] = double(kronecker(D, int64_t(q)));
    auto [v, e] = detail::l_one_accelerated<double>(chi, target);
    return {v, e, "series"};
}

// L(1, chi) for a nonprincipal character given as one period of values
// (table[r] = chi(n) for n = r mod q, table[0] = chi(q)).
inline std::pair<std::complex<double>, double> l_one_table(
    const std::vector<std::complex<double>>& table, double target = 1e-10) {
    return detail::l_one_accelerated<std::complex<double>>(table, target);
}

// ---- Dirichlet characters mod q -------------------------------------------

// The unit group (Z/q)* decomposed into cyclic components, with discrete-log
// tables for character evaluation.
class CharacterGroup {
  public:
    explicit CharacterGroup(uint32_t q) : q_(q) {
        if (q < 1) throw UsageError("CharacterGroup: q >= 1 required");
        uint32_t m = q;
        uint32_t two = 1;
        while (m % 2 == 0) {
            m /= 2;
            two *= 2;
        }
        if (two == 4) add_cyclic_component(4, 3);  // <-1>
        if (two >= 8) {
            add_cyclic_component(two, two - 1);  // <-1>, order 2
            add_cyclic_component(two, 5);        // <5>, order two/4
        }
        for (uint32_t p = 3; p <= m; p += 2) {
            if (m % p != 0) continue;
            uint32_t pe = 1;
            while (m % p == 0) {
                m /= p;
                pe *= p;
            }
            add_cyclic_component(pe, find_generator(pe, p));
        }
    }

    uint32_t modulus() const { return q_; }
    size_t component_count() const { return comps_.size(); }

    // total number of characters = phi(q)
    uint64_t character_count() const {
        uint64_t t = 1;
        for (const auto& c : comps_) t *= c.order;
        return t;
    }

    struct Character {
        const CharacterGroup* group;
        std::vector<uint64_t> exps;  // exponent per component

        bool is_principal() const {
            for (auto e : exps) {
                if (e) return false;
            }
            return true;
        }
    };

    std::vector<Character> characters() const {
        std::vector<Character> out;
        std::vector<uint64_t> exps(comps_.size(), 0);
        while (true) {
            out.push_back(Character{this, exps});
            size_t i = 0;
            while (i < comps_.size()) {
                if (++exps[i] < comps_[i].order) break;
                exps[i] = 0;
                ++i;
            }
            if (i == comps_.size()) break;
            if (comps_.empty()) break;
        }
        return out;
    }

    // chi(n); zero when gcd(n, q) > 1. Exact phase arithmetic: the value is
    // exp(2 pi i * t / order_lcm) with t an integer.
    std::complex<double> value(const Character& chi, uint64_t n) const {
        uint64_t r = n % q_;
        if (q_ == 1) return 1.0;
        if (std::gcd(r, uint64_t(q_)) != 1) return 0.0;
        auto [t, L] = phase(chi, n);
        double angle = 2.0 * M_PI * double(t) / double(L);
        return {std::cos(angle), std::sin(angle)};
    }

    // phase as a fraction t/L of a full turn (exact integers)
    std::pair<uint64_t, uint64_t> phase(const Character& chi, uint64_t n) const {
        uint64_t L = 1;
        for (const auto& c : comps_) L = std::lcm(L, c.order);
        uint64_t t = 0;
        for (size_t i = 0; i < comps_.size(); ++i) {
            uint64_t idx = comps_[i].dlog[n % comps_[i].pe];
            t = (t + chi.exps[i] * idx % comps_[i].order * (L / comps_[i].order)) % L;
        }
        return {t, L};
    }

    bool is_trivial_at(const Character& chi, uint64_t n) const {
        uint64_t r = n % q_;
        if (std::gcd(r, uint64_t(q_)) != 1) return false;
        return phase(chi, n).first == 0;
    }

    // Smallest f | q such that chi is trivial on every unit a = 1 (mod f).
    uint32_t conductor(const Character& chi) const {
        for (uint32_t f = 1; f <= q_; ++f) {
            if (q_ % f != 0) continue;
            bool ok = true;
            for (uint64_t a = 1; a <= q_ && ok; a += f) {
                if (std::gcd(a, uint64_t(q_)) != 1) continue;
                if (!is_trivial_at(chi, a)) ok = false;
            }
            if (ok) return f;
        }
        return q_;
    }

    // One period of the primitive character inducing chi, as a table mod f.
    std::vector<std::complex<double>> primitive_table(const Character& chi, uint32_t f) const {
        std::vector<std::complex<double>> table(f, 0.0);
        for (uint64_t r = 0; r < f; ++r) {
            uint64_t n = (r == 0) ? f : r;
            if (std::gcd(n, uint64_t(f)) != 1) continue;
            uint64_t m = n;
            while (std::gcd(m, uint64_t(q_)) != 1) m += f;
            table[r] = value(chi, m);
        }
        return table;
    }

  private:
    struct Component {
        uint32_t pe;
        uint64_t order;
        std::vector<uint32_t> dlog;  // index in <gen> for residues mod pe
    };

    void add_cyclic_component(uint32_t pe, uint64_t gen) {
        Component c;
        c.pe = pe;
        c.dlog.assign(pe, 0);
        uint64_t x = 1;
        uint64_t ord = 0;
        do {
            c.dlog[x] = uint32_t(ord);
            x = x * gen % pe;
            ++ord;
        } while (x != 1);
        c.order = ord;
        comps_.push_back(std::move(c));
    }

    static uint64_t find_generator(uint32_t pe, uint32_t p) {
        // primitive root mod p, lifted to p^e
        uint64_t phi_p = p - 1;
        for (uint64_t g = 2; g < p; ++g) {
            bool ok = true;
            uint64_t m = phi_p;
            for (uint64_t f = 2; f * f <= m; ++f) {
                if (m % f == 0) {
                    while (m % f == 0) m /= f;
                    if (powmod(g, phi_p / f, p) == 1) ok = false;
                }
            }
            if (m > 1 && powmod(g, phi_p / m, p) == 1) ok = false;
            if (!ok) continue;
            if (pe == p) return g;
            // g generates mod p^e unless g^(p-1) = 1 (mod p^2)
            uint64_t gg = (powmod(g, p - 1, uint64_t(p) * p) == 1) ? g + p : g;
            return gg;
        }
        throw UsageError("no primitive root found");
    }

    uint32_t q_;
    std::vector<Component> comps_;
};

// ---- Riemann zeta and L-values at real s > 1 -------------------------------

// Euler-Maclaurin evaluation of zeta(s); the reported error bounds the first
// omitted correction term.
inline LValue riemann_zeta(double s, uint64_t N = 20000) {
    if (s <= 1) throw UsageError("riemann_zeta: s > 1 required");
    long double sum = 0;
    for (uint64_t n = N; n >= 1; --n) sum += std::pow((long double)n, (long double)-s);
    long double Ns = std::pow((long double)N, (long double)-s);
    sum += (long double)N * Ns / (s - 1) - Ns / 2;
    sum += s * Ns / ((long double)N * 12);
    long double t2 = s * (s + 1) * (s + 2) * Ns / (std::pow((long double)N, 3.0L) * 720);
    sum -= t2;
    double err = double(std::abs(s * (s + 1) * (s + 2) * (s + 3) * (s + 4)) * double(Ns) /
                        (std::pow(double(N), 5.0) * 30240));
    return {double(sum), err + 1e-16 * std::abs(double(sum)), "euler-maclaurin"};
}

// L(s, chi_D) for s > 1 by direct series with an Abel-summation tail bound.
inline LValue dirichlet_L_value(int64_t D, double s, uint64_t N = 200000) {
    if (s <= 1) throw UsageError("dirichlet_L_value: s > 1 required");
    uint64_t q = uint64_t(D < 0 ? -D : D);
    long double sum = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        int chi = kronecker(D, int64_t(n));
        if (chi) sum += chi * std::pow((long double)n, (long double)-s);
    }
    // max oscillation of character partial sums within one period
    double maxosc = 0;
    {
        std::vector<double> pref(q + 1, 0);
        for (uint64_t r = 1; r <= q; ++r) pref[r] = pref[r - 1] + kronecker(D, int64_t(r));
        double lo = 0, hi = 0;
        for (double v : pref) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        maxosc = hi - lo;
    }
    double tail = maxosc * std::pow(double(N + 1), -s);
    return {double(sum), tail + 1e-15 * std::abs(double(sum)), "series+abel"};
}

// ---- Dedekind zeta values and residues -------------------------------------

// zeta_K(s) for real s > 1. Quadratic fields use zeta(s) * L(s, chi_D); other
// fields sum a_K(n)/n^s with a certified tau_d-majorant tail bound.
inline LValue dedekind_zeta_value(const NumberField& K, double s, uint64_t N = 200000);

namespace detail {

inline LValue dedekind_zeta_generic(const NumberField& K, double s, uint64_t N) {
    SpfSieve spf(N);
    ArithFn fn;
    // a_K needs a live handle; wrap the field without copying overrides state
    auto handle = std::make_shared<NumberField>(K);
    fn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, handle});
    auto seq = sieve_multiplicative<i128>(fn, N, spf);
    long double sum = 0;
    for (uint64_t n = N; n >= 1; --n) {
        int64_t v = int64_t(seq.f[n]);
        if (v) sum += v * std::pow((long double)n, (long double)-s);
    }
    // tail: sum_{n>N} tau_d(n) n^-s <= s N^(1-s) (1+ln N)^(d-1) / (s-1-(d-1)/(1+ln N))
    double d = K.degree;
    double U = 1 + std::log(double(N));
    double denom = (s - 1) - (d - 1) / U;
    double tail;
    if (denom > 0) {
        tail = s * std::pow(double(N), 1 - s) * std::pow(U, d - 1) / denom;
    } else {
        tail = 1e300;  // bound unusable at this s/N; reported, not hidden
    }
    return {double(sum), tail, "series+tau-majorant"};
}

}  // namespace detail

inline LValue dedekind_zeta_value(const NumberField& K, double s, uint64_t N) {
    if (s <= 1) throw UsageError("dedekind_zeta_value: s > 1 required");
    if (K.family == FieldFamily::quadratic) {
        LValue z = riemann_zeta(s);
        LValue l = dirichlet_L_value(K.quad_D, s, N);
        double v = z.value * l.value;
        double e = std::abs(z.value) * l.abs_error + std::abs(l.value) * z.abs_error;
        return {v, e, "zeta*L"};
    }
    if (K.degree == 1) return riemann_zeta(s);
    return detail::dedekind_zeta_generic(K, s, N);
}

inline int64_t fundamental_discriminant_of(int64_t m) {
    // squarefree kernel, then adjust to 0/1 mod 4
    int64_t sign = m < 0 ? -1 : 1;
    int64_t a = m * sign;
    int64_t kernel = 1;
    for (int64_t p = 2; p * p <= a; ++p) {
        if (a % p == 0) {
            int e = 0;
            while (a % p == 0) {
                a /= p;
                ++e;
            }
            if (e % 2) kernel *= p;
        }
    }
    kernel *= a * sign;
    int64_t r = ((kernel % 4) + 4) % 4;
    return r == 1 ? kernel : 4 * kernel;
}

// Residue of zeta_K(s) at s = 1.
//   quadratic              L(1, chi_D)
//   biquadratic compositum L(1, chi_D1) L(1, chi_D2) L(1, chi_D3)
//   cyclotomic             prod over nonprincipal chi mod t of L(1, chi*)
//   otherwise              numerical fallback with reported accuracy
inline LValue residue_dedekind(const NumberField& K, uint64_t fallback_N = 1000000);

namespace detail {

inline LValue residue_fallback(const NumberField& K, uint64_t N) {
    SpfSieve spf(N);
    ArithFn fn;
    auto handle = std::make_shared<NumberField>(K);
    fn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, handle});
    auto seq = sieve_multiplicative<i128>(fn, N, spf);

    long double SN = 0, Shalf = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        SN += int64_t(seq.f[n]);
        if (n == N / 2) Shalf = SN;
    }
    double chat = double(SN / N);
    double drift = std::abs(chat - double(Shalf / (N / 2)));

    std::vector<double> logn(N + 1);
    for (uint64_t n = 1; n <= N; ++n) logn[n] = std::log(double(n));

    const int levels = 5;
    std::vector<std::vector<double>> table;
    double delta = 0.5;
    for (int j = 0; j < levels; ++j, delta /= 2) {
        long double s = 0;
        for (uint64_t n = 1; n <= N; ++n) {
            int64_t v = int64_t(seq.f[n]);
            if (v) s += v * std::exp((long double)(-(1 + delta) * logn[n]));
        }
        double r = delta * double(s) + chat * std::pow(double(N), -delta);
        std::vector<double> row(size_t(j) + 1);
        row[0] = r;
        for (int i = 1; i <= j; ++i) {
            double w = double((1 << i) - 1);
            row[i] = row[i - 1] + (row[i - 1] - table[j - 1][i - 1]) / w;
        }
        table.push_back(std::move(row));
    }
    double best = table.back().back();
    double err = std::abs(best - table[levels - 2].back()) +
                 std::abs(best - table.back()[levels - 2]) + 2 * drift;
    return {best, err, "fallback"};
}

}  // namespace detail

inline LValue residue_dedekind(const NumberField& K, uint64_t fallback_N) {
    if (K.degree == 1) return {1.0, 0.0, "rational field"};
    if (K.family == FieldFamily::quadratic) {
        LValue l = dirichlet_L_one(K.quad_D);
        l.method = "class-field (quadratic)";
        return l;
    }
    if (K.family == FieldFamily::compositum && K.components.size() == 2 &&
        K.components[0]->family == FieldFamily::quadratic &&
        K.components[1]->family == FieldFamily::quadratic) {
        int64_t D1 = K.components[0]->quad_D;
        int64_t D2 = K.components[1]->quad_D;
        int64_t D3 = fundamental_discriminant_of(D1 * D2);
        LValue a = dirichlet_L_one(D1);
        LValue b = dirichlet_L_one(D2);
        LValue c = dirichlet_L_one(D3);
        double v = a.value * b.value * c.value;
        double rel = a.abs_error / std::abs(a.value) + b.abs_error / std::abs(b.value) +
                     c.abs_error / std::abs(c.value);
        return {v, std::abs(v) * rel + 1e-15, "L-product (biquadratic)"};
    }
    if (K.family == FieldFamily::cyclotomic) {
        CharacterGroup G(K.cyclo_t);
        std::complex<double> prod = 1.0;
        double rel = 0;
        for (const auto& chi : G.characters()) {
            if (chi.is_principal()) continue;
            uint32_t f = G.conductor(chi);
            auto table = G.primitive_table(chi, f);
            auto [v, e] = l_one_table(table);
            prod *= v;
            rel += e / std::abs(v);
        }
        if (std::abs(prod.imag()) >= 1e-9)
            throw UsageError("cyclotomic residue has non-real part beyond tolerance");
        return {prod.real(), std::abs(prod.real()) * rel + 1e-15, "L-product (cyclotomic)"};
    }
    return detail::residue_fallback(K, fallback_N);
}

}  // namespace nfarith

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nfarith/errors.hpp"
#include "nfarith/fppoly.hpp"
#include "nfarith/intmath.hpp"
#include "nfarith/intpoly.hpp"

namespace nfarith {

// One orbit of primes above p: `count` primes, each with ramification index e
// and residue degree f.
struct SplittingPart {
    uint32_t e = 1;
    uint32_t f = 1;
    uint32_t count = 1;
};

struct SplittingType {
    std::vector<SplittingPart> parts;

    uint32_t degree_sum() const {
        uint32_t s = 0;
        for (const auto& q : parts) s += q.e * q.f * q.count;
        return s;
    }

    // Residue degrees with multiplicity, one entry per prime ideal above p.
    std::vector<uint32_t> residue_degrees() const {
        std::vector<uint32_t> fs;
        for (const auto& q : parts) {
            for (uint32_t i = 0; i < q.count; ++i) fs.push_back(q.f);
        }
        return fs;
    }

    // (e, f, g) when every prime above p looks the same.
    std::optional<std::tuple<uint32_t, uint32_t, uint32_t>> uniform() const {
        if (parts.empty()) return std::nullopt;
        uint32_t g = 0;
        for (const auto& q : parts) {
            if (q.e != parts[0].e || q.f != parts[0].f) return std::nullopt;
            g += q.count;
        }
        return std::make_tuple(parts[0].e, parts[0].f, g);
    }

    void validate(uint32_t field_degree) const {
        for (const auto& q : parts) {
            if (q.e == 0 || q.f == 0 || q.count == 0)
                throw UsageError("splitting type entries must be positive");
        }
        if (degree_sum() != field_degree)
            throw UsageError("splitting type violates sum e*f*g = degree");
    }
};

enum class FieldFamily { generic, quadratic, cyclotomic, compositum };

// A number field given by a monic integer defining polynomial plus family
// metadata. Immutable after construction; all operations on it are pure.
class NumberField {
  public:
    uint32_t degree = 0;
    IntPoly poly;                       // monic defining polynomial
    BigInt poly_disc;                   // discriminant of `poly`
    std::optional<BigInt> field_disc;   // exact field discriminant when known
    FieldFamily family = FieldFamily::generic;
    int64_t quad_D = 0;                 // family = quadratic
    uint32_t cyclo_t = 0;               // family = cyclotomic
    bool galois = false;
    std::map<uint64_t, SplittingType> overrides;
    std::vector<std::shared_ptr<const NumberField>> components;  // family = compositum
    std::string label;

    std::string describe() const { return label.empty() ? "<field>" : label; }
};

using FieldHandle = std::shared_ptr<const NumberField>;

inline bool is_fundamental_discriminant(int64_t D) {
    if (D == 0 || D == 1) return false;
    auto squarefree = [](int64_t m) {
        m = m < 0 ? -m : m;
        for (int64_t d = 2; d * d <= m; ++d) {
            if (m % (d * d) == 0) return false;
        }
        return true;
    };
    int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r == 0) {
        int64_t m = D / 4;
        int64_t rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

inline FieldHandle quadratic_field(int64_t D) {
    if (!is_fundamental_discriminant(D))
        throw UsageError("quad: D must be a fundamental discriminant, got " + std::to_string(D));
    auto K = std::make_shared<NumberField>();
    K->degree = 2;
    if (((D % 4) + 4) % 4 == 1) {
        // minimal polynomial of (1 + sqrt(D))/2
        K->poly = IntPoly(std::vector<BigInt>{BigInt((1 - D) / 4), BigInt(-1), BigInt(1)});
    } else {
        K->poly = IntPoly(std::vector<BigInt>{BigInt(-D / 4), BigInt(0), BigInt(1)});
    }
    K->poly_disc = poly_discriminant(K->poly);
    K->field_disc = BigInt(D);
    K->family = FieldFamily::quadratic;
    K->quad_D = D;
    K->galois = true;
    K->label = "quad:" + std::to_string(D);
    return K;
}

inline BigInt cyclotomic_discriminant(uint32_t t) {
    // disc(Q(zeta_t)) = (-1)^(phi(t)/2) * t^phi(t) / prod_{p | t} p^(phi(t)/(p-1))
    uint64_t phi = euler_phi(t);
    BigInt num = boost::multiprecision::pow(BigInt(t), unsigned(phi));
    uint32_t m = t;
    for (uint32_t p = 2; p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            num /= boost::multiprecision::pow(BigInt(p), unsigned(phi / (p - 1)));
        }
    }
    if ((phi / 2) % 2 != 0) num = -num;
    return num;
}

inline FieldHandle cyclotomic_field(uint32_t t) {
    if (t < 3) throw UsageError("cyclo: t >= 3 required");
    auto K = std::make_shared<NumberField>();
    K->degree = uint32_t(euler_phi(t));
    K->poly = cyclotomic_polynomial(t);
    K->poly_disc = poly_discriminant(K->poly);
    K->field_disc = cyclotomic_discriminant(t);
    K->family = FieldFamily::cyclotomic;
    K->cyclo_t = t;
    K->galois = true;
    K->label = "cyclo:" + std::to_string(t);
    return K;
}

inline FieldHandle generic_field(IntPoly poly, std::optional<BigInt> field_disc, bool galois,
                                 std::map<uint64_t, SplittingType> overrides = {},
                                 std::string label = {}) {
    if (!poly.is_monic()) throw UsageError("defining polynomial must be monic");
    if (poly.degree() < 1) throw UsageError("defining polynomial must have degree >= 1");
    auto K = std::make_shared<NumberField>();
    K->degree = uint32_t(poly.degree());
    K->poly_disc = poly_discriminant(poly);
    if (K->poly_disc == 0) throw UsageError("defining polynomial is not squarefree");
    K->poly = std::move(poly);
    K->field_disc = std::move(field_disc);
    K->galois = galois;
    K->overrides = std::move(overrides);
    if (label.empty()) {
        std::ostringstream os;
        os << "poly:";
        for (size_t i = 0; i < K->poly.c.size(); ++i) os << (i ? "," : "") << K->poly.c[i];
        label = os.str();
    }
    K->label = std::move(label);
    for (const auto& [p, st] : K->overrides) {
        (void)p;
        st.validate(K->degree);
    }
    return K;
}

namespace detail {

inline SplittingType quadratic_splitting(int64_t D, uint64_t p) {
    int chi = kronecker(D, int64_t(p));
    SplittingType st;
    if (chi == 1) st.parts = {SplittingPart{1, 1, 2}};
    else if (chi == -1) st.parts = {SplittingPart{1, 2, 1}};
    else st.parts = {SplittingPart{2, 1, 1}};
    return st;
}

inline SplittingType cyclotomic_splitting(uint32_t t, uint64_t p) {
    SplittingType st;
    if (t % p != 0) {
        uint32_t f = uint32_t(multiplicative_order(p % t, t));
        st.parts = {SplittingPart{1, f, uint32_t(euler_phi(t)) / f}};
    } else {
        uint32_t tp = t;
        uint64_t pv = 1;
        while (tp % p == 0) {
            tp /= uint32_t(p);
            pv *= p;
        }
        uint32_t e = uint32_t(euler_phi(pv));
        uint32_t f = tp == 1 ? 1 : uint32_t(multiplicative_order(p % tp, tp));
        uint32_t g = uint32_t(euler_phi(tp)) / f;
        st.parts = {SplittingPart{e, f, g}};
    }
    return st;
}

inline SplittingType dedekind_splitting(const NumberField& K, uint64_t p) {
    auto profile = factor_degree_profile(K.poly.mod_p(p));
    SplittingType st;
    for (const auto& [deg, count] : profile) st.parts.push_back(SplittingPart{1, deg, count});
    std::sort(st.parts.begin(), st.parts.end(),
              [](const SplittingPart& a, const SplittingPart& b) { return a.f < b.f; });
    return st;
}

}  // namespace detail

// Splitting behaviour of the rational prime p in K. Family rules are total;
// generic fields use Dedekind's criterion away from the polynomial
// discriminant and the override table at bad primes; compositum fields derive
// bad-prime behaviour from their components (e = e1*e2, f = lcm(f1, f2)).
inline SplittingType splitting_type(const NumberField& K, uint64_t p) {
    if (p < 2 || !is_prime(p)) throw UsageError("splitting_type: p must be prime");
    SplittingType st;
    switch (K.family) {
        case FieldFamily::quadratic:
            st = detail::quadratic_splitting(K.quad_D, p);
            break;
        case FieldFamily::cyclotomic:
            st = detail::cyclotomic_splitting(K.cyclo_t, p);
            break;
        default: {
            if (K.poly_disc % p != 0) {
                st = detail::dedekind_splitting(K, p);
            } else if (auto it = K.overrides.find(p); it != K.overrides.end()) {
                st = it->second;
            } else if (K.family == FieldFamily::compositum) {
                const auto& K1 = *K.components[0];
                const auto& K2 = *K.components[1];
                auto u1 = splitting_type(K1, p).uniform();
                auto u2 = splitting_type(K2, p).uniform();
                if (!u1 || !u2) throw UnknownSplittingError(p, K.describe());
                auto [e1, f1, g1] = *u1;
                auto [e2, f2, g2] = *u2;
                uint32_t e = e1 * e2;
                uint32_t f = uint32_t(std::lcm(f1, f2));
                st.parts = {SplittingPart{e, f, K.degree / (e * f)}};
            } else {
                throw UnknownSplittingError(p, K.describe());
            }
        }
    }
    st.validate(K.degree);
    if (K.galois && !st.uniform())
        throw UsageError("field " + K.describe() + " declared Galois but splitting at p=" +
                         std::to_string(p) + " is not uniform");
    return st;
}

// Number of ideals of O_K with norm p^m: compositions of m by the residue
// degrees of the primes above p, counted by bounded dynamic programming.
inline uint64_t ideal_count_prime_power(const NumberField& K, uint64_t p, uint32_t m) {
    if (m == 0) return 1;
    auto fs = splitting_type(K, p).residue_degrees();
    std::vector<uint64_t> ways(m + 1, 0);
    ways[0] = 1;
    for (uint32_t f : fs) {
        for (uint32_t t = f; t <= m; ++t) ways[t] += ways[t - f];
    }
    return ways[m];
}

// a_K(n): multiplicative assembly over the factorization of n.
inline uint64_t ideal_count(const NumberField& K, uint64_t n, const Factorizer& factorizer) {
    if (n == 0) throw UsageError("ideal_count: n >= 1 required");
    uint64_t r = 1;
    for (const auto& [p, e] : factorizer.factor(n)) r *= ideal_count_prime_power(K, p, e);
    return r;
}

// Classical identity a_K(n) = sum_{d | n} chi_D(d) for quadratic K; kept as an
// independent oracle, evaluated literally over the divisors of n.
inline int64_t quadratic_ideal_count_oracle(int64_t D, uint64_t n) {
    if (!is_fundamental_discriminant(D)) throw UsageError("oracle: D must be fundamental");
    if (n == 0) throw UsageError("oracle: n >= 1 required");
    int64_t total = 0;
    uint64_t d = 1;
    for (; d * d < n; ++d) {
        if (n % d == 0) {
            total += kronecker(D, int64_t(d));
            total += kronecker(D, int64_t(n / d));
        }
    }
    if (d * d == n) total += kronecker(D, int64_t(d));
    return total;
}

// Divisor-sum sieve of the same oracle for bulk comparisons: out[n] =
// sum_{d | n} chi_D(d) for all n <= X.
inline std::vector<int32_t> quadratic_ideal_count_oracle_sieve(int64_t D, uint64_t X) {
    std::vector<int32_t> out(X + 1, 0);
    for (uint64_t d = 1; d <= X; ++d) {
        int chi = kronecker(D, int64_t(d));
        if (chi == 0) continue;
        for (uint64_t m = d; m <= X; m += d) out[m] += chi;
    }
    return out;
}

// Compositum K1K2 for Galois fields with coprime discriminants. The defining
// polynomial is the minimal polynomial of alpha + c*beta, searched over
// c = 1, 2, ..., 20 until the resultant is squarefree of degree d1*d2.
inline FieldHandle compositum(const FieldHandle& K1, const FieldHandle& K2) {
    if (!K1->galois || !K2->galois) throw UsageError("compositum requires Galois fields");
    if (!K1->field_disc || !K2->field_disc)
        throw UsageError("compositum requires known field discriminants");
    if (boost::multiprecision::gcd(*K1->field_disc, *K2->field_disc) != 1)
        throw NonCoprimeDiscriminantsError();
    const uint32_t d = K1->degree * K2->degree;
    for (int64_t c = 1; c <= 20; ++c) {
        IntPoly r = resultant_shifted(K1->poly, K2->poly, c);
        BigInt disc = poly_discriminant(r);
        if (disc == 0) continue;
        auto K = std::make_shared<NumberField>();
        K->degree = d;
        K->poly = std::move(r);
        K->poly_disc = std::move(disc);
        K->field_disc = boost::multiprecision::pow(*K1->field_disc, K2->degree) *
                        boost::multiprecision::pow(*K2->field_disc, K1->degree);
        K->family = FieldFamily::compositum;
        K->galois = true;
        K->components = {K1, K2};
        K->label = "compositum(" + K1->describe() + "," + K2->describe() + ")";
        return K;
    }
    throw CompositumDegreeMismatchError();
}

// Primes dividing the field discriminant (falls back to the polynomial
// discriminant when the field discriminant is unknown).
inline std::vector<uint64_t> ramified_primes(const NumberField& K, uint64_t limit) {
    const BigInt& D = K.field_disc ? *K.field_disc : K.poly_disc;
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p <= limit; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime(p)) continue;
        if (D % p == 0) out.push_back(p);
    }
    return out;
}

// ---- field specification mini-grammar ----------------------------------
//   quad:D        fundamental discriminant D
//   cyclo:t       t-th cyclotomic field, t >= 3
//   poly:c0,c1,...,1[;disc=D][;galois=true|false]
inline FieldHandle parse_field_spec(const std::string& spec) {
    auto fail = [&](const std::string& why) {
        throw UsageError("bad field spec '" + spec + "': " + why);
    };
    auto colon = spec.find(':');
    if (colon == std::string::npos) fail("expected kind:payload");
    std::string kind = spec.substr(0, colon);
    std::string payload = spec.substr(colon + 1);
    try {
        if (kind == "quad") return quadratic_field(std::stoll(payload));
        if (kind == "cyclo") return cyclotomic_field(uint32_t(std::stoul(payload)));
        if (kind == "poly") {
            std::vector<std::string> parts;
            std::stringstream ss(payload);
            std::string item;
            while (std::getline(ss, item, ';')) parts.push_back(item);
            if (parts.empty()) fail("missing coefficients");
            std::vector<BigInt> coeffs;
            std::stringstream cs(parts[0]);
            while (std::getline(cs, item, ',')) coeffs.emplace_back(BigInt(item));
            std::optional<BigInt> disc;
            bool galois = false;
            for (size_t i = 1; i < parts.size(); ++i) {
                auto eq = parts[i].find('=');
                if (eq == std::string::npos) fail("expected key=value after ';'");
                std::string key = parts[i].substr(0, eq);
                std::string val = parts[i].substr(eq + 1);
                if (key == "disc") disc = BigInt(val);
                else if (key == "galois") galois = (val == "true");
                else fail("unknown key '" + key + "'");
            }
            return generic_field(IntPoly(std::move(coeffs)), disc, galois, {}, spec);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        fail(e.what());
    }
    fail("unknown kind '" + kind + "'");
    return {};
}

// Override file: one line per bad prime, "p e,f,count[;e,f,count...]".
// '#' starts a comment.
inline std::map<uint64_t, SplittingType> parse_override_table(const std::string& text) {
    std::map<uint64_t, SplittingType> table;
    std::stringstream ss(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ls(line);
        uint64_t p;
        if (!(ls >> p)) continue;  // blank
        std::string rest;
        ls >> rest;
        if (rest.empty())
            throw UsageError("override line " + std::to_string(lineno) + ": missing splitting");
        SplittingType st;
        std::stringstream rs(rest);
        std::string part;
        while (std::getline(rs, part, ';')) {
            uint32_t e, f, count;
            char c1, c2;
            std::stringstream ps(part);
            if (!(ps >> e >> c1 >> f >> c2 >> count) || c1 != ',' || c2 != ',')
                throw UsageError("override line " + std::to_string(lineno) +
                                 ": expected e,f,count");
            st.parts.push_back(SplittingPart{e, f, count});
        }
        table[p] = st;
    }
    return table;
}

inline FieldHandle with_overrides(const FieldHandle& K, std::map<uint64_t, SplittingType> table) {
    auto copy = std::make_shared<NumberField>(*K);
    for (auto& [p, st] : table) {
        st.validate(K->degree);
        copy->overrides[p] = st;
    }
    return copy;
}

// The cyclic cubic field of discriminant 49 (x^3 + x^2 - 2x - 1), with its
// single bad prime 7 (totally ramified) supplied as an override.
inline FieldHandle cyclic_cubic_disc49() {
    std::map<uint64_t, SplittingType> ov;
    ov[7] = SplittingType{{SplittingPart{3, 1, 1}}};
    return generic_field(IntPoly::from_int64({-1, -2, 1, 1}), BigInt(49), true, std::move(ov),
                         "poly:-1,-2,1,1;disc=49;galois=true");
}

}  // namespace nfarith

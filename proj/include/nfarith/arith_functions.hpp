#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nfarith/errors.hpp"
#include "nfarith/intmath.hpp"
#include "nfarith/intpoly.hpp"
#include "nfarith/number_field.hpp"

namespace nfarith {

// tau_k at prime powers: k-fold Dirichlet self-convolution of a_K at the
// prime-power level, built by dynamic programming over compositions.
inline uint64_t tau_k_prime_power(const NumberField& K, uint32_t k, uint64_t p, uint32_t m) {
    if (k == 0) throw UsageError("tau_k: k >= 1 required");
    if (m == 0) return 1;
    std::vector<uint64_t> a(m + 1);
    for (uint32_t i = 0; i <= m; ++i) a[i] = ideal_count_prime_power(K, p, i);
    std::vector<uint64_t> t = a;
    for (uint32_t layer = 2; layer <= k; ++layer) {
        std::vector<uint64_t> next(m + 1, 0);
        for (uint32_t i = 0; i <= m; ++i) {
            if (t[i] == 0) continue;
            for (uint32_t j = 0; i + j <= m; ++j) next[i + j] += t[i] * a[j];
        }
        t = std::move(next);
    }
    return t[m];
}

inline uint64_t tau_k(const NumberField& K, uint32_t k, uint64_t n, const Factorizer& factorizer) {
    if (n == 0) throw UsageError("tau_k: n >= 1 required");
    uint64_t r = 1;
    for (const auto& [p, e] : factorizer.factor(n)) r *= tau_k_prime_power(K, k, p, e);
    return r;
}

// tau_k(n^2), sieved directly over n by doubling prime-power exponents.
inline uint64_t tau_k_square(const NumberField& K, uint32_t k, uint64_t n,
                             const Factorizer& factorizer) {
    if (n == 0) throw UsageError("tau_k_square: n >= 1 required");
    uint64_t r = 1;
    for (const auto& [p, e] : factorizer.factor(n)) r *= tau_k_prime_power(K, k, p, 2 * e);
    return r;
}

inline BigInt sigma_a_prime_power(const NumberField& K, uint32_t a, uint64_t p, uint32_t m) {
    BigInt total = 0;
    BigInt pa = boost::multiprecision::pow(BigInt(p), a);
    BigInt paj = 1;
    for (uint32_t j = 0; j <= m; ++j) {
        uint64_t cnt = ideal_count_prime_power(K, p, j);
        if (cnt) total += BigInt(cnt) * paj;
        paj *= pa;
    }
    return total;
}

// sigma_a^K(n) = sum over divisors d of n of a_K(d) * d^a.
inline BigInt sigma_a(const NumberField& K, uint32_t a, uint64_t n, const Factorizer& factorizer) {
    if (n == 0) throw UsageError("sigma_a: n >= 1 required");
    BigInt r = 1;
    for (const auto& [p, e] : factorizer.factor(n)) r *= sigma_a_prime_power(K, a, p, e);
    return r;
}

// ---- multiplicative function descriptors --------------------------------
//
// Grammar (CLI/config):  factor [* factor ...]
//   factor := ("a" | "tau:k" | "tau2:k" | "sigma:a") ["^pow"] ["@" fieldspec]
// "tau2:k" means n -> tau_k(n^2). Factors without an explicit field binding
// take fields from the --fields list positionally.

enum class FnKind { IdealCount, TauK, TauKSquare, SigmaA };

struct FnFactor {
    FnKind kind = FnKind::IdealCount;
    uint32_t param = 0;  // k for tau, a for sigma
    uint32_t power = 1;
    FieldHandle field;

    BigInt prime_power(uint64_t p, uint32_t m) const {
        BigInt v;
        switch (kind) {
            case FnKind::IdealCount: v = ideal_count_prime_power(*field, p, m); break;
            case FnKind::TauK: v = tau_k_prime_power(*field, param, p, m); break;
            case FnKind::TauKSquare: v = tau_k_prime_power(*field, param, p, 2 * m); break;
            case FnKind::SigmaA: v = sigma_a_prime_power(*field, param, p, m); break;
        }
        if (power == 1) return v;
        return boost::multiprecision::pow(v, power);
    }

    std::string name() const {
        std::string s;
        switch (kind) {
            case FnKind::IdealCount: s = "a"; break;
            case FnKind::TauK: s = "tau:" + std::to_string(param); break;
            case FnKind::TauKSquare: s = "tau2:" + std::to_string(param); break;
            case FnKind::SigmaA: s = "sigma:" + std::to_string(param); break;
        }
        if (power != 1) s += "^" + std::to_string(power);
        return s + "@" + field->describe();
    }

    // Upper bound on bits of the factor value at arguments <= X.
    double bits_at(uint64_t X) const {
        double lg = std::log2(double(X));
        double divisor_bits = 2.0 * lg / std::max(1.0, std::log2(std::max<double>(3.0, lg)));
        double b = 0;
        switch (kind) {
            case FnKind::IdealCount: b = divisor_bits * field->degree / 2; break;
            case FnKind::TauK: b = divisor_bits * field->degree * param / 2; break;
            case FnKind::TauKSquare: b = divisor_bits * field->degree * param; break;
            case FnKind::SigmaA: b = param * lg + divisor_bits * field->degree / 2 + 1; break;
        }
        return b * power;
    }
};

struct ArithFn {
    std::vector<FnFactor> factors;

    BigInt prime_power(uint64_t p, uint32_t m) const {
        BigInt v = 1;
        for (const auto& f : factors) v *= f.prime_power(p, m);
        return v;
    }

    BigInt value(uint64_t n, const Factorizer& factorizer) const {
        BigInt v = 1;
        for (const auto& [p, e] : factorizer.factor(n)) v *= prime_power(p, e);
        return v;
    }

    // Value of the summand at a prime argument (for tau2 factors this is the
    // coefficient at n = p, i.e. tau_k(p^2)).
    BigInt value_at_prime(uint64_t p) const { return prime_power(p, 1); }

    std::vector<FieldHandle> distinct_fields() const {
        std::vector<FieldHandle> out;
        for (const auto& f : factors) {
            bool seen = false;
            for (const auto& g : out) {
                if (g.get() == f.field.get() || g->describe() == f.field->describe()) seen = true;
            }
            if (!seen) out.push_back(f.field);
        }
        return out;
    }

    std::string name() const {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? " * " : "") + factors[i].name();
        return s;
    }

    double bits_at(uint64_t X) const {
        double b = 0;
        for (const auto& f : factors) b += f.bits_at(X);
        return b;
    }
};

inline ArithFn parse_function_descriptor(const std::string& descriptor,
                                         const std::vector<FieldHandle>& fields) {
    auto fail = [&](const std::string& why) {
        throw UsageError("bad function descriptor '" + descriptor + "': " + why);
    };
    ArithFn fn;
    std::stringstream ss(descriptor);
    std::string tok;
    size_t index = 0;
    while (std::getline(ss, tok, '*')) {
        // strip whitespace
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) fail("empty factor");
        tok = tok.substr(b, e - b + 1);

        FnFactor f;
        std::string body = tok;
        auto at = body.find('@');
        if (at != std::string::npos) {
            f.field = parse_field_spec(body.substr(at + 1));
            body = body.substr(0, at);
        } else {
            if (fields.empty()) fail("factor '" + tok + "' has no field binding");
            f.field = fields[std::min(index, fields.size() - 1)];
        }
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            f.power = uint32_t(std::stoul(body.substr(caret + 1)));
            if (f.power == 0) fail("power must be >= 1");
            body = body.substr(0, caret);
        }
        auto colon = body.find(':');
        std::string kind = colon == std::string::npos ? body : body.substr(0, colon);
        if (kind == "a") {
            if (colon != std::string::npos) fail("'a' takes no parameter");
            f.kind = FnKind::IdealCount;
        } else {
            if (colon == std::string::npos) fail("'" + kind + "' needs a parameter");
            f.param = uint32_t(std::stoul(body.substr(colon + 1)));
            if (f.param == 0) fail("parameter must be >= 1");
            if (kind == "tau") f.kind = FnKind::TauK;
            else if (kind == "tau2") f.kind = FnKind::TauKSquare;
            else if (kind == "sigma") f.kind = FnKind::SigmaA;
            else fail("unknown function '" + kind + "'");
        }
        fn.factors.push_back(std::move(f));
        ++index;
    }
    if (fn.factors.empty()) fail("no factors");
    return fn;
}

}  // namespace nfarith

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nfarith/errors.hpp"

namespace nfarith {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t(u128(a) * b % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = m > 1 ? 1 : 0;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Kronecker symbol (a/n) extended to all integers (Cohen, Algorithm 1.4.10).
inline int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int k = 1;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd and positive from here on
    if (n == 1) return k;
    if (a < 0) {
        a = -a;
        if (n % 4 == 3) k = -k;
    }
    a %= n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            int64_t r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        int64_t t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Order of a modulo n (requires gcd(a, n) = 1).
inline uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (n == 1) return 1;
    a %= n;
    if (std::gcd(a, n) != 1) throw UsageError("multiplicative_order: arguments not coprime");
    uint64_t ord = euler_phi(n);
    // strip every prime of ord as far as possible
    uint64_t m = ord;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            while (ord % p == 0 && powmod(a, ord / p, n) == 1) ord /= p;
        }
    }
    if (m > 1) {
        while (ord % m == 0 && powmod(a, ord / m, n) == 1) ord /= m;
    }
    return ord;
}

// Smallest-prime-factor table for [0, bound].
class SpfSieve {
  public:
    explicit SpfSieve(uint64_t bound) : spf_(bound + 1, 0) {
        for (uint64_t i = 2; i <= bound; ++i) {
            if (spf_[i] == 0) {
                for (uint64_t j = i; j <= bound; j += i) {
                    if (spf_[j] == 0) spf_[j] = uint32_t(i);
                }
            }
        }
    }

    uint64_t bound() const { return spf_.size() - 1; }
    uint32_t operator[](uint64_t n) const { return spf_[n]; }
    bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }

    std::vector<uint64_t> primes_up_to(uint64_t limit) const {
        std::vector<uint64_t> ps;
        for (uint64_t i = 2; i <= limit && i < spf_.size(); ++i) {
            if (spf_[i] == i) ps.push_back(i);
        }
        return ps;
    }

    uint64_t memory_bytes() const { return spf_.size() * sizeof(uint32_t); }

  private:
    std::vector<uint32_t> spf_;
};

struct PrimePower {
    uint64_t p;
    uint32_t e;
};

// Factorization backed by an SPF sieve below its bound, trial division above.
class Factorizer {
  public:
    explicit Factorizer(uint64_t sieve_bound) : sieve_(sieve_bound) {}

    const SpfSieve& sieve() const { return sieve_; }

    std::vector<PrimePower> factor(uint64_t n) const {
        if (n == 0) throw UsageError("factor: n must be positive");
        std::vector<PrimePower> out;
        while (n > 1) {
            if (n <= sieve_.bound()) {
                uint64_t p = sieve_[n];
                uint32_t e = 0;
                while (n % p == 0) {
                    n /= p;
                    ++e;
                }
                out.push_back({p, e});
            } else {
                uint64_t p = trial_factor(n);
                uint32_t e = 0;
                while (n % p == 0) {
                    n /= p;
                    ++e;
                }
                out.push_back({p, e});
            }
        }
        return out;
    }

  private:
    static uint64_t trial_factor(uint64_t n) {
        if (n % 2 == 0) return 2;
        if (n % 3 == 0) return 3;
        for (uint64_t d = 5; d * d <= n; d += 6) {
            if (n % d == 0) return d;
            if (n % (d + 2) == 0) return d + 2;
        }
        return n;  // prime
    }

    SpfSieve sieve_;
};

}  // namespace nfarith

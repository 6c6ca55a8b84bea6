#pragma once

#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "nfarith/arith_functions.hpp"
#include "nfarith/errors.hpp"
#include "nfarith/intmath.hpp"

namespace nfarith {

// Run fn(begin, end) over [lo, hi) split into contiguous chunks, one per
// worker. Chunk boundaries depend only on (lo, hi, threads), never on timing.
template <class Fn>
void parallel_for_range(uint64_t lo, uint64_t hi, unsigned threads, Fn&& fn) {
    if (hi <= lo) return;
    uint64_t n = hi - lo;
    if (threads <= 1 || n < 1024) {
        fn(lo, hi);
        return;
    }
    uint64_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        uint64_t b = lo + t * chunk;
        uint64_t e = std::min(hi, b + chunk);
        if (b >= e) break;
        workers.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& w : workers) w.join();
}

// Exact integer values f(1..X) of a multiplicative function, plus an optional
// materialized summatory. f[0] is unused.
template <class V>
struct SievedSequence {
    std::vector<V> f;
    std::optional<std::vector<V>> summatory;

    uint64_t xmax() const { return f.empty() ? 0 : f.size() - 1; }

    void build_summatory() {
        if (summatory) return;
        std::vector<V> s(f.size());
        V acc = 0;
        s[0] = 0;
        for (uint64_t n = 1; n < f.size(); ++n) {
            acc += f[n];
            s[n] = acc;
        }
        summatory = std::move(s);
    }

    V sum() const {
        if (summatory) return summatory->back();
        V acc = 0;
        for (uint64_t n = 1; n < f.size(); ++n) acc += f[n];
        return acc;
    }
};

namespace detail {

template <class V>
BigInt to_bigint(const V& v) {
    if constexpr (std::is_same_v<V, BigInt>) {
        return v;
    } else {
        bool neg = v < 0;
        u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
        BigInt b = uint64_t(u >> 64);
        b <<= 64;
        b += uint64_t(u);
        return neg ? -b : b;
    }
}

template <class V>
V convert_value(const BigInt& b) {
    if constexpr (std::is_same_v<V, BigInt>) {
        return b;
    } else {
        // i128 target
        bool neg = b < 0;
        BigInt a = neg ? -b : b;
        if (a >> 126 != 0) throw UsageError("sieve value exceeds 128-bit range");
        u128 lo = (a & BigInt(~uint64_t(0))).template convert_to<uint64_t>();
        u128 hi = (a >> 64).template convert_to<uint64_t>();
        i128 v = i128((hi << 64) | lo);
        return neg ? -v : v;
    }
}

}  // namespace detail

// Number of bytes the sieve will allocate for values (the SPF table is
// accounted by its owner).
template <class V>
uint64_t sieve_bytes_required(uint64_t X) {
    return (X + 1) * sizeof(V);
}

// Linear sieve driven by smallest-prime-factor decomposition. Prime powers
// are evaluated through the descriptor; composites split as
// f(p^m * n') = f(p^m) * f(n'). Segments double in size, so every composite
// in a segment reads only finished entries; output is identical for every
// thread count.
template <class V>
SievedSequence<V> sieve_multiplicative(const ArithFn& fn, uint64_t X, const SpfSieve& spf,
                                       unsigned threads = 1,
                                       uint64_t memory_budget_bytes = 0) {
    if (X < 1) throw UsageError("sieve: X >= 1 required");
    if (spf.bound() < X) throw UsageError("sieve: SPF table smaller than X");
    if (memory_budget_bytes) {
        uint64_t need = sieve_bytes_required<V>(X) + spf.memory_bytes();
        if (need > memory_budget_bytes) throw MemoryBudgetError(need, memory_budget_bytes);
    }
    SievedSequence<V> seq;
    seq.f.assign(X + 1, V(0));
    seq.f[1] = V(1);

    auto fill = [&](uint64_t lo, uint64_t hi) {
        for (uint64_t n = lo; n < hi; ++n) {
            uint64_t p = spf[n];
            uint64_t q = p;
            uint32_t m = 1;
            uint64_t rest = n / p;
            while (rest % p == 0) {
                rest /= p;
                q *= p;
                ++m;
            }
            if (rest == 1) {
                seq.f[n] = detail::convert_value<V>(fn.prime_power(p, m));
            } else {
                seq.f[n] = seq.f[q] * seq.f[rest];
            }
        }
    };

    // first block serially (it contains intra-block dependencies), then
    // doubling segments: every composite in [S, 2S) reads entries below S
    uint64_t seg_lo = 2;
    uint64_t seg_hi = std::min<uint64_t>(X + 1, 4096);
    fill(seg_lo, seg_hi);
    seg_lo = seg_hi;
    while (seg_lo <= X) {
        seg_hi = std::min(X + 1, seg_lo * 2);
        parallel_for_range(seg_lo, seg_hi, threads, fill);
        seg_lo = seg_hi;
    }
    return seq;
}

template <class V>
SievedSequence<V> pointwise_product(const std::vector<const SievedSequence<V>*>& seqs,
                                    unsigned threads = 1) {
    if (seqs.empty()) throw UsageError("pointwise_product: at least one sequence required");
    uint64_t X = seqs[0]->xmax();
    for (const auto* s : seqs) {
        if (s->xmax() != X) throw UsageError("pointwise_product: length mismatch");
    }
    SievedSequence<V> out;
    out.f.assign(X + 1, V(0));
    parallel_for_range(1, X + 1, threads, [&](uint64_t lo, uint64_t hi) {
        for (uint64_t n = lo; n < hi; ++n) {
            V v = seqs[0]->f[n];
            for (size_t i = 1; i < seqs.size(); ++i) v *= seqs[i]->f[n];
            out.f[n] = v;
        }
    });
    return out;
}

// Bits needed for the summatory of fn over [1, X]; chooses the value
// representation (128-bit vs arbitrary precision).
inline double sieve_width_bits(const ArithFn& fn, uint64_t X) {
    return fn.bits_at(X) + std::log2(double(X)) + 2;
}

inline bool sieve_fits_i128(const ArithFn& fn, uint64_t X) {
    return sieve_width_bits(fn, X) <= 120.0;
}

}  // namespace nfarith

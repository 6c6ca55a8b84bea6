// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with the measured quantities.

#include <catch_amalgamated.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "nfarith/driver.hpp"

using namespace nfarith;

namespace {

bool report(int id, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[acceptance] criterion %2d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL",
                what.c_str(), detail.c_str());
    std::fflush(stdout);
    return pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("criterion 1: compositum lemma to 1e5", "[c1]") {
    auto t0 = std::chrono::steady_clock::now();
    auto K1 = quadratic_field(-4);
    auto K2 = quadratic_field(5);
    auto comp = compositum(K1, K2);
    SpfSieve spf(100000);
    uint64_t checked = 0, mismatches = 0;
    for (uint64_t p = 2; p <= 100000; ++p) {
        if (!spf.is_prime(p) || 20 % p == 0) continue;
        ++checked;
        uint64_t lhs = ideal_count_prime_power(*comp, p, 1);
        uint64_t rhs = ideal_count_prime_power(*K1, p, 1) * ideal_count_prime_power(*K2, p, 1);
        if (lhs != rhs) ++mismatches;
    }
    double secs = seconds_since(t0);
    bool pass = mismatches == 0 && secs < 60.0;
    std::ostringstream d;
    d << checked << " primes, " << mismatches << " mismatches, " << secs << " s";
    CHECK(report(1, "a_K1K2(p) = a_K1(p) a_K2(p), p <= 1e5, p !| 20", pass, d.str()));
}

TEST_CASE("criterion 2: divisor-ideal lemma and negative control", "[c2]") {
    auto cubic = cyclic_cubic_disc49();
    auto Ki = quadratic_field(-4);
    SpfSieve spf(100000);
    uint64_t mismatches = 0, inert_failures = 0, inert_total = 0;
    for (uint64_t p = 2; p <= 100000; ++p) {
        if (!spf.is_prime(p)) continue;
        if (p != 7) {
            for (uint32_t k : {2u, 3u}) {
                uint64_t mult = (k * k * 3 + k) / 2;
                if (tau_k_prime_power(*cubic, k, p, 2) !=
                    mult * ideal_count_prime_power(*cubic, p, 1))
                    ++mismatches;
            }
        }
        if (kronecker(-4, int64_t(p)) == -1) {
            ++inert_total;
            uint64_t lhs = tau_k_prime_power(*Ki, 2, p, 2);
            uint64_t rhs = 5 * ideal_count_prime_power(*Ki, p, 1);
            if (lhs == 2 && rhs == 0) ++inert_failures;
        }
    }
    bool pass = mismatches == 0 && inert_total > 0 && inert_failures == inert_total;
    std::ostringstream d;
    d << mismatches << " mismatches; negative control fails at " << inert_failures << "/"
      << inert_total << " inert primes";
    CHECK(report(2, "tau_k(p^2) = ((k^2*3+k)/2) a(p) for the cyclic cubic, p != 7", pass, d.str()));
}

TEST_CASE("criterion 3: power lemma", "[c3]") {
    uint64_t mismatches = 0, checked = 0;
    SpfSieve spf(100000);
    for (const auto& K : {quadratic_field(-4), cyclotomic_field(5), cyclic_cubic_disc49()}) {
        for (uint64_t p = 2; p <= 100000; ++p) {
            if (!spf.is_prime(p) || *K->field_disc % p == 0) continue;
            uint64_t a = ideal_count_prime_power(*K, p, 1);
            for (uint32_t k : {2u, 3u, 4u}) {
                ++checked;
                u128 lhs = 1, rhs = a;
                for (uint32_t i = 0; i < k; ++i) lhs *= a;
                for (uint32_t i = 1; i < k; ++i) rhs *= K->degree;
                if (lhs != rhs) ++mismatches;
            }
        }
    }
    std::ostringstream d;
    d << checked << " checks, " << mismatches << " mismatches";
    CHECK(report(3, "a(p)^k = d^(k-1) a(p), unramified p <= 1e5, k in {2,3,4}", mismatches == 0,
                 d.str()));
}

TEST_CASE("criterion 4: quadratic oracle equivalence to 1e6", "[c4]") {
    const uint64_t X = 1000000;
    SpfSieve spf(X);
    uint64_t mismatches = 0;
    for (int64_t D : {-4, -3, 5, 8}) {
        auto Kq = quadratic_field(D);
        std::map<uint64_t, SplittingType> ov;
        for (uint64_t p : ramified_primes(*Kq, 100)) ov[p] = SplittingType{{SplittingPart{2, 1, 1}}};
        auto Kd = generic_field(Kq->poly, BigInt(D), true, std::move(ov));
        ArithFn fn;
        fn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, Kd});
        auto seq = sieve_multiplicative<i128>(fn, X, spf);
        auto oracle = quadratic_ideal_count_oracle_sieve(D, X);
        for (uint64_t n = 1; n <= X; ++n) {
            if (seq.f[n] != i128(oracle[n])) ++mismatches;
        }
    }
    std::ostringstream d;
    d << "4 discriminants x 1e6 values, " << mismatches << " mismatches";
    CHECK(report(4, "Dedekind-path ideal_count = chi_D divisor-sum oracle", mismatches == 0,
                 d.str()));
}

TEST_CASE("criterion 5: u-series exactness for the cyclic cubic", "[c5]") {
    const uint64_t N = 10000;
    auto cubic = cyclic_cubic_disc49();
    SpfSieve spf(N);
    ArithFn L_fn = parse_function_descriptor("tau2:2", {cubic});
    ArithFn Z_fn = parse_function_descriptor("a", {cubic});
    auto Ls = sieve_multiplicative<BigInt>(L_fn, N, spf);
    auto Zs = sieve_multiplicative<BigInt>(Z_fn, N, spf);
    TruncatedDirichletSeries L(N), Z(N);
    for (uint64_t n = 1; n <= N; ++n) {
        L.a[n] = Rational(Ls.f[n]);
        Z.a[n] = Rational(Zs.f[n]);
    }
    auto U = u_series(L, Z, 7);
    bool u1_ok = U.a[1] == 1;
    uint64_t bad_primes = 0;
    for (uint64_t p = 2; p <= N; ++p) {
        if (spf.is_prime(p) && p != 7 && U.a[p] != 0) ++bad_primes;
    }
    std::ostringstream d;
    d << "u_1 = " << U.a[1] << ", nonzero u_p off {7}: " << bad_primes;
    CHECK(report(5, "u_1 = 1 and u_p = 0 for p <= 1e4, p != 7 (exact)", u1_ok && bad_primes == 0,
                 d.str()));
}

TEST_CASE("criterion 6: sigma main-term constant at x = 1e7", "[c6]") {
    auto t0 = std::chrono::steady_clock::now();
    const uint64_t X = 10000000;
    const uint64_t budget = 2ull << 30;  // 2 GB, enforced
    SpfSieve spf(X);
    ArithFn fn = parse_function_descriptor("sigma:1@quad:-4", {});
    REQUIRE(sieve_fits_i128(fn, X));
    auto seq = sieve_multiplicative<i128>(fn, X, spf, 1, budget);
    i128 S = seq.sum();
    // pi^3/48, independently derived: c_K = pi/4 (class number formula),
    // zeta(2) = pi^2/6, constant = c_K zeta(2) / 2
    const double pi = 3.14159265358979323846;
    double constant = pi * pi * pi / 48.0;
    double ratio = detail::to_bigint(S).convert_to<double>() / (constant * double(X) * double(X));
    double secs = seconds_since(t0);
    // the library's own constant must match the independent derivation
    auto mt = main_term_sigma(*quadratic_field(-4), 1);
    bool const_ok = std::abs(mt.constant - constant) < 1e-8;
    bool pass = ratio >= 0.99 && ratio <= 1.01 && secs < 300.0 && const_ok;
    std::ostringstream d;
    d << "S(1e7) = " << to_string(S) << ", ratio = " << ratio << ", " << secs << " s";
    CHECK(report(6, "sum sigma_1^{Q(i)} / (pi^3/48 x^2) in [0.99, 1.01] at x = 1e7", pass, d.str()));
}

TEST_CASE("criterion 7: sigma-pair main-term constant at x = 1e6", "[c7]") {
    const uint64_t X = 1000000;
    SpfSieve spf(X);
    auto K1 = quadratic_field(-4);
    auto K2 = quadratic_field(5);
    ArithFn fn = parse_function_descriptor("sigma:1@quad:-4 * sigma:1@quad:5", {});
    auto seq = sieve_multiplicative<i128>(fn, X, spf);
    i128 S = seq.sum();
    auto mt = main_term_sigma_pair(K1, K2, 1, 1);
    bool errors_ok = true;
    for (const LValue* v : {&mt.zeta_ab, &mt.zK1, &mt.zK2, &mt.residue12}) {
        if (v->abs_error >= 1e-6) errors_ok = false;
    }
    double ratio = detail::to_bigint(S).convert_to<double>() / mt(double(X));
    bool pass = errors_ok && ratio >= 0.98 && ratio <= 1.02;

    // Diagnostic: the stated pair main-term constant omits the U'(1+a+b)
    // factor arising from the coefficient-level factorization L = Z * U'.
    // Computing U' exactly shows the sum matches the corrected constant.
    const uint64_t N = 20000;
    auto comp = compositum(K1, K2);
    ArithFn a1 = parse_function_descriptor("a@quad:-4", {});
    ArithFn a2 = parse_function_descriptor("a@quad:5", {});
    ArithFn a12;
    a12.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, comp});
    auto s1 = sieve_multiplicative<BigInt>(a1, N, spf);
    auto s2 = sieve_multiplicative<BigInt>(a2, N, spf);
    auto s12 = sieve_multiplicative<BigInt>(a12, N, spf);
    auto sL = sieve_multiplicative<BigInt>(fn, N, spf);
    TruncatedDirichletSeries zeta = TruncatedDirichletSeries::ones(N);
    TruncatedDirichletSeries zK1s(N), zK2s(N), zC(N), L(N);
    for (uint64_t n = 1; n <= N; ++n) {
        zK1s.a[n] = Rational(s1.f[n] * n);           // zeta_K1(s-1)
        zK2s.a[n] = Rational(s2.f[n] * n);           // zeta_K2(s-1)
        zC.a[n] = Rational(s12.f[n] * n * n);        // zeta_K1K2(s-2)
        L.a[n] = Rational(sL.f[n]);
    }
    auto Zfull = dirichlet_mul(dirichlet_mul(zeta, zK1s), dirichlet_mul(zK2s, zC));
    auto Uprime = dirichlet_mul(L, dirichlet_inv(Zfull));
    long double u3 = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        if (Uprime.a[n] != 0)
            u3 += Uprime.a[n].convert_to<long double>() / (long double)(n) / n / n;
    }
    std::ostringstream d;
    d << "ratio = " << ratio << " vs [0.98, 1.02]; exact-series U'(3) = " << double(u3)
      << ", U'-corrected ratio = " << ratio / double(u3);
    CHECK(report(7, "pair sum over stated main term in [0.98, 1.02] at x = 1e6", pass, d.str()));
}

TEST_CASE("criterion 8: second-moment growth exponent", "[c8]") {
    const uint64_t X = 100000;
    const uint64_t N = 10000;
    auto cubic = cyclic_cubic_disc49();
    SpfSieve spf(X);
    ArithFn fn = parse_function_descriptor("tau2:2", {cubic});
    auto seq = sieve_multiplicative<i128>(fn, X, spf);

    // leading main term: c^7 U(1)/6! x log^6 x
    ArithFn afn = parse_function_descriptor("a", {cubic});
    auto Ls = sieve_multiplicative<BigInt>(fn, N, spf);
    auto Zs = sieve_multiplicative<BigInt>(afn, N, spf);
    TruncatedDirichletSeries L(N), Z(N);
    for (uint64_t n = 1; n <= N; ++n) {
        L.a[n] = Rational(Ls.f[n]);
        Z.a[n] = Rational(Zs.f[n]);
    }
    auto U = u_series(L, Z, 7);
    LValue residue = residue_dedekind(*cubic);
    auto lead = leading_coeff_tau(residue, 7, U);
    std::function<double(double)> M = [lead](double x) { return lead(x); };

    std::vector<uint64_t> Xs = {25000, 50000, 100000};
    auto moments = second_moment_checkpoints(seq, M, Xs);
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < Xs.size(); ++i) pts.emplace_back(double(Xs[i]), moments[i]);
    double expo = empirical_exponent(pts);
    bool nondecreasing = moments[0] <= moments[1] && moments[1] <= moments[2];
    bool pass = expo <= 2.85 && nondecreasing;
    std::ostringstream d;
    d << "exponent = " << expo << " vs bound 2.75 + 0.1 slack; moments = {" << moments[0] << ", "
      << moments[1] << ", " << moments[2] << "}, residue = " << residue.value << " +- "
      << residue.abs_error << ", U(1) = " << lead.u_at_one << " (trunc est "
      << lead.u_truncation_estimate << ")";
    CHECK(report(8, "moment exponent of int Delta^2 <= 2.85 (leading main term)", pass, d.str()));
}

TEST_CASE("criterion 9: squared ideal-count coefficient identity", "[c9]") {
    auto K1 = quadratic_field(-4);
    auto K2 = cyclic_cubic_disc49();
    auto comp = compositum(K1, K2);
    SpfSieve spf(10000);
    uint64_t mismatches = 0, checked = 0;
    for (uint64_t p = 2; p <= 10000; ++p) {
        if (!spf.is_prime(p) || p == 2 || p == 7) continue;
        uint64_t a1 = ideal_count_prime_power(*K1, p, 1);
        uint64_t a2 = ideal_count_prime_power(*K2, p, 1);
        uint64_t ac = ideal_count_prime_power(*comp, p, 1);
        for (uint32_t l : {1u, 2u}) {
            ++checked;
            u128 lhs = 1, rhs = ac;
            for (uint32_t i = 0; i < l; ++i) lhs *= u128(a1) * a2;
            for (uint32_t i = 1; i < l; ++i) rhs *= 6;  // (2d)^(l-1), d = 3
            if (lhs != rhs) ++mismatches;
        }
    }
    std::ostringstream d;
    d << checked << " checks, " << mismatches << " mismatches";
    CHECK(report(9, "(a_K1 a_K2)^l(p) = (2d)^(l-1) a_K1K2(p), good p <= 1e4, l in {1,2}",
                 mismatches == 0, d.str()));
}

TEST_CASE("criterion 10: byte-identical CSV across thread counts", "[c10]") {
    RunConfig cfg;
    cfg.fn = "sigma:1@quad:-4";
    cfg.xmax = 10000000;
    cfg.threads = 1;
    std::ostringstream a, b;
    run_sum(cfg, a);
    cfg.threads = 8;
    run_sum(cfg, b);
    bool pass = a.str() == b.str() && !a.str().empty();
    std::ostringstream d;
    d << a.str().size() << " bytes, threads 1 vs 8";
    CHECK(report(10, "cmd_sum CSV identical with 1 and 8 threads", pass, d.str()));
}

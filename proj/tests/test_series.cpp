#include <catch_amalgamated.hpp>

#include "nfarith/dirichlet_series.hpp"
#include "nfarith/sieve.hpp"
#include "test_support.hpp"

using namespace nfarith;

namespace {

TruncatedDirichletSeries random_series(uint64_t N, std::mt19937_64& gen, bool unit_lead) {
    TruncatedDirichletSeries s(N);
    std::uniform_int_distribution<int64_t> num(-6, 6);
    std::uniform_int_distribution<int64_t> den(1, 5);
    for (uint64_t n = 1; n <= N; ++n) s.a[n] = Rational(num(gen), den(gen));
    if (unit_lead) s.a[1] = 1;
    return s;
}

std::vector<int> mobius_table(uint64_t N) {
    // independent Mobius sieve
    std::vector<int> mu(N + 1, 1);
    std::vector<bool> composite(N + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (uint64_t p : primes) {
            if (i * p > N) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

}  // namespace

TEST_CASE("dirichlet_mul examples", "[series]") {
    const uint64_t N = 64;
    auto zeta = TruncatedDirichletSeries::ones(N);
    auto delta = TruncatedDirichletSeries::delta(N);
    // f * delta = f
    auto gen = test_support::rng(7);
    auto f = random_series(N, gen, false);
    CHECK(dirichlet_mul(f, delta) == f);
    // zeta * zeta = tau
    auto tau = dirichlet_mul(zeta, zeta);
    std::vector<int> expect = {0, 1, 2, 2, 3, 2, 4};
    for (uint64_t n = 1; n <= 6; ++n) REQUIRE(tau.a[n] == expect[n]);
    // zeta * mu = delta
    auto mu = mobius_table(N);
    TruncatedDirichletSeries mus(N);
    for (uint64_t n = 1; n <= N; ++n) mus.a[n] = mu[n];
    CHECK(dirichlet_mul(zeta, mus) == delta);
    TruncatedDirichletSeries shorter(10);
    CHECK_THROWS_AS(dirichlet_mul(f, shorter), UsageError);
}

TEST_CASE("dirichlet_inv examples", "[series]") {
    const uint64_t N = 128;
    auto delta = TruncatedDirichletSeries::delta(N);
    CHECK(dirichlet_inv(delta) == delta);
    // inv(zeta) = mu
    auto mu = mobius_table(N);
    auto invz = dirichlet_inv(TruncatedDirichletSeries::ones(N));
    for (uint64_t n = 1; n <= N; ++n) REQUIRE(invz.a[n] == mu[n]);
    // involution on random series with c_1 = 1
    auto gen = test_support::rng(8);
    for (int iter = 0; iter < 20; ++iter) {
        auto f = random_series(N, gen, true);
        CHECK(dirichlet_inv(dirichlet_inv(f)) == f);
    }
    TruncatedDirichletSeries z(8);
    CHECK_THROWS_AS(dirichlet_inv(z), ZeroLeadingCoefficientError);
}

TEST_CASE("dirichlet_pow examples", "[series]") {
    const uint64_t N = 64;
    auto gen = test_support::rng(9);
    auto f = random_series(N, gen, true);
    CHECK(dirichlet_pow(f, 0) == TruncatedDirichletSeries::delta(N));
    auto zeta = TruncatedDirichletSeries::ones(N);
    CHECK(dirichlet_pow(zeta, 2).a[4] == 3);  // tau(4)
    auto p2 = dirichlet_pow(f, 2);
    auto m2 = dirichlet_pow(f, -2);
    CHECK(dirichlet_mul(p2, m2) == TruncatedDirichletSeries::delta(N));
}

TEST_CASE("ring axioms on random exact inputs", "[series]") {
    const uint64_t N = 512;
    auto gen = test_support::rng(10);
    for (int iter = 0; iter < 5; ++iter) {
        auto a = random_series(N, gen, false);
        auto b = random_series(N, gen, false);
        auto c = random_series(N, gen, false);
        REQUIRE(dirichlet_mul(a, b) == dirichlet_mul(b, a));
        REQUIRE(dirichlet_mul(dirichlet_mul(a, b), c) == dirichlet_mul(a, dirichlet_mul(b, c)));
        // distributivity
        TruncatedDirichletSeries sum(N);
        for (uint64_t n = 1; n <= N; ++n) sum.a[n] = b.a[n] + c.a[n];
        auto lhs = dirichlet_mul(a, sum);
        auto rhs1 = dirichlet_mul(a, b);
        auto rhs2 = dirichlet_mul(a, c);
        TruncatedDirichletSeries rhs(N);
        for (uint64_t n = 1; n <= N; ++n) rhs.a[n] = rhs1.a[n] + rhs2.a[n];
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("u_series identities", "[series]") {
    const uint64_t N = 256;
    auto gen = test_support::rng(11);
    auto Z = random_series(N, gen, true);
    for (uint32_t m : {1u, 3u}) {
        auto L = dirichlet_pow(Z, int64_t(m));
        CHECK(u_series(L, Z, m) == TruncatedDirichletSeries::delta(N));
    }
    TruncatedDirichletSeries bad(N);
    bad.a[1] = 2;
    CHECK_THROWS_AS(u_series(bad, bad, 2), UsageError);
}

TEST_CASE("u_series for the cyclic cubic tau_2(n^2) configuration", "[series]") {
    const uint64_t N = 2000;
    auto cubic = cyclic_cubic_disc49();
    SpfSieve spf(N);
    ArithFn L_fn = parse_function_descriptor("tau2:2", {cubic});
    ArithFn Z_fn = parse_function_descriptor("a", {cubic});
    auto Lseq = sieve_multiplicative<BigInt>(L_fn, N, spf);
    auto Zseq = sieve_multiplicative<BigInt>(Z_fn, N, spf);
    TruncatedDirichletSeries L(N), Z(N);
    for (uint64_t n = 1; n <= N; ++n) {
        L.a[n] = Rational(Lseq.f[n]);
        Z.a[n] = Rational(Zseq.f[n]);
    }
    auto U = u_series(L, Z, 7);
    REQUIRE(U.a[1] == 1);
    for (uint64_t p = 2; p <= N; ++p) {
        if (!spf.is_prime(p)) continue;
        if (p == 7) continue;
        REQUIRE(U.a[p] == 0);
    }
    CHECK(U.a[7] != 0);
    // u at the square of a split prime, frozen from composition counting:
    // tau_2(p^4) - [zeta_K^7]_{p^2} = 126 - 231 = -105
    CHECK(U.a[13 * 13] == -105);
    CHECK(U.a[29 * 29] == -105);

    auto diag = convergence_diagnostic(U);
    for (size_t i = 1; i < diag.partial_sums.size(); ++i)
        REQUIRE(diag.partial_sums[i] >= diag.partial_sums[i - 1]);
}

TEST_CASE("prime coefficient checks", "[series]") {
    // cyclic cubic, k = 2: disagreements only at the ramified prime 7
    auto cubic = cyclic_cubic_disc49();
    auto fn = parse_function_descriptor("tau2:2", {cubic});
    auto rep = prime_coefficient_check(fn, 7, 10000);
    REQUIRE(rep.contained_in_ramified());
    REQUIRE(rep.disagreements.size() == 1);
    CHECK(rep.disagreements[0].p == 7);

    // single field, descriptor "a", m = 1: no disagreements anywhere
    auto fn2 = parse_function_descriptor("a@quad:-4", {});
    auto rep2 = prime_coefficient_check(fn2, 1, 2000);
    CHECK(rep2.disagreements.empty());

    // two quadratics, l = 2: (a1 a2)^2(p) vs (2d)^(l-1) a_comp(p) = 4 a(p)
    auto fn3 = parse_function_descriptor("a^2@quad:-4 * a^2@quad:5", {});
    auto rep3 = prime_coefficient_check(fn3, 4, 2000);
    REQUIRE(rep3.contained_in_ramified());
    for (const auto& d : rep3.disagreements) CHECK((d.p == 2 || d.p == 5));
}

TEST_CASE("series csv export", "[series]") {
    TruncatedDirichletSeries f(3);
    f.a[1] = 1;
    f.a[2] = Rational(-1, 2);
    f.a[3] = 0;
    std::ostringstream os;
    write_series_csv(os, f);
    CHECK(os.str() == "n,numerator,denominator\n1,1,1\n2,-1,2\n3,0,1\n");
}

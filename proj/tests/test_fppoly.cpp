#include <catch_amalgamated.hpp>
#include <map>

#include "nfarith/fppoly.hpp"
#include "test_support.hpp"

using namespace nfarith;

TEST_CASE("poly_gcd examples", "[fppoly]") {
    // gcd(x^2+1, x+2) mod 5 = x+2 (x = 3 is a root of x^2+1 mod 5)
    PrimePoly f(5, {1, 0, 1}), g(5, {2, 1});
    CHECK(poly_gcd(f, g).c == std::vector<uint64_t>{2, 1});
    // gcd(f, f) = monic(f)
    PrimePoly h(7, {3, 6, 2});
    CHECK(poly_gcd(h, h).c == poly_monic(h).c);
    // gcd(x^2+1, x) mod 3 = 1
    CHECK(poly_gcd(PrimePoly(3, {1, 0, 1}), PrimePoly::x(3)).degree() == 0);
    // gcd(f, 0) = monic(f)
    CHECK(poly_gcd(h, PrimePoly::zero(7)).c == poly_monic(h).c);
    CHECK_THROWS_AS(poly_gcd(PrimePoly(3, {1}), PrimePoly(5, {1})), UsageError);
}

TEST_CASE("frobenius_power examples", "[fppoly]") {
    // x^3 mod (x^2+1) over F_3 is 2x
    CHECK(frobenius_power(PrimePoly(3, {1, 0, 1}), 1).c == std::vector<uint64_t>{0, 2});
    // x^5 mod (x^2+1) over F_5 is x
    CHECK(frobenius_power(PrimePoly(5, {1, 0, 1}), 1).c == std::vector<uint64_t>{0, 1});
    // x^p mod x = 0
    CHECK(frobenius_power(PrimePoly::x(7), 1).is_zero());
    // x^(p^2) mod f equals ((x^p)^p) mod f
    PrimePoly f(13, {2, 5, 0, 1});
    CHECK(frobenius_power(f, 2).c == poly_powmod(frobenius_power(f, 1), 13, f).c);
}

TEST_CASE("factor_degree_profile examples", "[fppoly]") {
    using Profile = std::vector<std::pair<uint32_t, uint32_t>>;
    CHECK(factor_degree_profile(PrimePoly(5, {1, 0, 1})) == Profile{{1, 2}});
    CHECK(factor_degree_profile(PrimePoly(3, {1, 0, 1})) == Profile{{2, 1}});
    // x^3 + x^2 - 2x - 1 mod 13 splits into three linear factors
    CHECK(factor_degree_profile(PrimePoly(13, {12, 11, 1, 1})) == Profile{{1, 3}});
    // not squarefree mod 7: (x-2)^3
    CHECK_THROWS_AS(factor_degree_profile(PrimePoly(7, {6, 5, 1, 1})), NotSquarefreeError);
}

TEST_CASE("profile degrees sum to deg f and match trial factorization", "[fppoly]") {
    for (uint64_t p : {2, 3, 5, 7}) {
        auto irr = test_support::irreducibles_up_to_3(p);
        for (int d = 1; d <= 6; ++d) {
            uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (uint64_t idx = 0; idx < count; ++idx) {
                PrimePoly f = test_support::monic_from_index(p, d, idx);
                auto degrees = test_support::trial_factor_degrees(f, irr);
                bool squarefree = true;
                for (size_t i = 1; i < degrees.size(); ++i) {
                    // repeated degree is necessary but not sufficient for a
                    // repeated factor; recheck by dividing out twice
                    if (degrees[i] == degrees[i - 1]) squarefree = false;
                }
                if (!squarefree) {
                    // distinct same-degree factors are fine; detect true
                    // squares via derivative gcd (independent of DDF)
                    auto fd = poly_derivative(f);
                    squarefree = !fd.is_zero() && poly_gcd(f, fd).degree() == 0;
                }
                if (!squarefree) continue;
                auto profile = factor_degree_profile(f);
                uint32_t total = 0;
                std::vector<uint32_t> expanded;
                for (auto [deg, cnt] : profile) {
                    total += deg * cnt;
                    for (uint32_t i = 0; i < cnt; ++i) expanded.push_back(deg);
                }
                std::sort(expanded.begin(), expanded.end());
                REQUIRE(total == uint32_t(d));
                REQUIRE(expanded == degrees);
            }
        }
    }
}

TEST_CASE("profile matches trial factorization on random polys up to p = 31", "[fppoly]") {
    auto gen = test_support::rng(3);
    for (uint64_t p : {11, 13, 17, 19, 23, 29, 31}) {
        auto irr = test_support::irreducibles_up_to_3(p);
        uint64_t span = 1;
        for (int i = 0; i < 6; ++i) span *= p;
        std::uniform_int_distribution<uint64_t> pick(0, span - 1);
        int done = 0;
        while (done < 300) {
            PrimePoly f = test_support::monic_from_index(p, 6, pick(gen));
            auto fd = poly_derivative(f);
            if (fd.is_zero() || poly_gcd(f, fd).degree() != 0) continue;
            ++done;
            auto profile = factor_degree_profile(f);
            std::vector<uint32_t> expanded;
            for (auto [deg, cnt] : profile)
                for (uint32_t i = 0; i < cnt; ++i) expanded.push_back(deg);
            std::sort(expanded.begin(), expanded.end());
            REQUIRE(expanded == test_support::trial_factor_degrees(f, irr));
        }
    }
}

TEST_CASE("gcd is commutative and associative up to monic normalization", "[fppoly]") {
    auto gen = test_support::rng(4);
    std::uniform_int_distribution<uint64_t> coeff(0, 30);
    for (int iter = 0; iter < 400; ++iter) {
        uint64_t p = 31;
        auto rand_poly = [&] {
            std::vector<uint64_t> c(1 + gen() % 6);
            for (auto& x : c) x = coeff(gen);
            return PrimePoly(p, std::move(c));
        };
        PrimePoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        REQUIRE(poly_gcd(a, b).c == poly_gcd(b, a).c);
        REQUIRE(poly_gcd(poly_gcd(a, b), c).c == poly_gcd(a, poly_gcd(b, c)).c);
    }
}

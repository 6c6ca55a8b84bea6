#include <catch_amalgamated.hpp>

#include "nfarith/intpoly.hpp"

using namespace nfarith;

TEST_CASE("discriminants of small polynomials", "[intpoly]") {
    CHECK(poly_discriminant(IntPoly::from_int64({1, 0, 1})) == -4);    // x^2+1
    CHECK(poly_discriminant(IntPoly::from_int64({-1, -1, 1})) == 5);   // x^2-x-1
    CHECK(poly_discriminant(IntPoly::from_int64({1, -1, 1})) == -3);   // x^2-x+1
    CHECK(poly_discriminant(IntPoly::from_int64({-2, 0, 1})) == 8);    // x^2-2
    CHECK(poly_discriminant(IntPoly::from_int64({-1, -2, 1, 1})) == 49);
    CHECK(poly_discriminant(IntPoly::from_int64({0, 1})) == 1);        // degree 1
}

TEST_CASE("resultant agrees with root products", "[intpoly]") {
    // Res(x^2-1, x^2-4) = prod (r_i - s_j) over roots = (1-2)(1+2)(-1-2)(-1+2) = 9
    CHECK(resultant(IntPoly::from_int64({-1, 0, 1}), IntPoly::from_int64({-4, 0, 1})) == 9);
    // Res(f, g) with common root vanishes
    CHECK(resultant(IntPoly::from_int64({-1, 0, 1}), IntPoly::from_int64({-1, 1})) == 0);
}

TEST_CASE("cyclotomic polynomials", "[intpoly]") {
    CHECK(cyclotomic_polynomial(1).c == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(5).c == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(8).c == std::vector<BigInt>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12).c == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(7).degree() == 6);
    // phi_105 is the first with a coefficient of magnitude 2
    auto c105 = cyclotomic_polynomial(105);
    bool has2 = false;
    for (const auto& c : c105.c) {
        if (c == -2 || c == 2) has2 = true;
    }
    CHECK(c105.degree() == 48);
    CHECK(has2);
}

TEST_CASE("resultant_shifted produces compositum polynomials", "[intpoly]") {
    // minimal polynomial of i + sqrt(5): x^4 - 8x^2 + 36
    IntPoly r = resultant_shifted(IntPoly::from_int64({1, 0, 1}), IntPoly::from_int64({-5, 0, 1}), 1);
    CHECK(r.c == std::vector<BigInt>{36, 0, -8, 0, 1});
    // minimal polynomial of i + (1+sqrt(5))/2: x^4 - 2x^3 + x^2 + 5
    IntPoly r2 = resultant_shifted(IntPoly::from_int64({1, 0, 1}), IntPoly::from_int64({-1, -1, 1}), 1);
    CHECK(r2.c == std::vector<BigInt>{5, 0, 1, -2, 1});
    // quadratic x cubic: degree 6, monic
    IntPoly r3 = resultant_shifted(IntPoly::from_int64({1, 0, 1}), IntPoly::from_int64({-1, -2, 1, 1}), 1);
    CHECK(r3.degree() == 6);
    CHECK(r3.is_monic());
    CHECK(r3.c == std::vector<BigInt>{13, 8, 7, -2, 0, 2, 1});
}

TEST_CASE("exact division detects non-exact input", "[intpoly]") {
    IntPoly f = poly_mul(IntPoly::from_int64({1, 1}), IntPoly::from_int64({2, 3}));
    CHECK(poly_div_exact(f, IntPoly::from_int64({1, 1})).c == std::vector<BigInt>{2, 3});
    CHECK_THROWS_AS(poly_div_exact(IntPoly::from_int64({1, 1, 1}), IntPoly::from_int64({1, 1})),
                    UsageError);
}

TEST_CASE("mod_p reduction handles negative coefficients", "[intpoly]") {
    auto f = IntPoly::from_int64({-1, -2, 1, 1}).mod_p(13);
    CHECK(f.c == std::vector<uint64_t>{12, 11, 1, 1});
}

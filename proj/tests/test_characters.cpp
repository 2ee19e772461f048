#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "conifold/characters.hpp"
#include "conifold/partition_functions.hpp"

using namespace conifold;

TEST_CASE("symmetric-algebra character, small frozen slices") {
    CHECK(sym_char_4d(0) == Series4D::unit(TotalDegree{0}));

    // L^1 slice at order 3: one factor per plane monomial of degree <= 2
    const Series4D s3 = sym_char_4d(3);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) CHECK(s3.coeff({a, b, 1}) == 1);
    CHECK(s3.coeff({3, 0, 1}) == 0);

    const Series4D o1 = sym_char_oracle(1);
    CHECK(o1.coeff({0, 0, 0}) == 1);
    CHECK(o1.coeff({0, 0, 1}) == 1);
    CHECK(o1.terms().size() == 2);

    // L^2 slice at order 3 comes from the multisets {1,1}, {1,x}, {1,y}
    const Series4D o3 = sym_char_oracle(3);
    CHECK(o3.coeff({0, 0, 2}) == 1);
    CHECK(o3.coeff({1, 0, 2}) == 1);
    CHECK(o3.coeff({0, 1, 2}) == 1);
    CHECK(o3.coeff({1, 1, 2}) == 0);
}

TEST_CASE("product formula agrees with multiset enumeration up to order 8") {
    for (int n = 0; n <= 8; ++n) CHECK(sym_char_4d(n) == sym_char_oracle(n));
    CHECK_THROWS_AS((void)sym_char_oracle(13), std::invalid_argument);
}

TEST_CASE("exterior-algebra character, small frozen slices") {
    const Box box{4, 2};
    CHECK(ext_char_6d(box, 0) == Series6D::unit(box));

    const Series6D e1 = ext_char_6d(box, 1);
    CHECK(e1.coeff({0, 0, 0}) == 1);
    CHECK(e1.coeff({1, 1, 0}) == 1);
    CHECK(e1.terms().size() == 2);

    // the singleton subsets {x} and {y} give q^2 T the coefficient -(s + 1/s)
    const Series6D full = ext_char_6d(box);
    const RefinedInvariant p = coefficient(full, 1, 2);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(-1) == -1);
    CHECK(p.at_one() == -2);
}

TEST_CASE("exterior product agrees with signed subset enumeration") {
    const Box box{6, 3};
    CHECK(ext_char_6d(box) == ext_char_oracle(box));
    for (int cap = 0; cap <= 4; ++cap) CHECK(ext_char_6d(box, cap) == ext_char_oracle(box, cap));
    CHECK_THROWS_AS((void)ext_char_oracle(Box{9, 3}), std::invalid_argument);
}

TEST_CASE("capped exterior character stabilizes columnwise") {
    const Box box{6, 3};
    const Series6D full = ext_char_6d(box);
    for (int m = 0; m <= box.qmax; ++m) {
        const Series6D capped = ext_char_6d(box, m);
        for (int l = 0; l <= box.tmax; ++l)
            CHECK(coefficient(capped, l, m) == coefficient(full, l, m));
    }
}

TEST_CASE("sl2 decomposition peels characters greedily") {
    SUBCASE("frozen examples") {
        const SL2Decomp triv = sl2_decompose(LaurentPoly::one());
        REQUIRE(triv.mult.size() == 1);
        CHECK(triv.mult.at(0) == 1);

        LaurentPoly p; // s^2 + 2 + s^-2
        p.add_term(2, 1);
        p.add_term(0, 2);
        p.add_term(-2, 1);
        const SL2Decomp d = sl2_decompose(p);
        REQUIRE(d.mult.size() == 2);
        CHECK(d.mult.at(2) == 1);
        CHECK(d.mult.at(0) == 1);
        CHECK(d.reconstruct() == p);
    }

    SUBCASE("odd weights work too") {
        LaurentPoly p; // 2 s + 2 s^-1 = V(1) + V(1)
        p.add_term(1, 2);
        p.add_term(-1, 2);
        const SL2Decomp d = sl2_decompose(p);
        REQUIRE(d.mult.size() == 1);
        CHECK(d.mult.at(1) == 2);
    }

    SUBCASE("virtual decompositions keep negative multiplicities") {
        LaurentPoly p; // s^2 + s^-2 = V(2) - V(0)
        p.add_term(2, 1);
        p.add_term(-2, 1);
        const SL2Decomp d = sl2_decompose(p);
        CHECK(d.mult.at(2) == 1);
        CHECK(d.mult.at(0) == -1);
        CHECK(d.reconstruct() == p);
    }

    SUBCASE("non-palindromic input is rejected") {
        LaurentPoly p;
        p.add_term(1, 1);
        CHECK_THROWS_AS((void)sl2_decompose(p), std::domain_error);
    }

    SUBCASE("T^1 column of Z is a single irrep of weight m-1") {
        const Box box{6, 1};
        const Series6D z = refined_conifold_Z(box);
        for (int m = 1; m <= 6; ++m) {
            LaurentPoly p = coefficient(z, 1, m);
            if (m % 2 == 0) p = -p;
            const SL2Decomp d = sl2_decompose(p);
            REQUIRE(d.mult.size() == 1);
            CHECK(d.mult.at(m - 1) == 1);
            CHECK(specialize_s1(p) == m);
        }
    }
}

TEST_CASE("s=1 specialization sums coefficients") {
    LaurentPoly p;
    p.add_term(2, 1);
    p.add_term(0, 2);
    p.add_term(-2, 1);
    CHECK(specialize_s1(p) == 4);
    CHECK(specialize_s1(LaurentPoly{}) == 0);
}

TEST_CASE("Z coefficients are palindromic with nonnegative sl2 content on box (8,4)") {
    const Box box{8, 4};
    const Series6D z = refined_conifold_Z(box);
    for (int l = 0; l <= box.tmax; ++l)
        for (int m = 0; m <= box.qmax; ++m) {
            LaurentPoly p = coefficient(z, l, m);
            CHECK(p.is_palindromic());
            if (p.is_zero()) continue;
            if ((l + m) % 2 == 1) p = -p;
            for (const auto& [d, mult] : sl2_decompose(p).mult) {
                CHECK(mult >= 0);
                CHECK((d % 2) == ((m - l) % 2 + 2) % 2); // s-parity is m - l mod 2
            }
        }
}

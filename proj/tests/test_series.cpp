#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "conifold/series.hpp"

using namespace conifold;

namespace {

Series4D random4(std::mt19937& rng, int order, int nterms) {
    std::uniform_int_distribution<int> e(0, order);
    std::uniform_int_distribution<int> c(-5, 5);
    Series4D x{TotalDegree{order}};
    for (int i = 0; i < nterms; ++i) x.add_term({e(rng), e(rng), e(rng)}, c(rng));
    return x;
}

Series6D random6(std::mt19937& rng, Box box, int nterms) {
    std::uniform_int_distribution<int> eq(0, box.qmax);
    std::uniform_int_distribution<int> et(0, box.tmax);
    std::uniform_int_distribution<int> es(-3, 3);
    std::uniform_int_distribution<int> c(-5, 5);
    Series6D x{box};
    for (int i = 0; i < nterms; ++i) x.add_term({eq(rng), et(rng), es(rng)}, c(rng));
    return x;
}

// Coefficient of the product computed by summing over all divisor splits,
// independent of the term-by-term accumulation in operator*.
Int conv_coeff(const Series4D& x, const Series4D& y, const Monomial4D& t) {
    Int acc = 0;
    for (int a = 0; a <= t.q1; ++a)
        for (int b = 0; b <= t.q2; ++b)
            for (int c = 0; c <= t.lam; ++c)
                acc += x.coeff({a, b, c}) * y.coeff({t.q1 - a, t.q2 - b, t.lam - c});
    return acc;
}

} // namespace

TEST_CASE("term storage merges and prunes") {
    Series4D x{TotalDegree{4}};
    x.add_term({1, 0, 1}, 3);
    x.add_term({1, 0, 1}, -3);
    CHECK(x.is_zero());
    x.add_term({0, 2, 0}, 7);
    x.add_term({0, 2, 0}, 1);
    CHECK(x.coeff({0, 2, 0}) == 8);
    x.add_term({5, 0, 0}, 1); // beyond the order bound, silently dropped
    CHECK(x.coeff({5, 0, 0}) == 0);
    CHECK(x.terms().size() == 1);

    CHECK(Series4D::unit(TotalDegree{0}).coeff({0, 0, 0}) == 1);
    CHECK(Series4D::monomial({1, 1, 1}, 2, TotalDegree{2}).is_zero());
}

TEST_CASE("product matches the divisor-split convolution") {
    std::mt19937 rng(2024);
    const TotalDegree order{6};
    for (int rep = 0; rep < 5; ++rep) {
        const Series4D x = random4(rng, 6, 10);
        const Series4D y = random4(rng, 6, 10);
        const Series4D p = x * y;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b)
                for (int c = 0; a + b + c <= 6; ++c) {
                    const Monomial4D m{a, b, c};
                    CHECK(p.coeff(m) == conv_coeff(x, y, m));
                }
        CHECK(p.bound() == order);
    }
}

TEST_CASE("ring axioms hold on random series") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        const Series4D x = random4(rng, 5, 8);
        const Series4D y = random4(rng, 5, 8);
        const Series4D z = random4(rng, 5, 8);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x - x).is_zero());
        CHECK((x + (-x)).is_zero());
        CHECK(x * Series4D::unit(TotalDegree{5}) == x);
    }
    for (int rep = 0; rep < 4; ++rep) {
        const Box box{5, 3};
        const Series6D x = random6(rng, box, 8);
        const Series6D y = random6(rng, box, 8);
        const Series6D z = random6(rng, box, 8);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("operations commute with clipping to a smaller bound") {
    std::mt19937 rng(99);
    const TotalDegree small{3};
    for (int rep = 0; rep < 4; ++rep) {
        const Series4D x = random4(rng, 6, 12);
        const Series4D y = random4(rng, 6, 12);
        CHECK(clipped(x * y, small) == clipped(x, small) * clipped(y, small));
        CHECK(clipped(x + y, small) == clipped(x, small) + clipped(y, small));
    }
    const Box big{6, 4}, small6{4, 2};
    for (int rep = 0; rep < 4; ++rep) {
        const Series6D x = random6(rng, big, 12);
        const Series6D y = random6(rng, big, 12);
        CHECK(clipped(x * y, small6) == clipped(x, small6) * clipped(y, small6));
    }
    // binary ops already meet the bounds
    const Series4D a = random4(rng, 6, 12);
    const Series4D b = clipped(random4(rng, 6, 12), small);
    CHECK((a * b).bound() == small);
    CHECK((a + b).bound() == small);
}

TEST_CASE("inverse is a two-sided unit and a homomorphism") {
    std::mt19937 rng(5150);
    const TotalDegree order{6};
    const Series4D one = Series4D::unit(order);
    CHECK(invert(one) == one);

    for (int rep = 0; rep < 5; ++rep) {
        Series4D x = random4(rng, 6, 10);
        x.add_term({0, 0, 0}, 1 - x.coeff({0, 0, 0})); // force constant term 1
        const Series4D xi = invert(x);
        CHECK(x * xi == one);
        CHECK(xi * x == one);
        CHECK(invert(xi) == x);

        Series4D y = random4(rng, 6, 10);
        y.add_term({0, 0, 0}, 1 - y.coeff({0, 0, 0}));
        CHECK(invert(x * y) == xi * invert(y));
    }

    Series4D bad{order};
    bad.add_term({0, 0, 0}, 2);
    CHECK_THROWS_AS((void)invert(bad), std::domain_error);
    CHECK_THROWS_AS((void)invert(Series4D{order}), std::domain_error);

    // a grade-zero term s^1 blocks inversion in the 6d context
    Series6D s6{Box{3, 2}};
    s6.add_term({0, 0, 0}, 1);
    s6.add_term({0, 0, 1}, 1);
    CHECK_THROWS_AS((void)invert(s6), std::domain_error);
}

TEST_CASE("geometric factor powers match the binomial series") {
    const TotalDegree order{8};
    const Monomial4D m{1, 0, 1}; // q1 L

    SUBCASE("frozen: (1 - q1 L)^-2 starts 1 + 2 q1 L + 3 (q1 L)^2") {
        const Series4D f = geom_factor_power(m, -1, -2, TotalDegree{4});
        CHECK(f.coeff({0, 0, 0}) == 1);
        CHECK(f.coeff({1, 0, 1}) == 2);
        CHECK(f.coeff({2, 0, 2}) == 3);
        CHECK(f.terms().size() == 3);
    }

    SUBCASE("negative exponents invert positive ones") {
        for (long long e = 1; e <= 4; ++e) {
            const Series4D pos = geom_factor_power(m, -1, e, order);
            const Series4D neg = geom_factor_power(m, -1, -e, order);
            CHECK(pos * neg == Series4D::unit(order));
            CHECK(neg == invert(pos));
        }
    }

    SUBCASE("coefficients of (1 - u)^-e are C(k+e-1, k)") {
        const Series4D f = geom_factor_power(m, -1, -3, order);
        Monomial4D mk{};
        for (int k = 0; k <= 4; ++k) {
            CHECK(f.coeff(mk) == binomial(k + 2, k));
            mk = mk * m;
        }
    }

    SUBCASE("positive exponents terminate at the binomial row") {
        const Series4D f = geom_factor_power(m, 1, 3, order);
        CHECK(f.coeff({0, 0, 0}) == 1);
        CHECK(f.coeff({1, 0, 1}) == 3);
        CHECK(f.coeff({2, 0, 2}) == 3);
        CHECK(f.coeff({3, 0, 3}) == 1);
        CHECK(f.terms().size() == 4);
    }

    SUBCASE("rejects bad arguments") {
        CHECK_THROWS_AS((void)geom_factor_power(m, 2, 1, order), std::invalid_argument);
        CHECK_THROWS_AS((void)geom_factor_power(Monomial4D{}, -1, 1, order), std::invalid_argument);
        const Monomial6D pure_s{0, 0, 1};
        CHECK_THROWS_AS((void)geom_factor_power(pure_s, -1, -1, Box{2, 2}), std::invalid_argument);
        // nonnegative powers of a grade-zero factor are fine polynomials
        const Series6D p = geom_factor_power(pure_s, -1, 2, Box{2, 2});
        CHECK(p.coeff({0, 0, 2}) == 1);
        CHECK(p.coeff({0, 0, 1}) == -2);
    }
}

TEST_CASE("binomial is exact") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
    for (int n = 1; n < 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("refined coefficient extraction respects the box") {
    Series6D z{Box{4, 2}};
    z.add_term({3, 1, 2}, 1);
    z.add_term({3, 1, 0}, 1);
    z.add_term({3, 1, -2}, 1);
    z.add_term({2, 1, 0}, -4);

    const RefinedInvariant p = coefficient(z, 1, 3);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(-2) == 1);
    CHECK(coefficient(z, 1, 2).coeff(0) == -4);
    CHECK(coefficient(z, 0, 0).is_zero());
    CHECK_THROWS_AS((void)coefficient(z, 1, 5), std::out_of_range);
    CHECK_THROWS_AS((void)coefficient(z, 3, 0), std::out_of_range);
}

TEST_CASE("variable substitution into the 6d context") {
    SUBCASE("single monomials land with the right sign and s-weight") {
        const Box box{4, 4};
        const auto img = [&](Monomial4D m) {
            return substitute_4d_to_6d(Series4D::monomial(m, 1, TotalDegree{4}), box);
        };
        CHECK(img({1, 0, 0}).coeff({1, 0, 1}) == -1);  // q1 -> -s q
        CHECK(img({0, 1, 0}).coeff({1, 0, -1}) == -1); // q2 -> -s^-1 q
        CHECK(img({0, 0, 1}).coeff({1, 1, 0}) == -1);  // L -> -T q
        CHECK(img({1, 1, 0}).coeff({2, 0, 0}) == 1);
        CHECK(img({2, 0, 1}).coeff({3, 1, 2}) == -1);
    }

    SUBCASE("substitution is multiplicative") {
        std::mt19937 rng(31337);
        const Box box{4, 3};
        for (int rep = 0; rep < 4; ++rep) {
            const Series4D x = random4(rng, 6, 8);
            const Series4D y = random4(rng, 6, 8);
            CHECK(substitute_4d_to_6d(x * y, box) ==
                  substitute_4d_to_6d(x, box) * substitute_4d_to_6d(y, box));
        }
    }

    SUBCASE("source order must cover the q bound") {
        std::mt19937 rng(1);
        const Series4D x = random4(rng, 3, 4);
        CHECK_THROWS_AS((void)substitute_4d_to_6d(x, Box{4, 2}), std::invalid_argument);
    }
}

TEST_CASE("collapsing s to 1 sums the s-column") {
    Series6D z{Box{3, 1}};
    z.add_term({2, 1, 2}, 1);
    z.add_term({2, 1, 0}, 5);
    z.add_term({2, 1, -2}, 1);
    z.add_term({1, 0, -1}, 3);
    const Series6D c = collapse_s1(z);
    CHECK(c.coeff({2, 1, 0}) == 7);
    CHECK(c.coeff({1, 0, 0}) == 3);
    CHECK(c.terms().size() == 2);
}

TEST_CASE("terms iterate in the documented order") {
    Series6D z{Box{3, 2}};
    z.add_term({1, 1, 0}, 1);
    z.add_term({0, 0, 0}, 1);
    z.add_term({2, 0, -1}, 1);
    z.add_term({2, 0, 1}, 1);
    std::vector<Monomial6D> got;
    for (const auto& [m, c] : z.terms()) got.push_back(m);
    REQUIRE(got.size() == 4);
    // lexicographic in (T, q, s)
    CHECK(got[0] == Monomial6D{0, 0, 0});
    CHECK(got[1] == Monomial6D{2, 0, -1});
    CHECK(got[2] == Monomial6D{2, 0, 1});
    CHECK(got[3] == Monomial6D{1, 1, 0});
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bunpoly/bi_series.hpp"
#include "bunpoly/uni_series.hpp"

using namespace bunpoly;

namespace {

UniSeries uni(std::initializer_list<long> cs, int cap) {
    UniSeries s(cap);
    int i = 0;
    for (long c : cs) s.at(i++) = c;
    return s;
}

UniSeries random_uni(std::mt19937& rng, int cap) {
    std::uniform_int_distribution<int> dist(-4, 4);
    UniSeries s(cap);
    for (int i = 0; i <= cap; ++i) s.at(i) = dist(rng);
    return s;
}

BiSeries random_bi(std::mt19937& rng, int cap) {
    std::uniform_int_distribution<int> dist(-4, 4);
    BiSeries s(cap);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) s.at(i, j) = dist(rng);
    return s;
}

}  // namespace

TEST_CASE("univariate multiplication") {
    const UniSeries one_plus_t = UniSeries::binomial_power(1, 1, 4);
    CHECK(mul(one_plus_t, one_plus_t, 4) == uni({1, 2, 1}, 4));

    SECTION("multiplying by one is the identity") {
        std::mt19937 rng(7);
        for (int rep = 0; rep < 20; ++rep) {
            const UniSeries a = random_uni(rng, 9);
            CHECK(mul(a, UniSeries::one(9), 9) == a);
        }
    }

    SECTION("telescoping geometric series") {
        const UniSeries geo = uni({1, 1, 1, 1}, 3);
        UniSeries one_minus_t(3);
        one_minus_t.at(0) = 1;
        one_minus_t.at(1) = -1;
        // all visible coefficients cancel; the -t^4 tail is truncated away
        CHECK(mul(geo, one_minus_t, 3) == UniSeries::one(3));
        CHECK(mul(geo.truncated(2), one_minus_t.truncated(2), 2) == UniSeries::one(2));
        CHECK(mul(geo.truncated(2).extended(3), one_minus_t, 3) == uni({1, 0, 0, -1}, 3));
    }

    SECTION("cap exceeding operand caps is rejected") {
        CHECK_THROWS_AS(mul(UniSeries::one(3), UniSeries::one(5), 4), std::invalid_argument);
    }
}

TEST_CASE("geometric factors") {
    CHECK(geom_factor(UniSeries::one(5), 2, -1, 5) == uni({1, 0, 1, 0, 1, 0}, 5));

    // (1+t)^4 * (1 + t^2 + t^4) expanded by hand
    CHECK(geom_factor(UniSeries::binomial_power(1, 4, 4), 2, -1, 4) == uni({1, 4, 7, 8, 8}, 4));

    SECTION("round trip with opposite sign is the identity") {
        std::mt19937 rng(11);
        for (int rep = 0; rep < 25; ++rep) {
            const UniSeries a = random_uni(rng, 12);
            const int k = 1 + rep % 4;
            const int m = 1 + rep % 3;
            CHECK(geom_factor(geom_factor(a, k, -m, 12), k, m, 12) == a);
            CHECK(geom_factor(geom_factor(a, k, m, 12), k, -m, 12) == a);
        }
    }

    SECTION("zero monomial exponent is rejected") {
        CHECK_THROWS_AS(geom_factor(UniSeries::one(3), 0, -1, 3), std::invalid_argument);
        CHECK_THROWS_AS(geom_factor(BiSeries::one(3), 0, 0, -1, 3), std::invalid_argument);
    }
}

TEST_CASE("binomial powers") {
    CHECK(UniSeries::binomial_power(1, 0, 3) == UniSeries::one(3));
    CHECK(UniSeries::binomial_power(1, 4, 4) == uni({1, 4, 6, 4, 1}, 4));

    // (1 + x y^2)^2 at total-degree cap 6
    const BiSeries b = BiSeries::binomial_power(1, 2, 2, 6);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 2) == 2);
    CHECK(b.at(2, 4) == 1);
    CHECK(b.at(1, 1) == 0);

    SECTION("coefficients are non-negative") {
        for (int e = 0; e <= 9; ++e) {
            CHECK(UniSeries::binomial_power(2, e, 10).nonnegative());
            CHECK(BiSeries::binomial_power(1, 2, e, 10).nonnegative());
        }
    }
}

TEST_CASE("specialization of bivariate series") {
    const BiSeries xy = mul(BiSeries::binomial_power(1, 0, 1, 4), BiSeries::binomial_power(0, 1, 1, 4), 4);
    CHECK(specialize(xy, Specialize::tt) == uni({1, 2, 1}, 4));
    CHECK(specialize(xy, Specialize::t1) == uni({2, 2}, 4));

    SECTION("Picard variety rows: (1+x)^g (1+y)^g at (t,1) is 2^g (1+t)^g") {
        const int g = 3;
        const BiSeries pic = mul(BiSeries::binomial_power(1, 0, g, 2 * g), BiSeries::binomial_power(0, 1, g, 2 * g), 2 * g);
        CHECK(specialize(pic, Specialize::t1) == UniSeries::binomial_power(1, g, 2 * g).scale(8));
    }

    SECTION("tt-specialization commutes with multiplication") {
        std::mt19937 rng(13);
        for (int rep = 0; rep < 10; ++rep) {
            const BiSeries a = random_bi(rng, 6);
            const BiSeries b = random_bi(rng, 6);
            CHECK(specialize(mul(a, b, 6), Specialize::tt) ==
                  mul(specialize(a, Specialize::tt), specialize(b, Specialize::tt), 6));
        }
    }
}

TEST_CASE("evaluation at +-1") {
    CHECK(uni({1, 2, 1}, 2).eval_at(1) == 4);
    for (int g = 1; g <= 5; ++g) CHECK(UniSeries::binomial_power(1, g, g).eval_at(-1) == 0);
    CHECK(uni({2, 20, 2}, 2).eval_at(-1) == -16);  // K3 signature
    CHECK_THROWS_AS(uni({1}, 1).eval_at(2), std::invalid_argument);
}

TEST_CASE("palindrome predicate") {
    CHECK(uni({1, 2, 1}, 2).is_palindrome(2));
    CHECK_FALSE(uni({1, 1}, 2).is_palindrome(2));
    CHECK(uni({1, 2, 1, 0, 0}, 4).is_palindrome(2));
    CHECK_FALSE(uni({1, 2, 1, 5}, 3).is_palindrome(2));  // junk above N
    CHECK_THROWS_AS(uni({1}, 1).is_palindrome(2), std::invalid_argument);
}

TEST_CASE("ring laws at fixed cap") {
    std::mt19937 rng(17);
    const int cap = 8;
    for (int rep = 0; rep < 15; ++rep) {
        const UniSeries a = random_uni(rng, cap), b = random_uni(rng, cap), c = random_uni(rng, cap);
        CHECK(mul(a, b, cap) == mul(b, a, cap));
        CHECK(mul(mul(a, b, cap), c, cap) == mul(a, mul(b, c, cap), cap));
        CHECK(mul(a, b + c, cap) == mul(a, b, cap) + mul(a, c, cap));
    }
    for (int rep = 0; rep < 6; ++rep) {
        const BiSeries a = random_bi(rng, 5), b = random_bi(rng, 5), c = random_bi(rng, 5);
        CHECK(mul(a, b, 5) == mul(b, a, 5));
        CHECK(mul(mul(a, b, 5), c, 5) == mul(a, mul(b, c, 5), 5));
        CHECK(mul(a, b + c, 5) == mul(a, b, 5) + mul(a, c, 5));
    }
}

TEST_CASE("truncation consistency") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 15; ++rep) {
        const UniSeries a = random_uni(rng, 12), b = random_uni(rng, 12);
        CHECK(mul(a, b, 12).truncated(7) == mul(a, b, 7));
        CHECK(geom_factor(a, 2, -2, 12).truncated(7) == geom_factor(a, 2, -2, 7));
    }
    for (int rep = 0; rep < 6; ++rep) {
        const BiSeries a = random_bi(rng, 7), b = random_bi(rng, 7);
        CHECK(mul(a, b, 7).truncated(4) == mul(a, b, 4));
        CHECK(geom_factor(a, 1, 1, -2, 7).truncated(4) == geom_factor(a, 1, 1, -2, 4));
    }
}

TEST_CASE("geometric expansion preserves non-negativity") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 15; ++rep) {
        UniSeries a = random_uni(rng, 10);
        for (int i = 0; i <= 10; ++i) a.at(i) = abs(a[i]);
        CHECK(geom_factor(a, 1 + rep % 3, -2, 10).nonnegative());
    }
}

TEST_CASE("bivariate structure helpers") {
    BiSeries s(4);
    s.at(1, 2) = 3;
    s.at(2, 1) = 3;
    s.at(0, 0) = 1;
    CHECK(s.swap_symmetric());
    s.at(2, 1) = 4;
    CHECK_FALSE(s.swap_symmetric());

    CHECK(s.eval_signs(1, 1) == 8);     // 1 + 3 + 4
    CHECK(s.eval_signs(-1, 1) == 2);    // signs (-1)^i: 1 - 3 + 4
    CHECK(s.eval_signs(-1, -1) == -6);  // signs (-1)^{i+j}: 1 - 3 - 4

    CHECK(s.vanishes_above(3));
    CHECK_FALSE(s.vanishes_above(2));

    const BiSeries moved = s.shifted(1, 1, 6);
    CHECK(moved.at(1, 1) == 1);
    CHECK(moved.at(2, 3) == 3);
    CHECK(moved.at(3, 2) == 4);
    // shifting within the original cap drops what no longer fits
    CHECK(s.shifted(1, 1, 4).at(1, 1) == 1);
    CHECK(s.shifted(1, 1, 4).at(2, 3) == 0);
}

TEST_CASE("exact division") {
    const UniSeries num = UniSeries::binomial_power(1, 5, 8);
    const UniSeries den = UniSeries::binomial_power(1, 2, 8);
    CHECK(exact_div(num, den) == UniSeries::binomial_power(1, 3, 8));

    SECTION("scalar factors divide out") {
        UniSeries scaled = UniSeries::binomial_power(1, 3, 6).scale(12);
        CHECK(exact_div(scaled, UniSeries::constant(4, 6)) == UniSeries::binomial_power(1, 3, 6).scale(3));
    }

    SECTION("non-exact division is an internal error") {
        CHECK_THROWS_AS(exact_div(UniSeries::binomial_power(1, 1, 4), UniSeries::constant(2, 4)), internal_error);
    }
}

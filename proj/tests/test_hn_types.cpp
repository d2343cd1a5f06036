#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "bunpoly/hn_types.hpp"
#include "oracles.hpp"

using namespace bunpoly;

namespace {

HNType type(std::initializer_list<HNBlock> blocks) { return HNType{std::vector<HNBlock>(blocks)}; }

}  // namespace

TEST_CASE("codimension of HN strata") {
    // two rank-1 blocks: d_mu = 2k - d + g - 1
    CHECK(codim(type({{1, 1}, {1, 0}}), 2) == 2);
    CHECK(codim(type({{1, 2}, {1, 1}, {1, 0}}), 2) == 7);  // pairs contribute 2 + 3 + 2
    CHECK(codim(type({{1, 1}, {1, 0}}), 3) == 3);          // (g-1) shift
    CHECK_THROWS_AS(codim(type({{2, 1}}), 2), std::invalid_argument);
}

TEST_CASE("type validation") {
    CHECK(validate(type({{1, 1}, {1, 0}}), 2, 1));
    CHECK_FALSE(validate(type({{1, 0}, {1, 1}}), 2, 1));  // slopes increase
    CHECK(validate(type({{2, 1}}), 2, 1));                // mu_ss itself
    CHECK_FALSE(validate(type({{1, 1}, {1, 1}}), 2, 2));  // equal slopes
    CHECK_FALSE(validate(type({{1, 1}, {1, 0}}), 2, 2));  // degree sum off
    CHECK_FALSE(validate(type({{1, 1}, {2, 0}}), 2, 1));  // rank sum off
    // slope comparison must be exact: 2/3 > 1/2 even though both round to 0
    CHECK(validate(type({{3, 2}, {2, 1}}), 5, 3));
    CHECK_FALSE(validate(type({{2, 1}, {3, 2}}), 5, 3));
}

TEST_CASE("enumeration of bounded-codimension types") {
    const auto found = enumerate(2, 1, 2, 6);
    REQUIRE(found.size() == 3);
    CHECK(found[0] == type({{1, 1}, {1, 0}}));
    CHECK(found[1] == type({{1, 2}, {1, -1}}));
    CHECK(found[2] == type({{1, 3}, {1, -2}}));
    CHECK(codim(found[0], 2) == 2);
    CHECK(codim(found[1], 2) == 4);
    CHECK(codim(found[2], 2) == 6);

    CHECK(enumerate(1, 5, 2, 100).empty());
    CHECK(enumerate(2, 1, 2, 1).empty());  // smallest codimension is 2

    const auto r3 = enumerate(3, 1, 2, 8);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0] == type({{1, 1}, {2, 0}}));
    CHECK(r3[1] == type({{1, 2}, {2, -1}}));
    CHECK(r3[2] == type({{2, 1}, {1, 0}}));
    CHECK(r3[3] == type({{2, 2}, {1, -1}}));
}

TEST_CASE("enumeration agrees with brute force") {
    for (int g : {2, 3})
        for (int r : {1, 2, 3})
            for (int d = -3; d <= 3; ++d)
                for (long long cap : {0LL, 2LL, 5LL, 12LL, 20LL}) {
                    INFO("r=" << r << " d=" << d << " g=" << g << " cap=" << cap);
                    CHECK(enumerate(r, d, g, cap) == testing::brute_force_types(r, d, g, cap));
                }
    // rank 4 brings 3- and 4-block types into play; keep the cap small so
    // the windowed scan stays cheap
    for (int d : {-1, 0, 1})
        for (long long cap : {6LL, 9LL}) {
            INFO("r=4 d=" << d << " cap=" << cap);
            CHECK(enumerate(4, d, 2, cap) == testing::brute_force_types(4, d, 2, cap));
        }
}

TEST_CASE("enumerated types are valid and within budget") {
    for (int d : {-2, 0, 1, 3})
        for (const auto& mu : enumerate(4, d, 2, 14)) {
            CHECK(validate(mu, 4, d));
            CHECK(mu.length() >= 2);
            CHECK(codim(mu, 2) <= 14);
        }
}

TEST_CASE("enumeration is monotone in the cap") {
    const auto small = enumerate(3, 2, 2, 9);
    const auto large = enumerate(3, 2, 2, 16);
    CHECK(small.size() <= large.size());
    for (const auto& mu : small) CHECK(std::find(large.begin(), large.end(), mu) != large.end());
}

TEST_CASE("translation by the rank vector is a codim-preserving bijection") {
    for (int d : {-1, 0, 2})
        for (int r : {2, 3}) {
            auto shifted = enumerate(r, d, 2, 12);
            for (auto& mu : shifted)
                for (auto& b : mu.blocks) b.degree += b.rank;
            std::sort(shifted.begin(), shifted.end());
            const auto direct = enumerate(r, d + r, 2, 12);
            CHECK(shifted == direct);
        }
}

TEST_CASE("curve admissibility") {
    CHECK_NOTHROW(require_real_admissible(2, 1));
    CHECK_NOTHROW(require_real_admissible(CurveData{2, 3}));
    CHECK_THROWS_WITH(require_real_admissible(2, 4), Catch::Matchers::ContainsSubstring("1 <= n <= g+1"));
    CHECK_THROWS_AS(require_real_admissible(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(require_genus(0), std::invalid_argument);
    CHECK(CurveData{2, 3}.maximal());
    CHECK_FALSE(CurveData{2, 2}.maximal());
}

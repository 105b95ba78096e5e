#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/pattern.hpp"

#include <random>

using namespace treepat;

TEST_CASE("validation accepts the worked examples") {
    CHECK_NOTHROW(Pattern::validate(8, {{0, 2, 6}, {0, 1, 3, 4, 5, 7}}));
    CHECK_NOTHROW(Pattern::validate(7, {{2, 5, 6}, {0, 5}, {1, 3, 5}, {1, 4}}));
    CHECK_NOTHROW(Pattern::validate(1, {{0}}));
    CHECK_NOTHROW(Pattern::validate(2, {{0, 1}}));
}

TEST_CASE("validation rejects broken families") {
    CHECK_THROWS_AS(Pattern::validate(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(Pattern::validate(4, {{0, 1}, {2, 3}}), DisconnectedError);
    CHECK_THROWS_AS(Pattern::validate(4, {{0, 1}, {0, 2}}), CoverageError);
    CHECK_THROWS_AS(Pattern::validate(4, {{0, 1, 2}, {0, 1, 3}}), OverlapError);
    CHECK_THROWS_AS(Pattern::validate(3, {{0}, {0, 1, 2}}), SizeError);
    CHECK_THROWS_AS(Pattern::validate(0, {}), ValidationError);
    CHECK_THROWS_AS(Pattern::validate(3, {{0, 1, 5}}), ValidationError);
}

TEST_CASE("size identity holds after validation") {
    auto check = [](const Pattern& p) {
        int total = 0;
        for (const auto& c : p.components()) total += static_cast<int>(c.size());
        CHECK(total == p.period() + p.component_count() - 1);
    };
    check(fixtures::zero_entropy_8());
    check(fixtures::four_component_7());
    check(fixtures::four_flower());
    check(fixtures::trivial(5));
}

TEST_CASE("arc follows the incidence tree") {
    Pattern p = fixtures::zero_entropy_8();
    CHECK(p.arc(6, 1) == std::vector<int>{6, 0, 1});
    CHECK(p.arc(1, 6) == std::vector<int>{1, 0, 6});
    CHECK(p.arc(4, 4) == std::vector<int>{4});

    Pattern q6 = Pattern::validate(6, {{5, 0}, {0, 1, 2, 3, 4}});
    CHECK(q6.arc(5, 3) == std::vector<int>{5, 0, 3});

    Pattern branchy = fixtures::four_component_7();
    CHECK(branchy.arc(4, 0) == std::vector<int>{4, 1, 5, 0});
}

TEST_CASE("arc reversal and component sharing") {
    Pattern p = fixtures::four_component_7();
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        int x = static_cast<int>(rng() % 7), y = static_cast<int>(rng() % 7);
        auto fwd = p.arc(x, y);
        auto bwd = p.arc(y, x);
        std::reverse(bwd.begin(), bwd.end());
        CHECK(fwd == bwd);
        for (size_t i = 0; i + 1 < fwd.size(); ++i) CHECK(p.same_component(fwd[i], fwd[i + 1]));
    }
}

TEST_CASE("point profiles") {
    Pattern branchy = fixtures::four_component_7();
    auto prof = point_profile(branchy);
    CHECK(prof[5].valence == 3);
    CHECK(prof[5].inner);
    CHECK(prof[1].valence == 2);
    CHECK(prof[1].inner);
    for (int x : {0, 2, 3, 4, 6}) {
        CHECK(prof[static_cast<size_t>(x)].endpoint);
        CHECK(prof[static_cast<size_t>(x)].valence == 1);
    }

    Pattern q6 = Pattern::validate(6, {{5, 0}, {0, 1, 2, 3, 4}});
    CHECK(q6.inner_points() == std::vector<int>{0});
    CHECK(fixtures::trivial(5).inner_points().empty());

    int sum = 0;
    for (int x : branchy.inner_points()) sum += branchy.valence(x) - 1;
    CHECK(sum == branchy.component_count() - 1);
}

TEST_CASE("canonical form is a rotation invariant") {
    Pattern q3 = Pattern::validate(3, {{0, 2}, {0, 1}});
    CHECK(q3.canonical().components() == std::vector<std::vector<int>>{{0, 1}, {0, 2}});

    std::mt19937 rng(11);
    for (const Pattern& p : {fixtures::zero_entropy_8(), fixtures::four_component_7(), fixtures::four_flower()}) {
        Pattern canon = p.canonical();
        for (int it = 0; it < 8; ++it) {
            int k = static_cast<int>(rng() % static_cast<unsigned>(p.period()));
            CHECK(p.rotate(k).canonical() == canon);
        }
        CHECK(canon.canonical() == canon);
    }
    Pattern t5 = fixtures::trivial(5);
    CHECK(t5.canonical() == t5);
}

TEST_CASE("serialization round-trips and matches the file format") {
    Pattern q3 = Pattern::parse(R"({"period":3,"components":[[0,1],[0,2]]})");
    CHECK(q3 == Pattern::validate(3, {{0, 1}, {0, 2}}));
    CHECK(q3.serialize() == R"({"period":3,"components":[[0,1],[0,2]]})");

    for (const Pattern& p : {fixtures::zero_entropy_8(), fixtures::four_component_7(), fixtures::four_flower()})
        CHECK(Pattern::parse(p.serialize()) == p);

    CHECK_THROWS_AS(Pattern::parse(R"({"period":4,"components":[[0,1],[2,3]]})"), DisconnectedError);
    CHECK_THROWS_AS(Pattern::parse("{oops"), ParseError);
    CHECK_THROWS_AS(Pattern::parse(R"({"period":"x","components":[]})"), ParseError);
}

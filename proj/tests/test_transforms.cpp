#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/covering.hpp"
#include "treepat/structure.hpp"
#include "treepat/transforms.hpp"

#include <cmath>

using namespace treepat;

TEST_CASE("openings of the four-component example") {
    Pattern p = fixtures::four_component_7();
    auto ops = openings(p);
    REQUIRE(ops.size() == 4);
    int at5 = 0, at1 = 0;
    for (const auto& o : ops) (o.inner == 5 ? at5 : at1)++;
    CHECK(at5 == 3);
    CHECK(at1 == 1);

    // joining A = {2,5,6} and B = {0,5} at 5
    bool found = false;
    for (const auto& o : ops)
        if (o.pattern == Pattern::validate(7, {{0, 2, 5, 6}, {1, 3, 5}, {1, 4}})) found = true;
    CHECK(found);
}

TEST_CASE("Q6 has exactly one opening, the trivial pattern") {
    auto ops = openings(q_pattern(6));
    REQUIRE(ops.size() == 1);
    CHECK(ops[0].pattern == fixtures::trivial(6));
}

TEST_CASE("q_pattern construction") {
    CHECK(q_pattern(3) == Pattern::validate(3, {{0, 2}, {0, 1}}));
    CHECK(q_pattern(6) == Pattern::validate(6, {{5, 0}, {0, 1, 2, 3, 4}}));
    CHECK_THROWS_AS(q_pattern(2), DomainError);
}

TEST_CASE("canonical p-extension") {
    Pattern ext = p_extension(q_pattern(3), 2);
    CHECK(ext == Pattern::validate(6, {{0, 4}, {0, 2}, {1, 3, 5}, {0, 1}}));
    CHECK(is_reducible(ext));
    CHECK(entropy(ext) == doctest::Approx(entropy(q_pattern(3)) / 2).epsilon(1e-9));
    CHECK(entropy(ext) == doctest::Approx(0.24061).epsilon(1e-4));

    Pattern ez = p_extension(fixtures::trivial(3), 2);
    CHECK(ez.period() == 6);
    CHECK(is_zero_entropy(ez));
}

TEST_CASE("time reversal") {
    Pattern p = fixtures::zero_entropy_8();
    CHECK(time_reverse(p) == p.canonical());
    for (const Pattern& q : {fixtures::four_component_7(), q_pattern(5), fixtures::four_flower()})
        CHECK(time_reverse(time_reverse(q)) == q.canonical());
}

TEST_CASE("opening monotonicity on fixtures") {
    for (const Pattern& p : {fixtures::four_component_7(), q_pattern(5), q_pattern(6), fixtures::zero_entropy_8()}) {
        double hp = entropy(p);
        for (const auto& o : openings(p)) CHECK(hp >= entropy(o.pattern) - 1e-7);
    }
}

TEST_CASE("q_pattern is irreducible up to 12") {
    for (int n = 3; n <= 12; ++n) CHECK_FALSE(is_reducible(q_pattern(n)));
}

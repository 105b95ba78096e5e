#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/branching.hpp"
#include "treepat/covering.hpp"
#include "treepat/structure.hpp"

#include <random>

using namespace treepat;

TEST_CASE("branches with the canonical indexing") {
    BranchIndexing b = branches(fixtures::four_component_7(), 5);
    REQUIRE(b.branches.size() == 3);
    CHECK(b.branches[0] == std::vector<int>{0, 1, 4});
    CHECK(b.branches[1] == std::vector<int>{0, 2});
    CHECK(b.branches[2] == std::vector<int>{0, 3, 5, 6});

    BranchIndexing f = branches(fixtures::four_flower(), 0);
    REQUIRE(f.branches.size() == 4);
    CHECK(f.branches[0][1] == 1);
    CHECK(f.branches[1][1] == 2);
    CHECK(f.branches[2][1] == 4);
    CHECK(f.branches[3][1] == 8);

    // endpoint: a single branch holding everything
    BranchIndexing e = branches(fixtures::four_component_7(), 0);
    REQUIRE(e.branches.size() == 1);
    CHECK(e.branches[0].size() == 7);
}

TEST_CASE("flower of a pattern at a point") {
    Pattern f = flower_of(fixtures::four_component_7(), 5);
    CHECK(f == Pattern::validate(7, {{1, 3, 4, 5}, {0, 5}, {2, 5, 6}}));
    CHECK(flower_of(f, 5) == f);
    CHECK(flower_of(fixtures::zero_entropy_8(), 0) == fixtures::zero_entropy_8());
    CHECK(flower_of(fixtures::four_flower(), 0) == fixtures::four_flower());
}

TEST_CASE("branching sequences of the worked examples") {
    BranchingSequence f = branching_sequence(fixtures::four_flower(), 0);
    CHECK(f == fixtures::four_flower_sequence());

    BranchingSequence e = branching_sequence(fixtures::zero_entropy_8(), 0);
    CHECK(e == BranchingSequence{{{2, 1}, {2, 2}, {2, 1}}});

    Pattern deep = build_flower(fixtures::three_flower_sequence());
    BranchingSequence c = branching_sequence(deep, 0);
    CHECK(c == BranchingSequence{{{2, 1}, {6, 2}, {2, 3}}});

    CHECK_THROWS_AS(branching_sequence(q_pattern(4), 0), StructureError);
}

TEST_CASE("three-flower collapse sequence periods") {
    Pattern deep = build_flower(fixtures::three_flower_sequence());
    auto seq = collapse_sequence(deep);
    std::vector<int> periods;
    for (const auto& p : seq.patterns) periods.push_back(p.period());
    CHECK(periods == std::vector<int>{2, 12, 24});
    CHECK(seq.cardinalities == std::vector<int>{2, 6, 2});
}

TEST_CASE("build_flower reproduces the published petals") {
    Pattern deep = build_flower(fixtures::three_flower_sequence());
    std::vector<int> odds{0};
    for (int i = 1; i < 24; i += 2) odds.push_back(i);
    std::vector<int> evens{0, 2, 4, 6, 8, 10, 14, 16, 18, 20, 22};
    CHECK(deep == Pattern::validate(24, {odds, evens, {0, 12}}));

    CHECK(build_flower(fixtures::four_flower_sequence()) == fixtures::four_flower());
    CHECK(build_flower({{{5, 1}}}) == fixtures::trivial(5));
}

TEST_CASE("branching sequence validation") {
    CHECK_THROWS_AS(build_flower({{{1, 1}}}), DomainError);
    CHECK_THROWS_AS(build_flower({{{2, 2}}}), DomainError);
    CHECK_THROWS_AS(build_flower({{{2, 1}, {2, 3}}}), DomainError);
    CHECK_NOTHROW(build_flower({{{2, 1}, {3, 2}, {2, 1}}}));
}

TEST_CASE("fully reduce") {
    CHECK(fully_reduce(fixtures::three_flower_sequence()) == BranchingSequence{{{2, 1}, {6, 2}, {2, 3}}});
    CHECK(fully_reduce({{{2, 1}, {2, 2}, {2, 2}, {2, 3}}}) ==
          BranchingSequence{{{2, 1}, {4, 2}, {2, 3}}});
    BranchingSequence minimal{{{2, 1}, {3, 2}, {2, 1}}};
    CHECK(fully_reduce(minimal) == minimal);
    CHECK(fully_reduce(fully_reduce(fixtures::three_flower_sequence())) ==
          fully_reduce(fixtures::three_flower_sequence()));
}

TEST_CASE("opened sequences from the published example") {
    BranchingSequence r = fixtures::four_flower_sequence();
    CHECK(opened_sequence(r, 1, 3) == BranchingSequence{{{2, 1}, {2, 2}, {2, 1}, {2, 3}}});
    CHECK(opened_sequence(r, 2, 3) == BranchingSequence{{{2, 1}, {2, 2}, {2, 2}, {2, 3}}});
    CHECK(fully_reduce(opened_sequence(r, 2, 3)) == BranchingSequence{{{2, 1}, {4, 2}, {2, 3}}});
    CHECK_THROWS_AS(opened_sequence(r, 2, 5), IndexError);
    CHECK_THROWS_AS(opened_sequence(r, 3, 3), IndexError);
}

TEST_CASE("flower equals the flower of the reduced sequence") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        // random branching sequence, not necessarily minimal
        BranchingSequence s;
        int max_delta = 1;
        long long product = 1;
        int len = 1 + static_cast<int>(rng() % 5u);
        for (int i = 0; i < len; ++i) {
            int p = 2 + static_cast<int>(rng() % 3u);
            if (product * p > 64) break;
            product *= p;
            int d;
            if (i == 0) {
                d = 1;
            } else if (rng() % 3u == 0) {
                d = max_delta + 1;
            } else {
                d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_delta));
            }
            max_delta = std::max(max_delta, d);
            s.entries.emplace_back(p, d);
        }
        if (s.entries.empty()) continue;
        CHECK(build_flower(s) == build_flower(fully_reduce(s)));
    }
}

TEST_CASE("bidirectional points") {
    CHECK(is_bidirectional(fixtures::zero_entropy_8(), 0));
    CHECK(is_bidirectional(fixtures::four_flower(), 0));
    CHECK_THROWS_AS(is_bidirectional(fixtures::trivial(4), 0), StructureError);
    CHECK_THROWS_AS(is_bidirectional(fixtures::zero_entropy_8(), 1), DomainError);
}

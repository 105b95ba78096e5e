#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/enumerate.hpp"
#include "treepat/transforms.hpp"

#include <set>

using namespace treepat;

TEST_CASE("small counts") {
    CHECK(count_patterns(1) == 1);
    CHECK(count_patterns(2) == 1);
    CHECK(count_patterns(3) == 2);
    // 1 trivial + 3 two-component + 5 three-component classes; the Burnside
    // count (29 labeled families, 5 fixed by the half rotation) gives 9.
    CHECK(count_patterns(4) == 9);
    CHECK(count_patterns(5) == 63);
}

TEST_CASE("n=3 stream is the trivial pattern and Q3") {
    auto pats = enumerate_patterns(3);
    REQUIRE(pats.size() == 2);
    std::set<Pattern> s(pats.begin(), pats.end());
    CHECK(s.count(fixtures::trivial(3)) == 1);
    CHECK(s.count(q_pattern(3).canonical()) == 1);
}

TEST_CASE("emitted patterns are canonical, valid and strictly ordered") {
    for (int n = 1; n <= 6; ++n) {
        auto pats = enumerate_patterns(n);
        for (size_t i = 0; i < pats.size(); ++i) {
            CHECK(pats[i].canonical() == pats[i]);
            if (i) CHECK(pats[i - 1] < pats[i]);
        }
    }
}

TEST_CASE("matches the naive all-subset-families oracle") {
    for (int n = 1; n <= 5; ++n) {
        auto naive = enumerate_patterns_naive(n);
        auto smart = enumerate_patterns(n);
        CHECK(naive == smart);
    }
}

TEST_CASE("serial and parallel streams are identical") {
    for (int n = 4; n <= 7; ++n) {
        auto serial = enumerate_patterns(n, false);
        auto parallel = enumerate_patterns(n, true);
        CHECK(serial == parallel);
        CHECK(count_patterns(n, true) == serial.size());
    }
}

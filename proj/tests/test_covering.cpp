#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/covering.hpp"
#include "treepat/numerics.hpp"
#include "treepat/transforms.hpp"

#include <cmath>
#include <random>

using namespace treepat;

namespace {

// Exact characteristic polynomial of a small integer matrix by
// Faddeev-LeVerrier; the divisions are exact for integer input. Test-only
// oracle, independent of the spectral code.
std::vector<long long> char_poly(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<long long>> m(a), id(static_cast<size_t>(n),
                                             std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    std::vector<long long> coeff(static_cast<size_t>(n) + 1, 0);
    coeff[0] = 1;  // x^n
    std::vector<std::vector<long long>> mk = a;
    for (int k = 1; k <= n; ++k) {
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
        long long c = -tr / k;
        coeff[static_cast<size_t>(k)] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i)][static_cast<size_t>(i)] += c;
        std::vector<std::vector<long long>> next(static_cast<size_t>(n),
                                                 std::vector<long long>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long acc = 0;
                for (int t = 0; t < n; ++t)
                    acc += a[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                           mk[static_cast<size_t>(t)][static_cast<size_t>(j)];
                next[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
            }
        mk = std::move(next);
    }
    return coeff;  // coeff[k] multiplies x^(n-k)
}

}  // namespace

TEST_CASE("basic path counts") {
    Pattern q3 = q_pattern(3);
    CHECK(basic_paths(q3) == std::vector<BasicPath>{{0, 1}, {0, 2}});
    CHECK(basic_paths(q_pattern(6)).size() == 11);
    CHECK(basic_paths(fixtures::trivial(6)).size() == 15);
}

TEST_CASE("Q3 transition matrix") {
    CoveringGraph g(q_pattern(3));
    REQUIRE(g.size() == 2);
    CHECK(g.paths()[0] == BasicPath{0, 1});
    CHECK(g.paths()[1] == BasicPath{0, 2});
    CHECK(g.at(0, 0));
    CHECK(g.at(0, 1));
    CHECK(g.at(1, 0));
    CHECK_FALSE(g.at(1, 1));
}

TEST_CASE("covers matches arc hulls") {
    Pattern q3 = q_pattern(3);
    CHECK(covers(q3, {0, 1}, {0, 2}));
    CHECK(covers(q3, {0, 1}, {0, 1}));
    CHECK_FALSE(covers(q3, {0, 2}, {0, 2}));

    Pattern p = fixtures::zero_entropy_8();
    // {5,0} maps onto the hull of {6,1}, which carries {6,0} and {0,1}
    CHECK(covers(p, {0, 5}, {0, 6}));
    CHECK(covers(p, {0, 5}, {0, 1}));
}

TEST_CASE("Q4 characteristic polynomial is x^4 - 2x - 1") {
    CoveringGraph g(q_pattern(4));
    REQUIRE(g.size() == 4);
    std::vector<std::vector<long long>> m(4, std::vector<long long>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.at(i, j);
    CHECK(char_poly(m) == std::vector<long long>{1, 0, 0, -2, -1});
}

TEST_CASE("zero entropy decisions are exact") {
    CHECK(is_zero_entropy(fixtures::zero_entropy_8()));
    CHECK_FALSE(is_zero_entropy(q_pattern(3)));
    CHECK(is_zero_entropy(fixtures::trivial(7)));
    CHECK(is_zero_entropy(fixtures::four_flower()));
}

TEST_CASE("entropy values") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(entropy(q_pattern(3)) == doctest::Approx(std::log(phi)).epsilon(1e-9));
    CHECK(entropy(q_pattern(4)) == doctest::Approx(std::log(lambda_n(4))).epsilon(1e-9));
    CHECK(entropy(fixtures::zero_entropy_8()) == 0.0);
    CHECK(entropy(fixtures::trivial(9)) == 0.0);
}

TEST_CASE("split times") {
    Pattern p = fixtures::zero_entropy_8();
    CHECK(split_time(p, {0, 4}).never());
    CHECK(split_time(p, {4, 7}) == SplitResult::splits(2));
    CHECK(split_time(q_pattern(3), {0, 1}) == SplitResult::splits(1));
    CHECK(split_time(fixtures::trivial(5), {0, 3}).never());
}

TEST_CASE("never splitting is rotation invariant") {
    std::mt19937 rng(3);
    for (const Pattern& p : {fixtures::zero_entropy_8(), fixtures::four_component_7(), q_pattern(5)}) {
        const int n = p.period();
        for (const BasicPath& pi : basic_paths(p)) {
            int c = static_cast<int>(rng() % static_cast<unsigned>(n));
            Pattern r = p.rotate(c);
            SplitResult a = split_time(p, pi);
            SplitResult b = split_time(r, BasicPath((pi.a + c) % n, (pi.b + c) % n));
            CHECK(a == b);
        }
    }
}

TEST_CASE("walk counts") {
    CHECK(walk_count(q_pattern(3), {0, 1}, 3) == 5);
    CHECK(walk_count(q_pattern(3), {0, 1}, 0) == 1);
    CHECK(walk_count(fixtures::zero_entropy_8(), {0, 4}, 8) == 1);
}

TEST_CASE("never splitting means out-degree one along the whole orbit") {
    for (const Pattern& p : {fixtures::zero_entropy_8(), fixtures::four_component_7(), q_pattern(6),
                             fixtures::four_flower(), fixtures::trivial(6)}) {
        const int n = p.period();
        CoveringGraph g(p);
        for (const BasicPath& pi : g.paths()) {
            bool chain = true;
            int a = pi.a, b = pi.b;
            for (int i = 0; i < n && chain; ++i) {
                int row = g.index_of(BasicPath(a, b));
                if (row < 0 || g.out_degree(row) != 1) {
                    chain = false;
                    break;
                }
                int na = (a + 1) % n, nb = (b + 1) % n;
                int target = g.index_of(BasicPath(na, nb));
                chain = target >= 0 && g.at(row, target);
                a = na;
                b = nb;
            }
            CHECK(chain == split_time(p, pi).never());
        }
    }
}

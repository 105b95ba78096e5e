#include "doctest.h"
#include "fixtures.hpp"
#include "treepat/numerics.hpp"
#include "treepat/transforms.hpp"
#include "treepat/verify.hpp"

#include <cmath>

using namespace treepat;

TEST_CASE("min-entropy report at n=6") {
    Report r = verify_min_entropy(6);
    CHECK(r.passed);
    CHECK(r.count == 745);
    REQUIRE(r.argmin.size() == 1);
    CHECK(r.argmin[0] == q_pattern(6).canonical());
    CHECK(*r.min_entropy == doctest::Approx(std::log(lambda_n(6))).epsilon(1e-9));
    CHECK(std::abs(*r.gap) < 1e-6);
    CHECK(*r.unique);
    CHECK_FALSE(r.precision_warning);
}

TEST_CASE("reports are identical for any worker count") {
    Report serial = verify_min_entropy(6, 1e-6, 1e-10, false);
    Report parallel = verify_min_entropy(6, 1e-6, 1e-10, true);
    CHECK(serial.to_json(false) == parallel.to_json(false));

    Report rs = verify_reducible_min(6, 1e-6, 1e-10, false);
    Report rp = verify_reducible_min(6, 1e-6, 1e-10, true);
    CHECK(rs.to_json(false) == rp.to_json(false));
}

TEST_CASE("reducible minimum at n=6 is attained by a 2-extension, not uniquely") {
    Report r = verify_reducible_min(6);
    CHECK(r.passed);
    CHECK(*r.min_entropy == doctest::Approx(reducible_floor(6)).epsilon(1e-9));
    CHECK_FALSE(*r.unique);
    Pattern ext = p_extension(q_pattern(3), 2).canonical();
    CHECK(std::find(r.argmin.begin(), r.argmin.end(), ext) != r.argmin.end());
}

TEST_CASE("pi-reducibility harness reports its population") {
    Report r = verify_pi_reducibility(6);
    CHECK(r.passed);
    CHECK(!r.notes.empty());
}

TEST_CASE("splitting suite passes on a reduced window") {
    Report r = run_splitting_suite(12, 6);
    CHECK(r.passed);
    CHECK(r.count > 0);
}

TEST_CASE("structure suite passes up to n=6") {
    Report r = run_structure_suite(6);
    CHECK(r.passed);
    CHECK(r.count == 1 + 1 + 2 + 9 + 63 + 754);
}

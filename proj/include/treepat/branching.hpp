#pragma once

#include <utility>
#include <vector>

#include "treepat/pattern.hpp"

namespace treepat {

// List of (p_i, delta_i) pairs: p_i >= 2 block cardinalities along the
// collapse sequence, delta_i the index of the x-branch holding the level-i
// block of 0. New delta values must appear in increasing order starting at 1,
// so the first entry always has delta = 1.
struct BranchingSequence {
    std::vector<std::pair<int, int>> entries;
    bool operator==(const BranchingSequence&) const = default;
    int length() const { return static_cast<int>(entries.size()); }
    long long period_product() const;
    int petal_count() const;  // max delta
};

void validate_branching_sequence(const BranchingSequence& s);
bool is_minimal(const BranchingSequence& s);

// x-branches in shifted labels (x read as 0), ordered by the least positive
// element d of each branch. Every branch contains 0; distinct branches meet
// only at 0.
struct BranchIndexing {
    std::vector<std::vector<int>> branches;
    // 1-based index of the branch containing the (nonzero) point y, or 0.
    int branch_of(int y) const;
};

BranchIndexing branches(const Pattern& p, int x);

// Helper undoing the x -> 0 shift of branch data.
std::vector<std::vector<int>> unshift_branches(const BranchIndexing& b, int x, int period);

// F_x(P): the flower whose petals are exactly the x-branches of P, in the
// original labels with central point x.
Pattern flower_of(const Pattern& p, int x);

// Branching sequence of P around x; requires zero entropy.
BranchingSequence branching_sequence(const Pattern& p, int x);

// F(S): the flower built from an abstract branching sequence; period is the
// product of the p_i and the inner point is labeled 0.
Pattern build_flower(const BranchingSequence& s);

// Merge equal consecutive deltas, multiplying their p's; idempotent.
BranchingSequence fully_reduce(const BranchingSequence& s);

// Branch relabeling induced on a flower's branching sequence by joining the
// petals indexed j1 < j2; fully_reduce of the result is the opened flower's
// branching sequence.
BranchingSequence opened_sequence(const BranchingSequence& r, int j1, int j2);

// delta_{r-1} != delta_r; requires zero entropy, a non-trivial pattern and an
// inner point.
bool is_bidirectional(const Pattern& p, int x);

}  // namespace treepat

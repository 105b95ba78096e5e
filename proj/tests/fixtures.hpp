#pragma once

#include "treepat/branching.hpp"
#include "treepat/pattern.hpp"
#include "treepat/transforms.hpp"

namespace fixtures {

// 8-periodic, two components, entropy zero, the standard block-structure
// example throughout the suites.
inline treepat::Pattern zero_entropy_8() {
    return treepat::Pattern::validate(8, {{0, 2, 6}, {0, 1, 3, 4, 5, 7}});
}

// 7-periodic with inner points 5 (valence 3) and 1 (valence 2).
inline treepat::Pattern four_component_7() {
    return treepat::Pattern::validate(7, {{2, 5, 6}, {0, 5}, {1, 3, 5}, {1, 4}});
}

// 16-periodic 4-flower with entropy zero.
inline treepat::Pattern four_flower() {
    return treepat::Pattern::validate(
        16, {{0, 1, 3, 5, 7, 9, 11, 13, 15}, {0, 2, 6, 10, 14}, {0, 4, 12}, {0, 8}});
}

inline treepat::BranchingSequence four_flower_sequence() {
    return {{{2, 1}, {2, 2}, {2, 3}, {2, 4}}};
}

// The 24-periodic 3-flower construction input.
inline treepat::BranchingSequence three_flower_sequence() { return {{{2, 1}, {3, 2}, {2, 2}, {2, 3}}}; }

inline treepat::Pattern trivial(int n) {
    std::vector<int> pts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<size_t>(i)] = i;
    return treepat::Pattern::validate(n, {pts});
}

}  // namespace fixtures

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treepat/pattern.hpp"

namespace treepat {

// Exhaustive generation of all n-periodic patterns up to rotation, emitted as
// canonical representatives in lexicographic order of their component lists.
// The stream is identical for any worker count.
uint64_t count_patterns(int n, bool parallel = true);
std::vector<Pattern> enumerate_patterns(int n, bool parallel = true);

// Serial, lexicographic order.
void for_each_pattern(int n, const std::function<void(const Pattern&)>& fn);

// Parallel map; fn must be thread-safe and the call order is unspecified.
void for_each_pattern_unordered(int n, const std::function<void(const Pattern&)>& fn);

// Correctness reference: scans every family of subsets of Z_n and keeps the
// valid ones, canonicalized and deduplicated. Exponential; n <= 5 only.
std::vector<Pattern> enumerate_patterns_naive(int n);

}  // namespace treepat

#pragma once

#include <vector>

namespace treepat::detail {

// Iterative Tarjan. Returns component ids (0..count-1) in reverse topological
// order of the condensation (a component's id is larger than its successors').
std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj, int* count_out = nullptr);

}  // namespace treepat::detail

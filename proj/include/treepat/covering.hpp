#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "treepat/pattern.hpp"

namespace treepat {

// Unordered point pair inside a single component.
struct BasicPath {
    int a = 0, b = 0;  // a < b
    BasicPath() = default;
    BasicPath(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
    bool operator==(const BasicPath&) const = default;
    auto operator<=>(const BasicPath&) const = default;
};

// The f-covering digraph over all basic paths, with a dense 0-1 matrix view.
// Vertex order is the sorted pair order and is deterministic.
class CoveringGraph {
  public:
    explicit CoveringGraph(const Pattern& p);

    const std::vector<BasicPath>& paths() const { return paths_; }
    int size() const { return m_; }
    bool at(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * static_cast<size_t>(words_) +
                      static_cast<size_t>(j >> 6)] >>
                (j & 63)) &
               1u;
    }
    int index_of(const BasicPath& p) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<std::vector<double>> dense() const;
    int out_degree(int i) const;

  private:
    int m_ = 0, words_ = 0;
    std::vector<BasicPath> paths_;
    std::vector<uint64_t> bits_;
};

// Splits(k): f^i(pi) is a basic path for 0 <= i < k and f^k(pi) is not.
// Never: all iterates stay basic paths (decidable in n steps).
struct SplitResult {
    std::optional<int> splits_at;
    static SplitResult splits(int k) { return {k}; }
    static SplitResult never_splits() { return {std::nullopt}; }
    bool never() const { return !splits_at.has_value(); }
    bool operator==(const SplitResult&) const = default;
};

std::vector<BasicPath> basic_paths(const Pattern& p);
bool is_basic_path(const Pattern& p, int x, int y);
bool covers(const Pattern& p, const BasicPath& pi, const BasicPath& sigma);
CoveringGraph transition_matrix(const Pattern& p);

// Exact: rho(M) <= 1 iff every strong component of the covering digraph is a
// single vertex or a single directed cycle.
bool is_zero_entropy(const CoveringGraph& g);
bool is_zero_entropy(const Pattern& p);

// log max(rho(M), 1); exactly 0.0 whenever is_zero_entropy holds.
double entropy(const Pattern& p, double tol = 1e-10);
double entropy(const CoveringGraph& g, double tol = 1e-10);

SplitResult split_time(const Pattern& p, const BasicPath& pi);

// Row sum of M^k at pi: number of covering walks of length k from pi.
// Saturates at UINT64_MAX instead of overflowing.
uint64_t walk_count(const Pattern& p, const BasicPath& pi, int k);
uint64_t walk_count(const CoveringGraph& g, int row, int k);

}  // namespace treepat

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "treepat/errors.hpp"

namespace treepat {

// Periods are capped so point sets and component sets fit in 64-bit masks.
inline constexpr int kMaxPeriod = 64;

struct PointProfile {
    int point = 0;
    int valence = 0;
    bool inner = false;
    bool endpoint = false;
};

// An n-periodic tree pattern. Points are the time labels {0,..,n-1} of a
// periodic orbit of the cyclic shift i -> i+1 (mod n). A component is a
// maximal set of pairwise consecutive points; two components meet in at most
// one point and the attachment structure is a tree. The incidence tree is
// built once at validation and cached, so all values are immutable and safe
// to share between threads.
class Pattern {
  public:
    static Pattern validate(int period, std::vector<std::vector<int>> components);

    int period() const { return n_; }
    const std::vector<std::vector<int>>& components() const { return comps_; }
    int component_count() const { return static_cast<int>(comps_.size()); }
    bool trivial() const { return comps_.size() == 1; }

    // bit c of component_mask(x) is set iff x belongs to components()[c]
    uint64_t component_mask(int x) const { return pt_comps_[static_cast<size_t>(x)]; }
    // bit x of component_points(c) is set iff x belongs to components()[c]
    uint64_t component_points(int c) const { return comp_pts_[static_cast<size_t>(c)]; }
    uint64_t full_mask() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }

    int valence(int x) const { return valence_[static_cast<size_t>(x)]; }
    bool inner(int x) const { return valence(x) >= 2; }
    const std::vector<int>& inner_points() const { return inner_; }
    bool same_component(int x, int y) const {
        return (component_mask(x) & component_mask(y)) != 0;
    }

    // Points of the pattern lying on the tree segment [x, y], in order from x
    // to y. Successive entries share a component; members of the traversed
    // components that are off the route are not listed.
    std::vector<int> arc(int x, int y) const;
    uint64_t arc_mask(int x, int y) const;

    Pattern rotate(int c) const;  // relabel i -> i+c (mod n)
    Pattern canonical() const;    // lexicographically minimal rotation
    bool is_canonical() const;

    // Pattern file format: {"period":n,"components":[[...],...]} with each
    // component ascending and components sorted lexicographically.
    std::string serialize() const;
    static Pattern parse(const std::string& text);

    bool operator==(const Pattern& o) const { return n_ == o.n_ && comps_ == o.comps_; }
    std::strong_ordering operator<=>(const Pattern& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return comps_ <=> o.comps_;
    }

  private:
    Pattern() = default;
    void build_index();
    void check_point(int x) const;

    int n_ = 0;
    std::vector<std::vector<int>> comps_;
    std::vector<uint64_t> comp_pts_;
    std::vector<uint64_t> pt_comps_;
    std::vector<int> valence_;
    std::vector<int> inner_;
    // Incidence tree over n_ point nodes and component nodes (node n_+c is
    // component c), rooted at point 0.
    std::vector<int> parent_;
    std::vector<int> depth_;
};

std::vector<PointProfile> point_profile(const Pattern& p);

}  // namespace treepat

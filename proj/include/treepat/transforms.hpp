#pragma once

#include <vector>

#include "treepat/pattern.hpp"

namespace treepat {

// An opening merges two components adjacent at an inner point; point labels
// are preserved.
struct Opening {
    int inner = 0;
    int comp_a = 0, comp_b = 0;  // indices into the source pattern's components
    Pattern pattern;
};

// One opening per inner point and unordered pair of components at it, ordered
// by inner point then component indices.
std::vector<Opening> openings(const Pattern& p);

Pattern opening_at(const Pattern& p, int inner, int comp_a, int comp_b);

// The n-periodic pattern with components {n-1,0} and {0,...,n-2}; n >= 3.
Pattern q_pattern(int n);

// Canonical p-extension of R: scaled copy of R on the multiples of p, one
// trivial component per nonzero residue class, and the hub {0,...,p-1}.
Pattern p_extension(const Pattern& r, int p);

// Relabel i -> n-i (mod n) and canonicalize; an involution on rotation classes.
Pattern time_reverse(const Pattern& p);

}  // namespace treepat

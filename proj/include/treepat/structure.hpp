#pragma once

#include <optional>
#include <vector>

#include "treepat/covering.hpp"
#include "treepat/pattern.hpp"

namespace treepat {

// A p-block partition into the residue classes mod p (0 in block 0, and
// f(P_i) = P_{i+1 mod p} holds by construction). Hull-disjointness of the
// blocks is verified before one is returned.
struct BlockStructure {
    int p = 0;  // number of blocks; block cardinality is n/p
    std::vector<std::vector<int>> blocks;
    bool trivial = false;            // each block inside a single component
    bool separated_trivial = false;  // trivial and every in-block basic path never splits
    int block_of(int x) const { return x % p; }
};

std::optional<BlockStructure> block_structure(const Pattern& p, int blocks);
bool is_reducible(const Pattern& p);

// Smallest basic path (in sorted pair order) that never splits, if any.
std::optional<BasicPath> pi_reducible(const Pattern& p);

// The trivial-block structure with maximum block cardinality, provided its
// in-block paths never split (the operational test for separatedness).
std::optional<BlockStructure> maximal_trivial_structure(const Pattern& p);

// Quotient by the maximal trivial structure: point i is block P_i, components
// are the maximal shadows (sets of block indices met by a component).
Pattern combinatorial_collapse(const Pattern& p);

struct CollapseSequence {
    std::vector<Pattern> patterns;   // [P_0, ..., P_r] with P_r the input, P_0 trivial
    std::vector<int> cardinalities;  // p_0 = period of P_0; p_i = block cardinality of P_i
};

CollapseSequence collapse_sequence(const Pattern& p);

// Structural recursion: trivial, or pi-reducible with a zero-entropy collapse.
// Independent of the SCC test; the two are cross-validated over enumerations.
bool zero_entropy_structural(const Pattern& p);

struct Classification {
    double entropy = 0.0;
    bool zero = false;
    bool reducible = false;
    std::optional<BasicPath> pi_red;
    std::optional<int> flower_k;  // set when there is a unique inner point
    bool triple_chain = false;
    bool irreducible = false;  // positive entropy and no block structure
};

Classification classify(const Pattern& p, double tol = 1e-10);

// Components with no escaping point: x escapes from C when x is inner and
// f(x) lies in an x-branch other than the branch holding C \ {x}.
std::vector<std::vector<int>> scrambled_components(const Pattern& p);

// Components containing exactly one inner point.
std::vector<std::vector<int>> extremal_components(const Pattern& p);

// Pattern induced by f^p on the residue class of r, relabeled k -> r + k*p.
// Components are the maximal pairwise-consecutive subsets.
Pattern subordinated(const Pattern& p, int blocks, int r);

}  // namespace treepat

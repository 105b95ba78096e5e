#include "treepat/structure.hpp"

#include <algorithm>
#include <bit>

#include "treepat/branching.hpp"

namespace treepat {

std::optional<BlockStructure> block_structure(const Pattern& p, int blocks) {
    const int n = p.period();
    if (blocks <= 1 || blocks >= n || n % blocks != 0) return std::nullopt;

    BlockStructure bs;
    bs.p = blocks;
    bs.blocks.assign(static_cast<size_t>(blocks), {});
    std::vector<uint64_t> bmask(static_cast<size_t>(blocks), 0);
    for (int x = 0; x < n; ++x) {
        bs.blocks[static_cast<size_t>(x % blocks)].push_back(x);
        bmask[static_cast<size_t>(x % blocks)] |= 1ull << x;
    }

    // Hull-disjointness: no point of another block on any in-block arc.
    for (int i = 0; i < blocks; ++i) {
        const auto& blk = bs.blocks[static_cast<size_t>(i)];
        for (size_t a = 0; a < blk.size(); ++a)
            for (size_t b = a + 1; b < blk.size(); ++b)
                if (p.arc_mask(blk[a], blk[b]) & ~bmask[static_cast<size_t>(i)]) return std::nullopt;
    }

    bs.trivial = true;
    for (int i = 0; i < blocks && bs.trivial; ++i) {
        bool inside = false;
        for (int c = 0; c < p.component_count() && !inside; ++c)
            inside = (bmask[static_cast<size_t>(i)] & ~p.component_points(c)) == 0;
        bs.trivial = inside;
    }

    if (bs.trivial) {
        bs.separated_trivial = true;
        for (int i = 0; i < blocks && bs.separated_trivial; ++i) {
            const auto& blk = bs.blocks[static_cast<size_t>(i)];
            for (size_t a = 0; a < blk.size() && bs.separated_trivial; ++a)
                for (size_t b = a + 1; b < blk.size() && bs.separated_trivial; ++b)
                    bs.separated_trivial = split_time(p, BasicPath(blk[a], blk[b])).never();
        }
    }
    return bs;
}

bool is_reducible(const Pattern& p) {
    const int n = p.period();
    for (int blocks = 2; blocks < n; ++blocks)
        if (n % blocks == 0 && block_structure(p, blocks)) return true;
    return false;
}

std::optional<BasicPath> pi_reducible(const Pattern& p) {
    for (const BasicPath& pi : basic_paths(p))
        if (split_time(p, pi).never()) return pi;
    return std::nullopt;
}

std::optional<BlockStructure> maximal_trivial_structure(const Pattern& p) {
    const int n = p.period();
    for (int blocks = 2; blocks < n; ++blocks) {
        if (n % blocks != 0) continue;
        auto bs = block_structure(p, blocks);
        if (bs && bs->trivial && bs->separated_trivial) return bs;
    }
    return std::nullopt;
}

Pattern combinatorial_collapse(const Pattern& p) {
    auto bs = maximal_trivial_structure(p);
    if (!bs) throw StructureError("combinatorial collapse requires a pi-reducible pattern");
    const int q = bs->p;

    std::vector<uint64_t> shadows;
    for (int c = 0; c < p.component_count(); ++c) {
        uint64_t s = 0;
        for (int x : p.components()[static_cast<size_t>(c)]) s |= 1ull << (x % q);
        shadows.push_back(s);
    }
    std::sort(shadows.begin(), shadows.end());
    shadows.erase(std::unique(shadows.begin(), shadows.end()), shadows.end());

    std::vector<std::vector<int>> comps;
    for (size_t i = 0; i < shadows.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < shadows.size() && maximal; ++j)
            if (i != j && (shadows[i] & ~shadows[j]) == 0) maximal = false;
        if (!maximal) continue;
        std::vector<int> comp;
        uint64_t s = shadows[i];
        while (s) {
            comp.push_back(std::countr_zero(s));
            s &= s - 1;
        }
        comps.push_back(std::move(comp));
    }

    try {
        return Pattern::validate(q, std::move(comps));
    } catch (const ValidationError& e) {
        throw InvalidCollapseError(std::string("maximal shadows violate pattern invariants: ") +
                                   e.what());
    }
}

CollapseSequence collapse_sequence(const Pattern& p) {
    if (!is_zero_entropy(p)) throw StructureError("collapse sequence requires zero entropy");
    std::vector<Pattern> chain{p};
    while (!chain.back().trivial()) {
        if (!maximal_trivial_structure(chain.back()))
            throw StructureError(
                "zero-entropy pattern without a maximal trivial structure: collapse recursion "
                "is inconsistent");
        chain.push_back(combinatorial_collapse(chain.back()));
    }
    std::reverse(chain.begin(), chain.end());
    CollapseSequence seq;
    seq.cardinalities.push_back(chain.front().period());
    for (size_t i = 1; i < chain.size(); ++i)
        seq.cardinalities.push_back(chain[i].period() / chain[i - 1].period());
    seq.patterns = std::move(chain);
    return seq;
}

bool zero_entropy_structural(const Pattern& p) {
    Pattern cur = p;
    while (!cur.trivial()) {
        if (!maximal_trivial_structure(cur)) return false;
        cur = combinatorial_collapse(cur);
    }
    return true;
}

Classification classify(const Pattern& p, double tol) {
    Classification c;
    CoveringGraph g(p);
    c.zero = is_zero_entropy(g);
    c.entropy = c.zero ? 0.0 : entropy(g, tol);
    c.reducible = is_reducible(p);
    c.pi_red = pi_reducible(p);
    const int inner = static_cast<int>(p.inner_points().size());
    if (inner == 1) c.flower_k = p.component_count();
    c.triple_chain = p.component_count() == 3 && inner == 2;
    c.irreducible = !c.zero && !c.reducible;
    return c;
}

std::vector<std::vector<int>> scrambled_components(const Pattern& p) {
    const int n = p.period();
    std::vector<std::vector<int>> out;
    for (int c = 0; c < p.component_count(); ++c) {
        const auto& comp = p.components()[static_cast<size_t>(c)];
        bool scrambled = true;
        for (int x : comp) {
            if (!p.inner(x)) continue;  // endpoints never escape
            BranchIndexing bi = branches(p, x);
            int rest = -1;  // branch holding C \ {x}, in shifted labels
            for (int y : comp)
                if (y != x) {
                    rest = bi.branch_of(((y - x) % n + n) % n);
                    break;
                }
            // f(x) = x+1 reads as the point 1 after the shift, so the image
            // always lies in the branch holding 1.
            int image = bi.branch_of(1);
            if (image != rest) {
                scrambled = false;
                break;
            }
        }
        if (scrambled) out.push_back(comp);
    }
    return out;
}

std::vector<std::vector<int>> extremal_components(const Pattern& p) {
    std::vector<std::vector<int>> out;
    for (int c = 0; c < p.component_count(); ++c) {
        const auto& comp = p.components()[static_cast<size_t>(c)];
        int inner = 0;
        for (int x : comp)
            if (p.inner(x)) ++inner;
        if (inner == 1) out.push_back(comp);
    }
    return out;
}

namespace {

// Maximal cliques by Bron-Kerbosch with pivoting; the consecutiveness graph
// of a pointed tree is a block graph, so the clique count stays linear.
void bron_kerbosch(uint64_t r, uint64_t p_set, uint64_t x_set,
                   const std::vector<uint64_t>& nbr, std::vector<uint64_t>& out) {
    if (!p_set && !x_set) {
        out.push_back(r);
        return;
    }
    uint64_t px = p_set | x_set;
    int pivot = std::countr_zero(px);
    int best = -1;
    uint64_t scan = px;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int deg = std::popcount(nbr[static_cast<size_t>(v)] & p_set);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    uint64_t cand = p_set & ~nbr[static_cast<size_t>(pivot)];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t vb = 1ull << v;
        bron_kerbosch(r | vb, p_set & nbr[static_cast<size_t>(v)], x_set & nbr[static_cast<size_t>(v)],
                      nbr, out);
        p_set &= ~vb;
        x_set |= vb;
    }
}

}  // namespace

Pattern subordinated(const Pattern& p, int blocks, int r) {
    const int n = p.period();
    if (blocks <= 1 || blocks >= n || n % blocks != 0)
        throw DomainError("subordinated requires a strict divisor 1 < p < n");
    if (r < 0 || r >= blocks) throw DomainError("subordinated requires 0 <= r < p");

    const int k = n / blocks;
    std::vector<int> pts(static_cast<size_t>(k));
    uint64_t pts_mask = 0;
    for (int i = 0; i < k; ++i) {
        pts[static_cast<size_t>(i)] = r + i * blocks;
        pts_mask |= 1ull << (r + i * blocks);
    }

    if (k == 1) return Pattern::validate(1, {{0}});

    // a, b consecutive within the subset iff no other subset point on [a, b]
    std::vector<uint64_t> nbr(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            uint64_t arc = p.arc_mask(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
            uint64_t inside = arc & pts_mask & ~(1ull << pts[static_cast<size_t>(i)]) &
                              ~(1ull << pts[static_cast<size_t>(j)]);
            if (!inside) {
                nbr[static_cast<size_t>(i)] |= 1ull << j;
                nbr[static_cast<size_t>(j)] |= 1ull << i;
            }
        }

    std::vector<uint64_t> cliques;
    bron_kerbosch(0, k == 64 ? ~0ull : ((1ull << k) - 1), 0, nbr, cliques);

    std::vector<std::vector<int>> comps;
    for (uint64_t cl : cliques) {
        std::vector<int> comp;
        while (cl) {
            comp.push_back(std::countr_zero(cl));
            cl &= cl - 1;
        }
        comps.push_back(std::move(comp));
    }
    return Pattern::validate(k, std::move(comps));
}

}  // namespace treepat

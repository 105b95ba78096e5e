#include "treepat/transforms.hpp"

#include <algorithm>
#include <bit>

#include "treepat/structure.hpp"

namespace treepat {

Pattern opening_at(const Pattern& p, int inner, int comp_a, int comp_b) {
    const auto& comps = p.components();
    if (comp_a == comp_b || comp_a < 0 || comp_b < 0 || comp_a >= p.component_count() ||
        comp_b >= p.component_count())
        throw DomainError("opening_at: bad component indices");
    uint64_t both = p.component_points(comp_a) & p.component_points(comp_b);
    if (both != (1ull << inner)) throw DomainError("opening_at: components are not adjacent at the point");

    std::vector<std::vector<int>> next;
    std::vector<int> merged;
    for (int c = 0; c < p.component_count(); ++c) {
        if (c == comp_a || c == comp_b) {
            merged.insert(merged.end(), comps[static_cast<size_t>(c)].begin(),
                          comps[static_cast<size_t>(c)].end());
        } else {
            next.push_back(comps[static_cast<size_t>(c)]);
        }
    }
    next.push_back(std::move(merged));
    return Pattern::validate(p.period(), std::move(next));
}

std::vector<Opening> openings(const Pattern& p) {
    std::vector<Opening> out;
    for (int x : p.inner_points()) {
        std::vector<int> at;
        uint64_t cm = p.component_mask(x);
        while (cm) {
            at.push_back(std::countr_zero(cm));
            cm &= cm - 1;
        }
        for (size_t i = 0; i < at.size(); ++i)
            for (size_t j = i + 1; j < at.size(); ++j)
                out.push_back({x, at[i], at[j], opening_at(p, x, at[i], at[j])});
    }
    return out;
}

Pattern q_pattern(int n) {
    if (n < 3) throw DomainError("q_pattern requires n >= 3");
    std::vector<int> big(static_cast<size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) big[static_cast<size_t>(i)] = i;
    return Pattern::validate(n, {{n - 1, 0}, big});
}

Pattern p_extension(const Pattern& r, int p) {
    const int k = r.period();
    if (k < 2) throw DomainError("p_extension requires a pattern of period >= 2");
    if (p < 2) throw DomainError("p_extension requires p >= 2");
    const int n = p * k;

    std::vector<std::vector<int>> comps;
    for (const auto& comp : r.components()) {
        std::vector<int> scaled;
        scaled.reserve(comp.size());
        for (int x : comp) scaled.push_back(x * p);
        comps.push_back(std::move(scaled));
    }
    for (int i = 1; i < p; ++i) {
        std::vector<int> residue(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) residue[static_cast<size_t>(j)] = i + j * p;
        comps.push_back(std::move(residue));
    }
    std::vector<int> hub(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) hub[static_cast<size_t>(i)] = i;
    comps.push_back(std::move(hub));

    Pattern ext = Pattern::validate(n, std::move(comps));

    // The three defining clauses, checked on the residue block structure.
    auto bs = block_structure(ext, p);
    if (!bs) throw StructureError("p_extension: residue classes are not a block structure");
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            bool joined = false;
            for (int c = 0; c < ext.component_count() && !joined; ++c) {
                uint64_t pts = ext.component_points(c);
                bool hits_i = false, hits_j = false;
                uint64_t scan = pts;
                while (scan) {
                    int x = std::countr_zero(scan);
                    scan &= scan - 1;
                    if (x % p == i) hits_i = true;
                    if (x % p == j) hits_j = true;
                }
                joined = hits_i && hits_j;
            }
            if (!joined) throw StructureError("p_extension: skeleton is not trivial");
        }
    if (!(subordinated(ext, p, 0) == r))
        throw StructureError("p_extension: block 0 does not carry the source pattern");
    for (int i = 1; i < p; ++i)
        if (!subordinated(ext, p, i).trivial())
            throw StructureError("p_extension: a nonzero block is not trivial");
    return ext;
}

Pattern time_reverse(const Pattern& p) {
    const int n = p.period();
    std::vector<std::vector<int>> comps;
    for (const auto& comp : p.components()) {
        std::vector<int> rev;
        rev.reserve(comp.size());
        for (int x : comp) rev.push_back((n - x) % n);
        comps.push_back(std::move(rev));
    }
    return Pattern::validate(n, std::move(comps)).canonical();
}

}  // namespace treepat

#include "treepat/branching.hpp"

#include <algorithm>
#include <bit>

#include "treepat/structure.hpp"

namespace treepat {

long long BranchingSequence::period_product() const {
    long long n = 1;
    for (const auto& [p, d] : entries) n *= p;
    return n;
}

int BranchingSequence::petal_count() const {
    int v = 0;
    for (const auto& [p, d] : entries) v = std::max(v, d);
    return v;
}

void validate_branching_sequence(const BranchingSequence& s) {
    if (s.entries.empty()) throw DomainError("branching sequence must be non-empty");
    int seen_max = 0;
    for (const auto& [p, d] : s.entries) {
        if (p < 2) throw DomainError("branching sequence requires p_i >= 2");
        if (d < 1) throw DomainError("branch indices are positive");
        if (d > seen_max) {
            if (d != seen_max + 1)
                throw DomainError("new branch indices must appear in increasing order from 1");
            seen_max = d;
        }
    }
}

bool is_minimal(const BranchingSequence& s) {
    for (size_t i = 1; i < s.entries.size(); ++i)
        if (s.entries[i].second == s.entries[i - 1].second) return false;
    return true;
}

int BranchIndexing::branch_of(int y) const {
    for (size_t i = 0; i < branches.size(); ++i)
        if (std::binary_search(branches[i].begin(), branches[i].end(), y))
            return static_cast<int>(i) + 1;
    return 0;
}

BranchIndexing branches(const Pattern& p, int x) {
    const int n = p.period();
    if (x < 0 || x >= n) throw DomainError("branches: point out of range");
    Pattern q = p.rotate((n - (x % n)) % n);

    // Flood the incidence graph from each component at 0 without crossing 0.
    BranchIndexing out;
    const int m = q.component_count();
    std::vector<bool> comp_seen(static_cast<size_t>(m), false);
    uint64_t zero_comps = q.component_mask(0);
    while (zero_comps) {
        int c0 = std::countr_zero(zero_comps);
        zero_comps &= zero_comps - 1;
        if (comp_seen[static_cast<size_t>(c0)]) continue;
        uint64_t pts = 1;  // the point 0
        std::vector<int> stack{c0};
        comp_seen[static_cast<size_t>(c0)] = true;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            uint64_t members = q.component_points(c) & ~1ull;
            pts |= members;
            while (members) {
                int y = std::countr_zero(members);
                members &= members - 1;
                uint64_t cm = q.component_mask(y);
                while (cm) {
                    int c2 = std::countr_zero(cm);
                    cm &= cm - 1;
                    if (!comp_seen[static_cast<size_t>(c2)]) {
                        comp_seen[static_cast<size_t>(c2)] = true;
                        stack.push_back(c2);
                    }
                }
            }
        }
        std::vector<int> branch;
        while (pts) {
            branch.push_back(std::countr_zero(pts));
            pts &= pts - 1;
        }
        out.branches.push_back(std::move(branch));
    }
    // Branches are sorted and all contain 0, so entry 1 is the least positive
    // element d that fixes the indexing.
    std::sort(out.branches.begin(), out.branches.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[1] < b[1]; });
    return out;
}

std::vector<std::vector<int>> unshift_branches(const BranchIndexing& b, int x, int period) {
    std::vector<std::vector<int>> out;
    for (const auto& br : b.branches) {
        std::vector<int> s;
        s.reserve(br.size());
        for (int y : br) s.push_back((y + x) % period);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

Pattern flower_of(const Pattern& p, int x) {
    BranchIndexing b = branches(p, x);
    return Pattern::validate(p.period(), unshift_branches(b, x, p.period()));
}

BranchingSequence branching_sequence(const Pattern& p, int x) {
    if (p.period() < 2) throw DomainError("branching sequences require period >= 2");
    if (!is_zero_entropy(p)) throw StructureError("branching sequence requires zero entropy");
    const int n = p.period();
    if (x < 0 || x >= n) throw DomainError("branching_sequence: point out of range");
    Pattern q = p.rotate((n - (x % n)) % n);
    BranchIndexing b = branches(q, 0);
    CollapseSequence seq = collapse_sequence(q);

    BranchingSequence out;
    int level_period = 1;
    for (size_t i = 0; i < seq.patterns.size(); ++i) {
        const int pi = seq.cardinalities[i];
        const int stride = level_period;  // period of the previous level
        int delta = 0;
        for (int k = 1; k < pi; ++k) {
            int d = b.branch_of(k * stride);
            if (d == 0)
                throw StructureError("collapse label missing from every branch");
            if (delta == 0)
                delta = d;
            else if (delta != d)
                throw StructureError("level block of 0 straddles two branches");
        }
        out.entries.emplace_back(pi, delta);
        level_period *= pi;
    }
    return out;
}

Pattern build_flower(const BranchingSequence& s) {
    validate_branching_sequence(s);
    long long period = s.period_product();
    if (period > kMaxPeriod) throw DomainError("flower period exceeds the supported maximum");
    const int n = static_cast<int>(period);

    std::vector<int> petal(static_cast<size_t>(n), 0);
    int level_period = s.entries[0].first;
    for (int j = 1; j < level_period; ++j) petal[static_cast<size_t>(j)] = 1;
    for (size_t i = 1; i < s.entries.size(); ++i) {
        const auto& [pi, di] = s.entries[i];
        for (int j = 0; j < level_period; ++j)
            for (int k = 1; k < pi; ++k)
                petal[static_cast<size_t>(j + k * level_period)] =
                    j == 0 ? di : petal[static_cast<size_t>(j)];
        level_period *= pi;
    }

    const int petals = s.petal_count();
    std::vector<std::vector<int>> comps(static_cast<size_t>(petals), std::vector<int>{0});
    for (int y = 1; y < n; ++y) comps[static_cast<size_t>(petal[static_cast<size_t>(y)] - 1)].push_back(y);
    return Pattern::validate(n, std::move(comps));
}

BranchingSequence fully_reduce(const BranchingSequence& s) {
    validate_branching_sequence(s);
    BranchingSequence out;
    for (const auto& [p, d] : s.entries) {
        if (!out.entries.empty() && out.entries.back().second == d)
            out.entries.back().first *= p;
        else
            out.entries.emplace_back(p, d);
    }
    return out;
}

BranchingSequence opened_sequence(const BranchingSequence& r, int j1, int j2) {
    validate_branching_sequence(r);
    const int petals = r.petal_count();
    if (j1 < 1 || j1 >= j2) throw IndexError("opened_sequence requires 1 <= j1 < j2");
    if (j2 > petals) throw IndexError("opened_sequence: j2 exceeds the petal count");
    BranchingSequence out;
    for (const auto& [p, d] : r.entries) {
        int nd = d;
        if (d == j2)
            nd = j1;
        else if (d > j2)
            nd = d - 1;
        out.entries.emplace_back(p, nd);
    }
    return out;
}

bool is_bidirectional(const Pattern& p, int x) {
    if (p.trivial()) throw StructureError("bidirectionality is defined for non-trivial patterns");
    if (!p.inner(x)) throw DomainError("bidirectionality is defined for inner points");
    BranchingSequence s = branching_sequence(p, x);
    const size_t r = s.entries.size() - 1;
    return s.entries[r].second != s.entries[r - 1].second;
}

}  // namespace treepat

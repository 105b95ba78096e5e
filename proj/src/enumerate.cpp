#include "treepat/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treepat {

namespace {

// Order on component masks matching lexicographic order of the sorted point
// lists. Let z be the least differing point: the set holding z wins unless
// the other set has nothing beyond z, in which case it is a proper prefix
// and comes first.
inline bool mask_list_less(uint32_t a, uint32_t b) {
    uint32_t d = a ^ b;
    if (!d) return false;
    int z = std::countr_zero(d);
    if ((a >> z) & 1u) return (b >> z) != 0;
    return (a >> z) == 0;
}

using FamilySink = std::function<void(const std::vector<uint32_t>&)>;

struct Generator {
    int n;
    uint32_t full;
    std::vector<uint32_t> cands;  // all masks of size >= 2, list-lex order
    std::vector<int8_t> cand_min;
    std::vector<int8_t> cand_pc;
    size_t first_count = 0;  // prefix of candidates containing point 0

    std::vector<uint32_t> comps;
    std::vector<int> uf;
    std::vector<int> undo;
    uint32_t covered = 0;
    int rem = 0;
    const FamilySink* sink = nullptr;

    explicit Generator(int n_) : n(n_) {
        full = n == 32 ? ~0u : ((1u << n) - 1);
        for (uint32_t m = 0; m <= full && n >= 2; ++m)
            if (std::popcount(m) >= 2) cands.push_back(m);
        std::sort(cands.begin(), cands.end(), mask_list_less);
        cand_min.reserve(cands.size());
        cand_pc.reserve(cands.size());
        for (uint32_t m : cands) {
            cand_min.push_back(static_cast<int8_t>(std::countr_zero(m)));
            cand_pc.push_back(static_cast<int8_t>(std::popcount(m)));
        }
        first_count = 0;
        while (first_count < cands.size() && cand_min[first_count] == 0) ++first_count;
        uf.resize(static_cast<size_t>(n));
        reset();
    }

    void reset() {
        comps.clear();
        covered = 0;
        rem = n - 1;
        std::iota(uf.begin(), uf.end(), 0);
    }

    int find(int v) const {
        while (uf[static_cast<size_t>(v)] != v) v = uf[static_cast<size_t>(v)];
        return v;
    }

    // Links all points of the mask; on a cycle, undoes and reports failure.
    bool push(size_t idx, size_t* undo_mark) {
        uint32_t bits = cands[idx];
        int r0 = find(std::countr_zero(bits));
        bits &= bits - 1;
        *undo_mark = undo.size();
        while (bits) {
            int x = std::countr_zero(bits);
            bits &= bits - 1;
            int r = find(x);
            if (r == r0) {
                pop_unions(*undo_mark);
                return false;
            }
            uf[static_cast<size_t>(r)] = r0;
            undo.push_back(r);
        }
        comps.push_back(cands[idx]);
        covered |= cands[idx];
        rem -= cand_pc[idx] - 1;
        return true;
    }

    void pop_unions(size_t mark) {
        while (undo.size() > mark) {
            uf[static_cast<size_t>(undo.back())] = undo.back();
            undo.pop_back();
        }
    }

    void pop(size_t idx, size_t undo_mark, uint32_t prev_covered) {
        rem += cand_pc[idx] - 1;
        covered = prev_covered;
        comps.pop_back();
        pop_unions(undo_mark);
    }

    uint32_t rot(uint32_t m, int c) const { return ((m << c) | (m >> (n - c))) & full; }

    void emit() {
        std::vector<uint32_t> rotated(comps.size());
        for (int c = 1; c < n; ++c) {
            for (size_t i = 0; i < comps.size(); ++i) rotated[i] = rot(comps[i], c);
            std::sort(rotated.begin(), rotated.end(), mask_list_less);
            for (size_t i = 0; i < comps.size(); ++i) {
                if (rotated[i] == comps[i]) continue;
                if (mask_list_less(rotated[i], comps[i])) return;  // smaller rotation exists
                break;
            }
        }
        (*sink)(comps);
    }

    void dfs(size_t idx_start) {
        if (rem == 0) {
            if (covered == full) emit();
            return;
        }
        uint32_t uncovered = full & ~covered;
        if (std::popcount(uncovered) > 2 * rem) return;
        int u = uncovered ? std::countr_zero(uncovered) : n;
        for (size_t idx = idx_start; idx < cands.size(); ++idx) {
            if (cand_min[idx] > u) break;
            if (cand_pc[idx] - 1 > rem) continue;
            size_t mark;
            uint32_t prev = covered;
            if (!push(idx, &mark)) continue;
            dfs(idx + 1);
            pop(idx, mark, prev);
        }
    }
};

void generate_serial(int n, const FamilySink& sink) {
    if (n == 1) {
        sink({1u});
        return;
    }
    Generator g(n);
    g.sink = &sink;
    g.dfs(0);
}

// Partitioned by the first (lexicographically least) component; bucket order
// reproduces the serial stream independently of the thread count.
template <typename PerFamily>
void generate_partitioned(int n, bool parallel, bool ordered, const PerFamily& per_family) {
    if (n == 1) {
        per_family(std::vector<uint32_t>{1u});
        return;
    }
    Generator proto(n);
    const size_t k = proto.first_count;

    if (!parallel) {
        FamilySink sink = [&](const std::vector<uint32_t>& fam) { per_family(fam); };
        proto.sink = &sink;
        proto.dfs(0);
        return;
    }

    std::vector<std::vector<std::vector<uint32_t>>> buckets(ordered ? k : 0);
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        Generator g(n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (long long i = 0; i < static_cast<long long>(k); ++i) {
            g.reset();
            FamilySink sink;
            if (ordered) {
                auto* bucket = &buckets[static_cast<size_t>(i)];
                sink = [bucket](const std::vector<uint32_t>& fam) { bucket->push_back(fam); };
            } else {
                sink = [&per_family](const std::vector<uint32_t>& fam) { per_family(fam); };
            }
            g.sink = &sink;
            size_t mark;
            if (g.push(static_cast<size_t>(i), &mark)) g.dfs(static_cast<size_t>(i) + 1);
        }
    }
    if (ordered)
        for (const auto& bucket : buckets)
            for (const auto& fam : bucket) per_family(fam);
}

Pattern family_to_pattern(int n, const std::vector<uint32_t>& fam) {
    std::vector<std::vector<int>> comps;
    comps.reserve(fam.size());
    for (uint32_t m : fam) {
        std::vector<int> comp;
        while (m) {
            comp.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        comps.push_back(std::move(comp));
    }
    return Pattern::validate(n, std::move(comps));
}

void check_period(int n) {
    if (n < 1) throw DomainError("enumeration requires n >= 1");
    if (n > 16) throw DomainError("enumeration supports n <= 16");
}

}  // namespace

uint64_t count_patterns(int n, bool parallel) {
    check_period(n);
    uint64_t count = 0;
#ifdef _OPENMP
    if (parallel) {
        generate_partitioned(n, true, false, [&count](const std::vector<uint32_t>&) {
#pragma omp atomic
            ++count;
        });
        return count;
    }
#endif
    generate_partitioned(n, false, true, [&count](const std::vector<uint32_t>&) { ++count; });
    return count;
}

std::vector<Pattern> enumerate_patterns(int n, bool parallel) {
    check_period(n);
    std::vector<Pattern> out;
    generate_partitioned(n, parallel, true, [&](const std::vector<uint32_t>& fam) {
        out.push_back(family_to_pattern(n, fam));
    });
    return out;
}

void for_each_pattern(int n, const std::function<void(const Pattern&)>& fn) {
    check_period(n);
    generate_serial(n, [&](const std::vector<uint32_t>& fam) { fn(family_to_pattern(n, fam)); });
}

void for_each_pattern_unordered(int n, const std::function<void(const Pattern&)>& fn) {
    check_period(n);
    generate_partitioned(n, true, false,
                         [&](const std::vector<uint32_t>& fam) { fn(family_to_pattern(n, fam)); });
}

std::vector<Pattern> enumerate_patterns_naive(int n) {
    if (n < 1 || n > 5) throw DomainError("the naive oracle supports 1 <= n <= 5");
    if (n == 1) return {Pattern::validate(1, {{0}})};

    const uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> subsets;  // natural numeric order; an independent route
    for (uint32_t m = 0; m <= full; ++m)
        if (std::popcount(m) >= 2) subsets.push_back(m);
    const int k = static_cast<int>(subsets.size());

    std::vector<Pattern> found;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<Pattern> local;
        std::vector<int> uf(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long u = 1; u < (1ll << k); ++u) {
            int rem = n - 1;
            uint32_t cover = 0;
            long long bits = u;
            bool ok = true;
            while (bits) {
                int idx = std::countr_zero(static_cast<uint64_t>(bits));
                bits &= bits - 1;
                rem -= std::popcount(subsets[static_cast<size_t>(idx)]) - 1;
                cover |= subsets[static_cast<size_t>(idx)];
                if (rem < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok || rem != 0 || cover != full) continue;

            std::iota(uf.begin(), uf.end(), 0);
            auto find = [&uf](int v) {
                while (uf[static_cast<size_t>(v)] != v) v = uf[static_cast<size_t>(v)];
                return v;
            };
            bits = u;
            ok = true;
            while (bits && ok) {
                int idx = std::countr_zero(static_cast<uint64_t>(bits));
                bits &= bits - 1;
                uint32_t m = subsets[static_cast<size_t>(idx)];
                int r0 = find(std::countr_zero(m));
                m &= m - 1;
                while (m) {
                    int x = std::countr_zero(m);
                    m &= m - 1;
                    int r = find(x);
                    if (r == r0) {
                        ok = false;
                        break;
                    }
                    uf[static_cast<size_t>(r)] = r0;
                }
            }
            if (!ok) continue;
            int root = find(0);
            for (int x = 1; x < n && ok; ++x) ok = find(x) == root;
            if (!ok) continue;

            std::vector<std::vector<int>> comps;
            bits = u;
            while (bits) {
                int idx = std::countr_zero(static_cast<uint64_t>(bits));
                bits &= bits - 1;
                uint32_t m = subsets[static_cast<size_t>(idx)];
                std::vector<int> comp;
                while (m) {
                    comp.push_back(std::countr_zero(m));
                    m &= m - 1;
                }
                comps.push_back(std::move(comp));
            }
            local.push_back(Pattern::validate(n, std::move(comps)).canonical());
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace treepat

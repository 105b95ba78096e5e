#include "treepat/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "treepat/detail/scc.hpp"
#include "treepat/numerics.hpp"

namespace treepat {

std::vector<BasicPath> basic_paths(const Pattern& p) {
    std::vector<BasicPath> out;
    for (const auto& comp : p.components())
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) out.emplace_back(comp[i], comp[j]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_basic_path(const Pattern& p, int x, int y) {
    return x != y && p.same_component(x, y);
}

bool covers(const Pattern& p, const BasicPath& pi, const BasicPath& sigma) {
    const int n = p.period();
    uint64_t m = p.arc_mask((pi.a + 1) % n, (pi.b + 1) % n);
    return ((m >> sigma.a) & 1) && ((m >> sigma.b) & 1);
}

CoveringGraph::CoveringGraph(const Pattern& p) : paths_(basic_paths(p)) {
    m_ = static_cast<int>(paths_.size());
    words_ = (m_ + 63) / 64;
    bits_.assign(static_cast<size_t>(m_) * static_cast<size_t>(words_), 0);
    const int n = p.period();
    for (int i = 0; i < m_; ++i) {
        uint64_t hull = p.arc_mask((paths_[static_cast<size_t>(i)].a + 1) % n,
                                   (paths_[static_cast<size_t>(i)].b + 1) % n);
        uint64_t* row = bits_.data() + static_cast<size_t>(i) * static_cast<size_t>(words_);
        for (int j = 0; j < m_; ++j) {
            const BasicPath& s = paths_[static_cast<size_t>(j)];
            if (((hull >> s.a) & 1) && ((hull >> s.b) & 1)) row[j >> 6] |= 1ull << (j & 63);
        }
    }
}

int CoveringGraph::index_of(const BasicPath& p) const {
    auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
    if (it == paths_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - paths_.begin());
}

std::vector<std::vector<int>> CoveringGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        const uint64_t* row = bits_.data() + static_cast<size_t>(i) * static_cast<size_t>(words_);
        for (int w = 0; w < words_; ++w) {
            uint64_t word = row[w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                adj[static_cast<size_t>(i)].push_back(w * 64 + b);
            }
        }
    }
    return adj;
}

std::vector<std::vector<double>> CoveringGraph::dense() const {
    std::vector<std::vector<double>> m(static_cast<size_t>(m_),
                                       std::vector<double>(static_cast<size_t>(m_), 0.0));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (at(i, j)) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1.0;
    return m;
}

int CoveringGraph::out_degree(int i) const {
    int d = 0;
    const uint64_t* row = bits_.data() + static_cast<size_t>(i) * static_cast<size_t>(words_);
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
}

CoveringGraph transition_matrix(const Pattern& p) { return CoveringGraph(p); }

bool is_zero_entropy(const CoveringGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp = detail::tarjan_scc(adj);
    for (int v = 0; v < g.size(); ++v) {
        int within = 0;
        for (int w : adj[static_cast<size_t>(v)])
            if (comp[static_cast<size_t>(w)] == comp[static_cast<size_t>(v)])
                if (++within > 1) return false;
    }
    return true;
}

bool is_zero_entropy(const Pattern& p) { return is_zero_entropy(CoveringGraph(p)); }

double entropy(const CoveringGraph& g, double tol) {
    if (is_zero_entropy(g)) return 0.0;
    double rho = spectral_radius(g.dense(), tol);
    return std::log(std::max(rho, 1.0));
}

double entropy(const Pattern& p, double tol) { return entropy(CoveringGraph(p), tol); }

SplitResult split_time(const Pattern& p, const BasicPath& pi) {
    if (!is_basic_path(p, pi.a, pi.b)) throw DomainError("split_time requires a basic path");
    const int n = p.period();
    int a = pi.a, b = pi.b;
    for (int k = 1; k <= n; ++k) {
        a = (a + 1) % n;
        b = (b + 1) % n;
        if (!p.same_component(a, b)) return SplitResult::splits(k);
    }
    return SplitResult::never_splits();
}

namespace {
uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? std::numeric_limits<uint64_t>::max() : s;
}
}  // namespace

uint64_t walk_count(const CoveringGraph& g, int row, int k) {
    const int m = g.size();
    if (row < 0 || row >= m) throw DomainError("walk_count: row out of range");
    std::vector<uint64_t> u(static_cast<size_t>(m), 0), v(static_cast<size_t>(m), 0);
    u[static_cast<size_t>(row)] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < m; ++i) {
            uint64_t ui = u[static_cast<size_t>(i)];
            if (!ui) continue;
            for (int j = 0; j < m; ++j)
                if (g.at(i, j)) v[static_cast<size_t>(j)] = sat_add(v[static_cast<size_t>(j)], ui);
        }
        std::swap(u, v);
    }
    uint64_t total = 0;
    for (uint64_t x : u) total = sat_add(total, x);
    return total;
}

uint64_t walk_count(const Pattern& p, const BasicPath& pi, int k) {
    if (k < 0) throw DomainError("walk_count requires k >= 0");
    CoveringGraph g(p);
    int row = g.index_of(BasicPath(pi.a, pi.b));
    if (row < 0) throw DomainError("walk_count requires a basic path");
    return walk_count(g, row, k);
}

}  // namespace treepat

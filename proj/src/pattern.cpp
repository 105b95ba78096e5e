#include "treepat/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "json.hpp"

namespace treepat {

namespace {

uint64_t points_mask(const std::vector<int>& comp) {
    uint64_t m = 0;
    for (int x : comp) m |= 1ull << x;
    return m;
}

int find_root(std::vector<int>& uf, int v) {
    while (uf[static_cast<size_t>(v)] != v) {
        uf[static_cast<size_t>(v)] = uf[static_cast<size_t>(uf[static_cast<size_t>(v)])];
        v = uf[static_cast<size_t>(v)];
    }
    return v;
}

}  // namespace

Pattern Pattern::validate(int period, std::vector<std::vector<int>> components) {
    if (period < 1) throw ValidationError("period must be a positive integer");
    if (period > kMaxPeriod)
        throw ValidationError("period " + std::to_string(period) + " exceeds the supported maximum " +
                              std::to_string(kMaxPeriod));

    for (auto& c : components) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (int x : c)
            if (x < 0 || x >= period)
                throw ValidationError("point " + std::to_string(x) + " outside 0.." +
                                      std::to_string(period - 1));
    }
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());

    for (const auto& c : components) {
        if (c.empty()) throw SizeError("empty component");
        if (period >= 2 && c.size() < 2)
            throw SizeError("component {" + std::to_string(c[0]) + "} has fewer than 2 points");
    }

    const uint64_t full = period == 64 ? ~0ull : ((1ull << period) - 1);
    std::vector<uint64_t> masks;
    masks.reserve(components.size());
    uint64_t cover = 0;
    for (const auto& c : components) {
        masks.push_back(points_mask(c));
        cover |= masks.back();
    }
    if (cover != full) throw CoverageError("components do not cover all of Z_" + std::to_string(period));

    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if (std::popcount(masks[i] & masks[j]) >= 2)
                throw OverlapError("two components share two or more points");

    // Acyclicity and connectivity of the incidence graph via union-find.
    std::vector<int> uf(static_cast<size_t>(period));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& c : components) {
        int r0 = find_root(uf, c[0]);
        for (size_t k = 1; k < c.size(); ++k) {
            int r = find_root(uf, c[k]);
            if (r == r0) throw CycleError("component incidence graph contains a cycle");
            uf[static_cast<size_t>(r)] = r0;
        }
    }
    int root = find_root(uf, 0);
    for (int x = 1; x < period; ++x)
        if (find_root(uf, x) != root)
            throw DisconnectedError("component incidence graph is not connected");

    Pattern p;
    p.n_ = period;
    p.comps_ = std::move(components);
    p.build_index();
    return p;
}

void Pattern::build_index() {
    const size_t n = static_cast<size_t>(n_);
    const size_t m = comps_.size();
    comp_pts_.assign(m, 0);
    pt_comps_.assign(n, 0);
    valence_.assign(n, 0);
    inner_.clear();
    for (size_t c = 0; c < m; ++c)
        for (int x : comps_[c]) {
            comp_pts_[c] |= 1ull << x;
            pt_comps_[static_cast<size_t>(x)] |= 1ull << c;
            ++valence_[static_cast<size_t>(x)];
        }
    for (int x = 0; x < n_; ++x)
        if (valence_[static_cast<size_t>(x)] >= 2) inner_.push_back(x);

    // BFS over the bipartite incidence graph from point 0.
    const size_t total = n + m;
    parent_.assign(total, -1);
    depth_.assign(total, -1);
    std::queue<int> q;
    q.push(0);
    depth_[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v < n_) {
            uint64_t cm = pt_comps_[static_cast<size_t>(v)];
            while (cm) {
                int c = std::countr_zero(cm);
                cm &= cm - 1;
                int node = n_ + c;
                if (depth_[static_cast<size_t>(node)] < 0) {
                    depth_[static_cast<size_t>(node)] = depth_[static_cast<size_t>(v)] + 1;
                    parent_[static_cast<size_t>(node)] = v;
                    q.push(node);
                }
            }
        } else {
            for (int x : comps_[static_cast<size_t>(v - n_)]) {
                if (depth_[static_cast<size_t>(x)] < 0) {
                    depth_[static_cast<size_t>(x)] = depth_[static_cast<size_t>(v)] + 1;
                    parent_[static_cast<size_t>(x)] = v;
                    q.push(x);
                }
            }
        }
    }
}

void Pattern::check_point(int x) const {
    if (x < 0 || x >= n_) throw DomainError("point " + std::to_string(x) + " outside 0.." + std::to_string(n_ - 1));
}

std::vector<int> Pattern::arc(int x, int y) const {
    check_point(x);
    check_point(y);
    std::vector<int> left, right;
    int a = x, b = y;
    while (depth_[static_cast<size_t>(a)] > depth_[static_cast<size_t>(b)]) {
        if (a < n_) left.push_back(a);
        a = parent_[static_cast<size_t>(a)];
    }
    while (depth_[static_cast<size_t>(b)] > depth_[static_cast<size_t>(a)]) {
        if (b < n_) right.push_back(b);
        b = parent_[static_cast<size_t>(b)];
    }
    while (a != b) {
        if (a < n_) left.push_back(a);
        if (b < n_) right.push_back(b);
        a = parent_[static_cast<size_t>(a)];
        b = parent_[static_cast<size_t>(b)];
    }
    if (a < n_) left.push_back(a);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

uint64_t Pattern::arc_mask(int x, int y) const {
    check_point(x);
    check_point(y);
    uint64_t out = 0;
    int a = x, b = y;
    while (depth_[static_cast<size_t>(a)] > depth_[static_cast<size_t>(b)]) {
        if (a < n_) out |= 1ull << a;
        a = parent_[static_cast<size_t>(a)];
    }
    while (depth_[static_cast<size_t>(b)] > depth_[static_cast<size_t>(a)]) {
        if (b < n_) out |= 1ull << b;
        b = parent_[static_cast<size_t>(b)];
    }
    while (a != b) {
        if (a < n_) out |= 1ull << a;
        if (b < n_) out |= 1ull << b;
        a = parent_[static_cast<size_t>(a)];
        b = parent_[static_cast<size_t>(b)];
    }
    if (a < n_) out |= 1ull << a;
    return out;
}

Pattern Pattern::rotate(int c) const {
    c = ((c % n_) + n_) % n_;
    std::vector<std::vector<int>> comps;
    comps.reserve(comps_.size());
    for (const auto& comp : comps_) {
        std::vector<int> m;
        m.reserve(comp.size());
        for (int x : comp) m.push_back((x + c) % n_);
        comps.push_back(std::move(m));
    }
    return validate(n_, std::move(comps));
}

Pattern Pattern::canonical() const {
    std::vector<std::vector<int>> best;
    for (int c = 0; c < n_; ++c) {
        std::vector<std::vector<int>> cand;
        cand.reserve(comps_.size());
        for (const auto& comp : comps_) {
            std::vector<int> m;
            m.reserve(comp.size());
            for (int x : comp) m.push_back((x + c) % n_);
            std::sort(m.begin(), m.end());
            cand.push_back(std::move(m));
        }
        std::sort(cand.begin(), cand.end());
        if (c == 0 || cand < best) best = std::move(cand);
    }
    return validate(n_, std::move(best));
}

bool Pattern::is_canonical() const { return canonical().components() == comps_; }

std::string Pattern::serialize() const {
    nlohmann::ordered_json j;
    j["period"] = n_;
    j["components"] = comps_;
    return j.dump();
}

Pattern Pattern::parse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("period") || !j.contains("components"))
        throw ParseError("pattern object must have \"period\" and \"components\"");
    if (!j["period"].is_number_integer()) throw ParseError("\"period\" must be an integer");
    if (!j["components"].is_array()) throw ParseError("\"components\" must be an array of arrays");
    std::vector<std::vector<int>> comps;
    for (const auto& c : j["components"]) {
        if (!c.is_array()) throw ParseError("\"components\" must be an array of arrays");
        std::vector<int> comp;
        for (const auto& x : c) {
            if (!x.is_number_integer()) throw ParseError("component entries must be integers");
            comp.push_back(x.get<int>());
        }
        comps.push_back(std::move(comp));
    }
    return validate(j["period"].get<int>(), std::move(comps));
}

std::vector<PointProfile> point_profile(const Pattern& p) {
    std::vector<PointProfile> out;
    out.reserve(static_cast<size_t>(p.period()));
    for (int x = 0; x < p.period(); ++x) {
        PointProfile pp;
        pp.point = x;
        pp.valence = p.valence(x);
        pp.inner = pp.valence >= 2;
        pp.endpoint = !pp.inner;
        out.push_back(pp);
    }
    return out;
}

}  // namespace treepat

#include "treepat/detail/scc.hpp"

#include <algorithm>

namespace treepat::detail {

std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj, int* count_out) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        comp(static_cast<size_t>(n), -1);
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> call;

    for (int start = 0; start < n; ++start) {
        if (index[static_cast<size_t>(start)] >= 0) continue;
        call.push_back({start, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            if (f.edge == 0) {
                index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = next_index++;
                stack.push_back(v);
                on_stack[static_cast<size_t>(v)] = true;
            }
            bool descended = false;
            while (f.edge < adj[static_cast<size_t>(v)].size()) {
                int w = adj[static_cast<size_t>(v)][f.edge++];
                if (index[static_cast<size_t>(w)] < 0) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<size_t>(w)])
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = false;
                    comp[static_cast<size_t>(w)] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            call.pop_back();
            if (!call.empty()) {
                int u = call.back().v;
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
            }
        }
    }
    if (count_out) *count_out = next_comp;
    return comp;
}

}  // namespace treepat::detail

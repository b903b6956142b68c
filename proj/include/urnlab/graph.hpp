#pragma once

#include <algorithm>
#include <vector>

namespace urnlab {

// Tarjan's strongly connected components over a small adjacency-list digraph.
// Returns components in reverse topological order; callers here only care
// whether there is exactly one.
class TarjanScc {
public:
    explicit TarjanScc(const std::vector<std::vector<int>>& graph) : graph_(graph) {
        const int n = static_cast<int>(graph.size());
        index_.assign(n, -1);
        lowlink_.assign(n, -1);
        on_stack_.assign(n, false);
        for (int v = 0; v < n; ++v)
            if (index_[v] < 0) dfs(v);
    }

    const std::vector<std::vector<int>>& components() const { return sccs_; }

private:
    void dfs(int v) {
        index_[v] = lowlink_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
        for (int w : graph_[v]) {
            if (index_[w] < 0) {
                dfs(w);
                lowlink_[v] = std::min(lowlink_[v], lowlink_[w]);
            } else if (on_stack_[w]) {
                lowlink_[v] = std::min(lowlink_[v], index_[w]);
            }
        }
        if (lowlink_[v] == index_[v]) {
            std::vector<int> scc;
            int w;
            do {
                w = stack_.back();
                stack_.pop_back();
                on_stack_[w] = false;
                scc.push_back(w);
            } while (w != v);
            sccs_.push_back(std::move(scc));
        }
    }

    const std::vector<std::vector<int>>& graph_;
    std::vector<int> index_, lowlink_;
    std::vector<bool> on_stack_;
    std::vector<int> stack_;
    std::vector<std::vector<int>> sccs_;
    int counter_ = 0;
};

inline bool strongly_connected(const std::vector<std::vector<int>>& graph) {
    if (graph.empty()) return true;
    return TarjanScc(graph).components().size() == 1;
}

}  // namespace urnlab

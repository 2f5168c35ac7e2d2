#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace rvis::detail {

// Dinic max-flow over an exact capacity type (int64_t or a big integer).
template <typename Cap>
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

    void add_edge(int from, int to, Cap cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], Cap(0)});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    Cap run(int source, int sink) {
        Cap flow = 0;
        while (bfs(source, sink)) {
            std::copy(head_.begin(), head_.end(), iter_.begin());
            for (;;) {
                Cap pushed = dfs(source, sink, Cap(-1));
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    /// Nodes reachable from `source` in the residual network (the source side of the minimum
    /// cut closest to the source). Valid after run().
    std::vector<bool> source_side(int source) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        seen[source] = true;
        q.push(source);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    q.push(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        Cap cap;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    // limit < 0 means unbounded.
    Cap dfs(int u, int sink, Cap limit) {
        if (u == sink) return limit;
        for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
            const Cap room = (limit < 0 || arc.cap < limit) ? arc.cap : limit;
            Cap pushed = dfs(arc.to, sink, room);
            if (pushed > 0) {
                arc.cap -= pushed;
                arcs_[a ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace rvis::detail

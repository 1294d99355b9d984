#include "edskit/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "edskit/errors.hpp"

namespace edskit {
namespace {

std::vector<std::vector<int>> left_adjacency(const Bipartite& b) {
    std::vector<std::vector<int>> adj(b.left);
    for (auto [r, s] : b.edges) {
        if (r < 0 || r >= b.left || s < 0 || s >= b.right) throw InvalidInput("bipartite edge index out of range");
        adj[r].push_back(s);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw InvalidInput("duplicate bipartite edge");
    }
    return adj;
}

class HopcroftKarp {
public:
    HopcroftKarp(int left, int right, const std::vector<std::vector<int>>& adj)
        : adj_(adj), ml_(left, -1), mr_(right, -1), dist_(left) {}

    BipartiteMatching run() {
        int size = 0;
        while (bfs())
            for (int r = 0; r < static_cast<int>(ml_.size()); ++r)
                if (ml_[r] == -1 && dfs(r)) ++size;
        return {ml_, mr_, size};
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        for (int r = 0; r < static_cast<int>(ml_.size()); ++r) {
            dist_[r] = ml_[r] == -1 ? 0 : kInf;
            if (ml_[r] == -1) q.push(r);
        }
        bool found = false;
        while (!q.empty()) {
            int r = q.front();
            q.pop();
            for (int s : adj_[r]) {
                int r2 = mr_[s];
                if (r2 == -1) {
                    found = true;
                } else if (dist_[r2] == kInf) {
                    dist_[r2] = dist_[r] + 1;
                    q.push(r2);
                }
            }
        }
        return found;
    }

    bool dfs(int r) {
        for (int s : adj_[r]) {
            int r2 = mr_[s];
            if (r2 == -1 || (dist_[r2] == dist_[r] + 1 && dfs(r2))) {
                ml_[r] = s;
                mr_[s] = r;
                return true;
            }
        }
        dist_[r] = kInf;
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> ml_, mr_, dist_;
};

}  // namespace

BipartiteMatching max_matching(const Bipartite& b) {
    auto adj = left_adjacency(b);
    return HopcroftKarp(b.left, b.right, adj).run();
}

SaturationResult saturate_or_deficiency(const Bipartite& b) {
    auto adj = left_adjacency(b);
    BipartiteMatching m = HopcroftKarp(b.left, b.right, adj).run();
    SaturationResult res;
    if (m.size == b.left) {
        res.saturated = true;
        res.matching = std::move(m);
        return res;
    }
    std::vector<char> in_y(b.left, 0);
    std::queue<int> q;
    for (int r = 0; r < b.left; ++r)
        if (m.mate_left[r] == -1) {
            in_y[r] = 1;
            q.push(r);
        }
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        for (int s : adj[r]) {
            int r2 = m.mate_right[s];
            if (r2 != -1 && !in_y[r2]) {
                in_y[r2] = 1;
                q.push(r2);
            }
        }
    }
    BipartiteMatching kept;
    kept.mate_left.assign(b.left, -1);
    kept.mate_right.assign(b.right, -1);
    for (int r = 0; r < b.left; ++r) {
        if (in_y[r]) {
            res.deficient.push_back(r);
        } else {
            kept.mate_left[r] = m.mate_left[r];
            kept.mate_right[m.mate_left[r]] = r;
            ++kept.size;
        }
    }
    res.matching = std::move(kept);
    return res;
}

std::vector<int> right_neighbors(const Bipartite& b, const std::vector<int>& left_set) {
    std::vector<char> in(b.left, 0);
    for (int r : left_set) in[r] = 1;
    std::vector<int> out;
    for (auto [r, s] : b.edges)
        if (in[r]) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace edskit

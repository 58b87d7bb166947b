#include <algorithm>
#include <cstdlib>
#include <deque>

#include "zolab/error.hpp"
#include "zolab/graph.hpp"

namespace zolab {

namespace {

// Backtracking search for witness positions w_1..w_k in [1, n]. Vertices are
// placed in BFS order of the constraint graph; a component root tries every
// start position, later vertices only positions reachable from their BFS
// parent through one constraint.
class WitnessSearch {
public:
    WitnessSearch(const ProbSeq& seq, int n, const Subgraph& h, bool successor_pattern)
        : n_(n), k_(static_cast<int>(h.positions.size())), plus_(successor_pattern),
          support_(support_upto(seq, n - 1)),
          edge_(static_cast<std::size_t>(k_), std::vector<bool>(static_cast<std::size_t>(k_), false)),
          succ_(edge_), w_(static_cast<std::size_t>(k_), 0), parent_(static_cast<std::size_t>(k_), -1) {
        for (auto [a, b] : h.edges) {
            edge_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = true;
            edge_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = true;
        }
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                if (i != j) succ_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                                h.positions[static_cast<std::size_t>(j)] == h.positions[static_cast<std::size_t>(i)] % n + 1;
    }

    bool run() {
        auto components = bfs_components();
        if (plus_) {
            // Successor biconditionals couple every pair, so search jointly.
            std::vector<int> order;
            for (auto& c : components) order.insert(order.end(), c.begin(), c.end());
            return place(order, 0);
        }
        for (auto& c : components)
            if (!place(c, 0)) return false;
        return true;
    }

private:
    bool linked(int i, int j) const {
        return edge_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ||
               (plus_ && (succ_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ||
                          succ_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
    }

    std::vector<std::vector<int>> bfs_components() {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(static_cast<std::size_t>(k_), false);
        for (int root = 0; root < k_; ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            std::vector<int> comp;
            std::deque<int> queue{root};
            seen[static_cast<std::size_t>(root)] = true;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                comp.push_back(u);
                for (int v = 0; v < k_; ++v)
                    if (!seen[static_cast<std::size_t>(v)] && linked(u, v)) {
                        seen[static_cast<std::size_t>(v)] = true;
                        parent_[static_cast<std::size_t>(v)] = u;
                        queue.push_back(v);
                    }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool positive(long long d) const {
        return d >= 1 && std::binary_search(support_.begin(), support_.end(), static_cast<Index>(d));
    }

    bool consistent(int j) const {
        const long long wj = w_[static_cast<std::size_t>(j)];
        for (int i = 0; i < k_; ++i) {
            const long long wi = w_[static_cast<std::size_t>(i)];
            if (i == j || wi == 0) continue;
            if (edge_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && !positive(std::llabs(wj - wi)))
                return false;
            if (plus_) {
                if ((wj == wi + 1) != succ_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
                if ((wi == wj + 1) != succ_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) return false;
            }
        }
        return true;
    }

    std::vector<long long> candidates(int j) const {
        std::vector<long long> out;
        const int p = parent_[static_cast<std::size_t>(j)];
        if (p < 0) {
            for (long long x = 1; x <= n_; ++x) out.push_back(x);
            return out;
        }
        const long long wp = w_[static_cast<std::size_t>(p)];
        if (plus_ && succ_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)]) {
            out.push_back(wp + 1);
        } else if (plus_ && succ_[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)]) {
            out.push_back(wp - 1);
        } else {
            for (Index d : support_) {
                out.push_back(wp - d);
                out.push_back(wp + d);
            }
        }
        std::erase_if(out, [&](long long x) { return x < 1 || x > n_; });
        return out;
    }

    bool place(const std::vector<int>& order, std::size_t t) {
        if (t == order.size()) return true;
        const int j = order[t];
        for (long long x : candidates(j)) {
            w_[static_cast<std::size_t>(j)] = x;
            if (consistent(j) && place(order, t + 1)) return true;
        }
        w_[static_cast<std::size_t>(j)] = 0;
        return false;
    }

    int n_;
    int k_;
    bool plus_;
    std::vector<Index> support_;
    std::vector<std::vector<bool>> edge_;
    std::vector<std::vector<bool>> succ_;
    std::vector<long long> w_;
    std::vector<int> parent_;
};

bool le_flat(int n, const Subgraph& h) {
    const int k = static_cast<int>(h.positions.size());
    std::vector<std::vector<bool>> edge(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    for (auto [a, b] : h.edges) {
        edge[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = true;
        edge[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = true;
    }
    auto pos = [&](int i) { return static_cast<long long>(h.positions[static_cast<std::size_t>(i)]); };
    for (int i = 0; i < k; ++i) {
        bool anchor = true;
        for (int a = 0; a < k && anchor; ++a)
            for (int b = 0; b < k && anchor; ++b) {
                if (a == b || a == i || b == i) continue;
                if (!clockwise(pos(i), pos(a), pos(b))) continue;
                if (2 * (std::llabs(pos(a) - pos(i)) + std::llabs(pos(i) - pos(b))) > n) continue;
                if (edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) anchor = false;
            }
        if (anchor) return true;
    }
    return false;
}

}  // namespace

bool is_flat(const ProbSeq& seq, int n, const Subgraph& h, FlatVariant variant) {
    const int k = static_cast<int>(h.positions.size());
    if (k > kFlatMaxVertices)
        throw InvalidArgument("flatness checks support at most " + std::to_string(kFlatMaxVertices) + " vertices");
    if (n < 1 || h.host_n != n) throw InvalidArgument("subgraph host size must equal n");
    std::vector<Vertex> sorted = h.positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("subgraph positions must be distinct");
    for (Vertex v : sorted)
        if (v < 1 || v > n) throw InvalidArgument("subgraph position outside [1,n]");
    for (auto [a, b] : h.edges)
        if (a < 1 || b < 1 || a > k || b > k || a == b) throw InvalidArgument("subgraph edge index out of range");

    if (variant == FlatVariant::LC_LE) return le_flat(n, h);
    return WitnessSearch(seq, n, h, variant == FlatVariant::LC_PLUS).run();
}

}  // namespace zolab

#include "zolab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "zolab/error.hpp"

namespace zolab {

namespace {

std::uint64_t pair_key(Vertex v, Vertex w) {
    return (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w);
}

}  // namespace

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw InvalidArgument("a graph needs at least one vertex");
    for (auto& [v, w] : edges_) {
        if (v == w) throw InvalidArgument("loop at vertex " + std::to_string(v));
        if (v < 1 || v > n || w < 1 || w > n)
            throw InvalidArgument("edge {" + std::to_string(v) + "," + std::to_string(w) +
                                  "} has an endpoint outside [1," + std::to_string(n) + "]");
        if (v > w) std::swap(v, w);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [v, w] : edges_) {
        adj_[static_cast<std::size_t>(v)].push_back(w);
        adj_[static_cast<std::size_t>(w)].push_back(v);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    if (n <= kDenseLimit) {
        const std::size_t stride = static_cast<std::size_t>(n) + 1;
        bits_.assign((stride * stride + 63) / 64, 0);
        for (auto [v, w] : edges_) {
            std::size_t a = static_cast<std::size_t>(v) * stride + static_cast<std::size_t>(w);
            std::size_t b = static_cast<std::size_t>(w) * stride + static_cast<std::size_t>(v);
            bits_[a / 64] |= 1ULL << (a % 64);
            bits_[b / 64] |= 1ULL << (b % 64);
        }
    } else {
        lookup_.reserve(edges_.size() * 2);
        for (auto [v, w] : edges_) lookup_.insert(pair_key(v, w));
    }
}

bool Graph::has_edge(Vertex v, Vertex w) const noexcept {
    if (v < 1 || w < 1 || v > n_ || w > n_ || v == w) return false;
    if (!bits_.empty()) {
        const std::size_t stride = static_cast<std::size_t>(n_) + 1;
        std::size_t a = static_cast<std::size_t>(v) * stride + static_cast<std::size_t>(w);
        return (bits_[a / 64] >> (a % 64)) & 1ULL;
    }
    if (v > w) std::swap(v, w);
    return lookup_.count(pair_key(v, w)) != 0;
}

Graph make_graph(int n, EdgeList edges) { return Graph(n, std::move(edges)); }

Graph complete_graph(int l) {
    EdgeList edges;
    for (Vertex v = 1; v <= l; ++v)
        for (Vertex w = v + 1; w <= l; ++w) edges.emplace_back(v, w);
    return Graph(l, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

std::vector<int> distances_from(const Graph& g, Vertex v, Metric metric) {
    const int n = g.n();
    if (v < 1 || v > n) throw InvalidArgument("vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
    std::deque<Vertex> queue{v};
    dist[static_cast<std::size_t>(v)] = 0;
    auto visit = [&](Vertex from, Vertex to) {
        if (dist[static_cast<std::size_t>(to)] < 0) {
            dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(from)] + 1;
            queue.push_back(to);
        }
    };
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) visit(u, w);
        if (metric == Metric::Plain) continue;
        if (u > 1) visit(u, u - 1);
        if (u < n) visit(u, u + 1);
        if (metric == Metric::Cycle && n > 2) {
            if (u == 1) visit(u, n);
            if (u == n) visit(u, 1);
        }
    }
    return dist;
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int r, Metric metric) {
    if (r < 0) throw InvalidArgument("radius must be non-negative");
    auto dist = distances_from(g, v, metric);
    std::vector<Vertex> out;
    for (Vertex w = 1; w <= g.n(); ++w)
        if (dist[static_cast<std::size_t>(w)] >= 0 && dist[static_cast<std::size_t>(w)] <= r) out.push_back(w);
    return out;
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int r, bool augmented) {
    return neighborhood(g, v, r, augmented ? Metric::Path : Metric::Plain);
}

bool is_exact_copy_at(const Graph& g, const Graph& h, int offset) {
    const int l = h.n();
    if (offset < 0 || offset > g.n() - l)
        throw InvalidArgument("offset " + std::to_string(offset) + " out of range");
    for (Vertex j = 1; j <= l; ++j)
        for (Vertex k = j + 1; k <= l; ++k)
            if (h.has_edge(j, k) != g.has_edge(offset + j, offset + k)) return false;
    for (Vertex u = offset + 1; u <= offset + l; ++u)
        for (Vertex w : g.neighbors(u))
            if (w <= offset || w > offset + l) return false;
    return true;
}

std::vector<int> exact_copy_offsets(const Graph& g, const Graph& h, Vertex lo, Vertex hi) {
    if (lo < 1 || hi > g.n() || lo > hi) throw InvalidArgument("window must satisfy 1 <= lo <= hi <= n");
    std::vector<int> out;
    for (int i = lo - 1; i + h.n() <= hi; ++i)
        if (is_exact_copy_at(g, h, i)) out.push_back(i);
    return out;
}

int max_disjoint_exact_copies(const Graph& g, const Graph& h, Vertex lo, Vertex hi) {
    // All blocks have length l, so ascending offset is ascending right end.
    int count = 0;
    int last_end = 0;
    for (int i : exact_copy_offsets(g, h, lo, hi)) {
        if (i + 1 > last_end) {
            ++count;
            last_end = i + h.n();
        }
    }
    return count;
}

std::vector<bool> cutpoints(const Graph& g) {
    const int n = g.n();
    std::vector<int> delta(static_cast<std::size_t>(n) + 2, 0);
    for (auto [a, b] : g.edges()) {
        ++delta[static_cast<std::size_t>(a)];
        --delta[static_cast<std::size_t>(b)];
    }
    std::vector<bool> cut(static_cast<std::size_t>(n) + 1, false);
    int covering = 0;
    for (Vertex v = 1; v <= n; ++v) {
        covering += delta[static_cast<std::size_t>(v)];
        cut[static_cast<std::size_t>(v)] = covering == 0;
    }
    return cut;
}

bool is_cutpoint(const Graph& g, Vertex v) {
    if (v < 1 || v > g.n()) throw InvalidArgument("vertex out of range");
    for (auto [a, b] : g.edges())
        if (a <= v && v < b) return false;
    return true;
}

bool psi_r_holds(const Graph& g, std::int64_t f_r) {
    if (f_r < 1) throw InvalidArgument("f(r) must be positive");
    const std::int64_t lo = 2 * f_r, hi = static_cast<std::int64_t>(g.n()) - 2 * f_r;
    if (lo > hi) return false;
    auto cut = cutpoints(g);
    for (std::int64_t v = lo; v <= hi; ++v)
        if (cut[static_cast<std::size_t>(v)]) return true;
    return false;
}

Graph disjoint_sum(const Graph& g1, const Graph& g2) {
    EdgeList edges = g1.edges();
    for (auto [v, w] : g2.edges()) edges.emplace_back(v + g1.n(), w + g1.n());
    return Graph(g1.n() + g2.n(), std::move(edges));
}

Graph concat_sum(const Graph& g1, const Graph& g2) { return disjoint_sum(g1, g2); }

std::uint64_t count_triangles(const Graph& g) {
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges()) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        auto ia = std::upper_bound(a.begin(), a.end(), v);
        auto ib = std::upper_bound(b.begin(), b.end(), v);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                ++count;
                ++ia;
                ++ib;
            }
        }
    }
    return count;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n() << '\n';
    for (auto [v, w] : g.edges()) os << "e " << v << ' ' << w << '\n';
    return os.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    EdgeList edges;
    auto fail = [&](const std::string& msg) {
        throw InvalidArgument("edge list line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line.substr(first));
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (n >= 0) fail("duplicate vertex count");
            if (!(fields >> n) || n < 1) fail("bad vertex count");
        } else if (tag == "e") {
            if (n < 0) fail("edge before vertex count");
            Vertex v = 0, w = 0;
            if (!(fields >> v >> w)) fail("bad edge");
            edges.emplace_back(v, w);
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (fields >> extra) fail("trailing text");
    }
    if (n < 0) throw InvalidArgument("edge list has no vertex count");
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string("edge list: ") + e.what());
    }
}

}  // namespace zolab

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zolab/probseq.hpp"

namespace zolab {

using Vertex = int;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Simple undirected graph on {1..n}, n >= 1. Immutable after construction.
class Graph {
public:
    // Normalizes each pair to v < w, sorts, and drops duplicates.
    // Throws InvalidArgument on loops or endpoints outside [1, n].
    Graph(int n, EdgeList edges);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    // Sorted, v < w.
    const EdgeList& edges() const noexcept { return edges_; }
    // Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(Vertex v, Vertex w) const noexcept;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    static constexpr int kDenseLimit = 2048;

    int n_;
    EdgeList edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;            // row-major n x n when n <= kDenseLimit
    std::unordered_set<std::uint64_t> lookup_;   // otherwise
};

Graph make_graph(int n, EdgeList edges);
Graph complete_graph(int l);
Graph empty_graph(int n);

// Distance used for neighborhoods: plain adjacency, adjacency plus the path
// edges {i, i+1}, or adjacency plus the cycle edges including {n, 1}.
enum class Metric { Plain, Path, Cycle };

// BFS distances from v; unreachable vertices get -1. Index 0 unused.
std::vector<int> distances_from(const Graph& g, Vertex v, Metric metric);

// N_r(v), sorted. N_0(v) = {v}. `augmented` selects Metric::Path.
std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int r, bool augmented);
std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int r, Metric metric);

// Block {offset+1 .. offset+l} induces h (shifted) and no edge of g has
// exactly one end in the block. 0 <= offset <= n - l.
bool is_exact_copy_at(const Graph& g, const Graph& h, int offset);

// Offsets i whose block lies in [lo, hi] and is an exact copy of h.
std::vector<int> exact_copy_offsets(const Graph& g, const Graph& h, Vertex lo, Vertex hi);

// Maximum number of pairwise vertex-disjoint exact copies inside [lo, hi].
int max_disjoint_exact_copies(const Graph& g, const Graph& h, Vertex lo, Vertex hi);

// No edge {a, b} with a <= v < b. v = n is always a cutpoint.
bool is_cutpoint(const Graph& g, Vertex v);
// Cutpoint flags for every vertex; index 0 unused.
std::vector<bool> cutpoints(const Graph& g);

// Some cutpoint v with 2 f_r <= v <= n - 2 f_r.
bool psi_r_holds(const Graph& g, std::int64_t f_r);

// g1 followed by g2 shifted by g1.n(), no cross edges.
Graph disjoint_sum(const Graph& g1, const Graph& g2);
// Same edge set as disjoint_sum; the blocks are read as contiguous segments
// of the line by order-aware vocabularies.
Graph concat_sum(const Graph& g1, const Graph& g2);

std::uint64_t count_triangles(const Graph& g);

// -- flatness on the circle -------------------------------------------------

// A k-vertex subgraph of a graph on the circle of size host_n. Edges are
// 1-based index pairs into `positions`.
struct Subgraph {
    int host_n;
    std::vector<Vertex> positions;
    std::vector<std::pair<int, int>> edges;
};

enum class FlatVariant { LC, LC_PLUS, LC_LE };

// Starting from a and moving clockwise, b is met no later than c: some cyclic
// rotation of (a, b, c) is non-decreasing.
constexpr bool clockwise(long long a, long long b, long long c) noexcept {
    return (a <= b && b <= c) || (b <= c && c <= a) || (c <= a && a <= b);
}

constexpr int kFlatMaxVertices = 8;

bool is_flat(const ProbSeq& seq, int n, const Subgraph& h, FlatVariant variant);

// -- text format ------------------------------------------------------------

// "n <count>" then one "e <v> <w>" line per edge, sorted; "#" lines are comments.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace zolab

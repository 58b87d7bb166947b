#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/graphs.hpp"
#include "zolab/error.hpp"
#include "zolab/graph.hpp"

using namespace zolab;
using zolab::testing::all_graphs;
using zolab::testing::random_graph;

namespace {

// Largest set of pairwise disjoint intervals [o+1, o+l], by trying every subset.
int brute_disjoint(const std::vector<int>& offsets, int l) {
    const std::size_t m = offsets.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1u) chosen.push_back(offsets[i]);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) ok = std::abs(chosen[i] - chosen[j]) >= l;
        if (ok) best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("construction") {
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(complete_graph(12).edge_count() == 66);
    CHECK(make_graph(2, {}).edge_count() == 0);
    const Graph g = make_graph(4, {{3, 1}, {1, 3}, {2, 4}});
    CHECK(g.edges() == EdgeList{{1, 3}, {2, 4}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.neighbors(1) == std::vector<Vertex>{3});
    CHECK_THROWS_AS(make_graph(3, {{2, 2}}), InvalidArgument);
    CHECK_THROWS_AS(make_graph(3, {{1, 4}}), InvalidArgument);
    CHECK_THROWS_AS(make_graph(0, {}), InvalidArgument);
}

TEST_CASE("large graphs use the hashed edge set") {
    EdgeList e;
    for (int v = 1; v < 5000; v += 2) e.emplace_back(v, v + 1);
    const Graph g(5000, e);
    CHECK(g.has_edge(4999, 5000));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.edge_count() == 2500);
}

TEST_CASE("neighborhood") {
    const Graph none = empty_graph(5);
    CHECK(neighborhood(none, 3, 4, false) == std::vector<Vertex>{3});
    CHECK(neighborhood(none, 3, 1, true) == std::vector<Vertex>{2, 3, 4});
    CHECK(neighborhood(make_graph(5, {{1, 5}}), 1, 1, true) == std::vector<Vertex>{1, 2, 5});
    CHECK(neighborhood(none, 3, 0, true) == std::vector<Vertex>{3});
    CHECK(neighborhood(none, 1, 1, Metric::Cycle) == std::vector<Vertex>{1, 2, 5});
    const Graph path = zolab::testing::path_graph(6);
    CHECK(neighborhood(path, 1, 2, false) == std::vector<Vertex>{1, 2, 3});
    const auto d = distances_from(make_graph(4, {{1, 2}}), 1, Metric::Plain);
    CHECK(d[2] == 1);
    CHECK(d[3] == -1);
}

TEST_CASE("neighborhood agrees with a Floyd-Warshall oracle") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 9;
        const Graph g = random_graph(gen, n, 0.2);
        for (Metric metric : {Metric::Plain, Metric::Path, Metric::Cycle}) {
            const int inf = 1 << 20;
            std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
            for (int v = 1; v <= n; ++v) d[v][v] = 0;
            auto link = [&](int a, int b) { d[a][b] = d[b][a] = std::min(d[a][b], 1); };
            for (const auto& [a, b] : g.edges()) link(a, b);
            if (metric != Metric::Plain)
                for (int v = 1; v < n; ++v) link(v, v + 1);
            if (metric == Metric::Cycle && n > 1) link(n, 1);
            for (int m = 1; m <= n; ++m)
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
            for (int v = 1; v <= n; ++v)
                for (int r = 0; r <= 3; ++r) {
                    std::vector<Vertex> expected;
                    for (int w = 1; w <= n; ++w)
                        if (d[v][w] <= r) expected.push_back(w);
                    CHECK(neighborhood(g, v, r, metric) == expected);
                }
        }
    }
}

TEST_CASE("exact copies") {
    const Graph h = complete_graph(2);
    const Graph g = make_graph(4, {{2, 3}});
    CHECK(is_exact_copy_at(g, h, 1));
    CHECK_FALSE(is_exact_copy_at(g, h, 0));
    CHECK_FALSE(is_exact_copy_at(make_graph(4, {{2, 3}, {3, 4}}), h, 1));
    CHECK_THROWS_AS(is_exact_copy_at(g, h, 3), InvalidArgument);
    CHECK(max_disjoint_exact_copies(make_graph(6, {{1, 2}, {4, 5}}), h, 1, 6) == 2);
    CHECK(max_disjoint_exact_copies(g, complete_graph(3), 2, 3) == 0);
    CHECK(max_disjoint_exact_copies(complete_graph(4), h, 1, 4) == 0);
    // Edgeless single-vertex copies are every isolated vertex.
    CHECK(max_disjoint_exact_copies(empty_graph(7), empty_graph(1), 2, 6) == 5);
}

TEST_CASE("exact copy implies the shifted block equals h") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(gen, 8, 0.3);
        const Graph h = random_graph(gen, 1 + trial % 3, 0.5);
        for (int off = 0; off + h.n() <= g.n(); ++off) {
            if (!is_exact_copy_at(g, h, off)) continue;
            for (int j = 1; j <= h.n(); ++j)
                for (int k = j + 1; k <= h.n(); ++k) CHECK(h.has_edge(j, k) == g.has_edge(off + j, off + k));
        }
    }
}

TEST_CASE("max_disjoint_exact_copies matches subset enumeration") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 11;
        const Graph g = random_graph(gen, n, 0.15);
        const Graph h = trial % 2 ? complete_graph(2) : empty_graph(1 + trial % 3);
        const int lo = 1 + trial % 2, hi = n;
        if (h.n() > n) continue;
        const auto offsets = exact_copy_offsets(g, h, lo, hi);
        if (offsets.size() > 14) continue;
        CHECK(max_disjoint_exact_copies(g, h, lo, hi) == brute_disjoint(offsets, h.n()));
    }
}

TEST_CASE("cutpoints") {
    const Graph g = make_graph(4, {{1, 2}, {3, 4}});
    CHECK(is_cutpoint(g, 2));
    CHECK_FALSE(is_cutpoint(g, 3));
    for (int v = 1; v <= 6; ++v) CHECK(is_cutpoint(empty_graph(6), v));
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph r = random_graph(gen, 1 + trial % 10, 0.3);
        CHECK(is_cutpoint(r, r.n()));
        const auto flags = cutpoints(r);
        for (int v = 1; v <= r.n(); ++v) {
            bool crossing = false;
            for (const auto& [a, b] : r.edges()) crossing = crossing || (a <= v && v < b);
            CHECK(flags[static_cast<std::size_t>(v)] == !crossing);
            CHECK(is_cutpoint(r, v) == !crossing);
        }
    }
}

TEST_CASE("psi_r_holds") {
    CHECK(psi_r_holds(make_graph(10, {{1, 2}, {9, 10}}), 2));
    CHECK_FALSE(psi_r_holds(complete_graph(10), 2));
    CHECK_FALSE(psi_r_holds(empty_graph(7), 2));
    CHECK(psi_r_holds(empty_graph(8), 2));
}

TEST_CASE("sums") {
    const Graph e = complete_graph(2);
    const Graph s = disjoint_sum(e, e);
    CHECK(s.n() == 4);
    CHECK(s.edges() == EdgeList{{1, 2}, {3, 4}});
    CHECK(concat_sum(e, e) == s);
    const Graph one = empty_graph(1);
    CHECK(disjoint_sum(complete_graph(3), one).n() == 4);
    CHECK(concat_sum(one, complete_graph(3)).edges() == EdgeList{{2, 3}, {2, 4}, {3, 4}});
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph a = random_graph(gen, 1 + trial % 4, 0.5), b = random_graph(gen, 1 + trial % 5, 0.5),
                    c = random_graph(gen, 2, 0.5);
        CHECK(disjoint_sum(a, b).edge_count() == a.edge_count() + b.edge_count());
        CHECK(disjoint_sum(a, b) == concat_sum(a, b));
        CHECK(concat_sum(concat_sum(a, b), c) == concat_sum(a, concat_sum(b, c)));
    }
}

TEST_CASE("count_triangles") {
    CHECK(count_triangles(complete_graph(3)) == 1);
    CHECK(count_triangles(complete_graph(4)) == 4);
    CHECK(count_triangles(empty_graph(9)) == 0);
    std::mt19937_64 gen(21);
    for (int n = 3; n <= 20; ++n)
        for (double p : {0.2, 0.5, 0.8}) {
            const Graph g = random_graph(gen, n, p);
            std::uint64_t brute = 0;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c) brute += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
            CHECK(count_triangles(g) == brute);
        }
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(gen, 1 + trial, 0.3);
        const std::string text = to_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        CHECK(to_edge_list(parse_edge_list(text)) == text);
    }
    const Graph g = parse_edge_list("# comment\nn 4\ne 3 1\n\ne 2 4\n");
    CHECK(g.edges() == EdgeList{{1, 3}, {2, 4}});
    CHECK(to_edge_list(g) == "n 4\ne 1 3\ne 2 4\n");
    CHECK_THROWS(parse_edge_list("e 1 2\n"));
    CHECK_THROWS(parse_edge_list("n 3\ne 1 5\n"));
    CHECK_THROWS(parse_edge_list("n 3\nx 1 2\n"));
}

TEST_CASE("clockwise") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c) {
                if (a == b || b == c || a == c) continue;
                CHECK((clockwise(a, b, c) || clockwise(a, c, b)));
                CHECK(clockwise(a, b, c) != clockwise(a, c, b));
                CHECK(clockwise(a, b, c) == clockwise(b, c, a));
            }
}

TEST_CASE("flatness examples") {
    const ProbSeq one = make_explicit({{1, 0.5}});
    const Subgraph path{10, {1, 2, 3}, {{1, 2}, {2, 3}}};
    const Subgraph tri{10, {1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}};
    CHECK(is_flat(one, 10, path, FlatVariant::LC));
    CHECK_FALSE(is_flat(one, 10, tri, FlatVariant::LC));
    CHECK_FALSE(is_flat(one, 10, tri, FlatVariant::LC_LE));
    CHECK(is_flat(one, 10, path, FlatVariant::LC_PLUS));
    // Isolated vertices are always LC-flat.
    CHECK(is_flat(make_constant(0), 10, Subgraph{10, {2, 7}, {}}, FlatVariant::LC));
    const Subgraph big{20, {1, 2, 3, 4, 5, 6, 7, 8, 9}, {}};
    CHECK_THROWS_AS(is_flat(one, 20, big, FlatVariant::LC), InvalidArgument);
}

TEST_CASE("LC flatness is monotone in the support") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<int> pos(1, 12);
    for (int trial = 0; trial < 150; ++trial) {
        const int k = 2 + trial % 3;
        std::vector<Vertex> positions;
        while (static_cast<int>(positions.size()) < k) {
            const int v = pos(gen);
            if (std::find(positions.begin(), positions.end(), v) == positions.end()) positions.push_back(v);
        }
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                if (gen() % 2) edges.emplace_back(i, j);
        const Subgraph h{12, positions, edges};
        std::vector<std::pair<Index, double>> small{{1 + static_cast<Index>(gen() % 4), 0.5}};
        std::vector<std::pair<Index, double>> large = small;
        large.emplace_back(5 + static_cast<Index>(gen() % 2), 0.5);
        if (is_flat(make_explicit(small), 12, h, FlatVariant::LC)) CHECK(is_flat(make_explicit(large), 12, h, FlatVariant::LC));
    }
}

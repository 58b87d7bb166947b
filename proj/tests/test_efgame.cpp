#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "support/hintikka.hpp"
#include "support/restricted_game.hpp"
#include "zolab/efgame.hpp"
#include "zolab/error.hpp"

using namespace zolab;
using zolab::testing::all_graphs_upto;
using zolab::testing::random_graph;

namespace {

const std::vector<Vocabulary> kAllVocabs{Vocabulary::L,  Vocabulary::L_PLUS,  Vocabulary::L_LE,
                                         Vocabulary::LC, Vocabulary::LC_PLUS, Vocabulary::LC_LE};

LabeledModel model(Graph g, Vocabulary v = Vocabulary::L) { return LabeledModel(std::move(g), v); }

// Pairs biased towards small, similar graphs so both outcomes occur.
std::pair<Graph, Graph> random_pair(std::mt19937_64& gen, int max_n) {
    const int n1 = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_n));
    const int n2 = gen() % 3 == 0 ? n1 : 1 + static_cast<int>(gen() % static_cast<unsigned>(max_n));
    const double p = gen() % 2 ? 0.2 : 0.5;
    return {random_graph(gen, n1, p), random_graph(gen, n2, p)};
}

}  // namespace

TEST_CASE("partial_iso") {
    CHECK(partial_iso(model(complete_graph(2)), model(empty_graph(3)), {}, {}));
    CHECK_FALSE(partial_iso(model(complete_graph(2)), model(empty_graph(2)), {1, 2}, {1, 2}));
    CHECK_FALSE(partial_iso(model(empty_graph(1), Vocabulary::L_PLUS), model(empty_graph(2), Vocabulary::L_PLUS), {}, {}));
    CHECK(partial_iso(model(empty_graph(3), Vocabulary::L_PLUS), model(empty_graph(5), Vocabulary::L_PLUS), {}, {}));
    CHECK_FALSE(partial_iso(model(empty_graph(3)), model(empty_graph(3)), {1, 1}, {1, 2}));
    CHECK_THROWS_AS(partial_iso(model(empty_graph(3)), model(empty_graph(3), Vocabulary::L_LE), {}, {}),
                    VocabularyError);
    CHECK_THROWS_AS(partial_iso(model(empty_graph(3)), model(empty_graph(3)), {1}, {}), InvalidArgument);
    CHECK_THROWS_AS(partial_iso(model(empty_graph(3)), model(empty_graph(3)), {4}, {1}), InvalidArgument);
}

TEST_CASE("th_k_equal examples") {
    CHECK(th_k_equal(model(empty_graph(3)), model(empty_graph(5)), 2));
    CHECK_FALSE(th_k_equal(model(empty_graph(2)), model(empty_graph(3)), 3));
    CHECK(th_k_equal(model(complete_graph(2)), model(empty_graph(2)), 1));
    CHECK_FALSE(th_k_equal(model(complete_graph(2)), model(empty_graph(2)), 2));
    CHECK(th_k_equal(model(complete_graph(2)), model(empty_graph(2)), 0));
    CHECK_FALSE(th_k_equal(model(empty_graph(2), Vocabulary::L_PLUS), model(empty_graph(1), Vocabulary::L_PLUS), 0));
    // Successor sees the length of short paths.
    CHECK_FALSE(th_k_equal(model(empty_graph(4), Vocabulary::L_PLUS), model(empty_graph(5), Vocabulary::L_PLUS), 2));
    CHECK_THROWS_AS(th_k_equal(model(empty_graph(3)), model(empty_graph(3)), -1), InvalidArgument);
}

TEST_CASE("budget guard") {
    GameOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(th_k_equal(model(empty_graph(4)), model(empty_graph(4)), 2, tight), BudgetExceeded);
    CHECK_NOTHROW(th_k_equal(model(empty_graph(3)), model(empty_graph(3)), 2, tight));
    CHECK_THROWS_AS(pointed_equiv(model(empty_graph(4)), 1, model(empty_graph(4)), 1, 3, tight), BudgetExceeded);
}

TEST_CASE("reflexive, symmetric and monotone in k") {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 300; ++trial) {
        const Vocabulary v = kAllVocabs[static_cast<std::size_t>(trial) % kAllVocabs.size()];
        const auto [g1, g2] = random_pair(gen, 5);
        const LabeledModel m1(g1, v), m2(g2, v);
        const int k = 1 + trial % 3;
        CHECK(th_k_equal(m1, m1, k));
        const bool forward = th_k_equal(m1, m2, k);
        CHECK(forward == th_k_equal(m2, m1, k));
        if (th_k_equal(m1, m2, k + 1)) CHECK(forward);
    }
}

TEST_CASE("memoized, plain and reference solvers agree") {
    std::mt19937_64 gen(2);
    GameOptions plain;
    plain.memoize = false;
    for (int trial = 0; trial < 300; ++trial) {
        const Vocabulary v = kAllVocabs[static_cast<std::size_t>(trial) % kAllVocabs.size()];
        const auto [g1, g2] = random_pair(gen, 4);
        const LabeledModel m1(g1, v), m2(g2, v);
        const int k = trial % 4;
        const bool memo = th_k_equal(m1, m2, k);
        CHECK(memo == th_k_equal(m1, m2, k, plain));
        CHECK(memo == th_k_equal_reference(m1, m2, k));
    }
}

TEST_CASE("memo statistics") {
    GameStats stats;
    CHECK(th_k_equal(model(empty_graph(5)), model(empty_graph(6)), 3, {}, &stats));
    CHECK(stats.nodes > 0);
    CHECK(stats.memo_entries > 0);
    CHECK(stats.memo_hits > 0);
}

TEST_CASE("Hintikka sentences agree with the game") {
    // Exhaustive over graphs with at most 3 vertices, sampled up to 4.
    const auto small = all_graphs_upto(3);
    for (Vocabulary v : kAllVocabs) {
        for (int k = 1; k <= 2; ++k) {
            for (const Graph& a : small) {
                const LabeledModel m1(a, v);
                const Formula h = zolab::testing::hintikka(m1, k);
                REQUIRE(quantifier_depth(h) == k);
                CHECK(holds(m1, h));
                for (const Graph& b : small) {
                    const LabeledModel m2(b, v);
                    CHECK(th_k_equal(m1, m2, k) == holds(m2, h));
                }
            }
        }
    }
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 400; ++trial) {
        const Vocabulary v = kAllVocabs[static_cast<std::size_t>(trial) % kAllVocabs.size()];
        const auto [g1, g2] = random_pair(gen, 4);
        const LabeledModel m1(g1, v), m2(g2, v);
        const int k = 1 + trial % 2;
        const Formula h = zolab::testing::hintikka(m1, k);
        // When the game says the theories differ, h separates the models.
        CHECK(th_k_equal(m1, m2, k) == holds(m2, h));
    }
}

TEST_CASE("equal theories agree on library sentences") {
    std::mt19937_64 gen(4);
    const std::vector<std::pair<Formula, Vocabulary>> sentences{
        {library("triangle"), Vocabulary::L},       {library("edge_in_c4"), Vocabulary::L},
        {library("extension_Ak", 1), Vocabulary::L}, {library("path2"), Vocabulary::L_PLUS},
        {library("adj_first_last"), Vocabulary::L_PLUS}};
    int equal_pairs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Vocabulary v = trial % 2 ? Vocabulary::L : Vocabulary::L_PLUS;
        const auto [g1, g2] = random_pair(gen, 5);
        const LabeledModel m1(g1, v), m2(g2, v);
        const int k = 1 + trial % 3;
        if (!th_k_equal(m1, m2, k)) continue;
        ++equal_pairs;
        for (const auto& [s, sv] : sentences) {
            if (quantifier_depth(s) > k || !fits(s, v)) continue;
            CHECK(holds(m1, s) == holds(m2, s));
        }
    }
    CHECK(equal_pairs > 20);
}

TEST_CASE("pointed_equiv examples") {
    const LabeledModel e1 = model(empty_graph(3)), e2 = model(empty_graph(5));
    for (int k = 1; k <= 4; ++k) CHECK(pointed_equiv(e1, 2, e2, 4, k));
    const LabeledModel p3 = model(zolab::testing::path_graph(3));
    // The fixed first move plus k - 1 restricted moves: the centre's second
    // neighbour is only exposed with two extra picks.
    CHECK(pointed_equiv(p3, 2, p3, 1, 1));
    CHECK(pointed_equiv(p3, 2, p3, 1, 2));
    CHECK_FALSE(pointed_equiv(p3, 2, p3, 1, 3));
    for (int v = 1; v <= 3; ++v) CHECK(pointed_equiv(p3, v, p3, v, 3));
    CHECK_THROWS_AS(pointed_equiv(p3, 1, p3, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(pointed_equiv(p3, 4, p3, 1, 1), InvalidArgument);
}

TEST_CASE("pointed_equiv agrees with the plain restricted game") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 400; ++trial) {
        const Vocabulary v = kAllVocabs[static_cast<std::size_t>(trial) % kAllVocabs.size()];
        const auto [g1, g2] = random_pair(gen, 6);
        const LabeledModel m1(g1, v), m2(g2, v);
        const Vertex v1 = 1 + static_cast<int>(gen() % static_cast<unsigned>(g1.n()));
        const Vertex v2 = 1 + static_cast<int>(gen() % static_cast<unsigned>(g2.n()));
        const int k = 1 + trial % 3;
        CAPTURE(trial);
        CHECK(pointed_equiv(m1, v1, m2, v2, k) == zolab::testing::brute_pointed(m1, v1, m2, v2, k));
        CHECK(pointed_equiv(m1, v1, m1, v1, k));
    }
}

TEST_CASE("pointed game on cliques") {
    // Every vertex of a clique is within radius 1, so three picks in total
    // (one forced) tell clique sizes apart up to 3.
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const LabeledModel m1 = model(complete_graph(a)), m2 = model(complete_graph(b));
            CHECK(pointed_equiv(m1, 1, m2, 1, 3) == (a == b || std::min(a, b) >= 3));
        }
}

TEST_CASE("fact4_search") {
    const std::vector<Graph> candidates{complete_graph(2), empty_graph(3)};
    CHECK(fact4_search(candidates, {}, 2, Fact4Mode::Sum) == complete_graph(2));
    CHECK(fact4_search(candidates, all_graphs_upto(2), 0, Fact4Mode::Sum) == complete_graph(2));
    CHECK_THROWS_AS(fact4_search({}, {}, 1, Fact4Mode::Sum), InvalidArgument);
    CHECK_THROWS_AS(fact4_search(candidates, {}, 1, Fact4Mode::Sum, Vocabulary::L_PLUS), InvalidArgument);
    CHECK_THROWS_AS(fact4_search(candidates, {}, 1, Fact4Mode::ConcatBothEnds, Vocabulary::L), InvalidArgument);
    CHECK_THROWS_AS(fact4_search(candidates, {}, 1, Fact4Mode::ConcatRight, Vocabulary::L_LE), InvalidArgument);

    // k = 1: one copy of each Th_1 class representative suffices.
    const Graph rep = disjoint_sum(empty_graph(1), complete_graph(2));
    const auto found = fact4_search({rep}, all_graphs_upto(2), 1, Fact4Mode::Sum);
    REQUIRE(found);
    for (const Graph& h : all_graphs_upto(2))
        CHECK(th_k_equal(LabeledModel(*found, Vocabulary::L), LabeledModel(disjoint_sum(*found, h), Vocabulary::L), 1));

    // A lone edge is not stable under adding an isolated vertex at k = 2.
    CHECK_FALSE(fact4_search({complete_graph(2)}, {empty_graph(1)}, 2, Fact4Mode::Sum));
}

TEST_CASE("fact4_search concatenation modes") {
    // Under L_LE a long edgeless line absorbs short edgeless blocks at k = 2.
    const auto both = fact4_search({empty_graph(1), empty_graph(6)}, {empty_graph(1), empty_graph(2)}, 2,
                                   Fact4Mode::ConcatBothEnds, Vocabulary::L_LE);
    REQUIRE(both);
    CHECK(both->n() == 6);
    const auto right = fact4_search({empty_graph(1), empty_graph(6)}, {empty_graph(1)}, 2, Fact4Mode::ConcatRight);
    REQUIRE(right);
    CHECK(right->n() == 6);
}

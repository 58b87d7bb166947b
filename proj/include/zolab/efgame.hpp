#pragma once

// Ehrenfeucht games on pairs of labeled models.

#include <cstdint>
#include <optional>
#include <vector>

#include "zolab/logic.hpp"

namespace zolab {

struct GameOptions {
    // Refuse games whose naive size (n1 * n2)^rounds exceeds this.
    double budget = 1e9;
    bool memoize = true;
};

struct GameStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t memo_entries = 0;
};

// Atomic agreement of the picked tuples. Under L_PLUS the constants first and
// last are compared as two extra picks, so empty tuples can still disagree.
// Throws VocabularyError when the models use different vocabularies and
// InvalidArgument on unequal lengths or out-of-range picks.
bool partial_iso(const LabeledModel& m1, const LabeledModel& m2, const std::vector<Vertex>& picks1,
                 const std::vector<Vertex>& picks2);

// Duplicator wins the k-round game. Throws BudgetExceeded when
// (n1 * n2)^k > options.budget.
bool th_k_equal(const LabeledModel& m1, const LabeledModel& m2, int k, const GameOptions& options = {},
                GameStats* stats = nullptr);

// Plain minimax over every move, no memo and no pruning of repeated picks.
// Kept as a reference for tests.
bool th_k_equal_reference(const LabeledModel& m1, const LabeledModel& m2, int k);

// Restricted game of length k >= 1. The first move is fixed to (v1, v2); in
// move i = 2..k both players pick within distance 3^(k-i) of an earlier
// pick of their own model. Distance uses the successor edges as well when
// the vocabulary has successor.
bool pointed_equiv(const LabeledModel& m1, Vertex v1, const LabeledModel& m2, Vertex v2, int k,
                   const GameOptions& options = {}, GameStats* stats = nullptr);

enum class Fact4Mode {
    Sum,             // Th_k(G) = Th_k(G + H), vocabulary L
    ConcatBothEnds,  // Th_k(G) = Th_k(G . H . G), L_PLUS or L_LE
    ConcatRight,     // Th_k(G) = Th_k(G . H), LC_LE
};

// First candidate G for which the identity of `mode` holds for every H in
// h_set. `vocab` defaults to L, L_PLUS and LC_LE for the three modes.
std::optional<Graph> fact4_search(const std::vector<Graph>& candidates, const std::vector<Graph>& h_set, int k,
                                  Fact4Mode mode, std::optional<Vocabulary> vocab = std::nullopt,
                                  const GameOptions& options = {}, GameStats* stats = nullptr);

}  // namespace zolab

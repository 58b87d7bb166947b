#pragma once

// First-order formulas over graphs with optional order structure.
//
// Six vocabularies share adjacency and equality. The line vocabularies add
// successor with the constants first/last (L_PLUS) or the linear order
// (L_LE); the circle vocabularies add circular successor (LC_PLUS) or the
// ternary clockwise relation (LC_LE).
//
// Text grammar (whitespace insignificant):
//   formula := ("forall" | "exists") VAR "." formula | imp
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "!" neg | "(" formula ")" | atom
//   atom    := "adj(" t "," t ")" | "succ(" t "," t ")" | t "<=" t
//            | "C(" t "," t "," t ")" | t "=" t
//   t       := VAR | "first" | "last"

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zolab/graph.hpp"

namespace zolab {

enum class Vocabulary { L, L_PLUS, L_LE, LC, LC_PLUS, LC_LE };

std::string_view to_string(Vocabulary v);
// Accepts the enumerator spellings ("L", "L_PLUS", ...), case-insensitive.
Vocabulary parse_vocabulary(std::string_view text);

constexpr bool has_successor(Vocabulary v) { return v == Vocabulary::L_PLUS || v == Vocabulary::LC_PLUS; }
constexpr bool has_order(Vocabulary v) { return v == Vocabulary::L_LE; }
constexpr bool has_clockwise(Vocabulary v) { return v == Vocabulary::LC_LE; }
constexpr bool has_constants(Vocabulary v) { return v == Vocabulary::L_PLUS; }
constexpr bool is_circular(Vocabulary v) {
    return v == Vocabulary::LC || v == Vocabulary::LC_PLUS || v == Vocabulary::LC_LE;
}

struct Term {
    enum class Kind { Var, First, Last };
    Kind kind = Kind::Var;
    std::string name;

    static Term var(std::string name) { return {Kind::Var, std::move(name)}; }
    static Term first() { return {Kind::First, {}}; }
    static Term last() { return {Kind::Last, {}}; }

    bool operator==(const Term&) const = default;
};

struct Formula {
    enum class Kind { Forall, Exists, Not, And, Or, Implies, Adj, Succ, Le, Cw, Eq };

    Kind kind = Kind::Eq;
    std::string var;              // bound variable of Forall / Exists
    std::vector<Term> terms;      // atom arguments
    std::vector<Formula> children;

    bool operator==(const Formula&) const = default;

    bool is_atom() const noexcept { return kind >= Kind::Adj; }
    bool is_quantifier() const noexcept { return kind == Kind::Forall || kind == Kind::Exists; }
};

namespace fo {

Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);
Formula negate(Formula f);
Formula conj(std::vector<Formula> parts);  // a single part is returned unchanged
Formula disj(std::vector<Formula> parts);
Formula implies(Formula lhs, Formula rhs);
Formula adj(Term a, Term b);
Formula succ(Term a, Term b);
Formula le(Term a, Term b);
Formula cw(Term a, Term b, Term c);
Formula eq(Term a, Term b);

}  // namespace fo

int quantifier_depth(const Formula& f);
std::set<std::string> free_variables(const Formula& f);

// Throws VocabularyError when an atom or constant is not part of `vocab`.
void validate(const Formula& f, Vocabulary vocab);

// Throws ParseError (syntax, unbound variable) or VocabularyError.
Formula parse(std::string_view text, Vocabulary vocab);

// Text form accepted by parse; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

// A graph read through one vocabulary. Vertex numbering fixes the order
// structure: first = 1, last = n, succ is w = v + 1 on the line and
// w = v + 1 (mod n) on the circle.
class LabeledModel {
public:
    LabeledModel(Graph graph, Vocabulary vocab) : graph_(std::move(graph)), vocab_(vocab) {}

    const Graph& graph() const noexcept { return graph_; }
    Vocabulary vocab() const noexcept { return vocab_; }
    int n() const noexcept { return graph_.n(); }

    bool adj(Vertex v, Vertex w) const noexcept { return graph_.has_edge(v, w); }
    bool succ(Vertex v, Vertex w) const noexcept {
        return is_circular(vocab_) ? w == v % n() + 1 : w == v + 1;
    }
    bool le(Vertex v, Vertex w) const noexcept { return v <= w; }
    bool cw(Vertex a, Vertex b, Vertex c) const noexcept { return clockwise(a, b, c); }

private:
    Graph graph_;
    Vocabulary vocab_;
};

// Direct recursive evaluation with quantifiers ranging over [1, n].
// Throws VocabularyError on vocabulary mismatch and InvalidArgument when
// `sentence` has free variables.
bool holds(const LabeledModel& m, const Formula& sentence);

// -- named sentences --------------------------------------------------------

struct LibraryEntry {
    std::string name;
    Vocabulary vocab;  // smallest vocabulary the sentence needs
    std::string description;
};

const std::vector<LibraryEntry>& library_entries();

// path2, ex2_path4, triangle, edge_in_c4, adj_first_last, extension_Ak.
// `k` is only read by extension_Ak (k >= 1). Throws InvalidArgument on an
// unknown name.
Formula library(std::string_view name, int k = 1);

// True when every atom of `f` is available in `vocab`.
bool fits(const Formula& f, Vocabulary vocab);

}  // namespace zolab

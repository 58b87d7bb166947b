#pragma once

// Hintikka sentences: hintikka(m, k) has depth k and holds in a model of the
// same vocabulary iff that model has the same depth-k theory as m. Built by
// enumerating atomic types, so it is an independent check on the game
// solver in both directions.

#include <map>
#include <string>
#include <vector>

#include "zolab/logic.hpp"

namespace zolab::testing {

namespace detail {

inline Formula literal(Formula atom, bool value) { return value ? atom : fo::negate(std::move(atom)); }

// Complete atomic diagram of the picked tuple (constants included).
inline std::vector<Formula> diagram(const LabeledModel& m, const std::vector<Vertex>& picks) {
    std::vector<Term> terms;
    std::vector<Vertex> values;
    if (has_constants(m.vocab())) {
        terms = {Term::first(), Term::last()};
        values = {1, m.n()};
    }
    for (std::size_t i = 0; i < picks.size(); ++i) {
        terms.push_back(Term::var("x" + std::to_string(i + 1)));
        values.push_back(picks[i]);
    }
    const Vocabulary v = m.vocab();
    std::vector<Formula> out;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = 0; j < terms.size(); ++j) {
            const Vertex a = values[i], b = values[j];
            if (i < j) out.push_back(literal(fo::eq(terms[i], terms[j]), a == b));
            if (i <= j) out.push_back(literal(fo::adj(terms[i], terms[j]), m.adj(a, b)));
            // succ(x, x) holds on the one-vertex circle.
            if (has_successor(v)) out.push_back(literal(fo::succ(terms[i], terms[j]), m.succ(a, b)));
            if (has_order(v) && i != j) out.push_back(literal(fo::le(terms[i], terms[j]), m.le(a, b)));
            if (has_clockwise(v))
                for (std::size_t l = 0; l < terms.size(); ++l)
                    out.push_back(literal(fo::cw(terms[i], terms[j], terms[l]), m.cw(a, b, values[l])));
        }
    return out;
}

inline Formula build(const LabeledModel& m, std::vector<Vertex>& picks, int k) {
    std::vector<Formula> parts = diagram(m, picks);
    if (k > 0) {
        const std::string x = "x" + std::to_string(picks.size() + 1);
        std::map<std::string, Formula> options;  // deduplicated by text
        for (Vertex v = 1; v <= m.n(); ++v) {
            picks.push_back(v);
            Formula f = build(m, picks, k - 1);
            picks.pop_back();
            options.emplace(to_string(f), std::move(f));
        }
        std::vector<Formula> any;
        for (auto& [text, f] : options) {
            parts.push_back(fo::exists(x, f));
            any.push_back(f);
        }
        parts.push_back(fo::forall(x, fo::disj(std::move(any))));
    }
    return fo::conj(std::move(parts));
}

}  // namespace detail

// k >= 1, or a vocabulary with constants (so the diagram is non-empty).
inline Formula hintikka(const LabeledModel& m, int k) {
    std::vector<Vertex> picks;
    return detail::build(m, picks, k);
}

}  // namespace zolab::testing

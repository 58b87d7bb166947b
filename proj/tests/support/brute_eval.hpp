#pragma once

// Assignment-table evaluator. Every subformula is turned into the full table
// of assignments to all variable names of the sentence, so quantifiers
// become projections over one coordinate. Exponential in the number of
// variables and independent of the compiled evaluator in src/.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zolab/logic.hpp"

namespace zolab::testing {

class TableEvaluator {
public:
    TableEvaluator(const LabeledModel& m, const Formula& f) : m_(m) {
        collect(f);
        rows_ = 1;
        for (std::size_t i = 0; i < names_.size(); ++i) rows_ *= static_cast<std::size_t>(m.n());
        table_ = eval(f);
    }

    // Value of a sentence; every row agrees because nothing is free.
    bool value() const { return table_.at(0) != 0; }

private:
    using Table = std::vector<char>;

    void collect(const Formula& f) {
        if (f.is_quantifier()) add(f.var);
        for (const Term& t : f.terms)
            if (t.kind == Term::Kind::Var) add(t.name);
        for (const Formula& c : f.children) collect(c);
    }
    void add(const std::string& name) {
        if (!slot_.count(name)) {
            slot_[name] = names_.size();
            names_.push_back(name);
        }
    }

    // Value of variable `s` in row `r` (base-n digits, 1-based vertices).
    int digit(std::size_t r, std::size_t s) const {
        for (std::size_t i = 0; i < s; ++i) r /= static_cast<std::size_t>(m_.n());
        return static_cast<int>(r % static_cast<std::size_t>(m_.n())) + 1;
    }
    std::size_t stride(std::size_t s) const {
        std::size_t out = 1;
        for (std::size_t i = 0; i < s; ++i) out *= static_cast<std::size_t>(m_.n());
        return out;
    }

    int term(const Term& t, std::size_t r) const {
        switch (t.kind) {
            case Term::Kind::First: return 1;
            case Term::Kind::Last: return m_.n();
            case Term::Kind::Var: return digit(r, slot_.at(t.name));
        }
        return 0;
    }

    bool atom(const Formula& f, std::size_t r) const {
        const int n = m_.n();
        const int a = term(f.terms[0], r);
        const int b = term(f.terms[1], r);
        switch (f.kind) {
            case Formula::Kind::Eq: return a == b;
            case Formula::Kind::Adj: {
                for (const auto& [v, w] : m_.graph().edges())
                    if ((v == a && w == b) || (v == b && w == a)) return true;
                return false;
            }
            case Formula::Kind::Succ:
                if (is_circular(m_.vocab())) return b == (a == n ? 1 : a + 1);
                return b == a + 1;
            case Formula::Kind::Le: return a <= b;
            case Formula::Kind::Cw: {
                const int c = term(f.terms[2], r);
                const int rot[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                for (const auto& t : rot)
                    if (t[0] <= t[1] && t[1] <= t[2]) return true;
                return false;
            }
            default: throw std::logic_error("not an atom");
        }
    }

    Table eval(const Formula& f) const {
        Table out(rows_);
        switch (f.kind) {
            case Formula::Kind::Not: {
                const Table c = eval(f.children[0]);
                for (std::size_t r = 0; r < rows_; ++r) out[r] = !c[r];
                return out;
            }
            case Formula::Kind::And:
            case Formula::Kind::Or: {
                const bool is_and = f.kind == Formula::Kind::And;
                for (std::size_t r = 0; r < rows_; ++r) out[r] = is_and;
                for (const Formula& child : f.children) {
                    const Table c = eval(child);
                    for (std::size_t r = 0; r < rows_; ++r) out[r] = is_and ? (out[r] && c[r]) : (out[r] || c[r]);
                }
                return out;
            }
            case Formula::Kind::Implies: {
                const Table l = eval(f.children[0]), rt = eval(f.children[1]);
                for (std::size_t r = 0; r < rows_; ++r) out[r] = !l[r] || rt[r];
                return out;
            }
            case Formula::Kind::Forall:
            case Formula::Kind::Exists: {
                const bool is_all = f.kind == Formula::Kind::Forall;
                const Table body = eval(f.children[0]);
                const std::size_t s = slot_.at(f.var), step = stride(s);
                for (std::size_t r = 0; r < rows_; ++r) {
                    const std::size_t base = r - static_cast<std::size_t>(digit(r, s) - 1) * step;
                    bool acc = is_all;
                    for (int v = 0; v < m_.n(); ++v) {
                        const bool x = body[base + static_cast<std::size_t>(v) * step] != 0;
                        acc = is_all ? (acc && x) : (acc || x);
                    }
                    out[r] = acc;
                }
                return out;
            }
            default:
                for (std::size_t r = 0; r < rows_; ++r) out[r] = atom(f, r);
                return out;
        }
    }

    const LabeledModel& m_;
    std::map<std::string, std::size_t> slot_;
    std::vector<std::string> names_;
    std::size_t rows_ = 1;
    Table table_;
};

inline bool brute_holds(const LabeledModel& m, const Formula& sentence) {
    return TableEvaluator(m, sentence).value();
}

}  // namespace zolab::testing

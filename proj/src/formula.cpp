#include <algorithm>
#include <cctype>

#include "zolab/error.hpp"
#include "zolab/logic.hpp"

namespace zolab {

std::string_view to_string(Vocabulary v) {
    switch (v) {
        case Vocabulary::L: return "L";
        case Vocabulary::L_PLUS: return "L_PLUS";
        case Vocabulary::L_LE: return "L_LE";
        case Vocabulary::LC: return "LC";
        case Vocabulary::LC_PLUS: return "LC_PLUS";
        case Vocabulary::LC_LE: return "LC_LE";
    }
    return "?";
}

Vocabulary parse_vocabulary(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (Vocabulary v : {Vocabulary::L, Vocabulary::L_PLUS, Vocabulary::L_LE, Vocabulary::LC,
                         Vocabulary::LC_PLUS, Vocabulary::LC_LE})
        if (to_string(v) == upper) return v;
    throw InvalidArgument("unknown vocabulary '" + std::string(text) + "'");
}

namespace fo {

namespace {
Formula node(Formula::Kind kind, std::vector<Formula> children) {
    Formula f;
    f.kind = kind;
    f.children = std::move(children);
    return f;
}
Formula atom(Formula::Kind kind, std::vector<Term> terms) {
    Formula f;
    f.kind = kind;
    f.terms = std::move(terms);
    return f;
}
}  // namespace

Formula forall(std::string var, Formula body) {
    Formula f = node(Formula::Kind::Forall, {std::move(body)});
    f.var = std::move(var);
    return f;
}
Formula exists(std::string var, Formula body) {
    Formula f = node(Formula::Kind::Exists, {std::move(body)});
    f.var = std::move(var);
    return f;
}
Formula negate(Formula f) { return node(Formula::Kind::Not, {std::move(f)}); }
Formula conj(std::vector<Formula> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return node(Formula::Kind::And, std::move(parts));
}
Formula disj(std::vector<Formula> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return node(Formula::Kind::Or, std::move(parts));
}
Formula implies(Formula lhs, Formula rhs) { return node(Formula::Kind::Implies, {std::move(lhs), std::move(rhs)}); }
Formula adj(Term a, Term b) { return atom(Formula::Kind::Adj, {std::move(a), std::move(b)}); }
Formula succ(Term a, Term b) { return atom(Formula::Kind::Succ, {std::move(a), std::move(b)}); }
Formula le(Term a, Term b) { return atom(Formula::Kind::Le, {std::move(a), std::move(b)}); }
Formula cw(Term a, Term b, Term c) { return atom(Formula::Kind::Cw, {std::move(a), std::move(b), std::move(c)}); }
Formula eq(Term a, Term b) { return atom(Formula::Kind::Eq, {std::move(a), std::move(b)}); }

}  // namespace fo

int quantifier_depth(const Formula& f) {
    int inner = 0;
    for (const Formula& c : f.children) inner = std::max(inner, quantifier_depth(c));
    return f.is_quantifier() ? inner + 1 : inner;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    if (f.is_atom()) {
        for (const Term& t : f.terms)
            if (t.kind == Term::Kind::Var && std::find(bound.begin(), bound.end(), t.name) == bound.end())
                out.insert(t.name);
        return;
    }
    if (f.is_quantifier()) bound.push_back(f.var);
    for (const Formula& c : f.children) collect_free(c, bound, out);
    if (f.is_quantifier()) bound.pop_back();
}

const char* atom_name(Formula::Kind kind) {
    switch (kind) {
        case Formula::Kind::Adj: return "adj";
        case Formula::Kind::Succ: return "succ";
        case Formula::Kind::Le: return "<=";
        case Formula::Kind::Cw: return "C";
        default: return "=";
    }
}

// Binding strength used by the printer; higher binds tighter.
int level(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return 0;
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        default: return 4;
    }
}

std::string term_text(const Term& t) {
    switch (t.kind) {
        case Term::Kind::First: return "first";
        case Term::Kind::Last: return "last";
        default: return t.name;
    }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int required, std::string& out) {
    if (level(f) < required) {
        out += '(';
        print(f, out);
        out += ')';
    } else {
        print(f, out);
    }
}

void print(const Formula& f, std::string& out) {
    using K = Formula::Kind;
    switch (f.kind) {
        case K::Forall:
        case K::Exists:
            out += f.kind == K::Forall ? "forall " : "exists ";
            out += f.var;
            out += ". ";
            print(f.children[0], out);
            return;
        case K::Implies:
            print_at(f.children[0], 2, out);
            out += " -> ";
            print_at(f.children[1], 1, out);
            return;
        case K::Or:
        case K::And:
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                if (i) out += f.kind == K::Or ? " | " : " & ";
                print_at(f.children[i], f.kind == K::Or ? 3 : 4, out);
            }
            return;
        case K::Not: {
            out += '!';
            const Formula& c = f.children[0];
            bool infix = c.kind == K::Eq || c.kind == K::Le;
            print_at(c, infix ? 5 : 4, out);
            return;
        }
        case K::Eq:
        case K::Le:
            out += term_text(f.terms[0]);
            out += f.kind == K::Eq ? " = " : " <= ";
            out += term_text(f.terms[1]);
            return;
        default:
            out += atom_name(f.kind);
            out += '(';
            for (std::size_t i = 0; i < f.terms.size(); ++i) {
                if (i) out += ", ";
                out += term_text(f.terms[i]);
            }
            out += ')';
            return;
    }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(f, bound, out);
    return out;
}

void validate(const Formula& f, Vocabulary vocab) {
    using K = Formula::Kind;
    auto reject = [&](const std::string& what) {
        throw VocabularyError(what + " is not available in vocabulary " + std::string(to_string(vocab)));
    };
    switch (f.kind) {
        case K::Succ:
            if (!has_successor(vocab)) reject("succ");
            break;
        case K::Le:
            if (!has_order(vocab)) reject("<=");
            break;
        case K::Cw:
            if (!has_clockwise(vocab)) reject("C");
            break;
        default: break;
    }
    for (const Term& t : f.terms)
        if (t.kind != Term::Kind::Var && !has_constants(vocab)) reject("constant " + term_text(t));
    for (const Formula& c : f.children) validate(c, vocab);
}

bool fits(const Formula& f, Vocabulary vocab) {
    try {
        validate(f, vocab);
        return true;
    } catch (const VocabularyError&) {
        return false;
    }
}

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

}  // namespace zolab

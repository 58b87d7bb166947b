#include <algorithm>

#include "zolab/error.hpp"
#include "zolab/logic.hpp"

namespace zolab {

namespace {

constexpr int kFirst = -1;
constexpr int kLast = -2;

// The formula with variable names replaced by assignment slots. A variable
// bound at nesting level j lives in slot j, so shadowing resolves statically.
struct Node {
    Formula::Kind kind;
    int slot = 0;
    int args[3] = {0, 0, 0};
    std::vector<Node> children;
};

Node compile(const Formula& f, std::vector<std::string>& scope) {
    Node out;
    out.kind = f.kind;
    if (f.is_atom()) {
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            const Term& t = f.terms[i];
            if (t.kind == Term::Kind::First) {
                out.args[i] = kFirst;
            } else if (t.kind == Term::Kind::Last) {
                out.args[i] = kLast;
            } else {
                auto it = std::find(scope.rbegin(), scope.rend(), t.name);
                if (it == scope.rend()) throw InvalidArgument("free variable '" + t.name + "' in sentence");
                out.args[i] = static_cast<int>(scope.rend() - it) - 1;
            }
        }
        return out;
    }
    if (f.is_quantifier()) {
        out.slot = static_cast<int>(scope.size());
        scope.push_back(f.var);
    }
    for (const Formula& c : f.children) out.children.push_back(compile(c, scope));
    if (f.is_quantifier()) scope.pop_back();
    return out;
}

class Evaluator {
public:
    Evaluator(const LabeledModel& m, int depth) : m_(m), values_(static_cast<std::size_t>(depth) + 1, 0) {}

    bool eval(const Node& node) {
        using K = Formula::Kind;
        switch (node.kind) {
            case K::Forall:
            case K::Exists: {
                const bool want = node.kind == K::Exists;
                Vertex& slot = values_[static_cast<std::size_t>(node.slot)];
                for (Vertex v = 1; v <= m_.n(); ++v) {
                    slot = v;
                    if (eval(node.children[0]) == want) return want;
                }
                return !want;
            }
            case K::Not: return !eval(node.children[0]);
            case K::And:
                for (const Node& c : node.children)
                    if (!eval(c)) return false;
                return true;
            case K::Or:
                for (const Node& c : node.children)
                    if (eval(c)) return true;
                return false;
            case K::Implies: return !eval(node.children[0]) || eval(node.children[1]);
            case K::Adj: return m_.adj(value(node.args[0]), value(node.args[1]));
            case K::Succ: return m_.succ(value(node.args[0]), value(node.args[1]));
            case K::Le: return m_.le(value(node.args[0]), value(node.args[1]));
            case K::Cw: return m_.cw(value(node.args[0]), value(node.args[1]), value(node.args[2]));
            case K::Eq: return value(node.args[0]) == value(node.args[1]);
        }
        return false;
    }

private:
    Vertex value(int arg) const {
        if (arg == kFirst) return 1;
        if (arg == kLast) return m_.n();
        return values_[static_cast<std::size_t>(arg)];
    }

    const LabeledModel& m_;
    std::vector<Vertex> values_;
};

}  // namespace

bool holds(const LabeledModel& m, const Formula& sentence) {
    validate(sentence, m.vocab());
    std::vector<std::string> scope;
    Node root = compile(sentence, scope);
    Evaluator ev(m, quantifier_depth(sentence));
    return ev.eval(root);
}

}  // namespace zolab

#include <algorithm>
#include <cctype>

#include "zolab/error.hpp"
#include "zolab/logic.hpp"

namespace zolab {

namespace {

struct Token {
    enum class Kind { Ident, Dot, Comma, LParen, RParen, Not, And, Or, Arrow, Eq, Le, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
                ++i;
            out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        auto single = [&](Token::Kind k) {
            out.push_back({k, std::string(1, s[i]), start});
            ++i;
        };
        switch (c) {
            case '.': single(Token::Kind::Dot); break;
            case ',': single(Token::Kind::Comma); break;
            case '(': single(Token::Kind::LParen); break;
            case ')': single(Token::Kind::RParen); break;
            case '!': single(Token::Kind::Not); break;
            case '&': single(Token::Kind::And); break;
            case '|': single(Token::Kind::Or); break;
            case '=': single(Token::Kind::Eq); break;
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Token::Kind::Arrow, "->", start});
                    i += 2;
                    break;
                }
                throw ParseError("unexpected '-'", start);
            case '<':
                if (i + 1 < s.size() && s[i + 1] == '=') {
                    out.push_back({Token::Kind::Le, "<=", start});
                    i += 2;
                    break;
                }
                throw ParseError("unexpected '<'", start);
            default:
                throw ParseError(std::string("unexpected character '") + s[i] + "'", start);
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

bool is_keyword(const std::string& word) {
    return word == "forall" || word == "exists" || word == "adj" || word == "succ" || word == "C" ||
           word == "first" || word == "last";
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Formula run() {
        Formula f = formula();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    using K = Token::Kind;

    const Token& peek() const { return tokens_[pos_]; }
    bool accept(K kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }
    void expect(K kind, const char* what) {
        if (!accept(kind)) fail(std::string("expected ") + what);
    }
    bool at_word(const char* word) const { return peek().kind == K::Ident && peek().text == word; }

    Formula formula() {
        if (at_word("forall") || at_word("exists")) {
            const bool universal = peek().text == "forall";
            ++pos_;
            if (peek().kind != K::Ident || is_keyword(peek().text)) fail("expected a variable");
            std::string var = peek().text;
            ++pos_;
            expect(K::Dot, "'.'");
            scope_.push_back(var);
            Formula body = formula();
            scope_.pop_back();
            return universal ? fo::forall(std::move(var), std::move(body)) : fo::exists(std::move(var), std::move(body));
        }
        return imp();
    }

    Formula imp() {
        Formula lhs = disjunction();
        if (accept(K::Arrow)) return fo::implies(std::move(lhs), imp());
        return lhs;
    }

    Formula disjunction() {
        std::vector<Formula> parts{conjunction()};
        while (accept(K::Or)) parts.push_back(conjunction());
        return fo::disj(std::move(parts));
    }

    Formula conjunction() {
        std::vector<Formula> parts{negation()};
        while (accept(K::And)) parts.push_back(negation());
        return fo::conj(std::move(parts));
    }

    Formula negation() {
        if (accept(K::Not)) return fo::negate(negation());
        if (accept(K::LParen)) {
            Formula f = formula();
            expect(K::RParen, "')'");
            return f;
        }
        return atom();
    }

    Formula atom() {
        if (peek().kind != K::Ident) fail("expected a formula");
        const std::string& word = peek().text;
        if ((word == "adj" || word == "succ" || word == "C") && tokens_[pos_ + 1].kind == K::LParen) {
            const std::string name = word;
            pos_ += 2;
            std::vector<Term> args{term()};
            const std::size_t arity = name == "C" ? 3 : 2;
            while (args.size() < arity) {
                expect(K::Comma, "','");
                args.push_back(term());
            }
            expect(K::RParen, "')'");
            if (name == "adj") return fo::adj(args[0], args[1]);
            if (name == "succ") return fo::succ(args[0], args[1]);
            return fo::cw(args[0], args[1], args[2]);
        }
        Term lhs = term();
        if (accept(K::Eq)) return fo::eq(std::move(lhs), term());
        if (accept(K::Le)) return fo::le(std::move(lhs), term());
        fail("expected '=' or '<='");
    }

    Term term() {
        if (peek().kind != K::Ident) fail("expected a term");
        const Token& t = peek();
        if (t.text == "first" || t.text == "last") {
            ++pos_;
            return t.text == "first" ? Term::first() : Term::last();
        }
        if (is_keyword(t.text)) fail("'" + t.text + "' is not a term");
        if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end())
            fail("unbound variable '" + t.text + "'");
        ++pos_;
        return Term::var(t.text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

}  // namespace

Formula parse(std::string_view text, Vocabulary vocab) {
    Formula f = Parser(text).run();
    validate(f, vocab);
    return f;
}

}  // namespace zolab

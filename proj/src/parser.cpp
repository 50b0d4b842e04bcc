#include "roughdxl/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace roughdxl {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + to_string(kind) +
                         " error: " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

const char* to_string(ParseError::Kind kind) noexcept {
    switch (kind) {
        case ParseError::Kind::lexical:
            return "lexical";
        case ParseError::Kind::syntactic:
            return "syntax";
        case ParseError::Kind::arity_conflict:
            return "arity-conflict";
        case ParseError::Kind::unsafe_rule:
            return "unsafe-rule";
    }
    return "parse";
}

namespace {

enum class Tok { lcname, number, ucname, lparen, rparen, comma, period, neck, tilde, question, end };

const char* describe(Tok t) {
    switch (t) {
        case Tok::lcname:
            return "name";
        case Tok::number:
            return "number";
        case Tok::ucname:
            return "variable";
        case Tok::lparen:
            return "'('";
        case Tok::rparen:
            return "')'";
        case Tok::comma:
            return "','";
        case Tok::period:
            return "'.'";
        case Tok::neck:
            return "':-'";
        case Tok::tilde:
            return "'~'";
        case Tok::question:
            return "'?'";
        case Tok::end:
            return "end of input";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t cc = col;
        auto single = [&](Tok kind) {
            out.push_back({kind, std::string(1, c), l, cc});
            advance(1);
        };
        switch (c) {
            case '(':
                single(Tok::lparen);
                continue;
            case ')':
                single(Tok::rparen);
                continue;
            case ',':
                single(Tok::comma);
                continue;
            case '.':
                single(Tok::period);
                continue;
            case '~':
                single(Tok::tilde);
                continue;
            case '?':
                single(Tok::question);
                continue;
            case ':':
                if (i + 1 < src.size() && src[i + 1] == '-') {
                    out.push_back({Tok::neck, ":-", l, cc});
                    advance(2);
                    continue;
                }
                throw ParseError(ParseError::Kind::lexical, l, cc, "expected ':-' after ':'");
            default:
                break;
        }
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j])) ++j;
            std::string text(src.substr(i, j - i));
            Tok kind = std::islower(uc) ? Tok::lcname : std::isdigit(uc) ? Tok::number : Tok::ucname;
            out.push_back({kind, std::move(text), l, cc});
            advance(j - i);
            continue;
        }
        std::string shown = uc < 0x80 ? std::string(1, c) : "non-ASCII byte";
        throw ParseError(ParseError::Kind::lexical, l, cc, "unexpected character '" + shown + "'");
    }
    // End-of-input diagnostics point at the last character of the source.
    std::size_t end_line = 1;
    std::size_t end_col = 1;
    for (std::size_t k = 0, ln = 1, cl = 1; k < src.size(); ++k) {
        end_line = ln;
        end_col = cl;
        if (src[k] == '\n') {
            ++ln;
            cl = 1;
        } else {
            ++cl;
        }
    }
    out.push_back({Tok::end, "", end_line, end_col});
    return out;
}

bool is_reserved(const std::string& name) { return name == "lower" || name == "boundary"; }

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Program program() {
        Program prog;
        // Arity is tracked here (with the location of first use) so that
        // conflicts are reported with a position.
        std::map<std::string, std::pair<std::size_t, const Token*>> arities;
        while (peek().kind != Tok::end) {
            const Token& start = peek();
            std::vector<std::pair<Literal, const Token*>> lits;
            lits.push_back(literal());
            if (accept(Tok::neck)) {
                do {
                    lits.push_back(literal());
                } while (accept(Tok::comma));
            }
            expect(Tok::period, "to end the rule");

            for (const auto& [lit, tok] : lits) {
                const Atom& a = lit.atom;
                if (is_reserved(a.predicate))
                    throw error(*tok, "'" + a.predicate + "' is reserved for queries and cannot name a predicate");
                auto [it, fresh] = arities.emplace(a.predicate, std::make_pair(a.arity(), tok));
                if (!fresh && it->second.first != a.arity()) {
                    const Token& first = *it->second.second;
                    throw ParseError(ParseError::Kind::arity_conflict, tok->line, tok->column,
                                     "predicate '" + a.predicate + "' used with arity " +
                                         std::to_string(a.arity()) + " here but with arity " +
                                         std::to_string(it->second.first) + " at " + std::to_string(first.line) +
                                         ":" + std::to_string(first.column));
                }
            }

            Rule rule{lits.front().first, {}};
            for (std::size_t k = 1; k < lits.size(); ++k) rule.body.push_back(lits[k].first);
            if (auto var = unsafe_head_variable(rule)) {
                throw ParseError(ParseError::Kind::unsafe_rule, start.line, start.column,
                                 "unsafe rule '" + to_string(rule) + "': head variable " + *var +
                                     " does not occur in the body");
            }
            prog.add(std::move(rule));
        }
        return prog;
    }

    RoughQuery query() {
        if (peek().kind == Tok::end) throw error(peek(), "empty query");
        std::vector<SimpleQuery> conjuncts;
        std::vector<const Token*> starts;
        do {
            starts.push_back(&peek());
            conjuncts.push_back(simple());
        } while (accept(Tok::comma));

        std::optional<RoughQuery> result;
        if (peek().kind == Tok::question) {
            const Token& q = next();
            if (conjuncts.size() > 1)
                throw error(q, "a classify query ('?') cannot be part of a composite query");
            const SimpleQuery& s = conjuncts.front();
            if (s.kind != SimpleQuery::Kind::membership || s.literal.is_negative())
                throw error(*starts.front(), "a classify query ('?') applies to an atom only");
            result = ClassifyQuery{s.literal.atom};
        } else {
            result = make_query(std::move(conjuncts));
        }
        const bool classify = std::holds_alternative<ClassifyQuery>(*result);
        if (classify && peek().kind == Tok::comma)
            throw error(peek(), "a classify query ('?') cannot be part of a composite query");
        accept(Tok::period);
        if (peek().kind == Tok::question)
            throw error(peek(), "a classify query ('?') cannot be part of a composite query");
        if (peek().kind != Tok::end) throw unexpected("end of query");
        return std::move(*result);
    }

private:
    SimpleQuery simple() {
        const Token& t = peek();
        if (t.kind == Tok::lcname && is_reserved(t.text) && peek(1).kind == Tok::lparen) {
            next();
            next();
            SimpleQuery q;
            if (t.text == "lower") {
                q = SimpleQuery::lower(literal().first);
            } else {
                if (peek().kind == Tok::tilde)
                    throw error(peek(), "boundary takes an atom; write boundary(a) instead of boundary(~a)");
                q = SimpleQuery::boundary(atom());
            }
            expect(Tok::rparen, "to close " + t.text + "(...)");
            return q;
        }
        return SimpleQuery::membership(literal().first);
    }

    std::pair<Literal, const Token*> literal() {
        const bool neg = accept(Tok::tilde);
        const Token* at = &peek();
        Atom a = atom();
        return {neg ? negative(std::move(a)) : positive(std::move(a)), at};
    }

    Atom atom() {
        const Token& name = peek();
        if (name.kind != Tok::lcname) throw unexpected("a predicate name");
        next();
        Atom a{name.text, {}};
        if (accept(Tok::lparen)) {
            do {
                a.args.push_back(term());
            } while (accept(Tok::comma));
            expect(Tok::rparen, "to close the argument list of '" + name.text + "'");
        }
        return a;
    }

    Term term() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::lcname:
            case Tok::number:
                next();
                return Term::constant(t.text);
            case Tok::ucname:
                next();
                return Term::variable(t.text);
            default:
                throw unexpected("a term");
        }
    }

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        next();
        return true;
    }
    void expect(Tok kind, const std::string& why) {
        if (!accept(kind)) throw unexpected(std::string(describe(kind)) + " " + why);
    }

    ParseError error(const Token& at, const std::string& message) const {
        return ParseError(ParseError::Kind::syntactic, at.line, at.column, message);
    }
    ParseError unexpected(const std::string& wanted) const {
        const Token& t = peek();
        std::string found = describe(t.kind);
        if (t.kind == Tok::lcname || t.kind == Tok::number || t.kind == Tok::ucname) found += " '" + t.text + "'";
        return error(t, "expected " + wanted + ", found " + found);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view source) { return Parser(source).program(); }

RoughQuery parse_query(std::string_view source) { return Parser(source).query(); }

}  // namespace roughdxl

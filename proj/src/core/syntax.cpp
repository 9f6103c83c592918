#include "pikit/syntax.hpp"

#include <cctype>
#include <optional>

namespace pikit {

namespace {

enum class Tok { lident, uident, lparen, rparen, comma, bar, tilde, period, arrow, empty_clause, end };

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::lident: return "lowercase identifier";
    case Tok::uident: return "variable";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::bar: return "'|'";
    case Tok::tilde: return "'~'";
    case Tok::period: return "'.'";
    case Tok::arrow: return "'->'";
    case Tok::empty_clause: return "'[]'";
    case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::end;
    std::string_view text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    Token expect(Tok kind) {
        if (current_.kind != kind)
            throw ParseError(current_.pos, std::string("expected ") + tok_name(kind) + ", found " +
                                               describe(current_));
        return take();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::end) return tok_name(t.kind);
        return "'" + std::string(t.text) + "'";
    }

private:
    void bump() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void advance() {
        for (;;) {
            while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) bump();
            if (i_ < text_.size() && text_[i_] == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') bump();
                continue;
            }
            break;
        }
        current_.pos = pos_;
        if (i_ >= text_.size()) {
            current_.kind = Tok::end;
            current_.text = {};
            return;
        }
        std::size_t start = i_;
        char c = text_[i_];
        auto single = [&](Tok k) {
            bump();
            current_.kind = k;
            current_.text = text_.substr(start, 1);
        };
        switch (c) {
        case '(': return single(Tok::lparen);
        case ')': return single(Tok::rparen);
        case ',': return single(Tok::comma);
        case '|': return single(Tok::bar);
        case '~': return single(Tok::tilde);
        case '.': return single(Tok::period);
        default: break;
        }
        if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
            bump();
            bump();
            current_.kind = Tok::arrow;
            current_.text = text_.substr(start, 2);
            return;
        }
        if (c == '[' && i_ + 1 < text_.size() && text_[i_ + 1] == ']') {
            bump();
            bump();
            current_.kind = Tok::empty_clause;
            current_.text = text_.substr(start, 2);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                bump();
            current_.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::uident : Tok::lident;
            current_.text = text_.substr(start, i_ - start);
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, Signature& sig) : lex_(text), sig_(sig) {}

    ClauseFile file() {
        ClauseFile out;
        while (lex_.peek().kind != Tok::end) {
            SourcePos pos = lex_.peek().pos;
            if (lex_.peek().kind == Tok::period) throw ParseError(pos, "empty clause");
            out.clauses.push_back(clause());
            out.positions.push_back(pos);
            lex_.expect(Tok::period);
        }
        return out;
    }

    Clause single_clause() {
        Clause c;
        if (lex_.peek().kind == Tok::empty_clause) {
            lex_.take();
        } else {
            if (lex_.peek().kind == Tok::period || lex_.peek().kind == Tok::end)
                throw ParseError(lex_.peek().pos, "empty clause");
            c = clause();
        }
        if (lex_.peek().kind == Tok::period) lex_.take();
        finish();
        return c;
    }

    Substitution substitution() {
        Substitution s;
        while (lex_.peek().kind != Tok::end) {
            if (!s.empty()) lex_.expect(Tok::comma);
            Token v = lex_.expect(Tok::uident);
            lex_.expect(Tok::arrow);
            if (s.lookup(v.text)) throw ParseError(v.pos, "variable " + std::string(v.text) + " bound twice");
            s.bind(std::string(v.text), term());
        }
        return s;
    }

private:
    void finish() {
        if (lex_.peek().kind != Tok::end)
            throw ParseError(lex_.peek().pos, "unexpected " + Lexer::describe(lex_.peek()));
    }

    Clause clause() {
        std::vector<Literal> lits;
        lits.push_back(literal());
        while (lex_.peek().kind == Tok::bar) {
            lex_.take();
            lits.push_back(literal());
        }
        return Clause(std::move(lits));
    }

    Literal literal() {
        bool positive = true;
        if (lex_.peek().kind == Tok::tilde) {
            lex_.take();
            positive = false;
        }
        if (lex_.peek().kind == Tok::uident)
            throw ParseError(lex_.peek().pos, "predicate names must start with a lowercase letter");
        Token name = lex_.expect(Tok::lident);
        std::vector<Term> args = arguments();
        sig_.declare(Signature::Kind::predicate, std::string(name.text), args.size(), name.pos);
        return Literal(positive, Atom(std::string(name.text), std::move(args)));
    }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        if (lex_.peek().kind != Tok::lparen) return args;
        lex_.take();
        args.push_back(term());
        while (lex_.peek().kind == Tok::comma) {
            lex_.take();
            args.push_back(term());
        }
        lex_.expect(Tok::rparen);
        return args;
    }

    Term term() {
        if (lex_.peek().kind == Tok::uident) {
            Token v = lex_.take();
            if (lex_.peek().kind == Tok::lparen) throw ParseError(lex_.peek().pos, "variables take no arguments");
            return Term::variable(std::string(v.text));
        }
        Token name = lex_.expect(Tok::lident);
        std::vector<Term> args = arguments();
        sig_.declare(Signature::Kind::function, std::string(name.text), args.size(), name.pos);
        return Term::compound(std::string(name.text), std::move(args));
    }

    Lexer lex_;
    Signature& sig_;
};

} // namespace

ClauseFile parse_clause_file(std::string_view text, Signature& sig) { return Parser(text, sig).file(); }

ClauseFile parse_clause_file(std::string_view text) {
    Signature sig;
    return parse_clause_file(text, sig);
}

Clause parse_clause(std::string_view text, Signature& sig) { return Parser(text, sig).single_clause(); }

Clause parse_clause(std::string_view text) {
    Signature sig;
    return parse_clause(text, sig);
}

Substitution parse_substitution(std::string_view text, Signature& sig) { return Parser(text, sig).substitution(); }

std::string print_clause(const Clause& c) { return c.text() + "."; }

} // namespace pikit

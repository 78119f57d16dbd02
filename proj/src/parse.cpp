#include "cca/ast.hpp"

#include <cctype>

#include "cca/field.hpp"

namespace cca {
namespace {

struct Token {
    enum Kind { Int, Ident, Sym, End } kind;
    std::string text;
    SourceSpan span;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    Token next() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
        if (pos >= src.size()) return {Token::End, "", {pos, pos}};
        size_t start = pos;
        char c = src[pos];
        if (std::isdigit((unsigned char)c)) {
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            return {Token::Int, src.substr(start, pos - start), {start, pos}};
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            return {Token::Ident, src.substr(start, pos - start), {start, pos}};
        }
        static const std::string syms = "+-*^()[]/,;";
        if (syms.find(c) != std::string::npos) {
            ++pos;
            return {Token::Sym, std::string(1, c), {start, pos}};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
    }
};

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(const std::string& s) : lex(s) { cur = lex.next(); }

    void advance() { cur = lex.next(); }

    bool at_sym(const char* s) const { return cur.kind == Token::Sym && cur.text == s; }

    void expect_sym(const char* s) {
        if (!at_sym(s))
            throw ParseError(std::string("expected '") + s + "'", cur.span);
        advance();
    }

    std::string expect_ident(const char* what) {
        if (cur.kind != Token::Ident) throw ParseError(std::string("expected ") + what, cur.span);
        std::string t = cur.text;
        advance();
        return t;
    }

    std::string expect_int(const char* what) {
        if (cur.kind != Token::Int) throw ParseError(std::string("expected ") + what, cur.span);
        std::string t = cur.text;
        advance();
        return t;
    }

    uint32_t expect_exponent() {
        if (at_sym("-"))
            throw ParseError("negative exponent", cur.span);
        SourceSpan sp = cur.span;
        std::string digits = expect_int("exponent");
        if (digits.size() > 6) throw ParseError("exponent too large", sp);
        unsigned long v = std::stoul(digits);
        if (v > 0xffff) throw ParseError("exponent too large", sp);
        return (uint32_t)v;
    }

    PolyExprPtr mk(PolyExpr::Kind k, SourceSpan sp) {
        auto e = std::make_unique<PolyExpr>();
        e->kind = k;
        e->span = sp;
        return e;
    }

    // factor := int ("/" int)? | ident ("^" int)? | "(" poly ")" ("^" int)? | "-" factor
    PolyExprPtr factor() {
        SourceSpan sp = cur.span;
        if (at_sym("-")) {
            advance();
            auto e = mk(PolyExpr::Neg, sp);
            e->a = factor();
            e->span.end = e->a->span.end;
            return e;
        }
        if (cur.kind == Token::Int) {
            std::string num = cur.text;
            advance();
            if (at_sym("/")) {
                advance();
                auto e = mk(PolyExpr::Frac, sp);
                e->text = num;
                e->denom = expect_int("denominator");
                return e;
            }
            auto e = mk(PolyExpr::Int, sp);
            e->text = num;
            return e;
        }
        if (cur.kind == Token::Ident) {
            auto e = mk(PolyExpr::Var, sp);
            e->text = cur.text;
            advance();
            if (at_sym("^")) {
                advance();
                auto pw = mk(PolyExpr::Pow, sp);
                pw->expo = expect_exponent();
                pw->a = std::move(e);
                return pw;
            }
            return e;
        }
        if (at_sym("(")) {
            advance();
            auto e = poly();
            expect_sym(")");
            if (at_sym("^")) {
                advance();
                auto pw = mk(PolyExpr::Pow, sp);
                pw->expo = expect_exponent();
                pw->a = std::move(e);
                return pw;
            }
            return e;
        }
        throw ParseError("expected a factor", cur.span);
    }

    PolyExprPtr term() {
        auto e = factor();
        while (at_sym("*")) {
            SourceSpan sp = e->span;
            advance();
            auto m = mk(PolyExpr::Mul, sp);
            m->a = std::move(e);
            m->b = factor();
            m->span.end = m->b->span.end;
            e = std::move(m);
        }
        return e;
    }

    PolyExprPtr poly() {
        auto e = term();
        while (at_sym("+") || at_sym("-")) {
            bool plus = cur.text == "+";
            advance();
            auto n = mk(plus ? PolyExpr::Add : PolyExpr::Sub, e->span);
            n->a = std::move(e);
            n->b = term();
            n->span.end = n->b->span.end;
            e = std::move(n);
        }
        return e;
    }

    RingExpr ring() {
        RingExpr r;
        r.span.start = cur.span.start;
        std::string f = expect_ident("field (Q or F)");
        if (f == "Q") {
            r.rational = true;
        } else if (f == "F") {
            r.rational = false;
            expect_sym("(");
            SourceSpan psp = cur.span;
            std::string digits = expect_int("characteristic");
            if (digits.size() > 18) throw ParseError("characteristic too large", psp);
            r.p = std::stoull(digits);
            if (!is_prime_u64(r.p))
                throw ParseError("characteristic " + digits + " is not prime", psp);
            expect_sym(")");
        } else {
            throw ParseError("expected field Q or F(p)", r.span);
        }
        expect_sym("[");
        for (;;) {
            SourceSpan vsp = cur.span;
            std::string v = expect_ident("variable name");
            for (const auto& w : r.vars)
                if (w == v) throw ParseError("duplicate variable " + v, vsp);
            r.vars.push_back(v);
            if (at_sym(",")) { advance(); continue; }
            break;
        }
        expect_sym("]");
        if (at_sym("/")) {
            advance();
            expect_sym("(");
            for (;;) {
                r.rels.push_back(poly());
                if (at_sym(";") || at_sym(",")) { advance(); continue; }
                break;
            }
            expect_sym(")");
        }
        r.span.end = cur.span.start;
        return r;
    }

    void expect_end() {
        if (cur.kind != Token::End) throw ParseError("trailing input", cur.span);
    }
};

} // namespace

RingExpr parse_ring_text(const std::string& text) {
    Parser p(text);
    RingExpr r = p.ring();
    p.expect_end();
    r.source = text;
    return r;
}

PolyExprPtr parse_poly_text(const std::string& text) {
    Parser p(text);
    auto e = p.poly();
    p.expect_end();
    return e;
}

std::vector<std::string> split_list(const std::string& text, const std::string& sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    };
    while (true) {
        size_t nxt = text.find(sep, pos);
        std::string piece = trim(text.substr(pos, nxt == std::string::npos ? nxt : nxt - pos));
        if (!piece.empty())
            out.push_back(piece);
        else if (nxt != std::string::npos)
            throw ParseError("empty list entry", {pos, pos});
        if (nxt == std::string::npos) break;
        pos = nxt + sep.size();
    }
    return out;
}

} // namespace cca

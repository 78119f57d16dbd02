#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cca/ast.hpp"
#include "cca/ring.hpp"

namespace cca {

template <class F>
Poly<F> elaborate_poly(const Ring<F>& R, const MonoOrder& ord, const PolyExpr& e) {
    const F& K = R.K;
    switch (e.kind) {
        case PolyExpr::Int:
            return poly_const(K, K.from_digits(e.text));
        case PolyExpr::Frac: {
            auto den = K.from_digits(e.denom);
            if (K.is_zero(den))
                throw ParseError("denominator vanishes in the coefficient field", e.span);
            return poly_const(K, K.mul(K.from_digits(e.text), K.inv(den)));
        }
        case PolyExpr::Var: {
            int i = R.var_index(e.text);
            if (i < 0) throw ParseError("unknown variable " + e.text, e.span);
            return poly_var(K, i);
        }
        case PolyExpr::Neg:
            return poly_neg(K, elaborate_poly(R, ord, *e.a));
        case PolyExpr::Add:
            return poly_add(K, ord, elaborate_poly(R, ord, *e.a), elaborate_poly(R, ord, *e.b));
        case PolyExpr::Sub:
            return poly_sub(K, ord, elaborate_poly(R, ord, *e.a), elaborate_poly(R, ord, *e.b));
        case PolyExpr::Mul:
            return poly_mul(K, ord, elaborate_poly(R, ord, *e.a), elaborate_poly(R, ord, *e.b));
        case PolyExpr::Pow:
            return poly_pow(K, ord, elaborate_poly(R, ord, *e.a), e.expo);
    }
    throw std::logic_error("unreachable");
}

template <class F>
Poly<F> parse_poly(const Ring<F>& R, const std::string& text) {
    auto ast = parse_poly_text(text);
    return elaborate_poly(R, R.natural(), *ast);
}

template <class F>
std::vector<Poly<F>> parse_poly_list(const Ring<F>& R, const std::string& text,
                                     const std::string& sep = ";") {
    std::vector<Poly<F>> out;
    for (const auto& piece : split_list(text, sep))
        out.push_back(parse_poly(R, piece));
    return out;
}

// Ring elaboration dispatches on the declared field.
using RingVariant = std::variant<Ring<Rationals>, Ring<PrimeField>>;

template <class F>
Ring<F> elaborate_ring(F K, const RingExpr& ast) {
    Ring<F> R = make_ring(std::move(K), ast.vars);
    for (const auto& rel : ast.rels) {
        Poly<F> p = elaborate_poly(R, R.natural(), *rel);
        if (!p.is_zero()) R.rels.push_back(std::move(p));
    }
    return R;
}

inline RingVariant parse_ring(const std::string& text) {
    RingExpr ast = parse_ring_text(text);
    if (ast.rational) return elaborate_ring(Rationals{}, ast);
    return elaborate_ring(PrimeField(ast.p), ast);
}

// ---- canonical printing ---------------------------------------------------

template <class F>
std::string mono_to_string(const Ring<F>& R, const Mono& m) {
    std::string s;
    for (int i = 0; i < R.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += R.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

template <class F>
std::string poly_to_string(const Ring<F>& R, const MonoOrder& ord, const Poly<F>& p0) {
    const F& K = R.K;
    Poly<F> p = poly_resort(K, ord, p0);
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.t.size(); ++i) {
        auto c = p.t[i].c;
        bool negative = K.is_negative(c);
        if (i == 0)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        auto ac = K.abs(c);
        std::string ms = mono_to_string(R, p.t[i].m);
        if (ms.empty())
            s += K.to_string(ac);
        else if (K.is_one(ac))
            s += ms;
        else
            s += K.to_string(ac) + "*" + ms;
    }
    return s;
}

template <class F>
std::string poly_to_string(const Ring<F>& R, const Poly<F>& p) {
    return poly_to_string(R, R.natural(), p);
}

template <class F>
std::string ring_to_string(const Ring<F>& R) {
    std::string s;
    if constexpr (std::is_same_v<F, Rationals>)
        s = "Q[";
    else
        s = "F(" + std::to_string(R.K.characteristic()) + ")[";
    for (size_t i = 0; i < R.vars.size(); ++i) {
        if (i) s += ",";
        s += R.vars[i];
    }
    s += "]";
    if (!R.rels.empty()) {
        s += "/(";
        for (size_t i = 0; i < R.rels.size(); ++i) {
            if (i) s += "; ";
            s += poly_to_string(R, R.rels[i]);
        }
        s += ")";
    }
    return s;
}

template <class F>
std::string poly_list_to_string(const Ring<F>& R, const std::vector<Poly<F>>& ps,
                                const std::string& sep = "; ") {
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += sep;
        s += poly_to_string(R, ps[i]);
    }
    return s;
}

} // namespace cca

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cca {

struct SourceSpan {
    size_t start = 0, end = 0;
};

struct ParseError : std::runtime_error {
    SourceSpan span;
    ParseError(std::string msg, SourceSpan s)
        : std::runtime_error(std::move(msg)), span(s) {}
};

// Polynomial AST. Coefficients stay textual until elaboration into a ring
// (arbitrary-precision literals; reduction mod p happens there, not here).
struct PolyExpr {
    enum Kind { Int, Frac, Var, Neg, Add, Sub, Mul, Pow } kind;
    std::string text;          // Int: digits; Var: identifier
    std::string denom;         // Frac: denominator digits (text holds numerator)
    uint32_t expo = 0;         // Pow
    std::unique_ptr<PolyExpr> a, b;
    SourceSpan span;
};

using PolyExprPtr = std::unique_ptr<PolyExpr>;

struct RingExpr {
    bool rational = true;
    uint64_t p = 0;
    std::vector<std::string> vars;
    std::vector<PolyExprPtr> rels;
    SourceSpan span;
    std::string source;
};

RingExpr parse_ring_text(const std::string& text);
PolyExprPtr parse_poly_text(const std::string& text);

// Split on a separator that cannot occur inside the polynomial grammar.
// Trims whitespace; empty input gives an empty list.
std::vector<std::string> split_list(const std::string& text, const std::string& sep);

} // namespace cca

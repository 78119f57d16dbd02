#pragma once

#include <string>
#include <vector>

#include "cca/poly.hpp"

namespace cca {

// Polynomial ring over an exact field with named variables, optionally a
// quotient by the relation list. Following one uniform rule, every ideal or
// module computation runs in the ambient polynomial ring with the relations
// appended (for modules: relation multiples of each unit vector appended as
// extra columns).
template <class F>
struct Ring {
    F K;
    std::vector<std::string> vars;
    std::vector<Poly<F>> rels;

    int nvars() const { return (int)vars.size(); }
    MonoOrder natural() const { return grevlex_order(nvars()); }
    bool is_quotient() const { return !rels.empty(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return (int)i;
        return -1;
    }
};

template <class F>
Ring<F> make_ring(F K, std::vector<std::string> vars, std::vector<Poly<F>> rels = {}) {
    if ((int)vars.size() > kMaxVars)
        throw std::invalid_argument("too many variables (cap " + std::to_string(kMaxVars) + ")");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable " + vars[i]);
    return Ring<F>{std::move(K), std::move(vars), std::move(rels)};
}

// Append fresh variables. Monomial layout is preserved (new slots were zero),
// so polynomials of the base ring flow into the extension unchanged.
template <class F>
Ring<F> extend_ring(const Ring<F>& R, const std::vector<std::string>& fresh) {
    std::vector<std::string> vars = R.vars;
    for (const auto& v : fresh) {
        if (R.var_index(v) >= 0)
            throw std::invalid_argument("fresh variable " + v + " collides with a ring variable");
        vars.push_back(v);
    }
    return make_ring(R.K, std::move(vars), R.rels);
}

// Deterministic fresh-name pick: base, base0, base1, ...
template <class F>
std::string fresh_var_name(const Ring<F>& R, const std::string& base,
                           const std::vector<std::string>& also_taken = {}) {
    auto taken = [&](const std::string& n) {
        if (R.var_index(n) >= 0) return true;
        for (const auto& t : also_taken)
            if (t == n) return true;
        return false;
    };
    if (!taken(base)) return base;
    for (int i = 0;; ++i) {
        std::string n = base + std::to_string(i);
        if (!taken(n)) return n;
    }
}

} // namespace cca

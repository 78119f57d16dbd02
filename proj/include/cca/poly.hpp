#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cca/field.hpp"
#include "cca/mono.hpp"

namespace cca {

// Sparse polynomial: terms sorted strictly descending under the active
// monomial order, no zero coefficients. Every operation that depends on the
// term ordering takes the order explicitly; resort() moves a polynomial
// between orders.
template <class F>
struct Poly {
    using Elem = typename F::Elem;
    struct Term {
        Mono m;
        Elem c;
    };
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    const Term& lead() const {
        if (t.empty()) throw std::domain_error("leading term of zero polynomial");
        return t.front();
    }
    size_t size() const { return t.size(); }
};

template <class F>
Poly<F> poly_zero() { return Poly<F>{}; }

template <class F>
Poly<F> poly_const(const F& K, const typename F::Elem& c) {
    Poly<F> p;
    if (!K.is_zero(c)) p.t.push_back({mono_one(), c});
    return p;
}

template <class F>
Poly<F> poly_term(const F& K, const Mono& m, const typename F::Elem& c) {
    Poly<F> p;
    if (!K.is_zero(c)) p.t.push_back({m, c});
    return p;
}

template <class F>
Poly<F> poly_var(const F& K, int i) { return poly_term(K, mono_var(i), K.one()); }

// Sort (descending), merge duplicate monomials, drop zeros.
template <class F>
void poly_normalize(const F& K, const MonoOrder& ord, Poly<F>& p) {
    std::sort(p.t.begin(), p.t.end(), [&](const auto& a, const auto& b) {
        return mono_cmp(ord, a.m, b.m) > 0;
    });
    std::vector<typename Poly<F>::Term> out;
    out.reserve(p.t.size());
    for (auto& tm : p.t) {
        if (!out.empty() && out.back().m == tm.m)
            out.back().c = K.add(out.back().c, tm.c);
        else
            out.push_back(std::move(tm));
        if (!out.empty() && K.is_zero(out.back().c)) out.pop_back();
    }
    p.t = std::move(out);
}

template <class F>
Poly<F> poly_resort(const F& K, const MonoOrder& ord, Poly<F> p) {
    poly_normalize(K, ord, p);
    return p;
}

// Merge two sorted polynomials (b scaled by s).
template <class F>
Poly<F> poly_add_scaled(const F& K, const MonoOrder& ord, const Poly<F>& a,
                        const Poly<F>& b, const typename F::Elem& s) {
    Poly<F> r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = mono_cmp(ord, a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            auto v = K.mul(b.t[j].c, s);
            if (!K.is_zero(v)) r.t.push_back({b.t[j].m, v});
            ++j;
        } else {
            auto v = K.add(a.t[i].c, K.mul(b.t[j].c, s));
            if (!K.is_zero(v)) r.t.push_back({a.t[i].m, v});
            ++i; ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        auto v = K.mul(b.t[j].c, s);
        if (!K.is_zero(v)) r.t.push_back({b.t[j].m, v});
    }
    return r;
}

template <class F>
Poly<F> poly_add(const F& K, const MonoOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    return poly_add_scaled(K, ord, a, b, K.one());
}

template <class F>
Poly<F> poly_sub(const F& K, const MonoOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    return poly_add_scaled(K, ord, a, b, K.neg(K.one()));
}

template <class F>
Poly<F> poly_neg(const F& K, Poly<F> a) {
    for (auto& tm : a.t) tm.c = K.neg(tm.c);
    return a;
}

template <class F>
Poly<F> poly_scale(const F& K, Poly<F> a, const typename F::Elem& s) {
    if (K.is_zero(s)) return {};
    for (auto& tm : a.t) tm.c = K.mul(tm.c, s);
    return a;
}

// (c * m) * a; multiplying by a fixed monomial preserves any monomial order.
template <class F>
Poly<F> poly_mul_term(const F& K, const Poly<F>& a, const Mono& m,
                      const typename F::Elem& c) {
    Poly<F> r;
    if (K.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        auto v = K.mul(tm.c, c);
        if (!K.is_zero(v)) r.t.push_back({mono_mul(tm.m, m), v});
    }
    return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const MonoOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    if (a.is_zero() || b.is_zero()) return r;
    const Poly<F>& small = a.t.size() <= b.t.size() ? a : b;
    const Poly<F>& big = a.t.size() <= b.t.size() ? b : a;
    r.t.reserve(small.t.size() * big.t.size());
    for (const auto& tm : small.t)
        for (const auto& tn : big.t)
            r.t.push_back({mono_mul(tm.m, tn.m), K.mul(tm.c, tn.c)});
    poly_normalize(K, ord, r);
    return r;
}

template <class F>
Poly<F> poly_pow(const F& K, const MonoOrder& ord, Poly<F> a, uint64_t n) {
    Poly<F> r = poly_const(K, K.one());
    while (n) {
        if (n & 1) r = poly_mul(K, ord, r, a);
        n >>= 1;
        if (n) a = poly_mul(K, ord, a, a);
    }
    return r;
}

template <class F>
bool poly_eq(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].m == b.t[i].m) || !K.eq(a.t[i].c, b.t[i].c)) return false;
    return true;
}

template <class F>
bool poly_is_constant(const Poly<F>& a) {
    return a.t.empty() || (a.t.size() == 1 && mono_is_one(a.t[0].m));
}

template <class F>
uint32_t poly_total_degree(const Poly<F>& a) { // 0 for the zero polynomial
    uint32_t d = 0;
    for (const auto& tm : a.t) d = std::max(d, tm.m.deg);
    return d;
}

template <class F>
Poly<F> poly_monic(const F& K, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(K, a, K.inv(a.t[0].c));
}

// Substitute p^q for every variable power: raise each monomial and
// coefficient to the q-th power. Only a ring map in characteristic p with
// q a power of p; callers guard that.
template <class F>
Poly<F> poly_frobenius(const F& K, const MonoOrder& ord, const Poly<F>& a, uint32_t q) {
    Poly<F> r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        typename F::Elem c = K.one();
        typename F::Elem base = tm.c;
        uint32_t e = q;
        while (e) {
            if (e & 1) c = K.mul(c, base);
            base = K.mul(base, base);
            e >>= 1;
        }
        r.t.push_back({mono_pow(tm.m, q), c});
    }
    poly_normalize(K, ord, r);
    return r;
}

} // namespace cca

#pragma once

// Shared test helpers: deterministic random generators for field elements,
// monomials and polynomials. Oracles live in oracles.hpp.

#include <random>

#include "cca/io.hpp"
#include "cca/linalg.hpp"
#include "cca/ring.hpp"

namespace testsup {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline cca::Rationals::Elem random_elem(Rng& rng, const cca::Rationals&) {
    int num = uniform(rng, -9, 9);
    int den = uniform(rng, 1, 4);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline cca::PrimeField::Elem random_elem(Rng& rng, const cca::PrimeField& K) {
    return (cca::PrimeField::Elem)uniform(rng, 0, (int)K.p - 1);
}

inline cca::Mono random_mono(Rng& rng, int nvars, int maxdeg) {
    cca::Mono m;
    int budget = uniform(rng, 0, maxdeg);
    for (int i = 0; i < budget; ++i) {
        int v = uniform(rng, 0, nvars - 1);
        m.e[v]++;
        m.deg++;
    }
    return m;
}

template <class F>
cca::Poly<F> random_poly(Rng& rng, const cca::Ring<F>& R, int maxdeg, int maxterms,
                         bool allow_zero = true) {
    cca::Poly<F> p;
    int nt = uniform(rng, allow_zero ? 0 : 1, maxterms);
    for (int i = 0; i < nt; ++i) {
        auto c = random_elem(rng, R.K);
        p.t.push_back({random_mono(rng, R.nvars(), maxdeg), c});
    }
    poly_normalize(R.K, R.natural(), p);
    if (!allow_zero && p.is_zero())
        p = poly_const(R.K, R.K.one());
    return p;
}

template <class F>
cca::Mat<F> mat_identity(const cca::Ring<F>& R, int n) {
    cca::Mat<F> m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = cca::poly_const(R.K, R.K.one());
    return m;
}

// U together with its exact inverse, built from random transvections.
template <class F>
std::pair<cca::Mat<F>, cca::Mat<F>> random_unimodular(Rng& rng, const cca::Ring<F>& R, int n,
                                                      int steps) {
    auto U = mat_identity(R, n);
    auto V = mat_identity(R, n);
    auto ord = R.natural();
    for (int s = 0; s < steps; ++s) {
        int i = uniform(rng, 0, n - 1);
        int j = uniform(rng, 0, n - 1);
        if (i == j) continue;
        auto f = random_poly(rng, R, 1, 2);
        for (int c = 0; c < n; ++c)
            U.at(i, c) = cca::poly_add(R.K, ord, U.at(i, c), cca::poly_mul(R.K, ord, f, U.at(j, c)));
        for (int r = 0; r < n; ++r)
            V.at(r, j) = cca::poly_sub(R.K, ord, V.at(r, j), cca::poly_mul(R.K, ord, f, V.at(r, i)));
    }
    return {std::move(U), std::move(V)};
}

// A composable pair beta*alpha = 0 built from complementary coordinate blocks
// conjugated by a random unimodular change of the middle module. mode 0 is
// exact everywhere, mode 1 leaves a rank gap, mode 2 puts a variable pivot so
// exactness fails exactly on its zero locus.
template <class F>
struct SplitPair {
    cca::Mat<F> alpha, beta;
    bool designed_exact = false;
};

template <class F>
SplitPair<F> random_split_pair(Rng& rng, const cca::Ring<F>& R, int b, int mode) {
    int i = uniform(rng, 0, b);
    int j = b - i;
    if (mode == 1) {
        if (j > 0) --j;
        else if (i > 0) --i;
        else mode = 0;
    }
    auto one = cca::poly_const(R.K, R.K.one());
    cca::Mat<F> a0(b, i);
    for (int k = 0; k < i; ++k) a0.at(k, k) = one;
    cca::Mat<F> b0(j, b);
    for (int r = 0; r < j; ++r) b0.at(r, b - j + r) = one;
    if (mode == 2) {
        auto pivot = cca::poly_var(R.K, uniform(rng, 0, R.nvars() - 1));
        if (i > 0 && (j == 0 || uniform(rng, 0, 1))) {
            int k = uniform(rng, 0, i - 1);
            a0.at(k, k) = pivot;
        } else if (j > 0) {
            int r = uniform(rng, 0, j - 1);
            b0.at(r, b - j + r) = pivot;
        }
    }
    auto [U, Uinv] = random_unimodular(rng, R, b, uniform(rng, 1, 4));
    SplitPair<F> out;
    out.alpha = cca::mat_mul(R.K, R.natural(), U, a0);
    out.beta = cca::mat_mul(R.K, R.natural(), b0, Uinv);
    out.designed_exact = mode == 0;
    return out;
}

} // namespace testsup

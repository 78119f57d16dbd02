#pragma once

#include "cca/groebner.hpp"

namespace cca {

// Quotient-aware ideal operations: a ring may carry relations, and every
// computation here works in the ambient polynomial ring with the relation
// generators appended. Generator lists stay as the user gave them;
// canonicalization happens only inside equality and unit tests.

template <class F>
std::vector<Poly<F>> with_rels(const Ring<F>& R, std::vector<Poly<F>> gens) {
    gens.insert(gens.end(), R.rels.begin(), R.rels.end());
    return gens;
}

template <class F>
GBasis<F> ideal_basis(const Ring<F>& R, const std::vector<Poly<F>>& I, GBOpts opts = {}) {
    return ideal_gb(R.K, R.natural(), with_rels(R, I), opts);
}

template <class F>
bool ideal_member(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f) {
    auto G = ideal_basis(R, I);
    return ideal_member_gb(R.K, G, f);
}

// Membership certificate: f = sum gen_coeffs[i]*I[i] + sum rel_coeffs[j]*rels[j].
template <class F>
struct MemberWitness {
    std::vector<Poly<F>> gen_coeffs;
    std::vector<Poly<F>> rel_coeffs;
};

template <class F>
std::optional<MemberWitness<F>> ideal_member_witness(const Ring<F>& R,
                                                     const std::vector<Poly<F>>& I,
                                                     const Poly<F>& f) {
    auto co = ideal_witness(R.K, R.natural(), with_rels(R, I), f);
    if (!co) return std::nullopt;
    MemberWitness<F> w;
    w.gen_coeffs.assign(co->begin(), co->begin() + I.size());
    w.rel_coeffs.assign(co->begin() + I.size(), co->end());
    return w;
}

template <class F>
bool ideal_equal(const Ring<F>& R, const std::vector<Poly<F>>& A,
                 const std::vector<Poly<F>>& B) {
    return ideal_equal_ambient(R, with_rels(R, A), with_rels(R, B));
}

template <class F>
bool is_unit_ideal(const Ring<F>& R, const std::vector<Poly<F>>& I) {
    return is_unit_ideal_ambient(R, with_rels(R, I));
}

// --- generator-list arithmetic ----------------------------------------------

template <class F>
std::vector<Poly<F>> dedup_gens(const Ring<F>& R, const std::vector<Poly<F>>& gens) {
    std::vector<Poly<F>> out;
    for (const auto& g : gens) {
        auto p = poly_resort(R.K, R.natural(), g);
        if (p.is_zero()) continue;
        bool dup = false;
        for (const auto& q : out)
            if (poly_eq(R.K, p, q)) { dup = true; break; }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

template <class F>
std::vector<Poly<F>> ideal_sum(const std::vector<Poly<F>>& A, const std::vector<Poly<F>>& B) {
    auto s = A;
    s.insert(s.end(), B.begin(), B.end());
    return s;
}

template <class F>
std::vector<Poly<F>> ideal_product(const Ring<F>& R, const std::vector<Poly<F>>& A,
                                   const std::vector<Poly<F>>& B) {
    std::vector<Poly<F>> prod;
    for (const auto& a : A)
        for (const auto& b : B) prod.push_back(poly_mul(R.K, R.natural(), a, b));
    return dedup_gens(R, prod);
}

namespace detail {
template <class F>
void power_products(const Ring<F>& R, const std::vector<Poly<F>>& gens, size_t from,
                    uint32_t left, const Poly<F>& acc, std::vector<Poly<F>>& out) {
    if (left == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t i = from; i < gens.size(); ++i)
        power_products(R, gens, i, left - 1, poly_mul(R.K, R.natural(), acc, gens[i]), out);
}
} // namespace detail

// All degree-n products of generators (one per multiset), deduplicated.
template <class F>
std::vector<Poly<F>> ideal_power(const Ring<F>& R, const std::vector<Poly<F>>& I, uint32_t n) {
    if (n == 0) return {poly_const(R.K, R.K.one())};
    std::vector<Poly<F>> out;
    detail::power_products(R, I, 0, n, poly_const(R.K, R.K.one()), out);
    return dedup_gens(R, out);
}

// --- Frobenius powers --------------------------------------------------------

template <class F>
uint32_t frobenius_q(const Ring<F>& R, uint32_t e) {
    uint64_t p = R.K.characteristic();
    if (p == 0) throw std::domain_error("Frobenius requires positive characteristic");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 0xffff) throw std::overflow_error("Frobenius power exceeds exponent range");
    }
    return (uint32_t)q;
}

// Bracket power I^[q]: generators raised to the q-th power, reduced modulo
// the ring relations. The relation ideal itself is not bracketed.
template <class F>
std::vector<Poly<F>> frobenius_power(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                     uint32_t e) {
    uint32_t q = frobenius_q(R, e);
    std::vector<Poly<F>> out;
    out.reserve(I.size());
    std::optional<GBasis<F>> rel_basis;
    if (R.is_quotient()) rel_basis = ideal_gb(R.K, R.natural(), R.rels);
    for (const auto& g : I) {
        auto gq = poly_frobenius(R.K, R.natural(), g, q);
        if (rel_basis) gq = gb_normal_form(R.K, *rel_basis, as_vec(std::move(gq)))[0];
        out.push_back(std::move(gq));
    }
    return out;
}

// --- minor ideals ------------------------------------------------------------

namespace detail {
inline void combinations(int n, int k, int from, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i <= n - (k - (int)cur.size()); ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

inline std::vector<std::vector<int>> index_combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::combinations(n, k, 0, cur, out);
    return out;
}

template <class F>
std::vector<Poly<F>> minors_ideal(const Ring<F>& R, const Mat<F>& A, int k) {
    if (k == 0) return {poly_const(R.K, R.K.one())};
    if (k < 0 || k > std::min(A.rows, A.cols))
        throw std::invalid_argument("minor size out of range");
    std::vector<Poly<F>> out;
    auto rsubs = index_combinations(A.rows, k);
    auto csubs = index_combinations(A.cols, k);
    for (const auto& rs : rsubs)
        for (const auto& cs : csubs) {
            Mat<F> sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(rs[i], cs[j]);
            out.push_back(mat_det(R.K, R.natural(), sub));
        }
    return dedup_gens(R, out);
}

// Zero ideal when no k x k submatrix exists; used by rank-style loops that
// range k past the matrix shape.
template <class F>
std::vector<Poly<F>> minors_or_zero(const Ring<F>& R, const Mat<F>& A, int k) {
    if (k > std::min(A.rows, A.cols)) return {};
    return minors_ideal(R, A, k);
}

// --- radical membership ------------------------------------------------------

struct RadicalResult {
    bool member = false;
    uint32_t exponent = 0; // smallest k with f^k in I, when member
};

// Rabinowitsch: f lies in rad(I) iff 1 in (I, 1 - t*f) in R[t]. On success,
// the exponent is found by upward search; the cutoff (1 + product of
// generator degrees) can only be hit through an internal defect.
template <class F>
RadicalResult radical_member(const Ring<F>& R, const std::vector<Poly<F>>& I,
                             const Poly<F>& f) {
    if (f.is_zero()) return {true, 1};
    Ring<F> E = extend_ring(R, {fresh_var_name(R, "t")});
    auto ordE = E.natural();
    Poly<F> t = poly_var(E.K, R.nvars());
    auto gens = with_rels(R, I);
    gens.push_back(poly_sub(E.K, ordE, poly_const(E.K, E.K.one()), poly_mul(E.K, ordE, t, f)));
    if (!is_unit_ideal_ambient(E, gens)) return {false, 0};

    uint64_t cap = 1;
    for (const auto& g : with_rels(R, I)) cap *= std::max<uint64_t>(1, poly_total_degree(g));
    cap = std::min<uint64_t>(cap + 1, 100000);
    auto G = ideal_basis(R, I);
    Poly<F> p = poly_const(R.K, R.K.one());
    for (uint64_t k = 1; k <= cap; ++k) {
        p = poly_mul(R.K, R.natural(), p, f);
        if (ideal_member_gb(R.K, G, p)) return {true, (uint32_t)k};
    }
    throw std::logic_error("radical exponent not found within its bound");
}

} // namespace cca

#pragma once

#include "cca/ideal.hpp"

namespace cca {

// Finitely presented module: the cokernel of pres: R^nu -> R^mu. A free
// module has a presentation with zero columns.
template <class F>
struct FPModule {
    Mat<F> pres; // mu x nu
    int rank() const { return pres.rows; }
};

template <class F>
FPModule<F> free_module(int mu) {
    FPModule<F> m;
    m.pres = Mat<F>(mu, 0);
    return m;
}

// The triple (M, N, m): a submodule N of M given by generators, and an
// element, all as vectors in the ambient free rank.
template <class F>
struct SubmoduleData {
    FPModule<F> M;
    std::vector<Vec<F>> N;
    Vec<F> m;
};

template <class F>
void validate_submodule(const SubmoduleData<F>& S) {
    size_t mu = (size_t)S.M.rank();
    if (S.m.size() != mu) throw std::invalid_argument("element length does not match module rank");
    for (const auto& g : S.N)
        if (g.size() != mu)
            throw std::invalid_argument("submodule generator length does not match module rank");
}

// Relation columns induced by the ring's quotient structure at rank b.
template <class F>
std::vector<Vec<F>> rel_columns(const Ring<F>& R, int b) {
    std::vector<Vec<F>> cols;
    for (const auto& r : R.rels)
        for (int i = 0; i < b; ++i) {
            Vec<F> v(b);
            v[i] = r;
            cols.push_back(std::move(v));
        }
    return cols;
}

// Everything the zero class of coker(pres) absorbs: presentation columns
// plus ring-relation columns, plus the given submodule generators.
template <class F>
std::vector<Vec<F>> submodule_span(const Ring<F>& R, const FPModule<F>& M,
                                   const std::vector<Vec<F>>& gens) {
    auto cols = gens;
    for (int j = 0; j < M.pres.cols; ++j) cols.push_back(M.pres.col(j));
    auto rc = rel_columns(R, M.pres.rows);
    cols.insert(cols.end(), std::make_move_iterator(rc.begin()), std::make_move_iterator(rc.end()));
    return cols;
}

template <class F>
GBasis<F> submodule_basis(const Ring<F>& R, const FPModule<F>& M,
                          const std::vector<Vec<F>>& gens, GBOpts opts = {}) {
    return buchberger(R.K, R.natural(), M.rank(), submodule_span(R, M, gens), opts);
}

template <class F>
bool submodule_member(const Ring<F>& R, const FPModule<F>& M, const std::vector<Vec<F>>& gens,
                      const Vec<F>& target) {
    auto G = submodule_basis(R, M, gens);
    return gb_member(R.K, G, target);
}

// Pass from (M, N, m) to (M/N, 0, m): append N's generators as presentation
// columns; the element vector is unchanged.
template <class F>
SubmoduleData<F> quotient_presentation(const SubmoduleData<F>& S) {
    validate_submodule(S);
    SubmoduleData<F> out;
    int mu = S.M.rank();
    out.M.pres = Mat<F>(mu, S.M.pres.cols + (int)S.N.size());
    for (int j = 0; j < S.M.pres.cols; ++j)
        for (int i = 0; i < mu; ++i) out.M.pres.at(i, j) = S.M.pres.at(i, j);
    for (size_t k = 0; k < S.N.size(); ++k)
        for (int i = 0; i < mu; ++i) out.M.pres.at(i, S.M.pres.cols + (int)k) = S.N[k][i];
    out.m = S.m;
    return out;
}

// --- Frobenius functor on presentations --------------------------------------

template <class F>
Mat<F> frobenius_mat(const Ring<F>& R, const Mat<F>& A, uint32_t e) {
    uint32_t q = frobenius_q(R, e);
    Mat<F> out(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i)
        out.a[i] = poly_frobenius(R.K, R.natural(), A.a[i], q);
    return out;
}

template <class F>
Vec<F> frobenius_vec(const Ring<F>& R, const Vec<F>& v, uint32_t e) {
    uint32_t q = frobenius_q(R, e);
    Vec<F> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = poly_frobenius(R.K, R.natural(), v[i], q);
    return out;
}

template <class F>
std::pair<FPModule<F>, Vec<F>> frobenius_module(const Ring<F>& R, const FPModule<F>& M,
                                                const Vec<F>& m, uint32_t e) {
    FPModule<F> out;
    out.pres = frobenius_mat(R, M.pres, e);
    return {std::move(out), frobenius_vec(R, m, e)};
}

} // namespace cca

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cca/field.hpp"

namespace cca {

// Dense scalar matrix over an exact field, row-major. Maps act on column
// vectors, so a map V -> W with dim V = c and dim W = r is an r x c matrix.
template <class F>
struct ScalarMat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    ScalarMat() = default;
    ScalarMat(const F& K, int r, int c) : rows(r), cols(c), a((size_t)r * c, K.zero()) {}

    typename F::Elem& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const typename F::Elem& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

template <class F>
ScalarMat<F> scalar_identity(const F& K, int n) {
    ScalarMat<F> m(K, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
}

template <class F>
ScalarMat<F> scalar_mul(const F& K, const ScalarMat<F>& A, const ScalarMat<F>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("scalar matrix shape mismatch");
    ScalarMat<F> C(K, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (K.is_zero(A.at(i, k))) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = K.add(C.at(i, j), K.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

template <class F>
bool scalar_eq(const F& K, const ScalarMat<F>& A, const ScalarMat<F>& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (!K.eq(A.a[i], B.a[i])) return false;
    return true;
}

template <class F>
bool scalar_is_zero(const F& K, const ScalarMat<F>& A) {
    for (const auto& e : A.a)
        if (!K.is_zero(e)) return false;
    return true;
}

template <class F>
int scalar_rank(const F& K, ScalarMat<F> m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!K.is_zero(m.at(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        auto iv = K.inv(m.at(rank, col));
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = K.mul(m.at(rank, c), iv);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (K.is_zero(m.at(r, col))) continue;
            auto f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = K.sub(m.at(r, c), K.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

// Cochain complex of finite-dimensional spaces: dims d_0..d_n and
// differentials D_k: d_k -> d_(k+1) with D_(k+1) * D_k = 0.
template <class F>
struct CechComplex {
    F K;
    std::vector<int> dims;
    std::vector<ScalarMat<F>> differentials;
};

template <class F>
CechComplex<F> make_cech(const F& K, std::vector<int> dims,
                         std::vector<ScalarMat<F>> differentials) {
    if (dims.empty()) throw std::invalid_argument("complex needs at least one level");
    if (differentials.size() + 1 != dims.size())
        throw std::invalid_argument("complex needs one differential per adjacent level pair");
    for (size_t k = 0; k < differentials.size(); ++k)
        if (differentials[k].cols != dims[k] || differentials[k].rows != dims[k + 1])
            throw std::invalid_argument("differential shape disagrees with the level dimensions");
    for (size_t k = 0; k + 1 < differentials.size(); ++k)
        if (!scalar_is_zero(K, scalar_mul(K, differentials[k + 1], differentials[k])))
            throw std::invalid_argument("not a complex: consecutive differentials do not compose to zero");
    return {K, std::move(dims), std::move(differentials)};
}

// Face data: per level the restriction matrices rho_t along the projections;
// the differential of the level is the alternating sum of its faces.
template <class F>
struct FaceData {
    F K;
    std::vector<std::vector<ScalarMat<F>>> faces;
};

template <class F>
CechComplex<F> from_faces(const FaceData<F>& F_) {
    const F& K = F_.K;
    if (F_.faces.empty()) throw std::invalid_argument("face data needs at least one level");
    std::vector<int> dims;
    std::vector<ScalarMat<F>> diffs;
    for (size_t k = 0; k < F_.faces.size(); ++k) {
        const auto& level = F_.faces[k];
        if (level.empty()) throw std::invalid_argument("face data needs at least one face per level");
        for (const auto& f : level)
            if (f.rows != level[0].rows || f.cols != level[0].cols)
                throw std::invalid_argument("faces of one level must share a shape");
        if (k == 0) dims.push_back(level[0].cols);
        if (level[0].cols != dims.back())
            throw std::invalid_argument("face shapes do not chain between levels");
        dims.push_back(level[0].rows);
        ScalarMat<F> D(K, level[0].rows, level[0].cols);
        for (size_t t = 0; t < level.size(); ++t)
            for (size_t i = 0; i < D.a.size(); ++i)
                D.a[i] = (t % 2 == 0) ? K.add(D.a[i], level[t].a[i]) : K.sub(D.a[i], level[t].a[i]);
        diffs.push_back(std::move(D));
    }
    for (size_t k = 0; k + 1 < diffs.size(); ++k)
        if (!scalar_is_zero(K, scalar_mul(K, diffs[k + 1], diffs[k])))
            throw std::invalid_argument("face data violates the simplicial identities: d*d is nonzero");
    return {K, std::move(dims), std::move(diffs)};
}

// dim H^k = d_k - rank(D_k) - rank(D_(k-1)), with the boundary maps outside
// the complex read as zero.
template <class F>
std::vector<int> cohomology_dims(const CechComplex<F>& C) {
    std::vector<int> ranks(C.differentials.size());
    for (size_t k = 0; k < C.differentials.size(); ++k)
        ranks[k] = scalar_rank(C.K, C.differentials[k]);
    std::vector<int> h(C.dims.size());
    for (size_t k = 0; k < C.dims.size(); ++k) {
        int out = k < ranks.size() ? ranks[k] : 0;
        int in = k > 0 ? ranks[k - 1] : 0;
        h[k] = C.dims[k] - out - in;
    }
    return h;
}

// Collapse pattern of a one-map cover whose restrictions are isomorphisms:
// the alternating sums vanish at even levels and are isomorphisms at odd
// ones, and everything above H^0 dies.
template <class F>
bool collapse_check(const FaceData<F>& F_) {
    const F& K = F_.K;
    for (const auto& level : F_.faces) {
        if (level.empty()) throw std::invalid_argument("face data needs at least one face per level");
        for (const auto& f : level)
            if (!scalar_eq(K, f, level[0]))
                throw std::invalid_argument("collapse check requires equal faces at every level");
        if (level[0].rows != level[0].cols || scalar_rank(K, level[0]) != level[0].rows)
            throw std::invalid_argument("collapse check requires isomorphism faces");
    }
    auto C = from_faces(F_);
    for (size_t k = 0; k < C.differentials.size(); ++k) {
        const auto& D = C.differentials[k];
        bool want_zero = k % 2 == 0;
        if (want_zero && !scalar_is_zero(K, D)) return false;
        if (!want_zero && (D.rows != D.cols || scalar_rank(K, D) != D.rows)) return false;
    }
    auto h = cohomology_dims(C);
    for (size_t k = 1; k < h.size(); ++k)
        if (h[k] != 0) return false;
    return true;
}

} // namespace cca

#pragma once

#include <vector>

#include "cca/io.hpp"
#include "cca/poly.hpp"
#include "cca/ring.hpp"

namespace cca {

// Element of the free module R^b: one polynomial per component, all sorted
// under the active order.
template <class F>
using Vec = std::vector<Poly<F>>;

template <class F>
Vec<F> vec_zero(int b) { return Vec<F>(b); }

template <class F>
Vec<F> vec_unit(const F& K, int b, int i) {
    Vec<F> v(b);
    v[i] = poly_const(K, K.one());
    return v;
}

template <class F>
bool vec_is_zero(const Vec<F>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

template <class F>
bool vec_eq(const F& K, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!poly_eq(K, a[i], b[i])) return false;
    return true;
}

template <class F>
Vec<F> vec_add_scaled(const F& K, const MonoOrder& ord, const Vec<F>& a, const Vec<F>& b,
                      const typename F::Elem& s) {
    Vec<F> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_add_scaled(K, ord, a[i], b[i], s);
    return r;
}

// a - (c*m) * b
template <class F>
Vec<F> vec_sub_term_mult(const F& K, const MonoOrder& ord, const Vec<F>& a, const Vec<F>& b,
                         const Mono& m, const typename F::Elem& c) {
    Vec<F> r(a.size());
    auto nc = K.neg(c);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_add(K, ord, a[i], poly_mul_term(K, b[i], m, nc));
    return r;
}

template <class F>
Vec<F> vec_scale(const F& K, Vec<F> a, const typename F::Elem& s) {
    for (auto& p : a) p = poly_scale(K, p, s);
    return a;
}

template <class F>
Vec<F> vec_mul_poly(const F& K, const MonoOrder& ord, const Vec<F>& a, const Poly<F>& f) {
    Vec<F> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_mul(K, ord, a[i], f);
    return r;
}

template <class F>
Vec<F> vec_resort(const F& K, const MonoOrder& ord, Vec<F> a) {
    for (auto& p : a) poly_normalize(K, ord, p);
    return a;
}

template <class F>
std::string vec_to_string(const Ring<F>& R, const Vec<F>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += poly_to_string(R, v[i]);
    }
    return s;
}

// Dense matrix over the ring, row-major.
template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Poly<F>> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Poly<F>& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Poly<F>& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    Vec<F> col(int j) const {
        Vec<F> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
};

template <class F>
Mat<F> mat_from_cols(int rows, const std::vector<Vec<F>>& cols) {
    Mat<F> m(rows, (int)cols.size());
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

template <class F>
std::vector<Vec<F>> mat_cols(const Mat<F>& m) {
    std::vector<Vec<F>> cs;
    cs.reserve(m.cols);
    for (int j = 0; j < m.cols; ++j) cs.push_back(m.col(j));
    return cs;
}

template <class F>
Mat<F> mat_augment(const Mat<F>& m, const Vec<F>& v) {
    Mat<F> r(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
        r.at(i, m.cols) = v[i];
    }
    return r;
}

template <class F>
Vec<F> mat_apply(const F& K, const MonoOrder& ord, const Mat<F>& m, const Vec<F>& x) {
    Vec<F> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] = poly_add(K, ord, r[i], poly_mul(K, ord, m.at(i, j), x[j]));
    return r;
}

template <class F>
Mat<F> mat_mul(const F& K, const MonoOrder& ord, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            for (int k = 0; k < a.cols; ++k)
                r.at(i, j) = poly_add(K, ord, r.at(i, j),
                                      poly_mul(K, ord, a.at(i, k), b.at(k, j)));
    return r;
}

template <class F>
bool mat_is_zero(const Mat<F>& m) {
    for (const auto& p : m.a)
        if (!p.is_zero()) return false;
    return true;
}

// Determinant by cofactor expansion along the first row; fine at the in-scope
// matrix sizes.
template <class F>
Poly<F> mat_det(const F& K, const MonoOrder& ord, const Mat<F>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return poly_const(K, K.one());
    if (n == 1) return m.at(0, 0);
    Poly<F> det;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat<F> sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        auto term = poly_mul(K, ord, m.at(0, j), mat_det(K, ord, sub));
        det = (j % 2 == 0) ? poly_add(K, ord, det, term) : poly_sub(K, ord, det, term);
    }
    return det;
}

template <class F>
std::string mat_to_string(const Ring<F>& R, const Mat<F>& m) {
    std::string s;
    for (int i = 0; i < m.rows; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < m.cols; ++j) {
            if (j) s += ", ";
            s += poly_to_string(R, m.at(i, j));
        }
    }
    return s;
}

// Parse "rows ';'-separated, entries ','-separated".
template <class F>
Mat<F> parse_matrix(const Ring<F>& R, const std::string& text) {
    auto rows = split_list(text, ";");
    Mat<F> m;
    m.rows = (int)rows.size();
    std::vector<std::vector<Poly<F>>> entries;
    for (const auto& row : rows) {
        std::vector<Poly<F>> e;
        for (const auto& cell : split_list(row, ","))
            e.push_back(parse_poly(R, cell));
        if (!entries.empty() && e.size() != entries.back().size())
            throw ParseError("ragged matrix rows", {0, 0});
        entries.push_back(std::move(e));
    }
    m.cols = entries.empty() ? 0 : (int)entries[0].size();
    m.a.resize((size_t)m.rows * m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = entries[i][j];
    return m;
}

template <class F>
Vec<F> parse_vector(const Ring<F>& R, const std::string& text) {
    Vec<F> v;
    for (const auto& cell : split_list(text, ","))
        v.push_back(parse_poly(R, cell));
    return v;
}

} // namespace cca

#pragma once

#include "cca/closures.hpp"

namespace cca {

// Chain of matrices mats[k] = map F_(k+1) -> F_k, so mats[k-1]*mats[k] = 0.
template <class F>
struct FreeComplex {
    std::vector<Mat<F>> mats;
};

namespace detail {
template <class F>
bool mat_zero_mod_rels(const Ring<F>& R, const Mat<F>& A) {
    if (!R.is_quotient()) return mat_is_zero(A);
    auto G = ideal_gb(R.K, R.natural(), R.rels);
    for (const auto& p : A.a)
        if (!gb_normal_form(R.K, G, as_vec(p))[0].is_zero()) return false;
    return true;
}
} // namespace detail

template <class F>
FreeComplex<F> make_free_complex(const Ring<F>& R, std::vector<Mat<F>> mats) {
    for (size_t k = 1; k < mats.size(); ++k) {
        if (mats[k - 1].cols != mats[k].rows)
            throw std::invalid_argument("free complex matrices are not composable");
        if (!detail::mat_zero_mod_rels(R, mat_mul(R.K, R.natural(), mats[k - 1], mats[k])))
            throw std::invalid_argument("not a complex: consecutive maps do not compose to zero");
    }
    return {std::move(mats)};
}

// --- minor-product criterion for one pair -------------------------------------

template <class F>
struct PairCert {
    bool exact = false;
    std::vector<Poly<F>> minor_sum;               // generators of sum J_i(alpha)*J_j(beta)
    std::optional<MemberWitness<F>> unit_coeffs;  // combination expressing 1
};

// Generators of sum over i+j=b of J_i(alpha)*J_j(beta), where b is the
// middle rank. Pure minor arithmetic, shared with certificate checking.
template <class F>
std::vector<Poly<F>> pair_minor_sum(const Ring<F>& R, const Mat<F>& alpha, const Mat<F>& beta) {
    int b = alpha.rows;
    auto ord = R.natural();
    std::vector<Poly<F>> sum;
    for (int i = 0; i <= b; ++i) {
        auto Ji = minors_or_zero(R, alpha, i);
        auto Jj = minors_or_zero(R, beta, b - i);
        for (const auto& g : Ji)
            for (const auto& h : Jj)
                sum.push_back(poly_mul(R.K, ord, g, h));
    }
    return dedup_gens(R, sum);
}

// alpha: R^a -> R^b and beta: R^b -> R^c; exact for every base change iff
// sum over i+j=b of J_i(alpha)*J_j(beta) is the unit ideal.
template <class F>
PairCert<F> surjective_exact_pair(const Ring<F>& R, const Mat<F>& alpha, const Mat<F>& beta) {
    if (alpha.rows != beta.cols)
        throw std::invalid_argument("pair shapes disagree at the middle module");
    if (!detail::mat_zero_mod_rels(R, mat_mul(R.K, R.natural(), beta, alpha)))
        throw std::invalid_argument("not a complex: beta*alpha is nonzero");
    PairCert<F> cert;
    cert.minor_sum = pair_minor_sum(R, alpha, beta);
    cert.exact = is_unit_ideal(R, cert.minor_sum);
    if (cert.exact)
        cert.unit_coeffs = ideal_member_witness(R, cert.minor_sum, poly_const(R.K, R.K.one()));
    return cert;
}

// --- rank criterion for a whole complex ---------------------------------------

// Largest k whose minor ideal is not contained in the nilradical.
template <class F>
int matrix_rank_radical(const Ring<F>& R, const Mat<F>& A) {
    for (int k = std::min(A.rows, A.cols); k >= 1; --k) {
        for (const auto& g : minors_ideal(R, A, k)) {
            if (g.is_zero()) continue;
            if (!R.is_quotient()) return k;
            if (!radical_member(R, {}, g).member) return k;
        }
    }
    return 0;
}

template <class F>
struct ComplexCert {
    bool exact = false;
    std::vector<int> dims;           // d_0 .. d_m
    std::vector<int> expected_ranks; // r_0 .. r_m, r_k = d_k - r_(k-1)
    int fail_spot = -1;              // first k with J_(r_k) not the unit ideal
};

template <class F>
ComplexCert<F> surjective_exact_complex(const Ring<F>& R, const FreeComplex<F>& C) {
    if (C.mats.empty()) throw std::invalid_argument("empty complex");
    int m = (int)C.mats.size();
    ComplexCert<F> cert;
    cert.dims.push_back(C.mats[0].rows);
    for (const auto& A : C.mats) cert.dims.push_back(A.cols);

    int prev = 0;
    for (int k = 0; k <= m; ++k) {
        int r = cert.dims[k] - prev;
        cert.expected_ranks.push_back(r);
        prev = r;
    }
    for (int k = 0; k <= m; ++k) {
        int actual = k < m ? matrix_rank_radical(R, C.mats[k]) : 0;
        if (cert.expected_ranks[k] != actual)
            throw std::invalid_argument("rank bookkeeping inconsistent with the exactness criterion");
    }

    cert.exact = true;
    for (int k = 0; k < m; ++k) {
        auto J = minors_or_zero(R, C.mats[k], cert.expected_ranks[k]);
        if (!is_unit_ideal(R, J)) {
            cert.exact = false;
            cert.fail_spot = k;
            break;
        }
    }
    return cert;
}

// --- phantom exactness ---------------------------------------------------------

enum class PhantomClosure { module, radical, frobenius };

inline const char* phantom_closure_name(PhantomClosure c) {
    switch (c) {
        case PhantomClosure::module: return "identity";
        case PhantomClosure::radical: return "radical";
        default: return "frobenius";
    }
}

template <class F>
struct PhantomCert {
    Verdict verdict = Verdict::member;
    std::vector<Vec<F>> kernel;      // generators of ker(beta), middle coordinates
    std::vector<Verdict> per_gen;
    int level = -1;                  // largest Frobenius level used by any witness
};

// Kernel of beta, optionally into coker(target_pres), as a submodule of the
// middle free module R^b.
template <class F>
std::vector<Vec<F>> kernel_generators(const Ring<F>& R, const Mat<F>& beta,
                                      const Mat<F>* target_pres) {
    auto cols = mat_cols(beta);
    size_t keep = cols.size();
    if (target_pres) {
        if (target_pres->rows != beta.rows)
            throw std::invalid_argument("target presentation rank mismatch");
        for (auto& c : mat_cols(*target_pres)) cols.push_back(std::move(c));
    }
    for (auto& c : rel_columns(R, beta.rows)) cols.push_back(std::move(c));
    auto syz = syzygies(R.K, R.natural(), beta.rows, cols);
    std::vector<Vec<F>> out;
    for (const auto& s : syz) {
        Vec<F> v(s.begin(), s.begin() + keep);
        if (vec_is_zero(v)) continue;
        bool dup = false;
        for (const auto& w : out)
            if (vec_eq(R.K, w, v)) { dup = true; break; }
        if (!dup) out.push_back(std::move(v));
    }
    return out;
}

template <class F>
PhantomCert<F> phantom_exact(const Ring<F>& R, const Mat<F>& alpha, const Mat<F>& beta,
                             PhantomClosure cl, const SearchBounds& bounds = {},
                             const Mat<F>* target_pres = nullptr) {
    if (alpha.rows != beta.cols)
        throw std::invalid_argument("pair shapes disagree at the middle module");
    auto comp = mat_mul(R.K, R.natural(), beta, alpha);
    if (target_pres) {
        auto M = FPModule<F>{*target_pres};
        for (int j = 0; j < comp.cols; ++j)
            if (!submodule_member(R, M, {}, comp.col(j)))
                throw std::invalid_argument("not a complex into the quotient target");
    } else if (!detail::mat_zero_mod_rels(R, comp)) {
        throw std::invalid_argument("not a complex: beta*alpha is nonzero");
    }

    PhantomCert<F> cert;
    cert.kernel = kernel_generators(R, beta, target_pres);
    auto span = mat_cols(alpha);
    auto M = free_module<F>(beta.cols);
    for (const auto& v : cert.kernel) {
        Verdict verdict;
        switch (cl) {
            case PhantomClosure::module:
                verdict = submodule_member(R, M, span, v) ? Verdict::member : Verdict::not_member;
                break;
            case PhantomClosure::radical:
                verdict = radical_closure_member_module(R, SubmoduleData<F>{M, span, v}).verdict;
                break;
            case PhantomClosure::frobenius: {
                auto fc = frobenius_closure_member(R, SubmoduleData<F>{M, span, v}, bounds);
                verdict = fc.verdict;
                if (fc.verdict == Verdict::member) cert.level = std::max(cert.level, fc.level);
                break;
            }
        }
        cert.per_gen.push_back(verdict);
        if (verdict == Verdict::not_member) cert.verdict = Verdict::not_member;
        else if (verdict == Verdict::not_found_within_bound &&
                 cert.verdict != Verdict::not_member)
            cert.verdict = Verdict::not_found_within_bound;
    }
    return cert;
}

} // namespace cca

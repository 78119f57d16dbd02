#pragma once

#include <string>

#include "cca/module.hpp"

namespace cca {

// Forcing algebra B = R[t1..tnu]/(D t - m) for a triple (M, N, m); built
// after passing to the quotient presentation, so D already absorbs the
// submodule generators.
template <class F>
struct ForcingAlgebra {
    Ring<F> base;
    Mat<F> D;      // mu x nu
    Vec<F> target; // m in R^mu
    Ring<F> B;
    int mu() const { return D.rows; }
    int nu() const { return D.cols; }
};

template <class F>
ForcingAlgebra<F> build_forcing(const Ring<F>& R, const SubmoduleData<F>& S) {
    validate_submodule(S);
    auto Q = quotient_presentation(S);
    ForcingAlgebra<F> FA;
    FA.base = R;
    FA.D = Q.M.pres;
    FA.target = Q.m;
    std::vector<std::string> fresh;
    for (int j = 1; j <= FA.nu(); ++j) fresh.push_back("t" + std::to_string(j));
    Ring<F> E = extend_ring(R, fresh);
    auto ord = E.natural();
    for (int i = 0; i < FA.mu(); ++i) {
        Poly<F> rel;
        for (int j = 0; j < FA.nu(); ++j)
            rel = poly_add(E.K, ord, rel,
                           poly_mul(E.K, ord, FA.D.at(i, j), poly_var(E.K, R.nvars() + j)));
        rel = poly_sub(E.K, ord, rel, FA.target[i]);
        if (!rel.is_zero()) E.rels.push_back(std::move(rel));
    }
    FA.B = std::move(E);
    return FA;
}

// A ring section exists iff the target lies in the column span of D over the
// base; the witness assigns values in R to the forcing variables.
template <class F>
std::optional<Vec<F>> ring_section(const ForcingAlgebra<F>& FA) {
    const Ring<F>& R = FA.base;
    FPModule<F> M{FA.D};
    auto span = submodule_span(R, M, {});
    auto co = submodule_witness(R.K, R.natural(), FA.mu(), span, FA.target);
    if (!co) return std::nullopt;
    Vec<F> s(co->begin(), co->begin() + FA.nu());
    for (auto& p : s) p = poly_resort(R.K, R.natural(), std::move(p));
    return s;
}

template <class F>
bool has_ring_section(const ForcingAlgebra<F>& FA) {
    return ring_section(FA).has_value();
}

// Per-size record of the Fitting criterion: each generator of
// minors([D | m], k) with its radical exponent against minors(D, k).
template <class F>
struct FittingStep {
    int k = 0;
    std::vector<Poly<F>> aug_gens;
    std::vector<uint32_t> exponents;
};

template <class F>
struct SurjectivityCertificate {
    bool surjective = false;
    std::vector<FittingStep<F>> steps;
    int fail_k = -1;
    Poly<F> fail_gen; // set when not surjective
};

// Spec-surjectivity via Fitting ideals: the fiber over a point is nonempty
// iff rank([D|m]) = rank(D) there, so the map is surjective iff
// minors([D|m], k) lies in rad(minors(D, k)) for every k up to mu.
template <class F>
SurjectivityCertificate<F> is_spec_surjective(const ForcingAlgebra<F>& FA) {
    const Ring<F>& R = FA.base;
    SurjectivityCertificate<F> cert;
    auto aug = mat_augment(FA.D, FA.target);
    for (int k = 1; k <= FA.mu(); ++k) {
        FittingStep<F> step;
        step.k = k;
        step.aug_gens = minors_or_zero(R, aug, k);
        auto base_minors = minors_or_zero(R, FA.D, k);
        for (const auto& g : step.aug_gens) {
            auto res = radical_member(R, base_minors, g);
            if (!res.member) {
                cert.fail_k = k;
                cert.fail_gen = g;
                return cert;
            }
            step.exponents.push_back(res.exponent);
        }
        cert.steps.push_back(std::move(step));
    }
    cert.surjective = true;
    return cert;
}

} // namespace cca

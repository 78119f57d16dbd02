#pragma once

#include <functional>
#include <string>

#include "cca/forcing.hpp"

namespace cca {

// Bounded searches return a three-valued verdict; exhausting a bound is never
// reported as non-membership.
enum class Verdict { member, not_member, not_found_within_bound };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::not_member: return "not_member";
        default: return "not_found_within_bound";
    }
}

struct SearchBounds {
    int e_max = 4;       // Frobenius levels
    int n_max = 10;      // Ratliff-Rush levels
    int r_max = 10;      // reduction degrees
    int t_max = 6;       // Delta product factor count
    int sat_cutoff = 50; // saturation steps
};

// --- radical ----------------------------------------------------------------

struct RadicalCert {
    Verdict verdict = Verdict::not_member;
    uint32_t exponent = 0;
};

template <class F>
RadicalCert radical_closure_member(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                   const Poly<F>& f) {
    auto res = radical_member(R, I, f);
    return {res.member ? Verdict::member : Verdict::not_member, res.exponent};
}

// Submodule path: the element lies in the radical of N in M iff the forcing
// morphism is spec-surjective.
template <class F>
struct RadicalModuleCert {
    Verdict verdict = Verdict::not_member;
    SurjectivityCertificate<F> fitting;
};

template <class F>
RadicalModuleCert<F> radical_closure_member_module(const Ring<F>& R,
                                                   const SubmoduleData<F>& S) {
    auto FA = build_forcing(R, S);
    auto cert = is_spec_surjective(FA);
    return {cert.surjective ? Verdict::member : Verdict::not_member, std::move(cert)};
}

// --- Frobenius ---------------------------------------------------------------

template <class F>
struct FrobeniusCert {
    Verdict verdict = Verdict::not_found_within_bound;
    int level = -1;
    uint32_t q = 0;
    // witness: m^[q] = sum coeffs[j] * span[j], where span = bracketed
    // presentation columns followed by ring-relation columns
    std::vector<Vec<F>> span;
    std::vector<Poly<F>> coeffs;
};

template <class F>
FrobeniusCert<F> frobenius_closure_member(const Ring<F>& R, const SubmoduleData<F>& S,
                                          const SearchBounds& bounds = {}) {
    if (R.K.characteristic() == 0)
        throw std::domain_error("Frobenius closure requires positive characteristic");
    auto Q = quotient_presentation(S);
    for (int e = 0; e <= bounds.e_max; ++e) {
        auto [Mq, mq] = frobenius_module(R, Q.M, Q.m, (uint32_t)e);
        auto span = submodule_span(R, Mq, {});
        auto G = buchberger(R.K, R.natural(), Mq.rank(), span);
        if (!gb_member(R.K, G, mq)) continue;
        auto co = submodule_witness(R.K, R.natural(), Mq.rank(), span, mq);
        FrobeniusCert<F> cert;
        cert.verdict = Verdict::member;
        cert.level = e;
        cert.q = frobenius_q(R, (uint32_t)e);
        cert.span = std::move(span);
        cert.coeffs = std::move(*co);
        return cert;
    }
    return {};
}

// --- Ratliff-Rush ------------------------------------------------------------

template <class F>
struct RatliffRushCert {
    Verdict verdict = Verdict::not_found_within_bound;
    int level = -1;
    std::vector<Poly<F>> power_gens;  // generators of I^n
    std::vector<Poly<F>> target_gens; // generators of I^(n+1)
    std::vector<MemberWitness<F>> coeffs; // f*power_gens[i] in terms of target_gens
};

namespace detail {
template <class F>
void require_nonzero_ideal(const std::vector<Poly<F>>& I, const char* what) {
    for (const auto& g : I)
        if (!g.is_zero()) return;
    throw std::invalid_argument(std::string(what) + " must not be the zero ideal");
}
} // namespace detail

template <class F>
RatliffRushCert<F> ratliff_rush_member(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                       const Poly<F>& f, const SearchBounds& bounds = {}) {
    detail::require_nonzero_ideal(I, "Ratliff-Rush base ideal");
    auto ord = R.natural();
    for (int n = 0; n <= bounds.n_max; ++n) {
        auto In = ideal_power(R, I, (uint32_t)n);
        auto In1 = ideal_power(R, I, (uint32_t)n + 1);
        auto G = ideal_basis(R, In1);
        bool all = true;
        for (const auto& a : In)
            if (!ideal_member_gb(R.K, G, poly_mul(R.K, ord, f, a))) {
                all = false;
                break;
            }
        if (!all) continue;
        RatliffRushCert<F> cert;
        cert.verdict = Verdict::member;
        cert.level = n;
        cert.power_gens = In;
        cert.target_gens = In1;
        for (const auto& a : In) {
            auto w = ideal_member_witness(R, In1, poly_mul(R.K, ord, f, a));
            cert.coeffs.push_back(std::move(*w));
        }
        return cert;
    }
    return {};
}

template <class F>
struct RatliffRushClosure {
    std::vector<Poly<F>> gens;
    int level = 0;          // n at which consecutive colons agreed
    bool stabilized = false;
};

template <class F>
RatliffRushClosure<F> ratliff_rush_closure(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                           const SearchBounds& bounds = {}) {
    detail::require_nonzero_ideal(I, "Ratliff-Rush base ideal");
    RatliffRushClosure<F> out;
    std::vector<Poly<F>> prev;
    for (int n = 0; n <= bounds.n_max; ++n) {
        auto In = ideal_power(R, I, (uint32_t)n);
        auto In1 = ideal_power(R, I, (uint32_t)n + 1);
        auto cur = ideal_colon(R, with_rels(R, In1), In);
        if (n > 0 && ideal_equal_ambient(R, prev, cur)) {
            out.gens = std::move(cur);
            out.level = n - 1;
            out.stabilized = true;
            return out;
        }
        prev = std::move(cur);
    }
    out.gens = std::move(prev);
    out.level = bounds.n_max;
    return out;
}

// --- Delta closure -----------------------------------------------------------

template <class F>
struct DeltaCert {
    Verdict verdict = Verdict::not_found_within_bound;
    std::vector<int> factors;             // indices into the Delta generators
    std::vector<Poly<F>> witness_ideal;   // generators of the product a
    std::vector<Poly<F>> scaled_gens;     // generators of f*a
    std::vector<Poly<F>> target_gens;     // generators of I*a
    std::vector<MemberWitness<F>> coeffs; // per scaled generator
};

// Products of the Delta generators, enumerated breadth-first by factor count.
template <class F>
DeltaCert<F> delta_closure_member(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                  const Poly<F>& f,
                                  const std::vector<std::vector<Poly<F>>>& delta,
                                  const SearchBounds& bounds = {}) {
    if (delta.empty()) throw std::invalid_argument("Delta must have at least one generator");
    detail::require_nonzero_ideal(I, "Delta-closure base ideal");
    for (const auto& d : delta) detail::require_nonzero_ideal(d, "Delta generator");

    auto ord = R.natural();
    std::vector<std::vector<int>> level = {{}};
    for (int t = 0; t <= bounds.t_max; ++t) {
        for (const auto& combo : level) {
            std::vector<Poly<F>> a = {poly_const(R.K, R.K.one())};
            for (int idx : combo) a = ideal_product(R, a, delta[idx]);
            std::vector<Poly<F>> fa;
            for (const auto& g : a) fa.push_back(poly_mul(R.K, ord, f, g));
            auto Ia = ideal_product(R, I, a);
            auto G = ideal_basis(R, Ia);
            bool all = true;
            for (const auto& g : fa)
                if (!ideal_member_gb(R.K, G, g)) {
                    all = false;
                    break;
                }
            if (!all) continue;
            DeltaCert<F> cert;
            cert.verdict = Verdict::member;
            cert.factors = combo;
            cert.witness_ideal = a;
            cert.scaled_gens = fa;
            cert.target_gens = Ia;
            for (const auto& g : fa) cert.coeffs.push_back(std::move(*ideal_member_witness(R, Ia, g)));
            return cert;
        }
        std::vector<std::vector<int>> next;
        for (const auto& combo : level) {
            int from = combo.empty() ? 0 : combo.back();
            for (int idx = from; idx < (int)delta.size(); ++idx) {
                auto c = combo;
                c.push_back(idx);
                next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    return {};
}

// --- integral closure via reductions ------------------------------------------

template <class F>
struct IntegralCert {
    Verdict verdict = Verdict::not_found_within_bound;
    int degree = -1;                  // r with (I,f)^(r+1) = I*(I,f)^r
    std::vector<Poly<F>> identity_basis; // reduced basis of both sides
};

template <class F>
IntegralCert<F> integral_closure_member(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                        const Poly<F>& f, const SearchBounds& bounds = {}) {
    detail::require_nonzero_ideal(I, "integral-closure base ideal");
    auto If = ideal_sum(I, {f});
    for (int r = 0; r <= bounds.r_max; ++r) {
        auto lhs = ideal_power(R, If, (uint32_t)r + 1);
        auto rhs = ideal_product(R, I, ideal_power(R, If, (uint32_t)r));
        if (!ideal_equal(R, lhs, rhs)) continue;
        IntegralCert<F> cert;
        cert.verdict = Verdict::member;
        cert.degree = r;
        cert.identity_basis = ideal_reduced_basis(R, with_rels(R, lhs));
        return cert;
    }
    return {};
}

// --- support / saturation closure ---------------------------------------------

template <class F>
struct SupportCert {
    std::vector<Vec<F>> gens; // generators of (N : J^inf) in the ambient rank
    int exponent = 0;
};

template <class F>
SupportCert<F> support_closure(const Ring<F>& R, const FPModule<F>& M,
                               const std::vector<Vec<F>>& N, const std::vector<Poly<F>>& J,
                               const SearchBounds& bounds = {}) {
    auto span = submodule_span(R, M, N);
    auto sat = module_saturate(R, M.rank(), span, J, bounds.sat_cutoff);
    return {std::move(sat.gens), sat.exponent};
}

// --- symbolic powers ----------------------------------------------------------

template <class F>
struct SymbolicCert {
    std::vector<Poly<F>> gens;
    int exponent = 0; // saturation exponent
};

// n-th symbolic power of P via saturation of P^n at the user's witness s.
// Correct whenever s lies in every associated prime of P^n except P.
template <class F>
SymbolicCert<F> symbolic_power(const Ring<F>& R, const std::vector<Poly<F>>& P, uint32_t n,
                               const Poly<F>& s, const SearchBounds& bounds = {}) {
    if (ideal_member(R, P, s))
        throw std::invalid_argument("localizing witness lies in the ideal");
    auto Pn = ideal_power(R, P, n);
    auto sat = ideal_saturate(R, with_rels(R, Pn), {s}, bounds.sat_cutoff);
    return {std::move(sat.gens), sat.exponent};
}

// --- plus-closure witness check ------------------------------------------------

template <class F>
struct PlusCert {
    enum class Status { member, not_member, witness_not_finite } status = Status::not_member;
    std::vector<Mono> finiteness_leads; // per witness variable, a pure-power lead
    std::optional<MemberWitness<F>> coeffs;
};

namespace detail {
template <class F>
void check_extension_shape(const Ring<F>& R, const Ring<F>& S) {
    if (S.nvars() < R.nvars())
        throw std::invalid_argument("witness ring does not extend the base ring");
    for (int i = 0; i < R.nvars(); ++i)
        if (S.vars[i] != R.vars[i])
            throw std::invalid_argument("witness ring variables must start with the base variables");
}

// Module-finiteness over the base: under a block order with the witness
// variables dominant, the relation basis must expose a pure power of each
// witness variable as a lead.
template <class F>
std::optional<std::vector<Mono>> finiteness_leads(const Ring<F>& R, const Ring<F>& S) {
    std::vector<Mono> leads;
    if (S.nvars() == R.nvars()) return leads;
    auto ord = block_order(R.nvars(), S.nvars());
    auto G = ideal_gb(S.K, ord, S.rels);
    for (int idx = R.nvars(); idx < S.nvars(); ++idx) {
        bool found = false;
        for (size_t k = 0; k < G.size() && !found; ++k) {
            const Mono& m = G.lm[k];
            if (m.e[idx] == 0) continue;
            bool pure = true;
            for (int i = 0; i < kMaxVars && pure; ++i)
                if (i != idx && m.e[i]) pure = false;
            if (pure) {
                leads.push_back(m);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return leads;
}
} // namespace detail

template <class F>
PlusCert<F> plus_witness_check(const Ring<F>& R, const Ring<F>& S,
                               const std::vector<Poly<F>>& I, const Poly<F>& f) {
    detail::check_extension_shape(R, S);
    PlusCert<F> cert;
    auto leads = detail::finiteness_leads(R, S);
    if (!leads) {
        cert.status = PlusCert<F>::Status::witness_not_finite;
        return cert;
    }
    cert.finiteness_leads = std::move(*leads);
    auto wit = ideal_member_witness(S, I, f);
    if (wit) {
        cert.status = PlusCert<F>::Status::member;
        cert.coeffs = std::move(wit);
    }
    return cert;
}

// --- compatible elements --------------------------------------------------------

struct CompatibleResult {
    bool compatible = false;
    uint32_t exponent = 0;
};

template <class F>
Poly<F> poly_rename_vars(const F& K, const MonoOrder& ord, const Poly<F>& p,
                         const std::vector<int>& image) {
    Poly<F> out;
    out.t.reserve(p.t.size());
    for (const auto& tm : p.t) {
        Mono m;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!tm.m.e[i]) continue;
            int j = i < (int)image.size() ? image[i] : i;
            m.e[j] = (uint16_t)(m.e[j] + tm.m.e[i]);
            d += tm.m.e[i];
        }
        m.deg = d;
        out.t.push_back({m, tm.c});
    }
    poly_normalize(K, ord, out);
    return out;
}

template <class F>
struct CompatibleTensor {
    Ring<F> tensor; // S (x)_R S on two copies of the witness variables
    Poly<F> diff;   // g (x) 1 - 1 (x) g
};

// Tensor construction alone, no module-finiteness check; the certificate
// verifier uses this to rebuild the ring without a basis computation.
template <class F>
CompatibleTensor<F> compatible_tensor_unchecked(const Ring<F>& R, const Ring<F>& S,
                                                const Poly<F>& g) {
    detail::check_extension_shape(R, S);
    int base_n = R.nvars();
    int s = S.nvars() - base_n;
    std::vector<std::string> copies;
    std::vector<std::string> taken;
    for (int i = 0; i < s; ++i) {
        auto name = fresh_var_name(S, S.vars[base_n + i], taken);
        taken.push_back(name);
        copies.push_back(name);
    }
    Ring<F> T = extend_ring(S, copies);
    auto ord = T.natural();
    std::vector<int> image(T.nvars());
    for (int i = 0; i < T.nvars(); ++i) image[i] = i;
    for (int i = 0; i < s; ++i) image[base_n + i] = S.nvars() + i;
    // second tensor factor: relations with witness variables renamed
    for (const auto& rel : S.rels) {
        if (!poly_uses_vars_from(rel, base_n)) continue;
        T.rels.push_back(poly_rename_vars(T.K, ord, rel, image));
    }
    auto diff = poly_sub(T.K, ord, poly_resort(T.K, ord, g), poly_rename_vars(T.K, ord, g, image));
    return {std::move(T), std::move(diff)};
}

template <class F>
CompatibleTensor<F> compatible_tensor(const Ring<F>& R, const Ring<F>& S, const Poly<F>& g) {
    detail::check_extension_shape(R, S);
    if (!detail::finiteness_leads(R, S))
        throw std::invalid_argument("witness ring is not module-finite over the base");
    return compatible_tensor_unchecked(R, S, g);
}

// g is compatible iff g (x) 1 - 1 (x) g is nilpotent in S (x)_R S.
template <class F>
CompatibleResult compatible_element(const Ring<F>& R, const Ring<F>& S, const Poly<F>& g) {
    auto ct = compatible_tensor(R, S, g);
    auto res = radical_member(ct.tensor, {}, ct.diff);
    return {res.member, res.exponent};
}

// --- admissibility harness -------------------------------------------------------

enum class ClosureOp { radical, frobenius, support, ratliff_rush, integral };

inline const char* closure_op_name(ClosureOp op) {
    switch (op) {
        case ClosureOp::radical: return "radical";
        case ClosureOp::frobenius: return "frobenius";
        case ClosureOp::support: return "support";
        case ClosureOp::ratliff_rush: return "ratliff_rush";
        default: return "integral";
    }
}

struct HarnessConfig {
    bool extensivity = true;
    bool monotonicity = true;
    bool presentation_independence = true;
    bool certificate_reverify = true;
};

// Ratliff-Rush is not order preserving (it is not an admissible closure), so
// its monotonicity check is off by default and the harness refuses to assert it.
inline HarnessConfig harness_default_config(ClosureOp op) {
    HarnessConfig c;
    if (op == ClosureOp::ratliff_rush) c.monotonicity = false;
    return c;
}

struct HarnessViolation {
    int instance = 0;
    std::string check;
    std::string detail;
};

struct HarnessReport {
    int instances = 0;
    std::vector<std::string> skipped; // checks disabled by configuration
    std::vector<HarnessViolation> violations;
};

namespace detail {

// Uniform membership decision for the harness: verdict plus a flag telling
// whether the produced witness re-verified by direct arithmetic.
template <class F>
struct HarnessDecision {
    Verdict verdict = Verdict::not_member;
    bool witness_ok = true;
};

template <class F>
std::vector<Poly<F>> ideal_of(const SubmoduleData<F>& S) {
    if (S.M.rank() != 1 || S.M.pres.cols != 0)
        throw std::invalid_argument("this closure takes rank-1 free data");
    std::vector<Poly<F>> I;
    for (const auto& g : S.N) I.push_back(g[0]);
    return I;
}

template <class F>
HarnessDecision<F> harness_decide(const Ring<F>& R, ClosureOp op, const SubmoduleData<F>& S,
                                  const SearchBounds& bounds) {
    HarnessDecision<F> d;
    switch (op) {
        case ClosureOp::radical: {
            auto cert = radical_closure_member_module(R, S);
            d.verdict = cert.verdict;
            break;
        }
        case ClosureOp::frobenius: {
            auto cert = frobenius_closure_member(R, S, bounds);
            d.verdict = cert.verdict;
            if (cert.verdict == Verdict::member) {
                auto ord = R.natural();
                auto Q = quotient_presentation(S);
                auto mq = frobenius_vec(R, Q.m, (uint32_t)cert.level);
                Vec<F> sum(mq.size());
                for (size_t j = 0; j < cert.span.size(); ++j)
                    for (size_t c = 0; c < sum.size(); ++c)
                        sum[c] = poly_add(R.K, ord, sum[c],
                                          poly_mul(R.K, ord, cert.coeffs[j], cert.span[j][c]));
                d.witness_ok = vec_eq(R.K, sum, vec_resort(R.K, ord, mq));
            }
            break;
        }
        case ClosureOp::support: {
            // fixed filter ideal: all ring variables
            std::vector<Poly<F>> J;
            for (int i = 0; i < R.nvars(); ++i) J.push_back(poly_var(R.K, i));
            auto cert = support_closure(R, S.M, S.N, J, bounds);
            bool in = submodule_member(R, S.M, cert.gens, S.m);
            d.verdict = in ? Verdict::member : Verdict::not_member;
            break;
        }
        case ClosureOp::ratliff_rush: {
            auto cert = ratliff_rush_member(R, ideal_of(S), S.m.at(0), bounds);
            d.verdict = cert.verdict;
            if (cert.verdict == Verdict::member) {
                auto ord = R.natural();
                for (size_t i = 0; i < cert.power_gens.size() && d.witness_ok; ++i) {
                    Poly<F> sum;
                    for (size_t j = 0; j < cert.target_gens.size(); ++j)
                        sum = poly_add(R.K, ord, sum,
                                       poly_mul(R.K, ord, cert.coeffs[i].gen_coeffs[j],
                                                cert.target_gens[j]));
                    for (size_t j = 0; j < R.rels.size(); ++j)
                        sum = poly_add(R.K, ord, sum,
                                       poly_mul(R.K, ord, cert.coeffs[i].rel_coeffs[j], R.rels[j]));
                    auto want = poly_mul(R.K, ord, S.m.at(0), cert.power_gens[i]);
                    d.witness_ok = poly_eq(R.K, sum, want);
                }
            }
            break;
        }
        case ClosureOp::integral: {
            auto cert = integral_closure_member(R, ideal_of(S), S.m.at(0), bounds);
            d.verdict = cert.verdict;
            if (cert.verdict == Verdict::member) {
                auto I = ideal_of(S);
                auto If = ideal_sum(I, {S.m.at(0)});
                auto lhs = ideal_power(R, If, (uint32_t)cert.degree + 1);
                auto rhs = ideal_product(R, I, ideal_power(R, If, (uint32_t)cert.degree));
                d.witness_ok = ideal_equal(R, lhs, rhs);
            }
            break;
        }
    }
    return d;
}

} // namespace detail

template <class F>
HarnessReport closure_harness(const Ring<F>& R, ClosureOp op,
                              const std::vector<SubmoduleData<F>>& corpus,
                              const SearchBounds& bounds = {},
                              const HarnessConfig* override_config = nullptr) {
    HarnessConfig cfg = override_config ? *override_config : harness_default_config(op);
    HarnessReport report;
    if (!cfg.extensivity) report.skipped.push_back("extensivity");
    if (!cfg.monotonicity) report.skipped.push_back("monotonicity");
    if (!cfg.presentation_independence) report.skipped.push_back("presentation_independence");
    if (!cfg.certificate_reverify) report.skipped.push_back("certificate_reverify");

    for (const auto& S : corpus) {
        int idx = report.instances++;
        auto blame = [&](const char* check, std::string detail) {
            report.violations.push_back({idx, check, std::move(detail)});
        };

        auto base = detail::harness_decide(R, op, S, bounds);
        if (cfg.certificate_reverify && base.verdict == Verdict::member && !base.witness_ok)
            blame("certificate_reverify", "member witness failed direct re-check");

        if (cfg.extensivity) {
            for (const auto& g : S.N) {
                auto q = S;
                q.m = g;
                if (detail::harness_decide(R, op, q, bounds).verdict != Verdict::member) {
                    blame("extensivity", "submodule generator not reported as member");
                    break;
                }
            }
        }

        if (cfg.monotonicity && base.verdict == Verdict::member) {
            auto bigger = S;
            Vec<F> extra(S.M.rank());
            extra[0] = poly_var(R.K, 0);
            bigger.N.push_back(std::move(extra));
            if (detail::harness_decide(R, op, bigger, bounds).verdict != Verdict::member)
                blame("monotonicity", "membership lost after enlarging the submodule");
        }

        if (cfg.presentation_independence) {
            auto q = quotient_presentation(S);
            SubmoduleData<F> alt{q.M, {}, q.m};
            bool applicable = true;
            if (op == ClosureOp::ratliff_rush || op == ClosureOp::integral)
                applicable = false; // ideal-only operations keep their presentation
            if (applicable &&
                detail::harness_decide(R, op, alt, bounds).verdict != base.verdict)
                blame("presentation_independence", "verdict changed across quotient_presentation");
        }
    }
    return report;
}

} // namespace cca

#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "cca/cech.hpp"
#include "cca/closures.hpp"
#include "cca/exactness.hpp"
#include "cca/io.hpp"
#include "cca/partition.hpp"

// Certificate JSON: {"query": ..., "verdict": ..., "witness": ...}. Builders
// recompute whatever coefficients the stored result lacks; verification then
// needs only polynomial arithmetic (sums, products, powers, minors), never a
// basis computation or a search.

namespace cca {

using Json = nlohmann::json;

// --- serialization primitives -------------------------------------------------

template <class F>
Json poly_list_json(const Ring<F>& R, const std::vector<Poly<F>>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(poly_to_string(R, p));
    return a;
}

template <class F>
Json vec_json(const Ring<F>& R, const Vec<F>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(poly_to_string(R, p));
    return a;
}

template <class F>
Json vec_list_json(const Ring<F>& R, const std::vector<Vec<F>>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vec_json(R, v));
    return a;
}

template <class F>
Json mat_json(const Ring<F>& R, const Mat<F>& A) {
    Json m;
    m["rows"] = A.rows;
    m["cols"] = A.cols;
    Json e = Json::array();
    for (const auto& p : A.a) e.push_back(poly_to_string(R, p));
    m["entries"] = std::move(e);
    return m;
}

template <class F>
Json witness_json(const Ring<F>& R, const MemberWitness<F>& w) {
    Json j;
    j["generator_coefficients"] = poly_list_json(R, w.gen_coeffs);
    j["relation_coefficients"] = poly_list_json(R, w.rel_coeffs);
    return j;
}

template <class F>
std::vector<Poly<F>> polys_from_json(const Ring<F>& R, const Json& a) {
    std::vector<Poly<F>> out;
    for (const auto& s : a) out.push_back(parse_poly(R, s.template get<std::string>()));
    return out;
}

template <class F>
Vec<F> vec_from_json(const Ring<F>& R, const Json& a) {
    return polys_from_json(R, a);
}

template <class F>
std::vector<Vec<F>> vecs_from_json(const Ring<F>& R, const Json& a) {
    std::vector<Vec<F>> out;
    for (const auto& v : a) out.push_back(vec_from_json(R, v));
    return out;
}

template <class F>
Mat<F> mat_from_json(const Ring<F>& R, const Json& m) {
    Mat<F> A(m.at("rows").get<int>(), m.at("cols").get<int>());
    const Json& e = m.at("entries");
    if ((int)e.size() != A.rows * A.cols)
        throw std::invalid_argument("matrix entry count disagrees with its shape");
    for (size_t i = 0; i < e.size(); ++i) A.a[i] = parse_poly(R, e[i].get<std::string>());
    return A;
}

template <class F>
MemberWitness<F> witness_from_json(const Ring<F>& R, const Json& j) {
    MemberWitness<F> w;
    w.gen_coeffs = polys_from_json(R, j.at("generator_coefficients"));
    w.rel_coeffs = polys_from_json(R, j.at("relation_coefficients"));
    return w;
}

// --- direct-arithmetic checks ---------------------------------------------------

template <class F>
bool check_witness_poly(const Ring<F>& R, const MemberWitness<F>& w,
                        const std::vector<Poly<F>>& gens, const Poly<F>& target) {
    if (w.gen_coeffs.size() != gens.size() || w.rel_coeffs.size() != R.rels.size()) return false;
    auto ord = R.natural();
    Poly<F> sum;
    for (size_t i = 0; i < gens.size(); ++i)
        sum = poly_add(R.K, ord, sum, poly_mul(R.K, ord, w.gen_coeffs[i], gens[i]));
    for (size_t j = 0; j < R.rels.size(); ++j)
        sum = poly_add(R.K, ord, sum, poly_mul(R.K, ord, w.rel_coeffs[j], R.rels[j]));
    return poly_eq(R.K, sum, poly_resort(R.K, ord, target));
}

template <class F>
bool check_combination_vec(const Ring<F>& R, const std::vector<Poly<F>>& coeffs,
                           const std::vector<Vec<F>>& span, const Vec<F>& target) {
    if (coeffs.size() != span.size()) return false;
    auto ord = R.natural();
    size_t b = target.size();
    Vec<F> acc(b);
    for (size_t j = 0; j < span.size(); ++j) {
        if (span[j].size() != b) return false;
        for (size_t i = 0; i < b; ++i)
            acc[i] = poly_add(R.K, ord, acc[i], poly_mul(R.K, ord, coeffs[j], span[j][i]));
    }
    for (size_t i = 0; i < b; ++i)
        if (!poly_eq(R.K, acc[i], poly_resort(R.K, ord, target[i]))) return false;
    return true;
}

template <class F>
bool poly_lists_equal(const Ring<F>& R, const std::vector<Poly<F>>& A,
                      const std::vector<Poly<F>>& B) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i) {
        auto a = poly_resort(R.K, R.natural(), A[i]);
        auto b = poly_resort(R.K, R.natural(), B[i]);
        if (!poly_eq(R.K, a, b)) return false;
    }
    return true;
}

template <class F>
Vec<F> mat_apply(const Ring<F>& R, const Mat<F>& A, const Vec<F>& v) {
    auto ord = R.natural();
    Vec<F> out(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            out[i] = poly_add(R.K, ord, out[i], poly_mul(R.K, ord, A.at(i, j), v[j]));
    return out;
}

struct VerifyResult {
    bool ok = false;
    std::string message;
};

// --- shared query fragments -----------------------------------------------------

template <class F>
Json submodule_query_json(const Ring<F>& R, const SubmoduleData<F>& S) {
    Json q;
    q["ring"] = ring_to_string(R);
    q["presentation"] = mat_json(R, S.M.pres);
    q["submodule"] = vec_list_json(R, S.N);
    q["element"] = vec_json(R, S.m);
    return q;
}

template <class F>
SubmoduleData<F> submodule_from_query(const Ring<F>& R, const Json& q) {
    SubmoduleData<F> S;
    S.M.pres = mat_from_json(R, q.at("presentation"));
    S.N = vecs_from_json(R, q.at("submodule"));
    S.m = vec_from_json(R, q.at("element"));
    return S;
}

// --- fitting chains (radical-module, forcing-surjective, phantom-radical) -------

template <class F>
Json fitting_json(const Ring<F>& R, const Mat<F>& D, const SurjectivityCertificate<F>& cert) {
    Json out;
    out["surjective"] = cert.surjective;
    if (!cert.surjective) {
        out["fail_k"] = cert.fail_k;
        out["fail_generator"] = poly_to_string(R, cert.fail_gen);
        return out;
    }
    auto ord = R.natural();
    Json steps = Json::array();
    for (const auto& st : cert.steps) {
        Json js;
        js["k"] = st.k;
        js["generators"] = poly_list_json(R, st.aug_gens);
        js["exponents"] = st.exponents;
        auto base = minors_or_zero(R, D, st.k);
        Json combos = Json::array();
        for (size_t i = 0; i < st.aug_gens.size(); ++i) {
            auto pow = poly_pow(R.K, ord, st.aug_gens[i], st.exponents[i]);
            combos.push_back(witness_json(R, *ideal_member_witness(R, base, pow)));
        }
        js["combinations"] = std::move(combos);
        steps.push_back(std::move(js));
    }
    out["steps"] = std::move(steps);
    return out;
}

template <class F>
VerifyResult fitting_verify(const Ring<F>& R, const Mat<F>& D, const Vec<F>& target,
                            const Json& w) {
    auto ord = R.natural();
    auto aug = mat_augment(D, target);
    const Json& steps = w.at("steps");
    if ((int)steps.size() != D.rows) return {false, "fitting chain must cover sizes 1..mu"};
    for (int k = 1; k <= D.rows; ++k) {
        const Json& st = steps.at(k - 1);
        if (st.at("k").get<int>() != k) return {false, "fitting steps out of order"};
        auto gens = polys_from_json(R, st.at("generators"));
        if (!poly_lists_equal(R, gens, minors_or_zero(R, aug, k)))
            return {false, "stored minors disagree with the query data at size " + std::to_string(k)};
        auto base = minors_or_zero(R, D, k);
        const Json& combos = st.at("combinations");
        const Json& exps = st.at("exponents");
        if (combos.size() != gens.size() || exps.size() != gens.size())
            return {false, "fitting step arity mismatch"};
        for (size_t i = 0; i < gens.size(); ++i) {
            auto pow = poly_pow(R.K, ord, gens[i], exps.at(i).get<uint32_t>());
            if (!check_witness_poly(R, witness_from_json(R, combos.at(i)), base, pow))
                return {false, "fitting combination fails at size " + std::to_string(k)};
        }
    }
    return {true, "fitting chain re-verified"};
}

// --- per-operation builders -----------------------------------------------------

template <class F>
Json radical_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f,
                         const RadicalCert& cert) {
    Json out;
    out["query"] = {{"op", "radical"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"element", poly_to_string(R, f)}};
    out["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == Verdict::member) {
        auto pow = poly_pow(R.K, R.natural(), f, cert.exponent);
        Json w;
        w["exponent"] = cert.exponent;
        w["combination"] = witness_json(R, *ideal_member_witness(R, I, pow));
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult radical_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    auto f = parse_poly(R, q.at("element").template get<std::string>());
    const Json& w = cert.at("witness");
    auto pow = poly_pow(R.K, R.natural(), f, w.at("exponent").get<uint32_t>());
    if (!check_witness_poly(R, witness_from_json(R, w.at("combination")), I, pow))
        return {false, "radical combination does not reproduce the power"};
    return {true, "radical witness re-verified"};
}

template <class F>
Json radical_module_certificate(const Ring<F>& R, const SubmoduleData<F>& S,
                                const RadicalModuleCert<F>& cert) {
    Json out;
    out["query"] = submodule_query_json(R, S);
    out["query"]["op"] = "radical-module";
    out["verdict"] = verdict_name(cert.verdict);
    auto Q = quotient_presentation(S);
    out["witness"] = Json{{"fitting", fitting_json(R, Q.M.pres, cert.fitting)}};
    return out;
}

template <class F>
VerifyResult radical_module_verify(const Ring<F>& R, const Json& cert) {
    auto S = submodule_from_query(R, cert.at("query"));
    auto Q = quotient_presentation(S);
    return fitting_verify(R, Q.M.pres, Q.m, cert.at("witness").at("fitting"));
}

template <class F>
Json frobenius_certificate(const Ring<F>& R, const SubmoduleData<F>& S,
                           const FrobeniusCert<F>& cert, const SearchBounds& bounds) {
    Json out;
    out["query"] = submodule_query_json(R, S);
    out["query"]["op"] = "frobenius";
    out["query"]["bounds"] = {{"e_max", bounds.e_max}};
    out["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == Verdict::member) {
        Json w;
        w["level"] = cert.level;
        w["q"] = cert.q;
        w["combination"] = poly_list_json(R, cert.coeffs);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult frobenius_verify(const Ring<F>& R, const Json& cert) {
    auto S = submodule_from_query(R, cert.at("query"));
    const Json& w = cert.at("witness");
    uint32_t e = w.at("level").get<uint32_t>();
    auto Q = quotient_presentation(S);
    auto [Mq, mq] = frobenius_module(R, Q.M, Q.m, e);
    if (frobenius_q(R, e) != w.at("q").get<uint32_t>())
        return {false, "stored q disagrees with the level"};
    auto span = submodule_span(R, Mq, {});
    if (!check_combination_vec(R, polys_from_json(R, w.at("combination")), span, mq))
        return {false, "Frobenius combination does not reproduce the bracketed power"};
    return {true, "Frobenius witness re-verified"};
}

template <class F>
Json ratliff_rush_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f,
                              const RatliffRushCert<F>& cert, const SearchBounds& bounds) {
    Json out;
    out["query"] = {{"op", "ratliff-rush"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"element", poly_to_string(R, f)},
                    {"bounds", {{"n_max", bounds.n_max}}}};
    out["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == Verdict::member) {
        Json w;
        w["level"] = cert.level;
        w["power_generators"] = poly_list_json(R, cert.power_gens);
        w["target_generators"] = poly_list_json(R, cert.target_gens);
        Json combos = Json::array();
        for (const auto& cw : cert.coeffs) combos.push_back(witness_json(R, cw));
        w["combinations"] = std::move(combos);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult ratliff_rush_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    auto f = parse_poly(R, q.at("element").template get<std::string>());
    const Json& w = cert.at("witness");
    uint32_t n = w.at("level").get<uint32_t>();
    auto In = ideal_power(R, I, n);
    auto In1 = ideal_power(R, I, n + 1);
    if (!poly_lists_equal(R, In, polys_from_json(R, w.at("power_generators"))) ||
        !poly_lists_equal(R, In1, polys_from_json(R, w.at("target_generators"))))
        return {false, "stored power generators disagree with the ideal"};
    const Json& combos = w.at("combinations");
    if (combos.size() != In.size()) return {false, "one combination per power generator required"};
    auto ord = R.natural();
    for (size_t i = 0; i < In.size(); ++i) {
        auto target = poly_mul(R.K, ord, f, In[i]);
        if (!check_witness_poly(R, witness_from_json(R, combos.at(i)), In1, target))
            return {false, "Ratliff-Rush combination fails at generator " + std::to_string(i)};
    }
    return {true, "Ratliff-Rush witness re-verified"};
}

template <class F>
Json ratliff_rush_closure_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                      const RatliffRushClosure<F>& cl, const SearchBounds& bounds) {
    Json out;
    out["query"] = {{"op", "ratliff-rush"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"bounds", {{"n_max", bounds.n_max}}}};
    out["verdict"] = "computed";
    uint32_t n = cl.stabilized ? (uint32_t)cl.level + 1 : (uint32_t)cl.level;
    auto In = ideal_power(R, I, n);
    auto In1 = ideal_power(R, I, n + 1);
    Json w;
    w["level"] = cl.level;
    w["stabilized"] = cl.stabilized;
    w["colon_level"] = n;
    w["generators"] = poly_list_json(R, cl.gens);
    Json combos = Json::array();
    auto ord = R.natural();
    for (const auto& g : cl.gens) {
        Json per = Json::array();
        for (const auto& a : In)
            per.push_back(witness_json(R, *ideal_member_witness(R, In1, poly_mul(R.K, ord, g, a))));
        combos.push_back(std::move(per));
    }
    w["combinations"] = std::move(combos);
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult ratliff_rush_closure_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    const Json& w = cert.at("witness");
    uint32_t n = w.at("colon_level").get<uint32_t>();
    auto In = ideal_power(R, I, n);
    auto In1 = ideal_power(R, I, n + 1);
    auto gens = polys_from_json(R, w.at("generators"));
    const Json& combos = w.at("combinations");
    if (combos.size() != gens.size()) return {false, "one combination row per generator required"};
    auto ord = R.natural();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (combos.at(i).size() != In.size())
            return {false, "combination row arity disagrees with the power"};
        for (size_t j = 0; j < In.size(); ++j) {
            auto target = poly_mul(R.K, ord, gens[i], In[j]);
            if (!check_witness_poly(R, witness_from_json(R, combos.at(i).at(j)), In1, target))
                return {false, "closure generator " + std::to_string(i) + " fails its colon witness"};
        }
    }
    return {true, "Ratliff-Rush closure generators re-verified"};
}

template <class F>
Json delta_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f,
                       const std::vector<std::vector<Poly<F>>>& delta, const DeltaCert<F>& cert,
                       const SearchBounds& bounds) {
    Json out;
    Json dl = Json::array();
    for (const auto& d : delta) dl.push_back(poly_list_json(R, d));
    out["query"] = {{"op", "delta"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"element", poly_to_string(R, f)},
                    {"delta", std::move(dl)},
                    {"bounds", {{"t_max", bounds.t_max}}}};
    out["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == Verdict::member) {
        Json w;
        w["factors"] = cert.factors;
        w["witness_ideal"] = poly_list_json(R, cert.witness_ideal);
        Json combos = Json::array();
        for (const auto& cw : cert.coeffs) combos.push_back(witness_json(R, cw));
        w["combinations"] = std::move(combos);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult delta_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    auto f = parse_poly(R, q.at("element").template get<std::string>());
    std::vector<std::vector<Poly<F>>> delta;
    for (const auto& d : q.at("delta")) delta.push_back(polys_from_json(R, d));
    const Json& w = cert.at("witness");
    std::vector<Poly<F>> a = {poly_const(R.K, R.K.one())};
    for (const auto& idx : w.at("factors")) {
        int i = idx.get<int>();
        if (i < 0 || i >= (int)delta.size()) return {false, "factor index out of range"};
        a = ideal_product(R, a, delta[i]);
    }
    if (!poly_lists_equal(R, a, polys_from_json(R, w.at("witness_ideal"))))
        return {false, "stored witness ideal disagrees with the factor product"};
    auto Ia = ideal_product(R, I, a);
    const Json& combos = w.at("combinations");
    if (combos.size() != a.size()) return {false, "one combination per witness generator required"};
    auto ord = R.natural();
    for (size_t j = 0; j < a.size(); ++j) {
        auto target = poly_mul(R.K, ord, f, a[j]);
        if (!check_witness_poly(R, witness_from_json(R, combos.at(j)), Ia, target))
            return {false, "Delta combination fails at generator " + std::to_string(j)};
    }
    return {true, "Delta witness re-verified"};
}

template <class F>
Json integral_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f,
                          const IntegralCert<F>& cert, const SearchBounds& bounds) {
    Json out;
    out["query"] = {{"op", "integral"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"element", poly_to_string(R, f)},
                    {"bounds", {{"r_max", bounds.r_max}}}};
    out["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == Verdict::member) {
        auto If = ideal_sum(I, {f});
        auto lhs = ideal_power(R, If, (uint32_t)cert.degree + 1);
        auto rhs = ideal_product(R, I, ideal_power(R, If, (uint32_t)cert.degree));
        Json w;
        w["degree"] = cert.degree;
        Json combos = Json::array();
        for (const auto& g : lhs) combos.push_back(witness_json(R, *ideal_member_witness(R, rhs, g)));
        w["combinations"] = std::move(combos);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult integral_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    auto f = parse_poly(R, q.at("element").template get<std::string>());
    const Json& w = cert.at("witness");
    uint32_t r = w.at("degree").get<uint32_t>();
    auto If = ideal_sum(I, {f});
    auto lhs = ideal_power(R, If, r + 1);
    auto rhs = ideal_product(R, I, ideal_power(R, If, r));
    const Json& combos = w.at("combinations");
    if (combos.size() != lhs.size()) return {false, "one combination per power generator required"};
    for (size_t i = 0; i < lhs.size(); ++i)
        if (!check_witness_poly(R, witness_from_json(R, combos.at(i)), rhs, lhs[i]))
            return {false, "reduction identity fails at generator " + std::to_string(i)};
    return {true, "reduction identity re-verified (reverse inclusion holds term by term)"};
}

template <class F>
Json support_certificate(const Ring<F>& R, const FPModule<F>& M, const std::vector<Vec<F>>& N,
                         const std::vector<Poly<F>>& J, const SupportCert<F>& cert,
                         const SearchBounds& bounds) {
    Json out;
    out["query"] = {{"op", "support"},
                    {"ring", ring_to_string(R)},
                    {"presentation", mat_json(R, M.pres)},
                    {"submodule", vec_list_json(R, N)},
                    {"support_ideal", poly_list_json(R, J)},
                    {"bounds", {{"sat_max", bounds.sat_cutoff}}}};
    out["verdict"] = "computed";
    auto span = submodule_span(R, M, N);
    auto Je = ideal_power(R, J, (uint32_t)cert.exponent);
    auto ord = R.natural();
    Json w;
    w["exponent"] = cert.exponent;
    w["generators"] = vec_list_json(R, cert.gens);
    Json scalings = Json::array();
    for (const auto& v : cert.gens) {
        Json per = Json::array();
        for (const auto& s : Je) {
            Vec<F> scaled(v.size());
            for (size_t i = 0; i < v.size(); ++i) scaled[i] = poly_mul(R.K, ord, s, v[i]);
            auto co = submodule_witness(R.K, ord, M.rank(), span, scaled);
            per.push_back(poly_list_json(R, *co));
        }
        scalings.push_back(std::move(per));
    }
    w["scalings"] = std::move(scalings);
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult support_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    FPModule<F> M{mat_from_json(R, q.at("presentation"))};
    auto N = vecs_from_json(R, q.at("submodule"));
    auto J = polys_from_json(R, q.at("support_ideal"));
    const Json& w = cert.at("witness");
    auto gens = vecs_from_json(R, w.at("generators"));
    auto span = submodule_span(R, M, N);
    auto Je = ideal_power(R, J, w.at("exponent").get<uint32_t>());
    const Json& scalings = w.at("scalings");
    if (scalings.size() != gens.size()) return {false, "one scaling row per generator required"};
    auto ord = R.natural();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (scalings.at(i).size() != Je.size())
            return {false, "scaling row arity disagrees with the saturation power"};
        for (size_t t = 0; t < Je.size(); ++t) {
            Vec<F> scaled(gens[i].size());
            for (size_t c = 0; c < gens[i].size(); ++c)
                scaled[c] = poly_mul(R.K, ord, Je[t], gens[i][c]);
            if (!check_combination_vec(R, polys_from_json(R, scalings.at(i).at(t)), span, scaled))
                return {false, "saturation witness fails at generator " + std::to_string(i)};
        }
    }
    return {true, "support closure generators re-verified"};
}

template <class F>
Json symbolic_certificate(const Ring<F>& R, const std::vector<Poly<F>>& P, uint32_t n,
                          const Poly<F>& s, const SymbolicCert<F>& cert,
                          const SearchBounds& bounds) {
    Json out;
    out["query"] = {{"op", "symbolic"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, P)},
                    {"n", n},
                    {"s", poly_to_string(R, s)},
                    {"bounds", {{"sat_max", bounds.sat_cutoff}}}};
    out["verdict"] = "computed";
    auto Pn = ideal_power(R, P, n);
    auto ord = R.natural();
    Json w;
    w["exponent"] = cert.exponent;
    w["generators"] = poly_list_json(R, cert.gens);
    auto spow = poly_pow(R.K, ord, s, (uint32_t)cert.exponent);
    Json combos = Json::array();
    for (const auto& g : cert.gens) {
        auto target = poly_mul(R.K, ord, spow, g);
        combos.push_back(witness_json(R, *ideal_member_witness(R, Pn, target)));
    }
    w["combinations"] = std::move(combos);
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult symbolic_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto P = polys_from_json(R, q.at("ideal"));
    uint32_t n = q.at("n").get<uint32_t>();
    auto s = parse_poly(R, q.at("s").template get<std::string>());
    const Json& w = cert.at("witness");
    auto gens = polys_from_json(R, w.at("generators"));
    auto Pn = ideal_power(R, P, n);
    auto ord = R.natural();
    auto spow = poly_pow(R.K, ord, s, w.at("exponent").get<uint32_t>());
    const Json& combos = w.at("combinations");
    if (combos.size() != gens.size()) return {false, "one combination per generator required"};
    for (size_t i = 0; i < gens.size(); ++i) {
        auto target = poly_mul(R.K, ord, spow, gens[i]);
        if (!check_witness_poly(R, witness_from_json(R, combos.at(i)), Pn, target))
            return {false, "saturation witness fails at generator " + std::to_string(i)};
    }
    return {true, "symbolic power generators re-verified"};
}

template <class F>
Json plus_certificate(const Ring<F>& R, const Ring<F>& S, const std::vector<Poly<F>>& I,
                      const Poly<F>& f, const PlusCert<F>& cert) {
    Json out;
    out["query"] = {{"op", "plus-witness"},
                    {"ring", ring_to_string(R)},
                    {"witness_ring", ring_to_string(S)},
                    {"ideal", poly_list_json(S, I)},
                    {"element", poly_to_string(S, f)}};
    switch (cert.status) {
        case PlusCert<F>::Status::member: out["verdict"] = "member"; break;
        case PlusCert<F>::Status::not_member: out["verdict"] = "not_member"; break;
        case PlusCert<F>::Status::witness_not_finite: out["verdict"] = "witness_not_finite"; break;
    }
    if (cert.status != PlusCert<F>::Status::witness_not_finite) {
        Json leads = Json::array();
        for (const auto& m : cert.finiteness_leads) leads.push_back(mono_to_string(S, m));
        Json w;
        w["finiteness_leads"] = std::move(leads);
        if (cert.coeffs) w["combination"] = witness_json(S, *cert.coeffs);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult plus_verify(const Ring<F>&, const Json& cert) {
    const Json& q = cert.at("query");
    auto Sv = parse_ring(q.at("witness_ring").get<std::string>());
    const auto& S = std::get<Ring<F>>(Sv);
    auto I = polys_from_json(S, q.at("ideal"));
    auto f = parse_poly(S, q.at("element").template get<std::string>());
    auto w = witness_from_json(S, cert.at("witness").at("combination"));
    if (!check_witness_poly(S, w, I, f))
        return {false, "extension combination does not reproduce the element"};
    return {true, "plus-closure witness re-verified in the extension"};
}

template <class F>
Json compatible_certificate(const Ring<F>& R, const Ring<F>& S, const Poly<F>& g,
                            const CompatibleResult& cert) {
    Json out;
    out["query"] = {{"op", "compatible"},
                    {"ring", ring_to_string(R)},
                    {"witness_ring", ring_to_string(S)},
                    {"element", poly_to_string(S, g)}};
    out["verdict"] = cert.compatible ? "true" : "false";
    if (cert.compatible) {
        auto ct = compatible_tensor_unchecked(R, S, g);
        auto pow = poly_pow(ct.tensor.K, ct.tensor.natural(), ct.diff, cert.exponent);
        Json w;
        w["exponent"] = cert.exponent;
        w["tensor_ring"] = ring_to_string(ct.tensor);
        w["difference"] = poly_to_string(ct.tensor, ct.diff);
        w["combination"] = witness_json(ct.tensor, *ideal_member_witness(ct.tensor, {}, pow));
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult compatible_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto Sv = parse_ring(q.at("witness_ring").get<std::string>());
    const auto& S = std::get<Ring<F>>(Sv);
    auto g = parse_poly(S, q.at("element").template get<std::string>());
    auto ct = compatible_tensor_unchecked(R, S, g);
    const Json& w = cert.at("witness");
    if (w.at("tensor_ring").get<std::string>() != ring_to_string(ct.tensor))
        return {false, "stored tensor ring disagrees with the reconstruction"};
    if (w.at("difference").get<std::string>() != poly_to_string(ct.tensor, ct.diff))
        return {false, "stored difference disagrees with the reconstruction"};
    auto pow = poly_pow(ct.tensor.K, ct.tensor.natural(), ct.diff, w.at("exponent").get<uint32_t>());
    if (!check_witness_poly(ct.tensor, witness_from_json(ct.tensor, w.at("combination")), {}, pow))
        return {false, "nilpotency combination fails"};
    return {true, "compatibility witness re-verified"};
}

template <class F>
Json forcing_section_certificate(const Ring<F>& R, const SubmoduleData<F>& S,
                                 const std::optional<Vec<F>>& section) {
    Json out;
    out["query"] = submodule_query_json(R, S);
    out["query"]["op"] = "forcing-section";
    out["verdict"] = section ? "true" : "false";
    if (section) {
        auto Q = quotient_presentation(S);
        auto ord = R.natural();
        Json w;
        w["section"] = vec_json(R, *section);
        Json rows = Json::array();
        for (int i = 0; i < Q.M.pres.rows; ++i) {
            Poly<F> coord;
            for (int j = 0; j < Q.M.pres.cols; ++j)
                coord = poly_add(R.K, ord, coord,
                                 poly_mul(R.K, ord, Q.M.pres.at(i, j), (*section)[j]));
            coord = poly_sub(R.K, ord, coord, poly_resort(R.K, ord, Q.m[i]));
            rows.push_back(witness_json(R, *ideal_member_witness(R, {}, coord)));
        }
        w["row_combinations"] = std::move(rows);
        out["witness"] = std::move(w);
    }
    return out;
}

template <class F>
VerifyResult forcing_section_verify(const Ring<F>& R, const Json& cert) {
    auto S = submodule_from_query(R, cert.at("query"));
    auto Q = quotient_presentation(S);
    const Json& w = cert.at("witness");
    auto sec = vec_from_json(R, w.at("section"));
    if ((int)sec.size() != Q.M.pres.cols) return {false, "section length disagrees with the data"};
    const Json& rows = w.at("row_combinations");
    if ((int)rows.size() != Q.M.pres.rows) return {false, "one combination per row required"};
    auto ord = R.natural();
    for (int i = 0; i < Q.M.pres.rows; ++i) {
        Poly<F> coord;
        for (int j = 0; j < Q.M.pres.cols; ++j)
            coord = poly_add(R.K, ord, coord, poly_mul(R.K, ord, Q.M.pres.at(i, j), sec[j]));
        coord = poly_sub(R.K, ord, coord, poly_resort(R.K, ord, Q.m[i]));
        if (!check_witness_poly(R, witness_from_json(R, rows.at(i)), {}, coord))
            return {false, "section residual at row " + std::to_string(i) + " is not a relation combination"};
    }
    return {true, "forcing section re-verified"};
}

template <class F>
Json forcing_surjective_certificate(const Ring<F>& R, const SubmoduleData<F>& S,
                                    const SurjectivityCertificate<F>& cert) {
    Json out;
    out["query"] = submodule_query_json(R, S);
    out["query"]["op"] = "forcing-surjective";
    out["verdict"] = cert.surjective ? "true" : "false";
    auto Q = quotient_presentation(S);
    out["witness"] = Json{{"fitting", fitting_json(R, Q.M.pres, cert)}};
    return out;
}

template <class F>
VerifyResult forcing_surjective_verify(const Ring<F>& R, const Json& cert) {
    auto S = submodule_from_query(R, cert.at("query"));
    auto Q = quotient_presentation(S);
    return fitting_verify(R, Q.M.pres, Q.m, cert.at("witness").at("fitting"));
}

template <class F>
Json pair_certificate(const Ring<F>& R, const Mat<F>& alpha, const Mat<F>& beta,
                      const PairCert<F>& cert) {
    Json out;
    out["query"] = {{"op", "exact-surjective"},
                    {"ring", ring_to_string(R)},
                    {"alpha", mat_json(R, alpha)},
                    {"beta", mat_json(R, beta)}};
    out["verdict"] = cert.exact ? "true" : "false";
    Json w;
    w["minor_sum"] = poly_list_json(R, cert.minor_sum);
    if (cert.unit_coeffs) w["unit_combination"] = witness_json(R, *cert.unit_coeffs);
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult pair_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto alpha = mat_from_json(R, q.at("alpha"));
    auto beta = mat_from_json(R, q.at("beta"));
    auto sum = pair_minor_sum(R, alpha, beta);
    const Json& w = cert.at("witness");
    if (!poly_lists_equal(R, sum, polys_from_json(R, w.at("minor_sum"))))
        return {false, "stored minor sum disagrees with the matrices"};
    auto one = poly_const(R.K, R.K.one());
    if (!check_witness_poly(R, witness_from_json(R, w.at("unit_combination")), sum, one))
        return {false, "unit combination fails"};
    return {true, "minor-product witness re-verified"};
}

template <class F>
Json complex_certificate(const Ring<F>& R, const FreeComplex<F>& C, const ComplexCert<F>& cert) {
    Json out;
    Json mats = Json::array();
    for (const auto& A : C.mats) mats.push_back(mat_json(R, A));
    out["query"] = {{"op", "exact-surjective"}, {"ring", ring_to_string(R)}, {"complex", std::move(mats)}};
    out["verdict"] = cert.exact ? "true" : "false";
    Json w;
    w["dims"] = cert.dims;
    w["expected_ranks"] = cert.expected_ranks;
    if (cert.exact) {
        auto one = poly_const(R.K, R.K.one());
        Json combos = Json::array();
        for (size_t k = 0; k < C.mats.size(); ++k) {
            auto J = minors_or_zero(R, C.mats[k], cert.expected_ranks[k]);
            combos.push_back(witness_json(R, *ideal_member_witness(R, J, one)));
        }
        w["unit_combinations"] = std::move(combos);
    } else {
        w["fail_spot"] = cert.fail_spot;
    }
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult complex_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    std::vector<Mat<F>> mats;
    for (const auto& m : q.at("complex")) mats.push_back(mat_from_json(R, m));
    const Json& w = cert.at("witness");
    auto dims = w.at("dims").get<std::vector<int>>();
    auto ranks = w.at("expected_ranks").get<std::vector<int>>();
    if (dims.size() != mats.size() + 1 || ranks.size() != dims.size())
        return {false, "dimension bookkeeping arity mismatch"};
    int prev = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
        int d = k == 0 ? mats[0].rows : mats[k - 1].cols;
        if (dims[k] != d) return {false, "stored dims disagree with the matrices"};
        if (ranks[k] != d - prev) return {false, "stored ranks break the recursion"};
        prev = ranks[k];
    }
    const Json& combos = w.at("unit_combinations");
    if (combos.size() != mats.size()) return {false, "one unit combination per map required"};
    auto one = poly_const(R.K, R.K.one());
    for (size_t k = 0; k < mats.size(); ++k) {
        auto J = minors_or_zero(R, mats[k], ranks[k]);
        if (!check_witness_poly(R, witness_from_json(R, combos.at(k)), J, one))
            return {false, "unit combination fails at spot " + std::to_string(k)};
    }
    return {true, "rank-criterion witness re-verified"};
}

template <class F>
Json phantom_certificate(const Ring<F>& R, const Mat<F>& alpha, const Mat<F>& beta,
                         PhantomClosure cl, const PhantomCert<F>& cert, const SearchBounds& bounds,
                         const Mat<F>* target_pres = nullptr) {
    Json out;
    out["query"] = {{"op", "phantom"},
                    {"ring", ring_to_string(R)},
                    {"alpha", mat_json(R, alpha)},
                    {"beta", mat_json(R, beta)},
                    {"closure", phantom_closure_name(cl)},
                    {"bounds", {{"e_max", bounds.e_max}}}};
    if (target_pres) out["query"]["target_presentation"] = mat_json(R, *target_pres);
    out["verdict"] = verdict_name(cert.verdict);
    auto ord = R.natural();
    Json w;
    w["kernel"] = vec_list_json(R, cert.kernel);
    if (cert.level >= 0) w["level"] = cert.level;

    // each kernel generator maps to zero in the target
    std::vector<Vec<F>> span_t = target_pres ? mat_cols(*target_pres) : std::vector<Vec<F>>{};
    for (auto& c : rel_columns(R, beta.rows)) span_t.push_back(std::move(c));
    Json kernel_combos = Json::array();
    for (const auto& v : cert.kernel) {
        auto bv = mat_apply(R, beta, v);
        if (span_t.empty()) {
            kernel_combos.push_back(Json::array());
        } else {
            auto co = submodule_witness(R.K, ord, beta.rows, span_t, bv);
            kernel_combos.push_back(poly_list_json(R, *co));
        }
    }
    w["kernel_combinations"] = std::move(kernel_combos);

    auto M = free_module<F>(beta.cols);
    auto span = mat_cols(alpha);
    Json per = Json::array();
    for (size_t i = 0; i < cert.kernel.size(); ++i) {
        Json g;
        g["verdict"] = verdict_name(cert.per_gen[i]);
        if (cert.per_gen[i] == Verdict::member) {
            const Vec<F>& v = cert.kernel[i];
            switch (cl) {
                case PhantomClosure::module: {
                    auto full = submodule_span(R, M, span);
                    auto co = submodule_witness(R.K, ord, beta.cols, full, v);
                    g["combination"] = poly_list_json(R, *co);
                    break;
                }
                case PhantomClosure::radical: {
                    auto rc = radical_closure_member_module(R, SubmoduleData<F>{M, span, v});
                    g["fitting"] = fitting_json(R, alpha, rc.fitting);
                    break;
                }
                case PhantomClosure::frobenius: {
                    auto fc = frobenius_closure_member(R, SubmoduleData<F>{M, span, v}, bounds);
                    g["level"] = fc.level;
                    g["q"] = fc.q;
                    g["combination"] = poly_list_json(R, fc.coeffs);
                    break;
                }
            }
        }
        per.push_back(std::move(g));
    }
    w["per_generator"] = std::move(per);
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult phantom_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto alpha = mat_from_json(R, q.at("alpha"));
    auto beta = mat_from_json(R, q.at("beta"));
    std::string cl = q.at("closure").get<std::string>();
    const Json& w = cert.at("witness");
    auto kernel = vecs_from_json(R, w.at("kernel"));
    auto ord = R.natural();

    std::vector<Vec<F>> span_t;
    if (q.contains("target_presentation"))
        span_t = mat_cols(mat_from_json(R, q.at("target_presentation")));
    for (auto& c : rel_columns(R, beta.rows)) span_t.push_back(std::move(c));
    const Json& kcombos = w.at("kernel_combinations");
    if (kcombos.size() != kernel.size()) return {false, "one kernel combination per generator required"};
    for (size_t i = 0; i < kernel.size(); ++i) {
        auto bv = mat_apply(R, beta, kernel[i]);
        if (!check_combination_vec(R, polys_from_json(R, kcombos.at(i)), span_t, bv))
            return {false, "kernel generator " + std::to_string(i) + " does not map to zero"};
    }

    auto M = free_module<F>(beta.cols);
    auto span = mat_cols(alpha);
    const Json& per = w.at("per_generator");
    if (per.size() != kernel.size()) return {false, "one closure witness per generator required"};
    for (size_t i = 0; i < kernel.size(); ++i) {
        const Json& g = per.at(i);
        if (g.at("verdict").get<std::string>() != "member")
            return {false, "member verdict requires member witnesses for every generator"};
        const Vec<F>& v = kernel[i];
        if (cl == "identity") {
            auto full = submodule_span(R, M, span);
            if (!check_combination_vec(R, polys_from_json(R, g.at("combination")), full, v))
                return {false, "image combination fails at generator " + std::to_string(i)};
        } else if (cl == "radical") {
            auto res = fitting_verify(R, alpha, v, g.at("fitting"));
            if (!res.ok) return res;
        } else if (cl == "frobenius") {
            uint32_t e = g.at("level").get<uint32_t>();
            auto [Mq, vq] = frobenius_module(R, FPModule<F>{alpha}, v, e);
            auto full = submodule_span(R, Mq, {});
            if (!check_combination_vec(R, polys_from_json(R, g.at("combination")), full, vq))
                return {false, "Frobenius combination fails at generator " + std::to_string(i)};
        } else {
            return {false, "unknown phantom closure " + cl};
        }
    }
    return {true, "phantom witnesses re-verified"};
}

template <class F>
Json partition_certificate(const Ring<F>& R, const std::vector<Poly<F>>& I, const Poly<F>& f,
                           const RadicalPartition<F>& part) {
    Json out;
    out["query"] = {{"op", "partition"},
                    {"ring", ring_to_string(R)},
                    {"ideal", poly_list_json(R, I)},
                    {"element", poly_to_string(R, f)}};
    out["verdict"] = "member";
    Json pieces = Json::array();
    for (size_t k = 0; k < part.pieces.size(); ++k) {
        const auto& p = part.pieces[k];
        const auto& c = part.certs[k];
        Json pj;
        pj["cut"] = poly_list_json(R, p.cut);
        pj["multiplier"] = poly_to_string(R, p.multiplier);
        pj["vanishes"] = c.vanishes;
        pj["exponent"] = c.exponent;
        pj["combination"] = witness_json(R, c.coefficients);
        pieces.push_back(std::move(pj));
    }
    Json w;
    w["pieces"] = std::move(pieces);
    w["notes"] = part.notes;
    out["witness"] = std::move(w);
    return out;
}

template <class F>
VerifyResult partition_verify(const Ring<F>& R, const Json& cert) {
    const Json& q = cert.at("query");
    auto I = polys_from_json(R, q.at("ideal"));
    auto f = parse_poly(R, q.at("element").template get<std::string>());
    auto ord = R.natural();
    const Json& pieces = cert.at("witness").at("pieces");
    if (pieces.empty()) return {false, "partition must keep at least one piece"};
    for (size_t k = 0; k < pieces.size(); ++k) {
        const Json& pj = pieces.at(k);
        auto cut = polys_from_json(R, pj.at("cut"));
        auto mult = parse_poly(R, pj.at("multiplier").template get<std::string>());
        bool vanishes = pj.at("vanishes").get<bool>();
        uint32_t e = pj.at("exponent").get<uint32_t>();
        auto basis = vanishes ? I : ideal_sum(I, cut);
        Poly<F> target = vanishes
                             ? poly_pow(R.K, ord, f, e)
                             : poly_mul(R.K, ord, poly_pow(R.K, ord, mult, e), f);
        if (!check_witness_poly(R, witness_from_json(R, pj.at("combination")), basis, target))
            return {false, "piece " + std::to_string(k) + " combination fails"};
    }
    return {true, "partition certificates re-verified"};
}

// --- cech -----------------------------------------------------------------------

namespace detail {

template <class F>
typename F::Elem scalar_from_json(const F& K, const Json& j) {
    if (j.is_number_integer()) return K.from_int((long)j.get<long long>());
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return K.from_digits(s);
    auto num = K.from_digits(s.substr(0, slash));
    auto den = K.from_digits(s.substr(slash + 1));
    return K.mul(num, K.inv(den));
}

template <class F>
ScalarMat<F> scalar_mat_from_json(const F& K, int rows, int cols, const Json& flat) {
    ScalarMat<F> m(K, rows, cols);
    if ((int)flat.size() != rows * cols)
        throw std::invalid_argument("differential entry count disagrees with the dims");
    for (size_t i = 0; i < flat.size(); ++i) m.a[i] = scalar_from_json(K, flat[i]);
    return m;
}

template <class F>
std::vector<int> cech_dims_from_json(const F& K, const Json& in) {
    auto dims = in.at("dims").get<std::vector<int>>();
    if (in.contains("differentials")) {
        const Json& ds = in.at("differentials");
        std::vector<ScalarMat<F>> diffs;
        for (size_t k = 0; k < ds.size(); ++k)
            diffs.push_back(scalar_mat_from_json(K, dims.at(k + 1), dims.at(k), ds.at(k)));
        return cohomology_dims(make_cech(K, dims, std::move(diffs)));
    }
    const Json& fs = in.at("faces");
    FaceData<F> F_{K, {}};
    for (size_t k = 0; k < fs.size(); ++k) {
        std::vector<ScalarMat<F>> level;
        for (const auto& face : fs.at(k))
            level.push_back(scalar_mat_from_json(K, dims.at(k + 1), dims.at(k), face));
        F_.faces.push_back(std::move(level));
    }
    return cohomology_dims(from_faces(F_));
}

inline std::vector<int> cech_dims(const Json& in) {
    std::string field = in.at("field").get<std::string>();
    if (field == "Q") return cech_dims_from_json(Rationals{}, in);
    if (field.size() > 3 && field.substr(0, 2) == "F(" && field.back() == ')')
        return cech_dims_from_json(PrimeField(std::stoull(field.substr(2, field.size() - 3))), in);
    throw std::invalid_argument("field must be Q or F(p)");
}

} // namespace detail

inline Json cech_certificate(const Json& input) {
    auto h = detail::cech_dims(input);
    Json out;
    out["query"] = {{"op", "cech"}, {"input", input}};
    out["verdict"] = "computed";
    out["witness"] = {{"dims", input.at("dims")}, {"cohomology", h}};
    return out;
}

inline VerifyResult cech_verify(const Json& cert) {
    auto h = detail::cech_dims(cert.at("query").at("input"));
    if (cert.at("witness").at("cohomology").get<std::vector<int>>() != h)
        return {false, "stored cohomology dims disagree with the recomputation"};
    return {true, "cohomology dims re-verified"};
}

// --- top-level dispatch ---------------------------------------------------------

template <class F>
VerifyResult verify_typed(const Ring<F>& R, const std::string& op, const Json& cert) {
    if (op == "radical") return radical_verify(R, cert);
    if (op == "radical-module") return radical_module_verify(R, cert);
    if (op == "frobenius") return frobenius_verify(R, cert);
    if (op == "ratliff-rush") {
        if (cert.at("query").contains("element")) return ratliff_rush_verify(R, cert);
        return ratliff_rush_closure_verify(R, cert);
    }
    if (op == "delta") return delta_verify(R, cert);
    if (op == "integral") return integral_verify(R, cert);
    if (op == "support") return support_verify(R, cert);
    if (op == "symbolic") return symbolic_verify(R, cert);
    if (op == "plus-witness") return plus_verify(R, cert);
    if (op == "compatible") return compatible_verify(R, cert);
    if (op == "forcing-section") return forcing_section_verify(R, cert);
    if (op == "forcing-surjective") return forcing_surjective_verify(R, cert);
    if (op == "exact-surjective") {
        if (cert.at("query").contains("complex")) return complex_verify(R, cert);
        return pair_verify(R, cert);
    }
    if (op == "phantom") return phantom_verify(R, cert);
    if (op == "partition") return partition_verify(R, cert);
    return {false, "unknown operation " + op};
}

inline VerifyResult verify_certificate(const Json& cert) {
    try {
        const Json& q = cert.at("query");
        std::string op = q.at("op").get<std::string>();
        std::string verdict = cert.at("verdict").get<std::string>();
        if (op == "cech") return cech_verify(cert);
        if (verdict != "member" && verdict != "true" && verdict != "computed")
            return {true, "no finite witness to check for verdict " + verdict};
        auto Rv = parse_ring(q.at("ring").get<std::string>());
        return std::visit([&](const auto& R) { return verify_typed(R, op, cert); }, Rv);
    } catch (const std::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    }
}

// --- human-readable rendering ---------------------------------------------------

inline std::string text_summary(const Json& cert) {
    std::ostringstream os;
    os << "op: " << cert.at("query").at("op").get<std::string>() << "\n";
    os << "verdict: " << cert.at("verdict").get<std::string>() << "\n";
    if (cert.contains("witness")) {
        const Json& w = cert.at("witness");
        for (auto it = w.begin(); it != w.end(); ++it) {
            const Json& v = it.value();
            if (v.is_primitive())
                os << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            else if (v.is_array() && (v.empty() || v.front().is_primitive()))
                os << it.key() << ": " << v.dump() << "\n";
            else
                os << it.key() << ": " << v.size() << " entries\n";
        }
    }
    return os.str();
}

} // namespace cca

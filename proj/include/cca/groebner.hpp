#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cca/linalg.hpp"

namespace cca {

// One Buchberger engine for submodules of R^b; ideals are the b = 1 case.
// Module order: position-over-term, lower component dominates, the active
// monomial order breaks ties inside a component. Basis elements are monic.

struct GBOpts {
    bool want_lift = false; // track each basis element as a combination of the inputs
};

// Test hook: when on, every Groebner run re-verifies all S-pairs and input
// membership against the finished basis.
inline bool& gb_selfcheck() {
    static bool on = false;
    return on;
}
inline long& gb_selfcheck_runs() {
    static long n = 0;
    return n;
}

template <class F>
struct GBasis {
    int b = 1;
    MonoOrder ord;
    std::vector<Vec<F>> g;
    std::vector<int> comp;  // lead component of g[k]
    std::vector<Mono> lm;   // lead monomial of g[k]
    std::vector<std::vector<Poly<F>>> lift; // g[k] = sum_i lift[k][i] * input[i]
    size_t size() const { return g.size(); }
};

template <class F>
int vec_lead_comp(const Vec<F>& v) {
    for (size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) return (int)c;
    return -1;
}

// Full normal form; `quot`, when given, receives the reduction coefficients
// per basis element. `skip` excludes one basis element from the divisor search.
template <class F>
Vec<F> gb_normal_form(const F& K, const GBasis<F>& G, Vec<F> f,
                      std::vector<Poly<F>>* quot = nullptr, int skip = -1) {
    if (quot) quot->assign(G.size(), Poly<F>{});
    const MonoOrder& ord = G.ord;
    Vec<F> rem(f.size());
    for (int c = 0; c < (int)f.size(); ++c) {
        while (!f[c].is_zero()) {
            auto t = f[c].lead();
            int hit = -1;
            for (size_t k = 0; k < G.size(); ++k) {
                if ((int)k == skip) continue;
                if (G.comp[k] == c && mono_divides(G.lm[k], t.m)) {
                    hit = (int)k;
                    break;
                }
            }
            if (hit < 0) {
                rem[c].t.push_back(t);
                f[c].t.erase(f[c].t.begin());
                continue;
            }
            Mono u = mono_div(t.m, G.lm[hit]);
            for (int cc = c; cc < (int)f.size(); ++cc)
                if (!G.g[hit][cc].is_zero())
                    f[cc] = poly_sub(K, ord, f[cc], poly_mul_term(K, G.g[hit][cc], u, t.c));
            if (quot) (*quot)[hit].t.push_back({u, t.c});
        }
    }
    if (quot)
        for (auto& q : *quot) poly_normalize(K, ord, q);
    return rem;
}

template <class F>
Vec<F> gb_spair(const F& K, const GBasis<F>& G, int i, int j, const Mono& lcm) {
    Mono ui = mono_div(lcm, G.lm[i]);
    Mono uj = mono_div(lcm, G.lm[j]);
    Vec<F> s(G.b);
    for (int c = 0; c < G.b; ++c)
        s[c] = poly_sub(K, G.ord, poly_mul_term(K, G.g[i][c], ui, K.one()),
                        poly_mul_term(K, G.g[j][c], uj, K.one()));
    return s;
}

namespace detail {

template <class F>
void gb_run_selfcheck(const F& K, const GBasis<F>& G, const std::vector<Vec<F>>& inputs) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (G.comp[i] != G.comp[j]) continue;
            auto s = gb_spair(K, G, (int)i, (int)j, mono_lcm(G.lm[i], G.lm[j]));
            if (!vec_is_zero(gb_normal_form(K, G, std::move(s))))
                throw std::logic_error("basis self-check: S-pair does not reduce to zero");
        }
    for (const auto& in : inputs)
        if (!vec_is_zero(gb_normal_form(K, G, vec_resort(K, G.ord, in))))
            throw std::logic_error("basis self-check: input does not reduce to zero");
    ++gb_selfcheck_runs();
}

} // namespace detail

template <class F>
GBasis<F> buchberger(const F& K, const MonoOrder& ord, int b,
                     const std::vector<Vec<F>>& gens, GBOpts opts = {}) {
    GBasis<F> W;
    W.b = b;
    W.ord = ord;
    size_t nin = gens.size();

    auto push_elem = [&](Vec<F> v, std::vector<Poly<F>> lift) {
        int c = vec_lead_comp(v);
        auto s = K.inv(v[c].lead().c);
        if (!K.is_one(s)) {
            v = vec_scale(K, std::move(v), s);
            for (auto& l : lift) l = poly_scale(K, std::move(l), s);
        }
        W.comp.push_back(c);
        W.lm.push_back(v[c].lead().m);
        W.g.push_back(std::move(v));
        if (opts.want_lift) W.lift.push_back(std::move(lift));
    };

    for (size_t i = 0; i < nin; ++i) {
        Vec<F> v = vec_resort(K, ord, gens[i]);
        if (vec_lead_comp(v) < 0) continue;
        std::vector<Poly<F>> lift;
        if (opts.want_lift) {
            lift.resize(nin);
            lift[i] = poly_const(K, K.one());
        }
        push_elem(std::move(v), std::move(lift));
    }

    // Pending S-pairs, selected by minimal lcm degree, then lcm, then indices.
    using PairKey = std::tuple<uint32_t, Mono, int, int>;
    struct PairCmp {
        const MonoOrder* o;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            int c = mono_cmp(*o, std::get<1>(a), std::get<1>(b));
            if (c != 0) return c < 0;
            if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
            return std::get<3>(a) < std::get<3>(b);
        }
    };
    std::set<PairKey, PairCmp> pairs(PairCmp{&ord});
    std::set<std::pair<int, int>> pending;

    auto add_pairs_for = [&](int k) {
        for (int i = 0; i < k; ++i) {
            if (W.comp[i] != W.comp[k]) continue;
            // The coprime-lead shortcut is only sound for ideals.
            if (b == 1 && mono_coprime(W.lm[i], W.lm[k])) continue;
            Mono l = mono_lcm(W.lm[i], W.lm[k]);
            pairs.insert({l.deg, l, i, k});
            pending.insert({i, k});
        }
    };
    for (int k = 0; k < (int)W.size(); ++k) add_pairs_for(k);

    while (!pairs.empty()) {
        auto [deg, lcm, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        pending.erase({i, j});

        // Chain criterion: a third element whose lead divides the lcm and
        // whose pairs with both ends are no longer pending.
        bool skip = false;
        for (int k = 0; k < (int)W.size() && !skip; ++k) {
            if (k == i || k == j || W.comp[k] != W.comp[i]) continue;
            if (!mono_divides(W.lm[k], lcm)) continue;
            auto pi = std::minmax(i, k);
            auto pj = std::minmax(j, k);
            if (!pending.count({pi.first, pi.second}) && !pending.count({pj.first, pj.second}))
                skip = true;
        }
        if (skip) continue;

        std::vector<Poly<F>> slift;
        if (opts.want_lift) {
            Mono ui = mono_div(lcm, W.lm[i]);
            Mono uj = mono_div(lcm, W.lm[j]);
            slift.resize(nin);
            for (size_t t = 0; t < nin; ++t)
                slift[t] = poly_sub(K, ord, poly_mul_term(K, W.lift[i][t], ui, K.one()),
                                    poly_mul_term(K, W.lift[j][t], uj, K.one()));
        }
        std::vector<Poly<F>> quot;
        Vec<F> rem = gb_normal_form(K, W, gb_spair(K, W, i, j, lcm),
                                    opts.want_lift ? &quot : nullptr);
        if (vec_is_zero(rem)) continue;

        if (opts.want_lift)
            for (size_t k = 0; k < quot.size(); ++k) {
                if (quot[k].is_zero()) continue;
                for (size_t t = 0; t < nin; ++t)
                    slift[t] = poly_sub(K, ord, slift[t],
                                        poly_mul(K, ord, quot[k], W.lift[k][t]));
            }
        push_elem(std::move(rem), std::move(slift));
        add_pairs_for((int)W.size() - 1);
    }

    // Minimal basis: drop elements whose lead is divisible by another lead.
    std::vector<char> alive(W.size(), 1);
    for (size_t k = 0; k < W.size(); ++k)
        for (size_t l = 0; l < W.size(); ++l) {
            if (l == k || W.comp[l] != W.comp[k]) continue;
            if (!mono_divides(W.lm[l], W.lm[k])) continue;
            if (W.lm[l] == W.lm[k] && l > k) continue;
            alive[k] = 0;
            break;
        }

    GBasis<F> G;
    G.b = b;
    G.ord = ord;
    for (size_t k = 0; k < W.size(); ++k) {
        if (!alive[k]) continue;
        G.comp.push_back(W.comp[k]);
        G.lm.push_back(W.lm[k]);
        G.g.push_back(std::move(W.g[k]));
        if (opts.want_lift) G.lift.push_back(std::move(W.lift[k]));
    }

    // Tail-reduce each survivor against the others; leads are untouched
    // because the minimal set has pairwise non-dividing leads.
    for (size_t k = 0; k < G.size(); ++k) {
        std::vector<Poly<F>> quot;
        Vec<F> red = gb_normal_form(K, G, G.g[k], opts.want_lift ? &quot : nullptr, (int)k);
        if (opts.want_lift)
            for (size_t l = 0; l < quot.size(); ++l) {
                if (quot[l].is_zero()) continue;
                for (size_t t = 0; t < nin; ++t)
                    G.lift[k][t] = poly_sub(K, ord, G.lift[k][t],
                                            poly_mul(K, ord, quot[l], G.lift[l][t]));
            }
        G.g[k] = std::move(red);
    }

    // Canonical element order: by component, then decreasing lead monomial.
    std::vector<size_t> perm(G.size());
    for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t c) {
        if (G.comp[a] != G.comp[c]) return G.comp[a] < G.comp[c];
        return mono_cmp(ord, G.lm[a], G.lm[c]) > 0;
    });
    GBasis<F> out;
    out.b = b;
    out.ord = ord;
    for (size_t k : perm) {
        out.comp.push_back(G.comp[k]);
        out.lm.push_back(G.lm[k]);
        out.g.push_back(std::move(G.g[k]));
        if (opts.want_lift) out.lift.push_back(std::move(G.lift[k]));
    }

    if (gb_selfcheck()) detail::gb_run_selfcheck(K, out, gens);
    return out;
}

template <class F>
bool gb_member(const F& K, const GBasis<F>& G, const Vec<F>& v) {
    return vec_is_zero(gb_normal_form(K, G, vec_resort(K, G.ord, v)));
}

// Membership with an explicit combination in terms of the original generators.
template <class F>
std::optional<std::vector<Poly<F>>> submodule_witness(const F& K, const MonoOrder& ord,
                                                      int b, const std::vector<Vec<F>>& gens,
                                                      const Vec<F>& target) {
    auto G = buchberger(K, ord, b, gens, {.want_lift = true});
    std::vector<Poly<F>> quot;
    Vec<F> rem = gb_normal_form(K, G, vec_resort(K, ord, target), &quot);
    if (!vec_is_zero(rem)) return std::nullopt;
    std::vector<Poly<F>> co(gens.size());
    for (size_t k = 0; k < G.size(); ++k) {
        if (quot[k].is_zero()) continue;
        for (size_t i = 0; i < gens.size(); ++i)
            co[i] = poly_add(K, ord, co[i], poly_mul(K, ord, quot[k], G.lift[k][i]));
    }
    return co;
}

// --- scalar (ideal) conveniences -------------------------------------------

template <class F>
Vec<F> as_vec(Poly<F> f) {
    Vec<F> v(1);
    v[0] = std::move(f);
    return v;
}

template <class F>
std::vector<Vec<F>> as_vecs(const std::vector<Poly<F>>& fs) {
    std::vector<Vec<F>> vs;
    vs.reserve(fs.size());
    for (const auto& f : fs) vs.push_back(as_vec(f));
    return vs;
}

template <class F>
std::vector<Poly<F>> as_polys(const std::vector<Vec<F>>& vs) {
    std::vector<Poly<F>> fs;
    fs.reserve(vs.size());
    for (const auto& v : vs) fs.push_back(v.at(0));
    return fs;
}

template <class F>
GBasis<F> ideal_gb(const F& K, const MonoOrder& ord, const std::vector<Poly<F>>& gens,
                   GBOpts opts = {}) {
    return buchberger(K, ord, 1, as_vecs(gens), opts);
}

template <class F>
bool ideal_member_gb(const F& K, const GBasis<F>& G, const Poly<F>& f) {
    return gb_member(K, G, as_vec(f));
}

template <class F>
std::optional<std::vector<Poly<F>>> ideal_witness(const F& K, const MonoOrder& ord,
                                                  const std::vector<Poly<F>>& gens,
                                                  const Poly<F>& f) {
    return submodule_witness(K, ord, 1, as_vecs(gens), as_vec(f));
}

// --- canonical forms and equality ------------------------------------------

template <class F>
std::vector<Vec<F>> module_reduced_basis(const F& K, const MonoOrder& ord, int b,
                                         const std::vector<Vec<F>>& gens) {
    return buchberger(K, ord, b, gens).g;
}

template <class F>
bool module_equal_ambient(const F& K, const MonoOrder& ord, int b,
                          const std::vector<Vec<F>>& A, const std::vector<Vec<F>>& B) {
    auto ra = module_reduced_basis(K, ord, b, A);
    auto rb = module_reduced_basis(K, ord, b, B);
    if (ra.size() != rb.size()) return false;
    for (size_t i = 0; i < ra.size(); ++i)
        if (!vec_eq(K, ra[i], rb[i])) return false;
    return true;
}

template <class F>
std::vector<Poly<F>> ideal_reduced_basis(const Ring<F>& R, const std::vector<Poly<F>>& gens) {
    return as_polys(ideal_gb(R.K, R.natural(), gens).g);
}

template <class F>
bool ideal_equal_ambient(const Ring<F>& R, const std::vector<Poly<F>>& A,
                         const std::vector<Poly<F>>& B) {
    return module_equal_ambient(R.K, R.natural(), 1, as_vecs(A), as_vecs(B));
}

template <class F>
bool is_unit_ideal_ambient(const Ring<F>& R, const std::vector<Poly<F>>& gens) {
    auto rb = ideal_reduced_basis(R, gens);
    return rb.size() == 1 && poly_is_constant(rb[0]) && !rb[0].is_zero();
}

// --- syzygies ---------------------------------------------------------------

// Kernel of the map R^s -> R^b sending e_i to cols[i], via a basis of the
// graph module spanned by cols[i] (+) e_i: elements with zero first block
// carry the syzygies in their tail block.
template <class F>
std::vector<Vec<F>> syzygies(const F& K, const MonoOrder& ord, int b,
                             const std::vector<Vec<F>>& cols) {
    int s = (int)cols.size();
    std::vector<Vec<F>> graph;
    graph.reserve(s);
    for (int i = 0; i < s; ++i) {
        Vec<F> u(b + s);
        for (int c = 0; c < b; ++c) u[c] = cols[i][c];
        u[b + i] = poly_const(K, K.one());
        graph.push_back(std::move(u));
    }
    auto G = buchberger(K, ord, b + s, graph);
    std::vector<Vec<F>> syz;
    for (size_t k = 0; k < G.size(); ++k) {
        if (G.comp[k] < b) continue;
        Vec<F> v(s);
        for (int i = 0; i < s; ++i) v[i] = G.g[k][b + i];
        syz.push_back(std::move(v));
    }
    return syz;
}

// --- elimination, intersection, colon, saturation ---------------------------
// These operate in the ambient polynomial ring; callers working modulo
// relations append the relation generators first.

template <class F>
bool poly_uses_vars_from(const Poly<F>& p, int lo) {
    for (const auto& tm : p.t)
        for (int i = lo; i < kMaxVars; ++i)
            if (tm.m.e[i]) return true;
    return false;
}

// Generators of the contraction to the subring on the first `keep` variables.
template <class F>
std::vector<Poly<F>> eliminate_vars(const Ring<F>& R, const std::vector<Poly<F>>& gens,
                                    int keep) {
    if (keep >= R.nvars()) return ideal_reduced_basis(R, gens);
    auto ord = block_order(keep, R.nvars());
    auto G = ideal_gb(R.K, ord, gens);
    std::vector<Poly<F>> out;
    for (const auto& v : G.g)
        if (!poly_uses_vars_from(v[0], keep))
            out.push_back(poly_resort(R.K, R.natural(), v[0]));
    return out;
}

template <class F>
std::vector<Poly<F>> ideal_intersect(const Ring<F>& R, const std::vector<Poly<F>>& A,
                                     const std::vector<Poly<F>>& B) {
    Ring<F> E = extend_ring(R, {fresh_var_name(R, "t")});
    int tn = R.nvars();
    auto ordE = block_order(tn, E.nvars());
    Poly<F> t = poly_var(E.K, tn);
    Poly<F> omt = poly_sub(E.K, ordE, poly_const(E.K, E.K.one()), t);
    std::vector<Poly<F>> gens;
    for (const auto& f : A) gens.push_back(poly_mul(E.K, ordE, t, poly_resort(E.K, ordE, f)));
    for (const auto& g : B) gens.push_back(poly_mul(E.K, ordE, omt, poly_resort(E.K, ordE, g)));
    auto elim = eliminate_vars(E, gens, tn);
    for (auto& p : elim) p = poly_resort(R.K, R.natural(), std::move(p));
    return elim;
}

// Exact single-divisor division; throws if the divisor does not divide.
template <class F>
Poly<F> poly_div_exact(const F& K, const MonoOrder& ord, Poly<F> h, const Poly<F>& f) {
    if (f.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly<F> q;
    while (!h.is_zero()) {
        auto t = h.lead();
        if (!mono_divides(f.lead().m, t.m))
            throw std::logic_error("exact polynomial division has a remainder");
        Mono u = mono_div(t.m, f.lead().m);
        auto c = K.mul(t.c, K.inv(f.lead().c));
        q.t.push_back({u, c});
        h = poly_sub(K, ord, h, poly_mul_term(K, f, u, c));
    }
    poly_normalize(K, ord, q);
    return q;
}

template <class F>
std::vector<Poly<F>> ideal_colon_elem(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                      const Poly<F>& f) {
    if (f.is_zero()) return {poly_const(R.K, R.K.one())};
    auto H = ideal_intersect(R, I, {f});
    std::vector<Poly<F>> out;
    for (auto& h : H) out.push_back(poly_div_exact(R.K, R.natural(), std::move(h), f));
    return ideal_reduced_basis(R, out);
}

template <class F>
std::vector<Poly<F>> ideal_colon(const Ring<F>& R, const std::vector<Poly<F>>& I,
                                 const std::vector<Poly<F>>& J) {
    std::vector<Poly<F>> acc;
    bool first = true;
    for (const auto& g : J) {
        if (g.is_zero()) continue;
        auto c = ideal_colon_elem(R, I, g);
        acc = first ? c : ideal_intersect(R, acc, c);
        first = false;
    }
    if (first) return {poly_const(R.K, R.K.one())}; // colon by the zero ideal
    return ideal_reduced_basis(R, acc);
}

template <class F>
struct SatResult {
    std::vector<Poly<F>> gens;
    int exponent = 0; // smallest k with I : J^k == I : J^(k+1)
};

template <class F>
SatResult<F> ideal_saturate(const Ring<F>& R, const std::vector<Poly<F>>& I,
                            const std::vector<Poly<F>>& J, int cutoff = 50) {
    auto cur = ideal_reduced_basis(R, I);
    for (int k = 0; k <= cutoff; ++k) {
        auto next = ideal_colon(R, cur, J);
        if (ideal_equal_ambient(R, cur, next)) return {std::move(cur), k};
        cur = std::move(next);
    }
    throw std::runtime_error("saturation did not stabilize within the step cutoff");
}

// --- module colon and saturation --------------------------------------------

// Generators of {v in R^b : f * v in span(U) for every f in J}.
template <class F>
std::vector<Vec<F>> module_colon(const Ring<F>& R, int b, const std::vector<Vec<F>>& U,
                                 const std::vector<Poly<F>>& J) {
    const F& K = R.K;
    auto ord = R.natural();
    std::vector<Poly<F>> jg;
    for (const auto& f : J)
        if (!f.is_zero()) jg.push_back(f);
    if (jg.empty()) { // colon by the zero ideal is everything
        std::vector<Vec<F>> all;
        for (int i = 0; i < b; ++i) all.push_back(vec_unit(K, b, i));
        return all;
    }
    int s = (int)jg.size();
    // Stacked space R^(b*s): block j holds the condition against jg[j].
    std::vector<Vec<F>> cols;
    for (int i = 0; i < b; ++i) {
        Vec<F> e(b * s);
        for (int j = 0; j < s; ++j) e[(size_t)j * b + i] = jg[j];
        cols.push_back(std::move(e));
    }
    for (const auto& w : U)
        for (int j = 0; j < s; ++j) {
            Vec<F> col(b * s);
            for (int c = 0; c < b; ++c) col[(size_t)j * b + c] = w[c];
            cols.push_back(std::move(col));
        }
    auto syz = syzygies(K, ord, b * s, cols);
    std::vector<Vec<F>> out;
    for (const auto& z : syz) {
        Vec<F> v(b);
        bool nz = false;
        for (int i = 0; i < b; ++i) {
            v[i] = z[i];
            nz = nz || !v[i].is_zero();
        }
        if (nz) out.push_back(std::move(v));
    }
    return module_reduced_basis(K, ord, b, out);
}

template <class F>
struct ModuleSatResult {
    std::vector<Vec<F>> gens;
    int exponent = 0;
};

template <class F>
ModuleSatResult<F> module_saturate(const Ring<F>& R, int b, const std::vector<Vec<F>>& U,
                                   const std::vector<Poly<F>>& J, int cutoff = 50) {
    const F& K = R.K;
    auto ord = R.natural();
    auto cur = module_reduced_basis(K, ord, b, U);
    for (int k = 0; k <= cutoff; ++k) {
        auto next = module_colon(R, b, cur, J);
        if (module_equal_ambient(K, ord, b, cur, next)) return {std::move(cur), k};
        cur = std::move(next);
    }
    throw std::runtime_error("module saturation did not stabilize within the step cutoff");
}

} // namespace cca

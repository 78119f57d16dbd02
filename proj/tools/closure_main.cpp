#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cca/cert.hpp"

using namespace cca;

// Exit codes: 0 membership / true / computed, 1 negative verdict, 2 search
// bound reached or witness not finite, 64 usage or domain errors, 65 parse
// errors in rings, polynomials, or certificate files.

namespace {

struct Options {
    std::string ring;
    std::string ideal;
    std::string element;
    std::string witness_ring;
    std::string delta;
    std::string support_ideal;
    std::string multiplier;
    std::string presentation;
    std::string submodule;
    std::string closure = "identity";
    std::string alpha;
    std::string beta;
    std::vector<std::string> matrices;
    uint32_t power = 1;
    SearchBounds bounds;
    std::string output = "json";
    std::string cert_out;
    std::string file;
};

int exit_code_for(const std::string& verdict) {
    if (verdict == "member" || verdict == "true" || verdict == "computed") return 0;
    if (verdict == "not_member" || verdict == "false") return 1;
    return 2;
}

int emit(const Json& cert, const Options& o) {
    if (!o.cert_out.empty()) {
        std::ofstream out(o.cert_out);
        if (!out) throw std::invalid_argument("cannot write " + o.cert_out);
        out << cert.dump(2) << "\n";
    }
    if (o.output == "text")
        std::cout << text_summary(cert);
    else
        std::cout << cert.dump(2) << "\n";
    return exit_code_for(cert.at("verdict").get<std::string>());
}

Json read_json_file(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
}

template <class F>
std::vector<Vec<F>> parse_vectors(const Ring<F>& R, const std::string& text) {
    std::vector<Vec<F>> out;
    for (const auto& part : split_list(text, ";")) out.push_back(parse_poly_list(R, part, ","));
    return out;
}

// Module data either as --ideal plus a scalar --element (rank one, free), or
// as --module-presentation / --submodule / a comma-separated --element vector.
template <class F>
SubmoduleData<F> read_submodule(const Ring<F>& R, const Options& o, bool need_element = true) {
    SubmoduleData<F> S;
    if (!o.ideal.empty() && o.presentation.empty()) {
        S.M = free_module<F>(1);
        for (auto& g : parse_poly_list(R, o.ideal)) S.N.push_back(Vec<F>{std::move(g)});
        if (need_element) S.m = Vec<F>{parse_poly(R, o.element)};
        else S.m = Vec<F>(1);
        return S;
    }
    if (!o.submodule.empty()) S.N = parse_vectors(R, o.submodule);
    if (need_element) S.m = parse_poly_list(R, o.element, ",");
    if (!o.presentation.empty()) {
        S.M.pres = parse_matrix(R, o.presentation);
    } else {
        size_t mu = need_element ? S.m.size() : (S.N.empty() ? 0 : S.N.front().size());
        if (mu == 0) throw std::invalid_argument("cannot infer the module rank from the arguments");
        S.M = free_module<F>((int)mu);
    }
    if (!need_element) S.m = Vec<F>(S.M.rank());
    validate_submodule(S);
    return S;
}

template <class Fn>
int with_ring(const std::string& text, Fn&& fn) {
    auto Rv = parse_ring(text);
    return std::visit([&](const auto& R) { return fn(R); }, Rv);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closure operation decisions with re-checkable certificates"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&](CLI::App* s) {
        s->add_option("--output", o.output, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        s->add_option("--cert-out", o.cert_out, "also write the certificate to this file");
    };
    auto add_ring = [&](CLI::App* s) {
        s->add_option("--ring", o.ring, "coefficient ring, e.g. Q[x,y] or F(5)[x,y]/(x^2 - y)")
            ->required();
        add_output(s);
    };
    auto add_module_data = [&](CLI::App* s, bool element = true) {
        s->add_option("--ideal", o.ideal, "ideal generators separated by ;");
        s->add_option("--module-presentation", o.presentation,
                      "presentation matrix, rows separated by ; entries by ,");
        s->add_option("--submodule", o.submodule, "generator vectors separated by ; coords by ,");
        if (element) s->add_option("--element", o.element, "element, or its coordinate vector");
    };

    auto* radical = app.add_subcommand("radical", "radical membership for an ideal");
    add_ring(radical);
    radical->add_option("--ideal", o.ideal)->required();
    radical->add_option("--element", o.element)->required();

    auto* radmod = app.add_subcommand("radical-module", "radical closure membership in a module");
    add_ring(radmod);
    add_module_data(radmod);

    auto* frob = app.add_subcommand("frobenius", "Frobenius closure membership");
    add_ring(frob);
    add_module_data(frob);
    frob->add_option("--e-max", o.bounds.e_max, "largest Frobenius level tried");

    auto* rr = app.add_subcommand("ratliff-rush", "Ratliff-Rush membership, or the closure itself");
    add_ring(rr);
    rr->add_option("--ideal", o.ideal)->required();
    auto* rr_elem = rr->add_option("--element", o.element, "omit to list the closure generators");
    rr->add_option("--n-max", o.bounds.n_max, "largest power compared");

    auto* delta = app.add_subcommand("delta", "Delta-closure membership");
    add_ring(delta);
    delta->add_option("--ideal", o.ideal)->required();
    delta->add_option("--element", o.element)->required();
    delta->add_option("--delta", o.delta, "multiplier ideals separated by ;; generators by ;")
        ->required();
    delta->add_option("--t-max", o.bounds.t_max, "largest product length tried");

    auto* integral = app.add_subcommand("integral", "integral closure membership via reductions");
    add_ring(integral);
    integral->add_option("--ideal", o.ideal)->required();
    integral->add_option("--element", o.element)->required();
    integral->add_option("--r-max", o.bounds.r_max, "largest reduction degree tried");

    auto* support = app.add_subcommand("support", "saturation of a submodule at an ideal");
    add_ring(support);
    add_module_data(support, false);
    support->add_option("--support-ideal", o.support_ideal)->required();
    support->add_option("--sat-max", o.bounds.sat_cutoff, "saturation step cutoff");

    auto* symbolic = app.add_subcommand("symbolic", "symbolic power via a witness multiplier");
    add_ring(symbolic);
    symbolic->add_option("--ideal", o.ideal, "the prime P")->required();
    symbolic->add_option("--n", o.power, "which symbolic power")->required();
    symbolic->add_option("--s", o.multiplier, "multiplier avoiding P")->required();
    symbolic->add_option("--sat-max", o.bounds.sat_cutoff, "saturation step cutoff");

    auto* plus = app.add_subcommand("plus-witness", "membership in the extension, finiteness checked");
    add_ring(plus);
    plus->add_option("--witness-ring", o.witness_ring)->required();
    plus->add_option("--ideal", o.ideal)->required();
    plus->add_option("--element", o.element)->required();

    auto* compat = app.add_subcommand("compatible", "is the extension element compatible");
    add_ring(compat);
    compat->add_option("--witness-ring", o.witness_ring)->required();
    compat->add_option("--element", o.element)->required();

    auto* fsec = app.add_subcommand("forcing-section", "ring section of the forcing algebra");
    add_ring(fsec);
    add_module_data(fsec);

    auto* fsur = app.add_subcommand("forcing-surjective", "is Spec of the forcing algebra onto");
    add_ring(fsur);
    add_module_data(fsur);

    auto* exact = app.add_subcommand("exact-surjective",
                                     "exactness criteria for surjective complexes");
    add_ring(exact);
    exact->add_option("--alpha", o.alpha, "first map of a two-map window");
    exact->add_option("--beta", o.beta, "second map of a two-map window");
    exact->add_option("--matrix", o.matrices,
                      "complex maps, final surjection first; repeatable");

    auto* phantom = app.add_subcommand("phantom", "phantom exactness at the middle spot");
    add_ring(phantom);
    phantom->add_option("--alpha", o.alpha)->required();
    phantom->add_option("--beta", o.beta)->required();
    phantom->add_option("--closure", o.closure, "identity, radical, or frobenius")
        ->check(CLI::IsMember({"identity", "radical", "frobenius"}));
    phantom->add_option("--module-presentation", o.presentation,
                        "presentation of the target module");
    phantom->add_option("--e-max", o.bounds.e_max);

    auto* partition = app.add_subcommand("partition",
                                         "constructible partition certifying radical membership");
    add_ring(partition);
    partition->add_option("--ideal", o.ideal)->required();
    partition->add_option("--element", o.element)->required();

    auto* cech = app.add_subcommand("cech", "cohomology dims of a finite scalar complex");
    cech->add_option("file", o.file, "JSON input, - for stdin")->required();
    add_output(cech);

    auto* verify = app.add_subcommand("verify", "re-check a certificate by direct arithmetic");
    verify->add_option("file", o.file, "certificate JSON, - for stdin")->required();
    verify->add_option("--output", o.output)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (radical->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto I = parse_poly_list(R, o.ideal);
                auto f = parse_poly(R, o.element);
                return emit(radical_certificate(R, I, f, radical_closure_member(R, I, f)), o);
            });
        if (radmod->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto S = read_submodule(R, o);
                return emit(radical_module_certificate(R, S, radical_closure_member_module(R, S)),
                            o);
            });
        if (frob->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                if (R.K.characteristic() == 0)
                    throw std::invalid_argument(
                        "the Frobenius closure needs positive characteristic");
                auto S = read_submodule(R, o);
                return emit(
                    frobenius_certificate(R, S, frobenius_closure_member(R, S, o.bounds), o.bounds),
                    o);
            });
        if (rr->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto I = parse_poly_list(R, o.ideal);
                if (rr_elem->count()) {
                    auto f = parse_poly(R, o.element);
                    return emit(ratliff_rush_certificate(
                                    R, I, f, ratliff_rush_member(R, I, f, o.bounds), o.bounds),
                                o);
                }
                return emit(ratliff_rush_closure_certificate(
                                R, I, ratliff_rush_closure(R, I, o.bounds), o.bounds),
                            o);
            });
        if (delta->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto I = parse_poly_list(R, o.ideal);
                auto f = parse_poly(R, o.element);
                std::remove_cvref_t<decltype(I)> gens;
                std::vector<decltype(gens)> dl;
                for (const auto& part : split_list(o.delta, ";;"))
                    dl.push_back(parse_poly_list(R, part));
                return emit(delta_certificate(
                                R, I, f, dl, delta_closure_member(R, I, f, dl, o.bounds), o.bounds),
                            o);
            });
        if (integral->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto I = parse_poly_list(R, o.ideal);
                auto f = parse_poly(R, o.element);
                return emit(integral_certificate(
                                R, I, f, integral_closure_member(R, I, f, o.bounds), o.bounds),
                            o);
            });
        if (support->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto S = read_submodule(R, o, false);
                auto J = parse_poly_list(R, o.support_ideal);
                return emit(support_certificate(R, S.M, S.N, J,
                                                support_closure(R, S.M, S.N, J, o.bounds),
                                                o.bounds),
                            o);
            });
        if (symbolic->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto P = parse_poly_list(R, o.ideal);
                auto s = parse_poly(R, o.multiplier);
                return emit(symbolic_certificate(
                                R, P, o.power, s,
                                symbolic_power(R, P, o.power, s, o.bounds), o.bounds),
                            o);
            });
        if (plus->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto Sv = parse_ring(o.witness_ring);
                const auto& S = std::get<std::remove_cvref_t<decltype(R)>>(Sv);
                auto I = parse_poly_list(R, o.ideal);
                auto f = parse_poly(R, o.element);
                return emit(plus_certificate(R, S, I, f, plus_witness_check(R, S, I, f)), o);
            });
        if (compat->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto Sv = parse_ring(o.witness_ring);
                const auto& S = std::get<std::remove_cvref_t<decltype(R)>>(Sv);
                auto g = parse_poly(S, o.element);
                return emit(compatible_certificate(R, S, g, compatible_element(R, S, g)), o);
            });
        if (fsec->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto S = read_submodule(R, o);
                return emit(forcing_section_certificate(R, S, ring_section(build_forcing(R, S))),
                            o);
            });
        if (fsur->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto S = read_submodule(R, o);
                return emit(
                    forcing_surjective_certificate(R, S, is_spec_surjective(build_forcing(R, S))),
                    o);
            });
        if (exact->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                if (!o.alpha.empty() || !o.beta.empty()) {
                    if (o.alpha.empty() || o.beta.empty() || !o.matrices.empty())
                        throw std::invalid_argument(
                            "pass either --alpha with --beta, or repeated --matrix");
                    auto a = parse_matrix(R, o.alpha);
                    auto b = parse_matrix(R, o.beta);
                    return emit(pair_certificate(R, a, b, surjective_exact_pair(R, a, b)), o);
                }
                if (o.matrices.empty())
                    throw std::invalid_argument(
                        "pass either --alpha with --beta, or repeated --matrix");
                std::vector<std::remove_cvref_t<decltype(parse_matrix(R, ""))>> mats;
                for (const auto& m : o.matrices) mats.push_back(parse_matrix(R, m));
                auto C = make_free_complex(R, mats);
                return emit(complex_certificate(R, C, surjective_exact_complex(R, C)), o);
            });
        if (phantom->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto a = parse_matrix(R, o.alpha);
                auto b = parse_matrix(R, o.beta);
                PhantomClosure cl = o.closure == "radical"    ? PhantomClosure::radical
                                    : o.closure == "frobenius" ? PhantomClosure::frobenius
                                                               : PhantomClosure::module;
                if (o.presentation.empty()) {
                    auto cert = phantom_exact(R, a, b, cl, o.bounds);
                    return emit(phantom_certificate(R, a, b, cl, cert, o.bounds), o);
                }
                auto tp = parse_matrix(R, o.presentation);
                auto cert = phantom_exact(R, a, b, cl, o.bounds, &tp);
                return emit(phantom_certificate(R, a, b, cl, cert, o.bounds, &tp), o);
            });
        if (partition->parsed())
            return with_ring(o.ring, [&](const auto& R) {
                auto I = parse_poly_list(R, o.ideal);
                auto f = parse_poly(R, o.element);
                return emit(partition_certificate(R, I, f, canonical_radical_partition(R, I, f)),
                            o);
            });
        if (cech->parsed()) return emit(cech_certificate(read_json_file(o.file)), o);
        if (verify->parsed()) {
            auto res = verify_certificate(read_json_file(o.file));
            if (o.output == "text")
                std::cout << (res.ok ? "ok: " : "failed: ") << res.message << "\n";
            else
                std::cout << Json{{"ok", res.ok}, {"message", res.message}}.dump(2) << "\n";
            return res.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const Json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}

#pragma once

#include "cca/closures.hpp"

namespace cca {

// Locally closed piece (R/cut)_multiplier of the spectrum.
template <class F>
struct ConstructiblePiece {
    std::vector<Poly<F>> cut;
    Poly<F> multiplier;
};

template <class F>
bool piece_is_empty(const Ring<F>& R, const ConstructiblePiece<F>& p) {
    return radical_member(R, p.cut, p.multiplier).member;
}

template <class F>
struct PieceMembership {
    bool member = false;
    uint32_t exponent = 0;           // g^exponent * f lies in J + cut
    MemberWitness<F> coefficients;   // over J gens, then cut gens, then ring relations
};

// f lies in J on the piece iff f is in the saturation of J + cut at the
// multiplier; the witness reports the smallest multiplier power needed.
template <class F>
PieceMembership<F> piece_member(const Ring<F>& R, const ConstructiblePiece<F>& p,
                                const std::vector<Poly<F>>& J, const Poly<F>& f,
                                const SearchBounds& bounds = {}) {
    if (piece_is_empty(R, p)) throw std::invalid_argument("empty piece");
    auto base = ideal_sum(J, p.cut);
    auto sat = ideal_saturate(R, with_rels(R, base), {p.multiplier}, bounds.sat_cutoff);
    auto ordG = R.natural();
    auto G = ideal_gb(R.K, ordG, sat.gens);
    PieceMembership<F> out;
    if (!ideal_member_gb(R.K, G, poly_resort(R.K, ordG, f))) return out;
    out.member = true;
    auto Gbase = ideal_basis(R, base);
    Poly<F> scaled = poly_resort(R.K, ordG, f);
    for (uint32_t e = 0;; ++e) {
        if (ideal_member_gb(R.K, Gbase, scaled)) {
            out.exponent = e;
            auto w = ideal_member_witness(R, base, scaled);
            // split the witness back into J-part and cut-part lengths
            out.coefficients = std::move(*w);
            return out;
        }
        scaled = poly_mul(R.K, ordG, scaled, p.multiplier);
        if ((int)e > bounds.sat_cutoff)
            throw std::logic_error("piece membership exponent not found within the cutoff");
    }
}

template <class F>
struct PieceCert {
    bool vanishes = false; // last piece: f^exponent in cut; else multiplier^exponent * f in I + cut
    uint32_t exponent = 0;
    std::vector<Poly<F>> basis;      // generators the combination is taken over
    MemberWitness<F> coefficients;
};

template <class F>
struct RadicalPartition {
    std::vector<ConstructiblePiece<F>> pieces;
    std::vector<PieceCert<F>> certs;
    std::vector<std::string> notes; // dropped empty pieces
};

// The canonical chain for f in rad(f_1..f_n): piece k is V(f_1..f_k) with
// f_(k+1) inverted, and the last piece is all of V(I).
template <class F>
RadicalPartition<F> canonical_radical_partition(const Ring<F>& R,
                                                const std::vector<Poly<F>>& I, const Poly<F>& f,
                                                const SearchBounds& bounds = {}) {
    auto rad = radical_member(R, I, f);
    if (!rad.member) throw std::invalid_argument("element is not in the radical of the ideal");

    RadicalPartition<F> out;
    int n = (int)I.size();
    for (int k = 0; k < n; ++k) {
        ConstructiblePiece<F> p;
        p.cut.assign(I.begin(), I.begin() + k);
        p.multiplier = I[k];
        if (piece_is_empty(R, p)) {
            out.notes.push_back("dropped empty piece " + std::to_string(k) +
                                ": multiplier lies in the radical of the cut");
            continue;
        }
        auto pm = piece_member(R, p, I, f, bounds);
        PieceCert<F> cert;
        cert.exponent = pm.exponent;
        cert.basis = ideal_sum(I, p.cut);
        cert.coefficients = std::move(pm.coefficients);
        out.pieces.push_back(std::move(p));
        out.certs.push_back(std::move(cert));
    }
    ConstructiblePiece<F> last;
    last.cut = I;
    last.multiplier = poly_const(R.K, R.K.one());
    if (!piece_is_empty(R, last)) { // V(I) can itself be empty
        PieceCert<F> cert;
        cert.vanishes = true;
        cert.exponent = rad.exponent;
        cert.basis = I;
        auto fr = poly_pow(R.K, R.natural(), f, rad.exponent);
        cert.coefficients = std::move(*ideal_member_witness(R, I, fr));
        out.pieces.push_back(std::move(last));
        out.certs.push_back(std::move(cert));
    } else {
        out.notes.push_back("dropped empty final piece: the vanishing locus is empty");
    }
    return out;
}

// --- piecewise sections --------------------------------------------------------

template <class F>
struct PieceValue {
    Poly<F> numerator;
    uint32_t denom_power = 0; // value is numerator / multiplier^denom_power
};

template <class F>
struct PiecewiseSection {
    std::vector<ConstructiblePiece<F>> pieces;
    std::vector<PieceValue<F>> values;
    bool global_restriction = false;
};

template <class F>
PiecewiseSection<F> assemble_section(const Ring<F>& R,
                                     std::vector<ConstructiblePiece<F>> pieces,
                                     std::vector<PieceValue<F>> values) {
    if (pieces.size() != values.size())
        throw std::invalid_argument("one value per piece required");
    for (const auto& p : pieces)
        if (piece_is_empty(R, p)) throw std::invalid_argument("empty piece");
    return {std::move(pieces), std::move(values), false};
}

template <class F>
PiecewiseSection<F> restrict_global(const Ring<F>& R,
                                    std::vector<ConstructiblePiece<F>> pieces,
                                    const Poly<F>& h) {
    std::vector<PieceValue<F>> values(pieces.size(), PieceValue<F>{h, 0});
    auto s = assemble_section(R, std::move(pieces), std::move(values));
    s.global_restriction = true;
    return s;
}

} // namespace cca

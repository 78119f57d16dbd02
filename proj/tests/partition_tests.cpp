#include "doctest.h"

#include "cca/partition.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cca;

namespace {

const bool selfcheck_enabled = [] {
    gb_selfcheck() = true;
    return true;
}();

// Recompute the certified combination with plain polynomial arithmetic.
template <class F>
bool cert_checks(const Ring<F>& R, const ConstructiblePiece<F>& p, const PieceCert<F>& cert,
                 const Poly<F>& f) {
    if (cert.coefficients.gen_coeffs.size() != cert.basis.size()) return false;
    if (cert.coefficients.rel_coeffs.size() != R.rels.size()) return false;
    auto ord = R.natural();
    Poly<F> target = cert.vanishes
                         ? poly_pow(R.K, ord, f, cert.exponent)
                         : poly_mul(R.K, ord, poly_pow(R.K, ord, p.multiplier, cert.exponent), f);
    Poly<F> sum;
    for (size_t i = 0; i < cert.basis.size(); ++i)
        sum = poly_add(R.K, ord, sum,
                       poly_mul(R.K, ord, cert.coefficients.gen_coeffs[i], cert.basis[i]));
    for (size_t j = 0; j < R.rels.size(); ++j)
        sum = poly_add(R.K, ord, sum,
                       poly_mul(R.K, ord, cert.coefficients.rel_coeffs[j], R.rels[j]));
    return poly_eq(R.K, target, sum);
}

} // namespace

TEST_CASE("canonical partition for a principal ideal") {
    auto Rv = parse_ring("Q[x,y]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    auto part = canonical_radical_partition(R, {P("x")}, P("x"));
    REQUIRE(part.pieces.size() == 2);
    CHECK(part.notes.empty());

    CHECK(part.pieces[0].cut.empty());
    CHECK(poly_eq(R.K, part.pieces[0].multiplier, P("x")));
    CHECK(!part.certs[0].vanishes);
    CHECK(cert_checks(R, part.pieces[0], part.certs[0], P("x")));

    CHECK(part.pieces[1].cut.size() == 1);
    CHECK(poly_eq(R.K, part.pieces[1].multiplier, P("1")));
    CHECK(part.certs[1].vanishes);
    CHECK(part.certs[1].exponent == 1);
    CHECK(cert_checks(R, part.pieces[1], part.certs[1], P("x")));
}

TEST_CASE("canonical partition of the two-monomial cross") {
    auto Rv = parse_ring("Q[x,y]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    // the middle piece collapses: (x*y^2)^2 is a multiple of x^2*y
    std::vector<Poly<Rationals>> I = {P("x^2*y"), P("x*y^2")};
    auto f = P("x*y");
    auto part = canonical_radical_partition(R, I, f);
    REQUIRE(part.pieces.size() == 2);
    REQUIRE(part.notes.size() == 1);
    CHECK(part.notes[0].find("empty piece 1") != std::string::npos);
    for (size_t k = 0; k < part.pieces.size(); ++k)
        CHECK(cert_checks(R, part.pieces[k], part.certs[k], f));

    // on the last piece f vanishes with the radical exponent
    CHECK(part.pieces[0].cut.empty());
    CHECK(part.certs[1].vanishes);
    CHECK(part.certs[1].exponent == 2);
    CHECK(part.pieces[1].cut.size() == 2);
}

TEST_CASE("canonical partition with a full three-piece chain") {
    auto Rv = parse_ring("Q[x,y]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    std::vector<Poly<Rationals>> I = {P("x^2*y^2"), P("x^2")};
    auto f = P("x");
    auto part = canonical_radical_partition(R, I, f);
    REQUIRE(part.pieces.size() == 3);
    CHECK(part.notes.empty());
    for (size_t k = 0; k < part.pieces.size(); ++k)
        CHECK(cert_checks(R, part.pieces[k], part.certs[k], f));

    // pieces follow the generator order and need one multiplier power each
    CHECK(part.pieces[0].cut.empty());
    CHECK(part.certs[0].exponent == 1);
    CHECK(poly_eq(R.K, part.pieces[1].multiplier, P("x^2")));
    CHECK(part.certs[1].exponent == 1);
    CHECK(part.certs[2].vanishes);
    CHECK(part.certs[2].exponent == 2);
}

TEST_CASE("empty pieces are dropped with a note") {
    auto Rv = parse_ring("Q[x]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    // V(x) with x^2 inverted is empty
    auto part = canonical_radical_partition(R, {P("x"), P("x^2")}, P("x"));
    REQUIRE(part.pieces.size() == 2);
    REQUIRE(part.notes.size() == 1);
    CHECK(part.notes[0].find("empty piece 1") != std::string::npos);
    CHECK(poly_eq(R.K, part.pieces[0].multiplier, P("x")));
    CHECK(part.certs[1].vanishes);

    // empty vanishing locus drops the final piece
    auto unit = canonical_radical_partition(R, {P("x"), P("x - 1")}, P("1"));
    CHECK(unit.pieces.size() == 2);
    REQUIRE(unit.notes.size() == 1);
    CHECK(unit.notes[0].find("final piece") != std::string::npos);

    CHECK_THROWS_AS(canonical_radical_partition(R, {P("x")}, P("x - 1")),
                    std::invalid_argument);
}

TEST_CASE("piece membership on basic opens and closed sets") {
    auto Rv = parse_ring("Q[x,y]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    ConstructiblePiece<Rationals> dx{{}, P("x")};
    auto on_dx = piece_member(R, dx, {P("x")}, P("1"));
    CHECK(on_dx.member);
    CHECK(on_dx.exponent == 1);
    CHECK(!piece_member(R, dx, {P("y")}, P("1")).member);

    ConstructiblePiece<Rationals> vx{{P("x")}, P("1")};
    auto on_vx = piece_member(R, vx, {}, P("x"));
    CHECK(on_vx.member);
    CHECK(on_vx.exponent == 0);

    ConstructiblePiece<Rationals> empty{{P("x")}, P("x")};
    CHECK_THROWS_AS(piece_member(R, empty, {}, P("x")), std::invalid_argument);
}

TEST_CASE("piece membership in a quotient ring") {
    auto Rv = parse_ring("Q[x,y]/(y^2 - x^3)");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    // on the cusp minus the origin, y lies in (x) with one power of y
    ConstructiblePiece<Rationals> dy{{}, P("y")};
    auto m = piece_member(R, dy, {P("x")}, P("y"));
    REQUIRE(m.member);
    CHECK(m.exponent == 1);
    auto ord = R.natural();
    Poly<Rationals> sum = poly_mul(R.K, ord, m.coefficients.gen_coeffs[0], P("x"));
    sum = poly_add(R.K, ord, sum, poly_mul(R.K, ord, m.coefficients.rel_coeffs[0], R.rels[0]));
    CHECK(poly_eq(R.K, sum, P("y^2")));
}

TEST_CASE("sections carry one value per piece") {
    auto Rv = parse_ring("Q[x]");
    auto& R = std::get<Ring<Rationals>>(Rv);
    auto P = [&](const char* s) { return parse_poly(R, s); };

    std::vector<ConstructiblePiece<Rationals>> pieces = {{{}, P("x")}, {{P("x")}, P("1")}};
    std::vector<PieceValue<Rationals>> vals = {{P("1"), 1}, {P("0"), 0}};
    auto s = assemble_section(R, pieces, vals);
    CHECK(s.values.size() == 2);
    CHECK(!s.global_restriction);

    auto g = restrict_global(R, pieces, P("x + 2"));
    CHECK(g.global_restriction);
    CHECK(g.values[1].denom_power == 0);
    CHECK(poly_eq(R.K, g.values[0].numerator, P("x + 2")));

    vals.pop_back();
    CHECK_THROWS_AS(assemble_section(R, pieces, vals), std::invalid_argument);
    pieces[0] = {{P("x")}, P("x")};
    CHECK_THROWS_AS(restrict_global(R, pieces, P("1")), std::invalid_argument);
}

TEST_CASE("random partitions cover every point exactly once") {
    auto Rv = parse_ring("F(3)[x,y,z]");
    auto& R = std::get<Ring<PrimeField>>(Rv);
    auto ord = R.natural();
    testsup::Rng rng(700);
    oracle::GFBase OF(3);
    auto pts = oracle::variety_points(OF, R);
    REQUIRE(pts.size() == 27);

    for (int it = 0; it < 10; ++it) {
        int ngen = 1 + it % 3;
        std::vector<Poly<PrimeField>> I;
        for (int i = 0; i < ngen; ++i) I.push_back(testsup::random_poly(rng, R, 3, 3, false));
        Poly<PrimeField> f;
        for (const auto& g : I)
            f = poly_add(R.K, ord, f, poly_mul(R.K, ord, testsup::random_poly(rng, R, 1, 2), g));
        if (it % 2) {
            // hide f one radical step deeper
            I.push_back(poly_mul(R.K, ord, f, f));
            std::rotate(I.begin(), I.end() - 1, I.end());
        }
        auto part = canonical_radical_partition(R, I, f);
        REQUIRE(!part.pieces.empty());
        for (size_t k = 0; k < part.pieces.size(); ++k)
            CHECK(cert_checks(R, part.pieces[k], part.certs[k], f));

        for (const auto& pt : pts) {
            int covered = 0;
            for (const auto& p : part.pieces) {
                bool in = !OF.is_zero(oracle::eval_poly(OF, p.multiplier, pt));
                for (const auto& c : p.cut)
                    if (!OF.is_zero(oracle::eval_poly(OF, c, pt))) { in = false; break; }
                covered += in;
            }
            CHECK(covered == 1);
        }
    }
}

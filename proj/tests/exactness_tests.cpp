#include "doctest.h"

#include "cca/exactness.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cca;

namespace {

const bool selfcheck_enabled = [] {
    gb_selfcheck() = true;
    return true;
}();

} // namespace

TEST_CASE("free complex validation") {
    auto R = make_ring(Rationals{}, {"x", "y"});
    auto beta = parse_matrix(R, "x, y");
    auto alpha = parse_matrix(R, "y; -x");

    auto C = make_free_complex(R, {beta, alpha});
    CHECK(C.mats.size() == 2);

    auto bad = parse_matrix(R, "y; x");
    CHECK_THROWS_WITH(make_free_complex(R, {beta, bad}),
                      doctest::Contains("not a complex"));
    CHECK_THROWS_WITH(make_free_complex(R, {beta, parse_matrix(R, "x; y; x")}),
                      doctest::Contains("composable"));

    // composites only need to vanish modulo the ring relations
    auto Qv = parse_ring("Q[x,y]/(x*y)");
    auto& Rq = std::get<Ring<Rationals>>(Qv);
    auto Cq = make_free_complex(Rq, {parse_matrix(Rq, "x"), parse_matrix(Rq, "y")});
    CHECK(Cq.mats.size() == 2);
}

TEST_CASE("minor-product pair criterion") {
    auto R = make_ring(Rationals{}, {"x", "y"});
    auto P = [&](const char* s) { return parse_poly(R, s); };

    // Koszul pair of (x, y): kernel equals image, but no base-change-stable splitting
    auto alpha = parse_matrix(R, "y; -x");
    auto beta = parse_matrix(R, "x, y");
    auto k = surjective_exact_pair(R, alpha, beta);
    CHECK(!k.exact);
    CHECK(ideal_equal(R, k.minor_sum, {P("x^2"), P("x*y"), P("y^2")}));

    // identity on one side against an empty complement
    auto idm = testsup::mat_identity(R, 2);
    auto empty_rows = Mat<Rationals>(0, 2);
    auto empty_cols = Mat<Rationals>(2, 0);
    CHECK(surjective_exact_pair(R, idm, empty_rows).exact);
    CHECK(surjective_exact_pair(R, empty_cols, idm).exact);

    // exact as modules, yet not exact under every base change
    auto zero_then_f = surjective_exact_pair(R, parse_matrix(R, "0"), parse_matrix(R, "y"));
    CHECK(!zero_then_f.exact);
    CHECK(ideal_equal(R, zero_then_f.minor_sum, {P("y")}));

    // a split pair, with the unit combination re-verified
    auto a2 = parse_matrix(R, "1; x");
    auto b2 = parse_matrix(R, "-x, 1");
    auto s = surjective_exact_pair(R, a2, b2);
    CHECK(s.exact);
    REQUIRE(s.unit_coeffs.has_value());
    {
        auto ord = R.natural();
        Poly<Rationals> sum;
        for (size_t i = 0; i < s.minor_sum.size(); ++i)
            sum = poly_add(R.K, ord, sum,
                           poly_mul(R.K, ord, s.unit_coeffs->gen_coeffs[i], s.minor_sum[i]));
        CHECK(poly_eq(R.K, sum, P("1")));
    }

    CHECK_THROWS_WITH(surjective_exact_pair(R, parse_matrix(R, "1"), parse_matrix(R, "1")),
                      doctest::Contains("not a complex"));
}

TEST_CASE("rank criterion for complexes") {
    auto R = make_ring(Rationals{}, {"x", "y"});

    auto split = surjective_exact_complex(R, make_free_complex(R, {testsup::mat_identity(R, 2)}));
    CHECK(split.exact);
    CHECK(split.expected_ranks == std::vector<int>{2, 0});

    auto kos = surjective_exact_complex(
        R, make_free_complex(R, {parse_matrix(R, "x, y"), parse_matrix(R, "y; -x")}));
    CHECK(!kos.exact);
    CHECK(kos.fail_spot == 0);
    CHECK(kos.expected_ranks == std::vector<int>{1, 1, 0});

    // surjection window alone leaves a free kernel unaccounted for
    CHECK_THROWS_WITH(
        surjective_exact_complex(R, make_free_complex(R, {parse_matrix(R, "x, y")})),
        doctest::Contains("rank bookkeeping"));

    // exact split pairs embed as exact complexes
    testsup::Rng rng(661);
    for (int it = 0; it < 10; ++it) {
        auto pr = testsup::random_split_pair(rng, R, 3, 0);
        auto pair = surjective_exact_pair(R, pr.alpha, pr.beta);
        REQUIRE(pair.exact);
        if (pr.alpha.cols == 0 && pr.beta.rows == 0) continue;
        std::vector<Mat<Rationals>> mats;
        if (pr.beta.rows > 0) mats.push_back(pr.beta);
        mats.push_back(pr.alpha);
        if (pr.alpha.cols == 0) mats.pop_back();
        auto cc = surjective_exact_complex(R, make_free_complex(R, mats));
        CHECK(cc.exact);
    }
}

TEST_CASE("phantom exactness at the middle spot") {
    auto R = make_ring(Rationals{}, {"x", "y"});

    // Koszul: module-exact, so phantom for the identity closure
    auto alpha = parse_matrix(R, "y; -x");
    auto beta = parse_matrix(R, "x, y");
    auto ph = phantom_exact(R, alpha, beta, PhantomClosure::module);
    CHECK(ph.verdict == Verdict::member);
    CHECK(!ph.kernel.empty());
    for (auto v : ph.per_gen) CHECK(v == Verdict::member);

    // 0 -> R --y--> R: kernel of y is zero, nothing to test
    auto triv = phantom_exact(R, parse_matrix(R, "0"), parse_matrix(R, "y"),
                              PhantomClosure::module);
    CHECK(triv.verdict == Verdict::member);
    CHECK(triv.kernel.empty());

    // x*e_1 is in the kernel of [x, y] mod x*y but not in the span of (y, -x)
    auto Qv = parse_ring("Q[x,y]/(x*y)");
    auto& Rq = std::get<Ring<Rationals>>(Qv);
    auto phq = phantom_exact(Rq, parse_matrix(Rq, "y; -x"), parse_matrix(Rq, "x, y"),
                             PhantomClosure::module);
    CHECK(phq.verdict == Verdict::not_member);

    // pair-exactness implies radical-phantom exactness
    testsup::Rng rng(662);
    for (int it = 0; it < 6; ++it) {
        auto pr = testsup::random_split_pair(rng, R, 2 + it % 2, 0);
        REQUIRE(surjective_exact_pair(R, pr.alpha, pr.beta).exact);
        auto rp = phantom_exact(R, pr.alpha, pr.beta, PhantomClosure::radical);
        CHECK(rp.verdict == Verdict::member);
    }
}

TEST_CASE("Frobenius-phantom Fermat complex") {
    SearchBounds b;
    b.e_max = 3;

    auto R5v = parse_ring("F(5)[z,w,v]/(z^3 + w^3 + v^3)");
    auto& R5 = std::get<Ring<PrimeField>>(R5v);
    auto alpha5 = parse_matrix(R5, "z, w");
    auto beta5 = testsup::mat_identity(R5, 1);
    auto target5 = parse_matrix(R5, "z, w, v^2");
    auto ph5 = phantom_exact(R5, alpha5, beta5, PhantomClosure::frobenius, b, &target5);
    CHECK(ph5.verdict == Verdict::member);
    CHECK(ph5.level == 1);

    auto R7v = parse_ring("F(7)[z,w,v]/(z^3 + w^3 + v^3)");
    auto& R7 = std::get<Ring<PrimeField>>(R7v);
    auto alpha7 = parse_matrix(R7, "z, w");
    auto beta7 = testsup::mat_identity(R7, 1);
    auto target7 = parse_matrix(R7, "z, w, v^2");
    auto ph7 = phantom_exact(R7, alpha7, beta7, PhantomClosure::frobenius, b, &target7);
    CHECK(ph7.verdict == Verdict::not_found_within_bound);
}

TEST_CASE("pair verdict matches the pointwise oracle") {
    for (uint64_t p : {2ull, 3ull}) {
        auto R = make_ring(PrimeField{p}, {"x", "y"});
        oracle::GFBase Kp(p);
        oracle::GFQuad Kq(p);
        testsup::Rng rng(663 + p);
        for (int it = 0; it < 12; ++it) {
            auto pr = testsup::random_split_pair(rng, R, 2 + it % 2, it % 3);
            auto verdict = surjective_exact_pair(R, pr.alpha, pr.beta).exact;
            bool everywhere = true;
            for (const auto& pt : oracle::variety_points(Kp, R))
                if (!oracle::point_exact(Kp, oracle::eval_mat(Kp, pr.alpha, pt),
                                         oracle::eval_mat(Kp, pr.beta, pt)))
                    everywhere = false;
            for (const auto& pt : oracle::variety_points(Kq, R))
                if (!oracle::point_exact(Kq, oracle::eval_mat(Kq, pr.alpha, pt),
                                         oracle::eval_mat(Kq, pr.beta, pt)))
                    everywhere = false;
            CAPTURE(it);
            CHECK(verdict == everywhere);
        }
    }
}

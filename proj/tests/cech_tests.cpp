#include "doctest.h"

#include <numeric>

#include "cca/cech.hpp"
#include "support.hpp"

using namespace cca;

namespace {

template <class F>
ScalarMat<F> smat(const F& K, int rows, int cols, std::vector<long> entries) {
    ScalarMat<F> m(K, rows, cols);
    for (size_t i = 0; i < entries.size(); ++i) m.a[i] = K.from_int(entries[i]);
    return m;
}

// Random invertible matrix with its exact inverse, built from row
// transvections and swaps mirrored as column operations on the inverse.
template <class F>
std::pair<ScalarMat<F>, ScalarMat<F>> random_iso_pair(testsup::Rng& rng, const F& K, int n,
                                                      int steps = 12) {
    auto m = scalar_identity(K, n);
    auto inv = scalar_identity(K, n);
    for (int s = 0; s < steps && n > 1; ++s) {
        int i = testsup::uniform(rng, 0, n - 1), j = testsup::uniform(rng, 0, n - 1);
        if (i == j) continue;
        if (testsup::uniform(rng, 0, 3) == 0) {
            for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
            for (int r = 0; r < n; ++r) std::swap(inv.at(r, i), inv.at(r, j));
        } else {
            auto f = K.from_int(testsup::uniform(rng, -2, 2));
            for (int c = 0; c < n; ++c) m.at(i, c) = K.add(m.at(i, c), K.mul(f, m.at(j, c)));
            for (int r = 0; r < n; ++r) inv.at(r, j) = K.sub(inv.at(r, j), K.mul(f, inv.at(r, i)));
        }
    }
    return {std::move(m), std::move(inv)};
}

template <class F>
ScalarMat<F> random_iso(testsup::Rng& rng, const F& K, int n, int steps = 12) {
    return random_iso_pair(rng, K, n, steps).first;
}

// The two-axes syzygy fixture: sections of the annihilator of u+v on the
// fiber powers of the normalization of K[u,v]/(uv). Level-1 coordinates are
// the values at the two off-diagonal points, level-2 coordinates the values
// at the six isolated triple points in lexicographic order.
FaceData<Rationals> two_axes_faces() {
    Rationals K;
    FaceData<Rationals> F{K, {}};
    F.faces.push_back({ScalarMat<Rationals>(K, 2, 0), ScalarMat<Rationals>(K, 2, 0)});
    // rows: P112, P121, P122, P211, P212, P221; columns: value at P12, at P21
    auto rho0 = smat(K, 6, 2, {1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1}); // drop first index
    auto rho1 = smat(K, 6, 2, {1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1}); // drop middle index
    auto rho2 = smat(K, 6, 2, {0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0}); // drop last index
    F.faces.push_back({rho0, rho1, rho2});
    return F;
}

} // namespace

TEST_CASE("two-axes fixture has one-dimensional first cohomology") {
    auto F = two_axes_faces();
    auto C = from_faces(F);
    REQUIRE(C.dims == std::vector<int>{0, 2, 6});

    // the only cocycle condition identifies the two off-diagonal values
    auto D1 = C.differentials[1];
    auto expect = smat(F.K, 6, 2, {0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0});
    CHECK(scalar_eq(F.K, D1, expect));

    auto h = cohomology_dims(C);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);
    CHECK(h[2] == 5);

    // assembling the same complex directly gives the same answers
    auto direct = make_cech(F.K, C.dims, C.differentials);
    CHECK(cohomology_dims(direct) == h);
}

TEST_CASE("zero and identity complexes") {
    Rationals K;
    std::vector<ScalarMat<Rationals>> zeros = {ScalarMat<Rationals>(K, 2, 3),
                                               ScalarMat<Rationals>(K, 4, 2)};
    auto Z = make_cech(K, {3, 2, 4}, zeros);
    CHECK(cohomology_dims(Z) == std::vector<int>{3, 2, 4});

    auto I2 = scalar_identity(K, 2);
    auto E = make_cech(K, {2, 2}, {I2});
    CHECK(cohomology_dims(E) == std::vector<int>{0, 0});

    auto single = make_cech(K, {5}, {});
    CHECK(cohomology_dims(single) == std::vector<int>{5});
}

TEST_CASE("complex validation rejects bad data") {
    Rationals K;
    auto I2 = scalar_identity(K, 2);
    CHECK_THROWS_WITH(make_cech(K, {2, 2, 2}, {I2, I2}),
                      "not a complex: consecutive differentials do not compose to zero");
    CHECK_THROWS_AS(make_cech(K, {2, 3}, {I2}), std::invalid_argument);
    CHECK_THROWS_AS(make_cech(K, {2, 2, 2}, {I2}), std::invalid_argument);
    CHECK_THROWS_AS(make_cech(K, {}, {}), std::invalid_argument);
}

TEST_CASE("face data assembles alternating sums") {
    Rationals K;
    auto A = smat(K, 2, 2, {1, 2, 0, 1});
    FaceData<Rationals> twin{K, {{A, A}, {A, A}}};
    auto C = from_faces(twin);
    CHECK(scalar_is_zero(K, C.differentials[0]));
    CHECK(scalar_is_zero(K, C.differentials[1]));
    CHECK(cohomology_dims(C) == std::vector<int>{2, 2, 2});

    auto I2 = scalar_identity(K, 2);
    FaceData<Rationals> bad{K, {{I2}, {I2}}};
    CHECK_THROWS_WITH(from_faces(bad),
                      "face data violates the simplicial identities: d*d is nonzero");

    FaceData<Rationals> ragged{K, {{I2, smat(K, 1, 2, {1, 0})}}};
    CHECK_THROWS_AS(from_faces(ragged), std::invalid_argument);
    CHECK_THROWS_AS(from_faces(FaceData<Rationals>{K, {}}), std::invalid_argument);
}

TEST_CASE("collapse pattern of a one-map cover") {
    Rationals K;
    testsup::Rng rng(720);
    for (int trial = 0; trial < 3; ++trial) {
        int n = 1 + trial;
        auto M = trial == 0 ? scalar_identity(K, n) : random_iso(rng, K, n);
        // levels 0..2 of the cover complex: 2, 3, then 4 equal faces
        FaceData<Rationals> F{K, {{M, M}, {M, M, M}}};
        CHECK(collapse_check(F));
        auto h = cohomology_dims(from_faces(F));
        CHECK(h == std::vector<int>{n, 0, 0});

        // truncating after an even differential leaves top cohomology
        F.faces.push_back({M, M, M, M});
        CHECK(!collapse_check(F));
    }

    auto I2 = scalar_identity(K, 2);
    auto J = smat(K, 2, 2, {1, 1, 0, 1});
    FaceData<Rationals> unequal{K, {{I2, J}}};
    CHECK_THROWS_AS(collapse_check(unequal), std::invalid_argument);
    FaceData<Rationals> singular{K, {{smat(K, 2, 2, {1, 0, 0, 0}), smat(K, 2, 2, {1, 0, 0, 0})}}};
    CHECK_THROWS_AS(collapse_check(singular), std::invalid_argument);
}

TEST_CASE("random complexes obey the rank bookkeeping") {
    PrimeField K(5);
    testsup::Rng rng(721);
    for (int it = 0; it < 8; ++it) {
        int levels = 3 + it % 3;
        std::vector<int> dims(levels);
        for (auto& d : dims) d = testsup::uniform(rng, 1, 4);
        // pick ranks fitting into adjacent levels, then conjugate the block model
        std::vector<int> ranks(levels - 1);
        int prev = 0;
        for (int k = 0; k + 1 < levels; ++k) {
            int cap = std::min(dims[k] - prev, dims[k + 1]);
            ranks[k] = cap <= 0 ? 0 : testsup::uniform(rng, 0, cap);
            prev = ranks[k];
        }
        // block model with known ranks, conjugated by exact iso pairs
        std::vector<std::pair<ScalarMat<PrimeField>, ScalarMat<PrimeField>>> T;
        for (int k = 0; k < levels; ++k) T.push_back(random_iso_pair(rng, K, dims[k]));
        std::vector<ScalarMat<PrimeField>> diffs;
        for (int k = 0; k + 1 < levels; ++k) {
            ScalarMat<PrimeField> base(K, dims[k + 1], dims[k]);
            for (int i = 0; i < ranks[k]; ++i) base.at(i, dims[k] - ranks[k] + i) = K.one();
            diffs.push_back(scalar_mul(K, T[k + 1].first, scalar_mul(K, base, T[k].second)));
        }
        auto C = make_cech(K, dims, diffs);
        auto h = cohomology_dims(C);
        int euler_h = 0, euler_d = 0;
        for (int k = 0; k < levels; ++k) {
            int sign = k % 2 == 0 ? 1 : -1;
            euler_h += sign * h[k];
            euler_d += sign * dims[k];
            int out = k + 1 < levels ? ranks[k] : 0;
            int in = k > 0 ? ranks[k - 1] : 0;
            CHECK(h[k] == dims[k] - out - in);
        }
        CHECK(euler_h == euler_d);
    }
}

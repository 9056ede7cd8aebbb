#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "keplerfock/dirac.hpp"

using namespace keplerfock;
using namespace keplerfock::dirac;

TEST_CASE("Dirac spectra per block") {
    SUBCASE("j = 0: only +3/2 with multiplicity 2") {
        const auto d = build_dirac(HalfInt(0));
        REQUIRE(d.spectrum.size() == 1);
        CHECK(d.spectrum[0].first.twice() == 3);
        CHECK(d.spectrum[0].second == 2);
    }
    SUBCASE("j = 1/2: {5/2: 6, -3/2: 2}") {
        const auto d = build_dirac(HalfInt(1));
        REQUIRE(d.spectrum.size() == 2);
        CHECK(d.spectrum[0].first.twice() == 5);
        CHECK(d.spectrum[0].second == 6);
        CHECK(d.spectrum[1].first.twice() == -3);
        CHECK(d.spectrum[1].second == 2);
    }
    SUBCASE("j = 1: {7/2: 12, -5/2: 6}, total 18 = 2n^2") {
        const auto d = build_dirac(HalfInt(2));
        REQUIRE(d.spectrum.size() == 2);
        CHECK(d.spectrum[0].first.twice() == 7);
        CHECK(d.spectrum[0].second == 12);
        CHECK(d.spectrum[1].first.twice() == -5);
        CHECK(d.spectrum[1].second == 6);
        CHECK(d.dim == 18);
    }
    SUBCASE("multiplicity formula (lambda+1/2)(lambda-1/2) for all j <= 7/2") {
        for (int twice_j = 0; twice_j <= 7; ++twice_j) {
            const auto d = build_dirac(HalfInt(twice_j));
            for (const auto& [lambda, mult] : d.spectrum) {
                CHECK(lambda.twice() % 2 != 0); // in Z + 1/2
                CHECK(lambda.twice() != 1);
                CHECK(lambda.twice() != -1);
                const double lv = lambda.value();
                CHECK(mult == doctest::Approx((lv + 0.5) * (lv - 0.5)));
            }
        }
    }
}

TEST_CASE("Laplacian eigenvalues n^2 - 1") {
    CHECK(laplacian_eigenvalue(HalfInt(0)) == 0);
    CHECK(laplacian_eigenvalue(HalfInt(1)) == 3);
    CHECK(laplacian_eigenvalue(HalfInt(3)) == 15);
    for (int twice_j = 0; twice_j <= 5; ++twice_j) {
        const auto d = build_dirac(HalfInt(twice_j));
        const int expected = laplacian_eigenvalue(HalfInt(twice_j));
        CHECK((d.delta - static_cast<double>(expected) * identity(d.dim)).norm() < 1e-10);
    }
}

TEST_CASE("operator identities") {
    for (int twice_j = 0; twice_j <= 5; ++twice_j) {
        const auto d = build_dirac(HalfInt(twice_j));
        CHECK((d.d_op * d.d_op - (d.delta - 2.0 * d.d_op)).norm() < 1e-10);
        const CMatrix shifted = d.slash_d - 0.5 * identity(d.dim);
        CHECK((shifted * shifted - (d.delta + identity(d.dim))).norm() < 1e-10);
        CHECK((d.slash_d - d.slash_d.adjoint()).norm() < 1e-12);
    }
}

TEST_CASE("hydrogen Hamiltonian via both routes") {
    for (int twice_j : {0, 1, 2}) {
        const auto d = build_dirac(HalfInt(twice_j));
        const int n = twice_j + 1;
        CHECK((d.h + 1.0 / (2.0 * n * n) * identity(d.dim)).norm() < 1e-10);
        CHECK((d.h - kron(su2rep::h0_block(HalfInt(twice_j)), identity(2))).norm() < 1e-10);
    }
}

TEST_CASE("snapping rejects a perturbed operator") {
    auto d = build_dirac(HalfInt(1));
    CMatrix bad = d.slash_d;
    bad(0, 0) += 0.01;
    CHECK_THROWS(half_integer_spectrum(bad, 1e-6));
}

TEST_CASE("dagger") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int twice_j : {0, 1, 2, 3}) {
        const auto d = build_dirac(HalfInt(twice_j));
        SUBCASE("antiunitary quaternionic structure") {
            for (int trial = 0; trial < 20; ++trial) {
                CVector psi(d.dim);
                for (int i = 0; i < d.dim; ++i) psi(i) = Complex(normal(rng), normal(rng));
                // conjugate-linear, norm preserving, squares to -1
                CHECK((dagger(CVector(Complex(0, 1) * psi)) +
                       Complex(0, 1) * dagger(psi)).norm() < 1e-13);
                CHECK(dagger(psi).norm() == doctest::Approx(psi.norm()).epsilon(1e-13));
                CHECK((dagger(dagger(psi)) + psi).norm() < 1e-13);
            }
        }
        SUBCASE("-dagger slash_d dagger is isospectral to slash_d") {
            CMatrix conjugated(d.dim, d.dim);
            for (int c = 0; c < d.dim; ++c) {
                CVector basis = CVector::Zero(d.dim);
                basis(c) = 1.0;
                conjugated.col(c) = -dagger(CVector(d.slash_d * dagger(basis)));
            }
            CHECK(half_integer_spectrum(conjugated, 1e-6) == d.spectrum);
        }
    }
}

TEST_CASE("spectral symmetry is a cross-block pairing") {
    // F_{n+1/2} in block j = (n-1)/2 pairs with F_{-n-1/2} in block j + 1/2:
    // dim F_{n+1/2} = n(n+1) equals the negative multiplicity (n+1)n there.
    for (int twice_j = 0; twice_j <= 5; ++twice_j) {
        const auto here = build_dirac(HalfInt(twice_j));
        const auto next = build_dirac(HalfInt(twice_j + 1));
        const int n = twice_j + 1;
        int positive_mult = 0, negative_mult = 0;
        for (const auto& [lambda, mult] : here.spectrum)
            if (lambda.twice() == 2 * n + 1) positive_mult = mult;
        for (const auto& [lambda, mult] : next.spectrum)
            if (lambda.twice() == -(2 * n + 1)) negative_mult = mult;
        CHECK(positive_mult == n * (n + 1));
        CHECK(negative_mult == positive_mult);
    }
}

TEST_CASE("eigenspace extraction") {
    const auto d = build_dirac(HalfInt(1));
    const CMatrix plus = eigenspace(d, HalfInt(5));
    CHECK(plus.cols() == 6);
    CHECK((d.slash_d * plus - 2.5 * plus).norm() < 1e-10);
    const CMatrix minus = eigenspace(d, HalfInt(-3));
    CHECK(minus.cols() == 2);
    CHECK((d.slash_d * minus + 1.5 * minus).norm() < 1e-10);
}

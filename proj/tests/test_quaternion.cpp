#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "keplerfock/quaternion.hpp"

using namespace keplerfock;
using namespace keplerfock::quaternion;

TEST_CASE("quaternion algebra") {
    const Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(((i * j) - k).norm() == 0.0);
    CHECK(((j * k) - i).norm() == 0.0);
    CHECK(((k * i) - j).norm() == 0.0);
    CHECK(((i * i) + Quat{1, 0, 0, 0}).norm() == 0.0);
    const Quat e = unit_exp(0, 0.3);
    CHECK(e.w == doctest::Approx(std::cos(0.3)));
    CHECK(e.x == doctest::Approx(std::sin(0.3)));
    CHECK(e.norm() == doctest::Approx(1.0));
}

TEST_CASE("monomial bookkeeping") {
    for (int k = 0; k <= 6; ++k)
        CHECK(static_cast<int>(monomial_exponents(k).size()) == monomial_count(k));
    const auto exps = monomial_exponents(2);
    CHECK(exps.front() == std::array<int, 4>{2, 0, 0, 0});
    CHECK(exps.back() == std::array<int, 4>{0, 0, 0, 2});
    for (const auto& e : exps) CHECK(e[0] + e[1] + e[2] + e[3] == 2);
}

TEST_CASE("polynomial evaluation") {
    // psi(q) = q0^2 * 1 + q1 q2 * j
    HPoly psi;
    psi.degree = 2;
    psi.coeff.assign(monomial_count(2), Quat{});
    const auto exps = monomial_exponents(2);
    for (std::size_t a = 0; a < exps.size(); ++a) {
        if (exps[a] == std::array<int, 4>{2, 0, 0, 0}) psi.coeff[a] = {1, 0, 0, 0};
        if (exps[a] == std::array<int, 4>{0, 1, 1, 0}) psi.coeff[a] = {0, 0, 1, 0};
    }
    const Quat value = psi.eval({0.5, 2.0, 3.0, -1.0});
    CHECK(value.w == doctest::Approx(0.25));
    CHECK(value.y == doctest::Approx(6.0));
}

TEST_CASE("Cauchy-Riemann kernel dimensions (k+1)(k+2)") {
    CHECK(uk_dimension(0) == 2);
    CHECK(uk_dimension(1) == 6);
    CHECK(uk_dimension(2) == 12);
    CHECK(uk_dimension(3) == 20);
    CHECK(uk_dimension(6) == 56);
    for (int k = 0; k <= 6; ++k) CHECK(uk_dimension(k) == (k + 1) * (k + 2));
}

TEST_CASE("kernel elements are regular and componentwise harmonic") {
    for (int k = 1; k <= 4; ++k) {
        const auto basis = cr_kernel_basis(k);
        CHECK(static_cast<int>(basis.size()) == 2 * (k + 1) * (k + 2));
        const RMatrix lap = laplacian4_matrix(k);
        for (const auto& psi : basis) {
            CHECK(cr_residual(psi) < 1e-12);
            RVector v(4 * psi.coeff.size());
            for (std::size_t a = 0; a < psi.coeff.size(); ++a) {
                v(4 * a) = psi.coeff[a].w;
                v(4 * a + 1) = psi.coeff[a].x;
                v(4 * a + 2) = psi.coeff[a].y;
                v(4 * a + 3) = psi.coeff[a].z;
            }
            CHECK((lap * v).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("cr_matrix reproduces analytic derivatives") {
    // psi(q) = q0 q1 * k has dbar psi = q1 k + q0 (i k) = q1 k - q0 j
    HPoly psi;
    psi.degree = 2;
    psi.coeff.assign(monomial_count(2), Quat{});
    const auto exps2 = monomial_exponents(2);
    for (std::size_t a = 0; a < exps2.size(); ++a)
        if (exps2[a] == std::array<int, 4>{1, 1, 0, 0}) psi.coeff[a] = {0, 0, 0, 1};
    RVector v = RVector::Zero(4 * monomial_count(2));
    for (std::size_t a = 0; a < psi.coeff.size(); ++a) {
        v(4 * a) = psi.coeff[a].w;
        v(4 * a + 1) = psi.coeff[a].x;
        v(4 * a + 2) = psi.coeff[a].y;
        v(4 * a + 3) = psi.coeff[a].z;
    }
    const RVector image = cr_matrix(2) * v;
    const auto exps1 = monomial_exponents(1);
    for (std::size_t b = 0; b < exps1.size(); ++b) {
        Quat expected{};
        if (exps1[b] == std::array<int, 4>{0, 1, 0, 0}) expected = {0, 0, 0, 1}; // q1 k
        if (exps1[b] == std::array<int, 4>{1, 0, 0, 0}) expected = {0, 0, -1, 0}; // -q0 j
        CHECK(image(4 * b) == doctest::Approx(expected.w));
        CHECK(image(4 * b + 1) == doctest::Approx(expected.x));
        CHECK(image(4 * b + 2) == doctest::Approx(expected.y));
        CHECK(image(4 * b + 3) == doctest::Approx(expected.z));
    }
}

TEST_CASE("a known regular linear polynomial") {
    // psi(q) = q1 - q0 i solves dbar psi = 0
    HPoly psi;
    psi.degree = 1;
    psi.coeff.assign(4, Quat{});
    const auto exps = monomial_exponents(1);
    for (std::size_t a = 0; a < exps.size(); ++a) {
        if (exps[a] == std::array<int, 4>{1, 0, 0, 0}) psi.coeff[a] = {0, -1, 0, 0};
        if (exps[a] == std::array<int, 4>{0, 1, 0, 0}) psi.coeff[a] = {1, 0, 0, 0};
    }
    CHECK(cr_residual(psi) < 1e-15);
    CHECK(dirac_eigenvalue_check(psi, 12, 1e-4, 99) < 1e-6);
}

TEST_CASE("pointwise Dirac eigenvalue D psi = k psi on S^3") {
    SUBCASE("constants have eigenvalue 0") {
        HPoly constant;
        constant.degree = 0;
        constant.coeff = {Quat{1, 0, 0, 0}};
        CHECK(dirac_eigenvalue_check(constant, 10, 1e-4, 7) < 1e-8);
    }
    SUBCASE("kernel basis elements at degrees 1..3") {
        for (int k = 1; k <= 3; ++k) {
            const auto basis = cr_kernel_basis(k);
            CHECK(dirac_eigenvalue_check(basis.front(), 25, 1e-4, 11) < 1e-5);
            CHECK(dirac_eigenvalue_check(basis.back(), 25, 1e-4, 13) < 1e-4);
        }
    }
    SUBCASE("random kernel combination at degree 3") {
        const auto basis = cr_kernel_basis(3);
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        HPoly mix;
        mix.degree = 3;
        mix.coeff.assign(monomial_count(3), Quat{});
        for (const auto& psi : basis) {
            const double w = u(rng);
            for (std::size_t a = 0; a < mix.coeff.size(); ++a)
                mix.coeff[a] = mix.coeff[a] + w * psi.coeff[a];
        }
        CHECK(dirac_eigenvalue_check(mix, 25, 1e-4, 19) < 1e-4);
    }
    SUBCASE("non-regular input is rejected") {
        HPoly bad;
        bad.degree = 1;
        bad.coeff.assign(4, Quat{});
        bad.coeff[0] = {1, 0, 0, 0}; // psi(q) = q0, dbar psi = 1 != 0
        CHECK_THROWS(dirac_eigenvalue_check(bad, 5, 1e-4, 23));
    }
}

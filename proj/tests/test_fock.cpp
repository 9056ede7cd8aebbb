#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "keplerfock/fock.hpp"

using namespace keplerfock;
using namespace keplerfock::fock;

namespace {

CMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
    return CMatrix(Eigen::HouseholderQR<CMatrix>(m).householderQ());
}

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
    return CMatrix(0.5 * (m + m.adjoint()));
}

} // namespace

TEST_CASE("sector enumeration") {
    SUBCASE("counts C(size, N)") {
        CHECK(sector_basis(4, 0).size() == 1);
        CHECK(sector_basis(4, 2).size() == 6);
        CHECK(sector_basis(4, 4).size() == 1);
        CHECK(sector_basis(8, 3).size() == 56);
        CHECK_THROWS(sector_basis(4, 5));
        CHECK_THROWS(sector_basis(4, -1));
    }
    SUBCASE("colex order and ranks") {
        const auto sets = sector_index_sets(5, 3);
        CHECK(sets.front() == std::vector<int>{0, 1, 2});
        CHECK(sets[1] == std::vector<int>{0, 1, 3});
        CHECK(sets.back() == std::vector<int>{2, 3, 4});
        for (std::size_t i = 0; i < sets.size(); ++i)
            CHECK(colex_rank(sets[i]) == static_cast<std::int64_t>(i));
    }
    SUBCASE("bitmask round trip") {
        const auto states = sector_basis(70, 1);
        CHECK(states.size() == 70);
        CHECK(states[69].test(69));
        CHECK(states[69].count() == 1);
        CHECK(states[69].indices() == std::vector<int>{69});
    }
}

TEST_CASE("Gamma on sectors") {
    std::mt19937_64 rng(51);
    SUBCASE("Gamma(I) = I and N = 1 is the matrix itself") {
        const CMatrix u = random_unitary(4, rng);
        CHECK((gamma_sector(u, 1) - u).norm() < 1e-14);
        for (int n = 0; n <= 4; ++n) {
            const CMatrix g = gamma_sector(identity(4), n);
            CHECK((g - identity(static_cast<int>(g.rows()))).norm() < 1e-14);
        }
    }
    SUBCASE("functoriality, unitarity, inverses") {
        for (int n : {1, 2, 3}) {
            const CMatrix u = random_unitary(5, rng), v = random_unitary(5, rng);
            const CMatrix gu = gamma_sector(u, n), gv = gamma_sector(v, n);
            CHECK((gamma_sector(CMatrix(u * v), n) - gu * gv).norm() < 1e-10);
            CHECK((gu * gu.adjoint() - identity(static_cast<int>(gu.rows()))).norm() < 1e-10);
            CHECK((gamma_sector(CMatrix(u.inverse()), n) - gu.inverse()).norm() < 1e-9);
        }
    }
    SUBCASE("dimension mismatch rejected") {
        CMatrix bad(2, 3);
        bad.setZero();
        CHECK_THROWS(gamma_sector(bad, 1));
    }
}

TEST_CASE("dGamma on sectors") {
    SUBCASE("additivity on eigenvector wedges") {
        CMatrix a = CMatrix::Zero(4, 4);
        a.diagonal() << 1.0, 2.0, 3.0, 4.0;
        const CMatrix dg = dgamma_sector(a, 2);
        const auto sets = sector_index_sets(4, 2);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            CHECK(dg(i, i).real() == doctest::Approx(sets[i][0] + sets[i][1] + 2.0));
            for (std::size_t k = 0; k < sets.size(); ++k)
                if (k != i) CHECK(std::abs(dg(k, i)) < 1e-15);
        }
    }
    SUBCASE("two electrons in the lowest hydrogen shell have energy -1") {
        // n <= 2 orbital basis: two orbitals at -1/2, eight at -1/8
        CMatrix h = CMatrix::Zero(10, 10);
        for (int i = 0; i < 2; ++i) h(i, i) = -0.5;
        for (int i = 2; i < 10; ++i) h(i, i) = -0.125;
        const CMatrix dg = dgamma_sector(h, 2);
        CHECK(dg(0, 0).real() == doctest::Approx(-1.0)); // state {0,1}
    }
    SUBCASE("self-adjointness and the non-self-adjoint rejection") {
        std::mt19937_64 rng(52);
        const CMatrix a = random_hermitian(5, rng);
        const CMatrix dg = dgamma_sector(a, 2);
        CHECK((dg - dg.adjoint()).norm() < 1e-12);
        CMatrix bad = a;
        bad(0, 1) += Complex(0.5, 0.5);
        CHECK_THROWS(dgamma_sector(bad, 2));
    }
    SUBCASE("matrix elements match the assembled sector") {
        std::mt19937_64 rng(53);
        const CMatrix a = random_hermitian(6, rng);
        const CMatrix dg = dgamma_sector(a, 3);
        const auto sets = sector_index_sets(6, 3);
        for (std::size_t t = 0; t < sets.size(); ++t)
            for (std::size_t s = 0; s < sets.size(); ++s)
                CHECK(std::abs(dg(t, s) - dgamma_element(a, sets[t], sets[s])) < 1e-13);
    }
}

TEST_CASE("exponentiation identity exp(it dGamma(A)) = Gamma(exp(itA))") {
    std::mt19937_64 rng(54);
    const CMatrix a = random_hermitian(4, rng);
    CHECK(exponentiation_residual(a, 2, {0.3, 1.0}) < 1e-8);
    CHECK(exponentiation_residual(a, 3, {0.3, 1.0}) < 1e-8);
}

TEST_CASE("second-quantized identities on the truncated realified space") {
    SUBCASE("vacuum sector is trivial") {
        const auto report = second_quantized_equivalence(HalfInt(1), 0, 3, 61);
        CHECK(report.intertwining == 0.0);
        CHECK(report.dgamma_commutation == 0.0);
    }
    SUBCASE("one-particle sector reduces to the single-particle identities") {
        const auto report = second_quantized_equivalence(HalfInt(2), 1, 10, 62);
        CHECK(report.intertwining < 1e-7);
        CHECK(report.dgamma_commutation < 1e-7);
        CHECK(report.functoriality < 1e-7);
    }
    SUBCASE("j_max = 1/2, sectors 2 and 3, dense") {
        for (int n : {2, 3}) {
            const auto report = second_quantized_equivalence(HalfInt(1), n, 10, 63 + n);
            CHECK(report.intertwining < 1e-7);
            CHECK(report.dgamma_commutation < 1e-7);
            CHECK(report.functoriality < 1e-7);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "keplerfock/su2rep.hpp"

using namespace keplerfock;
using namespace keplerfock::su2rep;

namespace {

CMatrix casimir(const std::array<CMatrix, 3>& ops) {
    return ops[0] * ops[0] + ops[1] * ops[1] + ops[2] * ops[2];
}

} // namespace

TEST_CASE("spin matrices") {
    SUBCASE("spin 1/2 is half the Pauli triple") {
        const auto ops = spin_matrices(HalfInt(1));
        CHECK(ops[0](0, 1) == Complex(0.5, 0));
        CHECK(ops[1](0, 1) == Complex(0, -0.5));
        CHECK(ops[1](1, 0) == Complex(0, 0.5));
        CHECK(ops[2](0, 0) == Complex(0.5, 0));
        CHECK(ops[2](1, 1) == Complex(-0.5, 0));
    }
    SUBCASE("spin 1 third component is diag(1,0,-1)") {
        const auto ops = spin_matrices(HalfInt(2));
        CHECK(ops[2](0, 0) == Complex(1, 0));
        CHECK(ops[2](1, 1) == Complex(0, 0));
        CHECK(ops[2](2, 2) == Complex(-1, 0));
    }
    SUBCASE("spin 3/2 Casimir is 15/4") {
        const auto ops = spin_matrices(HalfInt(3));
        CHECK((casimir(ops) - 3.75 * identity(4)).norm() < 1e-12);
    }
    SUBCASE("ladder commutators close for a range of j") {
        for (int twice_j = 0; twice_j <= 7; ++twice_j) {
            const auto ops = spin_matrices(HalfInt(twice_j));
            CHECK((commutator(ops[0], ops[1]) - Complex(0, 1) * ops[2]).norm() < 1e-12);
            CHECK((commutator(ops[1], ops[2]) - Complex(0, 1) * ops[0]).norm() < 1e-12);
            CHECK((commutator(ops[2], ops[0]) - Complex(0, 1) * ops[1]).norm() < 1e-12);
        }
    }
}

TEST_CASE("block construction") {
    SUBCASE("j = 0 with spin: only the spin factor acts") {
        const auto block = build_block(HalfInt(0), true);
        CHECK(block.dim == 2);
        for (int k = 0; k < 3; ++k) {
            CHECK(block.a[k].norm() == 0.0);
            CHECK(block.b[k].norm() == 0.0);
            CHECK(block.l[k].norm() == 0.0);
            CHECK((block.jtot[k] - block.s[k]).norm() == 0.0);
        }
    }
    SUBCASE("j = 1/2 with spin: dim 8, A^2 = 3/4") {
        const auto block = build_block(HalfInt(1), true);
        CHECK(block.dim == 8);
        CHECK((block.a2 - 0.75 * identity(8)).norm() < 1e-12);
        CHECK((block.a2 - block.b2).norm() < 1e-12);
    }
    SUBCASE("commutation relations and cross commutators") {
        const auto block = build_block(HalfInt(2), true);
        CHECK((commutator(block.a[0], block.a[1]) - Complex(0, 1) * block.a[2]).norm() < 1e-12);
        CHECK((commutator(block.b[0], block.b[1]) - Complex(0, 1) * block.b[2]).norm() < 1e-12);
        CHECK((commutator(block.s[0], block.s[1]) - Complex(0, 1) * block.s[2]).norm() < 1e-12);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                CHECK(commutator(block.a[i], block.b[k]).norm() < 1e-12);
                CHECK(commutator(block.a[i], block.s[k]).norm() < 1e-12);
                CHECK(commutator(block.b[i], block.s[k]).norm() < 1e-12);
            }
    }
}

TEST_CASE("hydrogen block spectrum -1/(2n^2)") {
    CHECK((h0_block(HalfInt(0)) + 0.5 * identity(1)).norm() < 1e-13);
    CHECK((h0_block(HalfInt(1)) + 0.125 * identity(4)).norm() < 1e-13);
    CHECK((h0_block(HalfInt(3)) + (1.0 / 32.0) * identity(16)).norm() < 1e-13);
}

TEST_CASE("Clebsch-Gordan decomposition of V_j (x) V_j") {
    SUBCASE("j = 0") {
        const auto cg = clebsch_gordan_spectrum(HalfInt(0));
        REQUIRE(cg.size() == 1);
        CHECK(cg[0] == std::pair<int, int>{0, 1});
    }
    SUBCASE("j = 1/2") {
        const auto cg = clebsch_gordan_spectrum(HalfInt(1));
        REQUIRE(cg.size() == 2);
        CHECK(cg[0] == std::pair<int, int>{0, 1});
        CHECK(cg[1] == std::pair<int, int>{1, 3});
    }
    SUBCASE("j = 1: L^2 eigenvalues 0, 2, 6 with multiplicities 1, 3, 5") {
        const auto cg = clebsch_gordan_spectrum(HalfInt(2));
        REQUIRE(cg.size() == 3);
        CHECK(cg[2] == std::pair<int, int>{2, 5});
    }
    SUBCASE("j = 3/2 fills (2j+1)^2") {
        const auto cg = clebsch_gordan_spectrum(HalfInt(3));
        REQUIRE(cg.size() == 4);
        int total = 0;
        for (const auto& [l, mult] : cg) {
            CHECK(mult == 2 * l + 1);
            total += mult;
        }
        CHECK(total == 16);
    }
}

TEST_CASE("shell labels") {
    SUBCASE("n = 1") {
        const auto labels = label_shell(1);
        REQUIRE(labels.size() == 2);
        CHECK(labels[0] == QuantumLabel{1, 0, 0, 1});
        CHECK(labels[1] == QuantumLabel{1, 0, 0, -1});
    }
    SUBCASE("counts are 2n^2 and labels valid and distinct") {
        for (int n : {2, 4, 8}) {
            const auto labels = label_shell(n);
            CHECK(static_cast<int>(labels.size()) == 2 * n * n);
            for (const auto& label : labels) CHECK(label.valid());
            for (std::size_t i = 0; i + 1 < labels.size(); ++i)
                for (std::size_t k = i + 1; k < labels.size(); ++k)
                    CHECK_FALSE(labels[i] == labels[k]);
        }
    }
    SUBCASE("n = 0 rejected") { CHECK_THROWS(label_shell(0)); }
}

TEST_CASE("conjugation intertwiner flips the generators") {
    for (int twice_j = 1; twice_j <= 4; ++twice_j) {
        const auto ops = spin_matrices(HalfInt(twice_j));
        const CMatrix eps = conjugation_intertwiner(HalfInt(twice_j));
        CHECK((eps * eps.adjoint() - identity(twice_j + 1)).norm() < 1e-14);
        for (int k = 0; k < 3; ++k)
            CHECK((eps * ops[k].conjugate() * eps.inverse() + ops[k]).norm() < 1e-12);
    }
}

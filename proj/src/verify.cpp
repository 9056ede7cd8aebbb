#include "keplerfock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>

#include "keplerfock/classical.hpp"
#include "keplerfock/dirac.hpp"
#include "keplerfock/fock.hpp"
#include "keplerfock/madelung.hpp"
#include "keplerfock/quaternion.hpp"
#include "keplerfock/su2rep.hpp"
#include "keplerfock/weyl.hpp"

namespace keplerfock::verify {

RunConfig RunConfig::defaults() {
    RunConfig config;
    if (const char* env = std::getenv("KEPLER_FOCK_SEED"))
        config.seed = std::strtoull(env, nullptr, 10);
    return config;
}

namespace {

class Checker {
  public:
    Checker(std::string module, const RunConfig& config)
        : module_(std::move(module)), config_(config) {}

    double threshold_for(const std::string& check, double fallback) const {
        if (auto it = config_.tolerances.find(module_ + "." + check);
            it != config_.tolerances.end())
            return it->second;
        if (auto it = config_.tolerances.find(module_); it != config_.tolerances.end())
            return it->second;
        return fallback;
    }

    // pass iff value <= threshold
    void below(const std::string& check, double value, double fallback_threshold) {
        const double threshold = threshold_for(check, fallback_threshold);
        results_.push_back({module_, check, value, threshold, value <= threshold});
    }

    // negative control: pass iff value > threshold
    void above(const std::string& check, double value, double fallback_threshold) {
        const double threshold = threshold_for(check, fallback_threshold);
        results_.push_back({module_, check, value, threshold, value > threshold});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::string module_;
    const RunConfig& config_;
    std::vector<CheckResult> results_;
};

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i) * (k - j) * (k - i) > 0) ? 1 : -1;
}

} // namespace

std::vector<CheckResult> verify_classical(const RunConfig& config) {
    using namespace classical;
    Checker checker("classical", config);
    std::mt19937_64 rng(config.seed);

    double drift_e = 0, drift_l = 0, drift_ecc = 0;
    double circle_residual = 0, planarity = 0;
    double identity1 = 0, identity2 = 0;
    for (int orbit = 0; orbit < 10; ++orbit) {
        const PhaseState start = random_bound_state(rng);
        const auto c = conserved(start);
        const Trajectory traj = integrate(start, orbital_period(c.E), 1e-10);
        const DriftReport drift = conservation_drift(traj);
        drift_e = std::max(drift_e, drift.dE);
        drift_l = std::max(drift_l, drift.dL);
        drift_ecc = std::max(drift_ecc, drift.de);
        circle_residual = std::max(circle_residual, momentum_circle(traj).max_residual);
        planarity = std::max(planarity, great_circle_residual(traj));
        for (const auto& s : traj.states) {
            const auto cs = conserved(s);
            identity1 = std::max(identity1, std::abs(cs.e.dot(s.q) -
                                                     (cs.L.squaredNorm() - s.q.norm())));
            identity2 = std::max(identity2,
                                 std::abs(cs.e.squaredNorm() -
                                          (1.0 + 2.0 * cs.L.squaredNorm() * cs.E)));
        }
    }
    checker.below("drift_energy_per_period", drift_e, 1e-8);
    checker.below("drift_angular_momentum_per_period", drift_l, 1e-8);
    checker.below("drift_eccentricity_per_period", drift_ecc, 1e-8);
    checker.below("perihelion_identity", identity1, 1e-8);
    checker.below("eccentricity_identity", identity2, 1e-8);
    checker.below("momentum_circle", circle_residual, 1e-6);
    checker.below("great_circle_planarity", planarity, 1e-6);

    const double h = 1e-5;
    double bracket = 0;
    for (int point = 0; point < 20; ++point) {
        const PhaseState x = random_bound_state(rng);
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) {
                double expect_a = 0, expect_b = 0;
                for (int l = 0; l < 3; ++l) {
                    expect_a += levi_civita(i, k, l) * obs_a(l)(x);
                    expect_b += levi_civita(i, k, l) * obs_b(l)(x);
                }
                bracket = std::max(
                    bracket, std::abs(poisson_bracket(obs_a(i), obs_a(k), x, h) - expect_a));
                bracket = std::max(
                    bracket, std::abs(poisson_bracket(obs_b(i), obs_b(k), x, h) - expect_b));
                bracket = std::max(bracket,
                                   std::abs(poisson_bracket(obs_a(i), obs_b(k), x, h)));
            }
            bracket = std::max(bracket, std::abs(poisson_bracket(obs_energy(), obs_a(i), x, h)));
            bracket = std::max(bracket, std::abs(poisson_bracket(obs_energy(), obs_b(i), x, h)));
        }
    }
    checker.below("poisson_brackets", bracket, 1e-6);
    return checker.take();
}

std::vector<CheckResult> verify_su2rep(const RunConfig& config) {
    using namespace su2rep;
    Checker checker("su2rep", config);

    double commutation = 0, cross = 0, casimir_eq = 0, casimir_val = 0, selfadj = 0;
    double h0_residual = 0;
    int cg_mismatch = 0, shell_mismatch = 0;
    for (int twice_j = 0; twice_j <= config.j_max.twice(); ++twice_j) {
        const HalfInt j(twice_j);
        const BlockRep block = build_block(j, true);
        const std::array<const std::array<CMatrix, 3>*, 3> families = {&block.a, &block.b,
                                                                       &block.s};
        for (const auto* family : families) {
            for (int i = 0; i < 3; ++i) {
                selfadj = std::max(selfadj, ((*family)[i] - (*family)[i].adjoint()).norm());
                for (int k = 0; k < 3; ++k) {
                    CMatrix expected = CMatrix::Zero(block.dim, block.dim);
                    for (int l = 0; l < 3; ++l)
                        expected += Complex(0, levi_civita(i, k, l)) * (*family)[l];
                    commutation = std::max(
                        commutation, (commutator((*family)[i], (*family)[k]) - expected).norm());
                }
            }
        }
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                cross = std::max(cross, commutator(block.a[i], block.b[k]).norm());
                cross = std::max(cross, commutator(block.a[i], block.s[k]).norm());
                cross = std::max(cross, commutator(block.b[i], block.s[k]).norm());
            }
        casimir_eq = std::max(casimir_eq, (block.a2 - block.b2).norm());
        const double jj = j.value() * (j.value() + 1.0);
        casimir_val = std::max(
            casimir_val, (block.a2 - jj * identity(block.dim)).norm());

        const int n = twice_j + 1;
        h0_residual = std::max(
            h0_residual,
            (h0_block(j) + 1.0 / (2.0 * n * n) * identity(n * n)).norm());

        // Clebsch-Gordan: l = 0..2j each with multiplicity 2l+1
        const auto cg = clebsch_gordan_spectrum(j);
        if (static_cast<int>(cg.size()) != twice_j + 1) ++cg_mismatch;
        for (const auto& [l, mult] : cg)
            if (l < 0 || l > twice_j || mult != 2 * l + 1) ++cg_mismatch;

        if (static_cast<int>(label_shell(n).size()) != 2 * n * n) ++shell_mismatch;
    }
    checker.below("commutation_relations", commutation, 1e-12);
    checker.below("cross_family_commutators", cross, 1e-12);
    checker.below("generators_self_adjoint", selfadj, 1e-12);
    checker.below("casimir_a_equals_b", casimir_eq, 1e-12);
    checker.below("casimir_eigenvalue", casimir_val, 1e-10);
    checker.below("h0_spectrum", h0_residual, 1e-10);
    checker.below("clebsch_gordan_multiplicities", cg_mismatch, 0.5);
    checker.below("shell_label_count", shell_mismatch, 0.5);
    return checker.take();
}

std::vector<CheckResult> verify_dirac(const RunConfig& config) {
    using namespace dirac;
    Checker checker("dirac", config);
    std::mt19937_64 rng(config.seed + 1);
    std::normal_distribution<double> normal(0.0, 1.0);

    int spectrum_mismatch = 0, dim_mismatch = 0, halves = 0, dagger_multiset = 0;
    double d_squared = 0, shifted_square = 0, commute_a = 0, commute_bs = 0;
    double hydrogen = 0, dagger_inv = 0, dagger_norm = 0;
    std::map<int, std::pair<int, int>> global; // twice |lambda| -> (mult+, mult-)

    for (int twice_j = 0; twice_j <= config.j_max.twice(); ++twice_j) {
        const HalfInt j(twice_j);
        const su2rep::BlockRep block = su2rep::build_block(j, true);
        const DiracBlock d = build_dirac(block);
        const int n = twice_j + 1;

        // exact spectrum {n+1/2: n(n+1), -n+1/2: n(n-1)}
        std::map<int, int> expected;
        expected[2 * n + 1] = n * (n + 1);
        if (n > 1) expected[-2 * n + 1] = n * (n - 1);
        std::map<int, int> got;
        for (const auto& [lambda, mult] : d.spectrum) got[lambda.twice()] = mult;
        if (got != expected) ++spectrum_mismatch;
        for (const auto& [lambda, mult] : d.spectrum) {
            if (lambda.twice() == 1 || lambda.twice() == -1) ++halves;
            const double lv = lambda.value();
            if (std::lround((lv + 0.5) * (lv - 0.5)) != mult) ++dim_mismatch;
            auto& slot = global[std::abs(lambda.twice())];
            (lambda.twice() > 0 ? slot.first : slot.second) += mult;
        }

        d_squared = std::max(d_squared, (d.d_op * d.d_op - (d.delta - 2.0 * d.d_op)).norm());
        const CMatrix shifted = d.slash_d - 0.5 * identity(d.dim);
        shifted_square = std::max(
            shifted_square, (shifted * shifted - (d.delta + identity(d.dim))).norm());
        for (int k = 0; k < 3; ++k) {
            commute_a = std::max(commute_a, commutator(d.slash_d, block.a[k]).norm());
            commute_bs = std::max(commute_bs,
                                  commutator(d.slash_d, CMatrix(block.b[k] + block.s[k])).norm());
        }

        // two routes to the hydrogen Hamiltonian
        const CMatrix via_su2 = kron(su2rep::h0_block(j), identity(2));
        hydrogen = std::max(hydrogen, (hydrogen_from_dirac(d) - via_su2).norm());
        hydrogen = std::max(
            hydrogen, (hydrogen_from_dirac(d) + 1.0 / (2.0 * n * n) * identity(d.dim)).norm());

        // dagger: antiunitary with square -1; -dagger d dagger isospectral to d
        for (int trial = 0; trial < 10; ++trial) {
            CVector psi(d.dim);
            for (int i = 0; i < d.dim; ++i) psi(i) = Complex(normal(rng), normal(rng));
            dagger_inv = std::max(dagger_inv, (dagger(dagger(psi)) + psi).norm());
            dagger_norm = std::max(dagger_norm, std::abs(dagger(psi).norm() - psi.norm()));
        }
        CMatrix conjugated(d.dim, d.dim); // -dagger slash_d dagger, column by column
        for (int c = 0; c < d.dim; ++c) {
            CVector basis = CVector::Zero(d.dim);
            basis(c) = 1.0;
            conjugated.col(c) = -dagger(CVector(d.slash_d * dagger(basis)));
        }
        // dagger is conjugate-linear, so assembling columns from basis vectors
        // gives the matrix of the (linear) map -dagger slash_d dagger.
        const auto flipped = half_integer_spectrum(conjugated, 1e-6);
        if (flipped != d.spectrum) ++dagger_multiset;
    }

    int global_flip = 0;
    for (const auto& [twice_abs, mults] : global) {
        const int n_here = (twice_abs - 1) / 2; // lambda = m + 1/2 -> m
        if (n_here >= 1 && n_here <= config.j_max.twice() &&
            mults.first != mults.second)
            ++global_flip;
    }

    checker.below("spectrum_exact", spectrum_mismatch, 0.5);
    checker.below("no_half_eigenvalues", halves, 0.5);
    checker.below("eigenspace_dimension_formula", dim_mismatch, 0.5);
    checker.below("d_squared_identity", d_squared, 1e-10);
    checker.below("shifted_square_identity", shifted_square, 1e-10);
    checker.below("commutes_with_a", commute_a, 1e-12);
    checker.below("commutes_with_b_plus_s", commute_bs, 1e-12);
    {
        const su2rep::BlockRep block = su2rep::build_block(HalfInt(1), true);
        const DiracBlock d = build_dirac(block);
        checker.above("b_alone_noncommute_control",
                      commutator(d.slash_d, block.b[0]).norm(), 0.1);
    }
    checker.below("hydrogen_two_routes", hydrogen, 1e-10);
    checker.below("dagger_square_plus_one", dagger_inv, 1e-12);
    checker.below("dagger_antiunitary", dagger_norm, 1e-12);
    checker.below("dagger_spectral_flip_multiset", dagger_multiset, 0.5);
    checker.below("spectral_symmetry_across_blocks", global_flip, 0.5);
    return checker.take();
}

std::vector<CheckResult> verify_quaternion(const RunConfig& config) {
    using namespace quaternion;
    Checker checker("quaternion", config);

    int dim_mismatch = 0;
    for (int k = 0; k <= 6; ++k)
        if (uk_dimension(k) != (k + 1) * (k + 2)) ++dim_mismatch;
    checker.below("kernel_dimension_formula", dim_mismatch, 0.5);

    double harmonic = 0;
    for (int k = 2; k <= 5; ++k) {
        const RMatrix lap = laplacian4_matrix(k);
        for (const HPoly& psi : cr_kernel_basis(k)) {
            RVector v(4 * psi.coeff.size());
            for (std::size_t a = 0; a < psi.coeff.size(); ++a) {
                v(4 * a) = psi.coeff[a].w;
                v(4 * a + 1) = psi.coeff[a].x;
                v(4 * a + 2) = psi.coeff[a].y;
                v(4 * a + 3) = psi.coeff[a].z;
            }
            harmonic = std::max(harmonic, (lap * v).cwiseAbs().maxCoeff());
        }
    }
    checker.below("kernel_componentwise_harmonic", harmonic, 1e-10);

    double point_residual = 0;
    std::mt19937_64 rng(config.seed + 2);
    for (int k = 1; k <= 3; ++k) {
        const auto basis = cr_kernel_basis(k);
        // one basis element plus one random combination per degree
        point_residual =
            std::max(point_residual, dirac_eigenvalue_check(basis.front(), 25, 1e-4, rng()));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        HPoly mix;
        mix.degree = k;
        mix.coeff.assign(monomial_count(k), Quat{});
        for (const auto& psi : basis) {
            const double weight = u(rng);
            for (std::size_t a = 0; a < mix.coeff.size(); ++a)
                mix.coeff[a] = mix.coeff[a] + weight * psi.coeff[a];
        }
        point_residual = std::max(point_residual, dirac_eigenvalue_check(mix, 25, 1e-4, rng()));
    }
    checker.below("pointwise_dirac_eigenvalue", point_residual, 1e-4);
    return checker.take();
}

std::vector<CheckResult> verify_weyl(const RunConfig& config) {
    using namespace weyl;
    Checker checker("weyl", config);
    std::mt19937_64 rng(config.seed + 3);
    std::normal_distribution<double> normal(0.0, 1.0);

    const int twice_j_cap = std::min(config.j_max.twice(), 5);
    double structure = 0, c_inv = 0, c_dirac = 0, c_antilinear = 0;
    double t1_orth = 0, t1_lin = 0, t1_dirac = 0, t1_inter = 0;
    double f_plus = 0, f_minus = 0, evolution = 0, unitary = 0, d_comm_s = 0;
    for (int twice_j = 0; twice_j <= twice_j_cap; ++twice_j) {
        const HalfInt j(twice_j);
        const su2rep::BlockRep block = su2rep::build_block(j, true);
        const dirac::DiracBlock d = dirac::build_dirac(block);
        const RealifiedSpace space = sign_and_structure(d);
        const RMatrix ident = RMatrix::Identity(space.real_dim, space.real_dim);

        structure = std::max(structure, (space.s_op * space.s_op - ident).norm());
        structure = std::max(structure, (space.s_op - space.s_op.transpose()).norm());
        structure = std::max(structure, (space.j_op * space.j_op + ident).norm());
        structure = std::max(structure, (space.j_op.transpose() * space.j_op - ident).norm());
        structure = std::max(structure, (space.i_op * space.i_op + ident).norm());

        const RMatrix c_op = charge_conjugation(j);
        const RMatrix d_real = realify(d.slash_d);
        c_inv = std::max(c_inv, (c_op * c_op + ident).norm());
        c_dirac = std::max(c_dirac, (c_op * d_real - d_real * c_op).norm());
        c_antilinear = std::max(c_antilinear, (c_op * space.i_op + space.i_op * c_op).norm());

        d_comm_s = std::max(d_comm_s, (d_real * space.s_op - space.s_op * d_real).norm());
        d_comm_s = std::max(d_comm_s, (d_real * space.j_op - space.j_op * d_real).norm());

        const Intertwiner inter = build_intertwiner(d, space, c_op);
        const EquivalenceReport report = equivalence_report(block, d, 20, config.seed + twice_j);
        t1_orth = std::max(t1_orth, report.orthogonality);
        t1_lin = std::max(t1_lin, report.complex_linearity);
        t1_dirac = std::max(t1_dirac, report.dirac_commutation);
        t1_inter = std::max(t1_inter, report.intertwining);
        f_plus = std::max(f_plus, (inter.f * inter.p_plus - inter.p_plus).norm());
        f_minus = std::max(f_minus, (inter.f * inter.p_minus - c_op * inter.p_minus).norm());

        for (double t : {0.1, 1.0, M_PI})
            evolution = std::max(evolution, evolution_structure_residual(d, t));

        CVector psi(d.dim);
        for (int i = 0; i < d.dim; ++i) psi(i) = Complex(normal(rng), normal(rng));
        for (double t : {0.0, 0.7, 2.0})
            unitary = std::max(unitary, std::abs(weyl_evolve(d, psi, t).norm() - psi.norm()));
    }
    checker.below("structures_orthogonal_and_square", structure, 1e-10);
    checker.below("charge_conjugation_square_minus_one", c_inv, 1e-12);
    checker.below("charge_conjugation_commutes_dirac", c_dirac, 1e-10);
    checker.below("charge_conjugation_antilinear", c_antilinear, 1e-12);
    checker.below("dirac_commutes_structures", d_comm_s, 1e-12);
    checker.below("intertwiner_orthogonality", t1_orth, 1e-10);
    checker.below("intertwiner_complex_linearity", t1_lin, 1e-10);
    checker.below("intertwiner_dirac_commutation", t1_dirac, 1e-10);
    checker.below("intertwiner_group_action", t1_inter, 1e-8);
    checker.below("f_identity_on_positive", f_plus, 1e-10);
    checker.below("f_conjugation_on_negative", f_minus, 1e-10);
    checker.below("evolution_two_routes", evolution, 1e-9);
    checker.below("evolution_unitary", unitary, 1e-10);

    { // j = 0: A_k annihilate the constants, B_k + S_k do not
        const su2rep::BlockRep block = su2rep::build_block(HalfInt(0), true);
        double a_norm = 0, bs_norm = 0;
        for (int k = 0; k < 3; ++k) {
            a_norm = std::max(a_norm, block.a[k].norm());
            bs_norm = std::max(bs_norm, (block.b[k] + block.s[k]).norm());
        }
        checker.below("a_annihilates_constants", a_norm, 1e-14);
        checker.above("b_plus_s_nonzero_control", bs_norm, 0.1);
    }
    return checker.take();
}

std::vector<CheckResult> verify_fock(const RunConfig& config) {
    using namespace fock;
    Checker checker("fock", config);
    std::mt19937_64 rng(config.seed + 4);
    std::normal_distribution<double> normal(0.0, 1.0);

    auto random_unitary = [&](int n) {
        CMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
        return CMatrix(Eigen::HouseholderQR<CMatrix>(m).householderQ());
    };
    auto random_hermitian = [&](int n) {
        CMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
        return CMatrix(0.5 * (m + m.adjoint()));
    };

    int dim_mismatch = 0;
    for (int n = 0; n <= 4; ++n)
        if (static_cast<std::int64_t>(sector_basis(4, n).size()) != binomial(4, n))
            ++dim_mismatch;
    if (static_cast<std::int64_t>(sector_basis(8, 3).size()) != 56) ++dim_mismatch;
    checker.below("sector_dimension", dim_mismatch, 0.5);

    double functor = 0, gamma_unitary = 0, gamma_identity = 0;
    for (int n = 1; n <= 3; ++n) {
        const CMatrix u = random_unitary(4), v = random_unitary(4);
        const CMatrix gu = gamma_sector(u, n), gv = gamma_sector(v, n);
        functor = std::max(functor, (gamma_sector(CMatrix(u * v), n) - gu * gv).norm());
        gamma_unitary = std::max(
            gamma_unitary,
            (gu * gu.adjoint() - identity(static_cast<int>(gu.rows()))).norm());
        gamma_identity = std::max(
            gamma_identity,
            (gamma_sector(identity(4), n) - identity(static_cast<int>(gu.rows()))).norm());
    }
    checker.below("gamma_functorial", functor, 1e-10);
    checker.below("gamma_unitary", gamma_unitary, 1e-10);
    checker.below("gamma_identity", gamma_identity, 1e-12);

    // additivity on eigenvector wedges: diagonal generator
    {
        CMatrix a = CMatrix::Zero(4, 4);
        a.diagonal() << 1.0, 2.0, 3.0, 4.0;
        const CMatrix dg = dgamma_sector(a, 2);
        double additivity = 0;
        const auto sets = sector_index_sets(4, 2);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const double expect = (a(sets[i][0], sets[i][0]) + a(sets[i][1], sets[i][1])).real();
            additivity = std::max(additivity, std::abs(dg(i, i).real() - expect));
            additivity = std::max(additivity, dg.col(i).norm() - std::abs(dg(i, i)));
        }
        checker.below("dgamma_additivity", additivity, 1e-12);
    }
    {
        const CMatrix a = random_hermitian(5);
        const CMatrix dg = dgamma_sector(a, 2);
        checker.below("dgamma_self_adjoint", (dg - dg.adjoint()).norm(), 1e-12);
    }
    checker.below("exponentiation_identity",
                  exponentiation_residual(random_hermitian(4), 2, {0.3, 1.0}), 1e-8);

    // Second-quantized identities on the truncated realified space (blocks up to min(j_max, 1))
    const HalfInt sector_jmax(std::min(config.j_max.twice(), 2));
    double inter = 0, dgamma_comm = 0, functor2 = 0;
    if (sector_jmax.twice() >= 1) {
        const SectorEquivalenceReport half =
            second_quantized_equivalence(HalfInt(std::min(sector_jmax.twice(), 1)), 2, 10, config.seed + 5);
        inter = std::max(inter, half.intertwining);
        dgamma_comm = std::max(dgamma_comm, half.dgamma_commutation);
        functor2 = std::max(functor2, half.functoriality);
    }
    for (int n = 1; n <= 3; ++n) {
        const SectorEquivalenceReport report =
            second_quantized_equivalence(sector_jmax, n, n >= 2 ? 4 : 10, config.seed + 6 + n);
        inter = std::max(inter, report.intertwining);
        dgamma_comm = std::max(dgamma_comm, report.dgamma_commutation);
        functor2 = std::max(functor2, report.functoriality);
    }
    checker.below("second_quantized_intertwining", inter, 1e-7);
    checker.below("second_quantized_dgamma", dgamma_comm, 1e-7);
    checker.below("second_quantized_functoriality", functor2, 1e-7);
    return checker.take();
}

std::vector<CheckResult> verify_madelung(const RunConfig& config) {
    using namespace madelung;
    Checker checker("madelung", config);

    // Golden table data: ranges, subshells and exact energies.
    struct GoldenRow {
        int lo, hi, n, l;
        Rational energy;
    };
    const std::vector<GoldenRow> golden = {
        {1, 2, 1, 0, {4}},           {3, 4, 2, 0, {6}},
        {5, 10, 2, 1, {22, 3}},      {11, 12, 3, 0, {8}},
        {13, 18, 3, 1, {28, 3}},     {19, 20, 4, 0, {10}},
        {21, 30, 3, 2, {56, 5}},     {31, 36, 4, 1, {34, 3}},
        {37, 38, 5, 0, {12}},        {39, 48, 4, 2, {66, 5}},
        {49, 54, 5, 1, {40, 3}},     {55, 56, 6, 0, {14}},
        {57, 70, 4, 3, {106, 7}},    {71, 80, 5, 2, {76, 5}},
        {81, 86, 6, 1, {46, 3}},     {87, 88, 7, 0, {16}},
        {89, 102, 5, 3, {120, 7}},   {103, 112, 6, 2, {86, 5}},
        {113, 118, 7, 1, {52, 3}},   {119, 120, 8, 0, {18}},
    };
    const auto table = subshell_table();
    int table_mismatch = 0;
    if (table.size() != golden.size()) ++table_mismatch;
    for (std::size_t i = 0; i < golden.size() && i < table.size(); ++i) {
        const auto& row = table[i];
        const auto& g = golden[i];
        if (row.z_lo != g.lo || row.z_hi != g.hi || row.sub.n != g.n || row.sub.l != g.l ||
            !(row.sub.energy() == g.energy))
            ++table_mismatch;
    }
    checker.below("subshell_table_exact", table_mismatch, 0.5);

    // the three orderings agree on all subshells with n <= 8
    std::vector<Subshell> subs;
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l < n; ++l) subs.push_back({n, l});
    auto by_madelung = subs, by_energy = subs, by_wiswesser = subs;
    std::sort(by_madelung.begin(), by_madelung.end(), [](const Subshell& a, const Subshell& b) {
        return std::pair(a.n + a.l, a.n) < std::pair(b.n + b.l, b.n);
    });
    std::sort(by_energy.begin(), by_energy.end(),
              [](const Subshell& a, const Subshell& b) { return a.energy() < b.energy(); });
    std::sort(by_wiswesser.begin(), by_wiswesser.end(), [](const Subshell& a, const Subshell& b) {
        return wiswesser_energy(a.n, a.l) < wiswesser_energy(b.n, b.l);
    });
    checker.below("filling_order_invariance",
                  (by_madelung != by_energy) + (by_madelung != by_wiswesser), 0.5);

    // hsingle spectra against the exact subshell energies
    double hsingle_residual = 0;
    int hsingle_mult_mismatch = 0;
    for (int twice_j = 0; twice_j <= config.j_max.twice(); ++twice_j) {
        const auto block = su2rep::build_block(HalfInt(twice_j), true);
        for (const auto& line : hsingle_spectrum(block)) {
            if (line.multiplicity != line.sub.capacity()) ++hsingle_mult_mismatch;
            hsingle_residual = std::max(
                hsingle_residual, std::abs(line.value - line.sub.energy().to_double()));
        }
    }
    checker.below("hsingle_spectrum_values", hsingle_residual, 1e-9);
    checker.below("hsingle_spectrum_multiplicities", hsingle_mult_mismatch, 0.5);

    // golden configurations
    int config_mismatch = 0;
    if (configuration(1).str() != "1s1") ++config_mismatch;
    {
        const auto c5 = configuration(5);
        if (c5.str() != "1s2 2s2 2p1") ++config_mismatch;
        const su2rep::QuantumLabel boron{2, 1, 1, 1};
        if (!(c5.orbitals.back() == boron)) ++config_mismatch;
    }
    {
        const auto c24 = configuration(24);
        bool found_4s2 = false, found_3d4 = false;
        for (const auto& [sub, occ] : c24.fills) {
            if (sub.n == 4 && sub.l == 0 && occ == 2) found_4s2 = true;
            if (sub.n == 3 && sub.l == 2 && occ == 4) found_3d4 = true;
        }
        if (!found_4s2 || !found_3d4) ++config_mismatch;
    }
    {
        const auto c57 = configuration(57);
        const auto& [last, occ] = c57.fills.back();
        if (!(last == Subshell{4, 3}) || occ != 1) ++config_mismatch;
    }
    {
        const auto c120 = configuration(120);
        const auto& [last, occ] = c120.fills.back();
        if (!(last == Subshell{8, 0}) || occ != 2 || c120.fills.size() != 20) ++config_mismatch;
    }
    checker.below("configurations_golden", config_mismatch, 0.5);

    // monotone occupancies; energy increment equals the receiving subshell
    int monotone_mismatch = 0;
    for (int z = 1; z <= 120; ++z) {
        const auto prev = configuration(z - 1), curr = configuration(z);
        std::map<std::pair<int, int>, int> occ_prev, occ_curr;
        for (const auto& [sub, occ] : prev.fills) occ_prev[{sub.n, sub.l}] = occ;
        for (const auto& [sub, occ] : curr.fills) occ_curr[{sub.n, sub.l}] = occ;
        int added = 0;
        Rational gained;
        for (const auto& [key, occ] : occ_curr) {
            const int before = occ_prev.count(key) ? occ_prev[key] : 0;
            if (occ < before) ++monotone_mismatch;
            if (occ > before) {
                added += occ - before;
                gained = gained + Rational(occ - before) * subshell_energy(key.first, key.second);
            }
        }
        if (added != 1) ++monotone_mismatch;
        if (!(curr.total_energy() - prev.total_energy() == gained)) ++monotone_mismatch;
    }
    checker.below("occupancy_monotone", monotone_mismatch, 0.5);

    // element states: basis prefix energies match the configurations, and the
    // numeric route (sum of the z lowest hsingle eigenvalues) agrees
    const OrbitalBasis basis = aufbau_basis(120);
    int element_mismatch = 0;
    for (int z = 0; z <= 120; ++z) {
        const auto state = element_state(z, basis);
        if (state.count() != z) ++element_mismatch;
        Rational total;
        for (int i = 0; i < z; ++i) total = total + basis.energies[i];
        if (!(total == configuration(z).total_energy())) ++element_mismatch;
    }
    checker.below("element_state_energies", element_mismatch, 0.5);

    if (config.j_max.twice() >= 7) {
        std::vector<double> levels;
        for (int twice_j = 0; twice_j <= 7; ++twice_j) {
            const auto block = su2rep::build_block(HalfInt(twice_j), true);
            Eigen::SelfAdjointEigenSolver<CMatrix> es(hsingle_block(block),
                                                      Eigen::EigenvaluesOnly);
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
                levels.push_back(es.eigenvalues()(i));
        }
        std::sort(levels.begin(), levels.end());
        double numeric_gap = 0;
        for (int z : {1, 3, 24, 57, 120}) {
            double sum = 0;
            for (int i = 0; i < z; ++i) sum += levels[i];
            numeric_gap = std::max(
                numeric_gap, std::abs(sum - configuration(z).total_energy().to_double()));
        }
        checker.below("aufbau_energy_numeric_route", numeric_gap, 1e-7);
    }
    return checker.take();
}

std::vector<CheckResult> verify_all(const RunConfig& config) {
    std::vector<CheckResult> all;
    for (auto* suite : {verify_classical, verify_su2rep, verify_dirac, verify_quaternion,
                        verify_weyl, verify_fock, verify_madelung}) {
        auto results = suite(config);
        all.insert(all.end(), results.begin(), results.end());
    }
    return all;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace keplerfock::verify

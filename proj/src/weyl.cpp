#include "keplerfock/weyl.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace keplerfock::weyl {

RealifiedSpace sign_and_structure(const dirac::DiracBlock& block) {
    if (block.eigenvalues.cwiseAbs().minCoeff() < 0.25)
        throw std::runtime_error("sign(slash_d) ill-defined: eigenvalue too close to zero");
    RealifiedSpace space;
    space.j = block.j;
    space.real_dim = 2 * block.dim;
    const CMatrix sign_d =
        hermitian_function(block.slash_d, [](double x) { return x >= 0.0 ? 1.0 : -1.0; });
    space.s_op = realify(sign_d);
    RMatrix i_op = RMatrix::Zero(space.real_dim, space.real_dim);
    i_op.topRightCorner(block.dim, block.dim) = -RMatrix::Identity(block.dim, block.dim);
    i_op.bottomLeftCorner(block.dim, block.dim) = RMatrix::Identity(block.dim, block.dim);
    space.i_op = std::move(i_op);
    space.j_op = space.i_op * space.s_op;
    return space;
}

RMatrix charge_conjugation(HalfInt j) {
    // Pointwise conjugation of a C^2-valued function on S^3 followed by eps
    // on the value. In Peter-Weyl coordinates conjugating the function picks
    // up the self-conjugation intertwiner eps_j on both V_j factors, so the
    // antiunitary is psi -> W conj(psi) with W = eps_j (x) eps_j (x) eps.
    const CMatrix eps_j = su2rep::conjugation_intertwiner(j);
    CMatrix eps = CMatrix::Zero(2, 2);
    eps(0, 1) = 1.0;
    eps(1, 0) = -1.0;
    const RMatrix w = kron(kron(eps_j, eps_j), eps).real();
    const int dim = static_cast<int>(w.rows());
    // Conjugation acts as (Re, Im) -> (Re, -Im).
    RMatrix c = RMatrix::Zero(2 * dim, 2 * dim);
    c.topLeftCorner(dim, dim) = w;
    c.bottomRightCorner(dim, dim) = -w;
    return c;
}

Intertwiner build_intertwiner(const dirac::DiracBlock& block, const RealifiedSpace& space,
                              const RMatrix& c_op) {
    Intertwiner out;
    out.j = block.j;
    const RMatrix ident = RMatrix::Identity(space.real_dim, space.real_dim);
    out.p_plus = 0.5 * (ident + space.s_op);
    out.p_minus = 0.5 * (ident - space.s_op);
    out.f = out.p_plus + c_op * out.p_minus;
    return out;
}

CVector weyl_evolve(const dirac::DiracBlock& block, const CVector& psi0, double t) {
    if (psi0.size() != block.dim) throw std::invalid_argument("state dimension mismatch");
    return unitary_exp(block.slash_d, -t) * psi0;
}

std::vector<RMatrix> sample_group_elements(const su2rep::BlockRep& block, int count,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::vector<RMatrix> out;
    out.reserve(count);
    for (int s = 0; s < count; ++s) {
        CMatrix generator = CMatrix::Zero(block.dim, block.dim);
        for (int k = 0; k < 3; ++k) {
            generator += coeff(rng) * block.a[k];
            generator += coeff(rng) * (block.b[k] + block.s[k]);
        }
        out.push_back(realify(unitary_exp(generator, 1.0)));
    }
    return out;
}

EquivalenceReport equivalence_report(const su2rep::BlockRep& block, const dirac::DiracBlock& dblock,
                               int samples, std::uint64_t seed) {
    const RealifiedSpace space = sign_and_structure(dblock);
    const RMatrix c_op = charge_conjugation(block.j);
    const Intertwiner inter = build_intertwiner(dblock, space, c_op);
    const RMatrix d_real = realify(dblock.slash_d);

    EquivalenceReport report;
    report.orthogonality =
        (inter.f.transpose() * inter.f - RMatrix::Identity(space.real_dim, space.real_dim)).norm();
    report.complex_linearity = (inter.f * space.i_op - space.j_op * inter.f).norm();
    report.dirac_commutation = (inter.f * d_real - d_real * inter.f).norm();
    report.intertwining = 0.0;
    for (const RMatrix& rho : sample_group_elements(block, samples, seed))
        report.intertwining =
            std::max(report.intertwining, (inter.f * rho - rho * inter.f).norm());
    return report;
}

double evolution_structure_residual(const dirac::DiracBlock& block, double t) {
    const RealifiedSpace space = sign_and_structure(block);
    const CMatrix abs_d = hermitian_function(block.slash_d, [](double x) { return std::abs(x); });
    const RMatrix lhs = real_expm(space.j_op * realify(abs_d) * t);
    const RMatrix rhs = realify(unitary_exp(block.slash_d, t));
    return (lhs - rhs).norm();
}

} // namespace keplerfock::weyl

#pragma once

#include <cstdint>

#include "keplerfock/dirac.hpp"

namespace keplerfock::weyl {

// Realified block: real matrices of doubled dimension acting on
// (Re psi, Im psi), so that both complex structures are literal matrices.
struct RealifiedSpace {
    HalfInt j;
    int real_dim;
    RMatrix i_op; // multiplication by i
    RMatrix s_op; // sign(slash_d)
    RMatrix j_op; // i_op * s_op, the positive-energy complex structure
};

RealifiedSpace sign_and_structure(const dirac::DiracBlock& block);

// Realification of the conjugate-linear map (C psi)(g) = eps conj(psi)(g).
RMatrix charge_conjugation(HalfInt j);

struct Intertwiner {
    HalfInt j;
    RMatrix f; // p_plus + C p_minus
    RMatrix p_plus;
    RMatrix p_minus;
};

Intertwiner build_intertwiner(const dirac::DiracBlock& block, const RealifiedSpace& space,
                              const RMatrix& c_op);

// Spectral application of U(t) = exp(-i t slash_d) to psi0.
CVector weyl_evolve(const dirac::DiracBlock& block, const CVector& psi0, double t);

// Realified samples of the representation generated by {A_k, B_k + S_k}:
// exp(i sum_k (alpha_k A_k + beta_k (B_k + S_k))) with seeded coefficients.
std::vector<RMatrix> sample_group_elements(const su2rep::BlockRep& block, int count,
                                           std::uint64_t seed);

// Residuals of the intertwiner-equivalence identities on one block.
struct EquivalenceReport {
    double orthogonality;     // ||F^T F - I||
    double complex_linearity; // ||F i_op - j_op F||
    double dirac_commutation; // ||F d - d F|| (realified slash_d)
    double intertwining;      // max over sampled group elements ||F R - R F||
};

EquivalenceReport equivalence_report(const su2rep::BlockRep& block, const dirac::DiracBlock& dblock,
                               int samples, std::uint64_t seed);

// || exp(j_op t |d|_op) - realify(exp(i t slash_d)) ||, the two routes to the
// same time evolution once negative energies are gone.
double evolution_structure_residual(const dirac::DiracBlock& block, double t);

} // namespace keplerfock::weyl

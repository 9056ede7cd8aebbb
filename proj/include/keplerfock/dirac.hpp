#pragma once

#include "keplerfock/linalg.hpp"
#include "keplerfock/su2rep.hpp"

namespace keplerfock::dirac {

// Laplacian, Dirac operators and hydrogen Hamiltonian on one spin block
// V_j (x) V_j (x) C^2, together with the exact (snapped) Dirac spectrum.
struct DiracBlock {
    HalfInt j;
    int dim;
    CMatrix delta;   // 4 B^2
    CMatrix d_op;    // 4 sum_k B_k S_k
    CMatrix slash_d; // d_op + 3/2
    CMatrix h;       // -(2 (slash_d - 1/2)^2)^{-1}
    std::vector<std::pair<HalfInt, int>> spectrum; // (lambda, multiplicity), descending
    RVector eigenvalues;  // raw eigenvalues of slash_d, ascending
    CMatrix eigenvectors; // matching columns
};

DiracBlock build_dirac(const su2rep::BlockRep& block);
DiracBlock build_dirac(HalfInt j);

// Eigenvalue of the Laplacian on the block: n^2 - 1 with n = 2j + 1.
int laplacian_eigenvalue(HalfInt j);

// H = -1/(2 (slash_d - 1/2)^2); equals -1/(2n^2) I on the block.
CMatrix hydrogen_from_dirac(const DiracBlock& block);

// Conjugate-linear involution: componentwise conjugation
// followed by eps = [[0,1],[-1,0]] on the spin factor. Flips the sign of
// every Dirac eigenvalue.
CVector dagger(const CVector& psi);

// Columns of eigenvectors whose eigenvalue snaps to lambda.
CMatrix eigenspace(const DiracBlock& block, HalfInt lambda);

} // namespace keplerfock::dirac

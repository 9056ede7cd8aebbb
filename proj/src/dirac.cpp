#include "keplerfock/dirac.hpp"

#include <stdexcept>

namespace keplerfock::dirac {

DiracBlock build_dirac(const su2rep::BlockRep& block) {
    if (!block.with_spin) throw std::invalid_argument("Dirac operators need the spin factor");
    DiracBlock d;
    d.j = block.j;
    d.dim = block.dim;
    d.delta = 4.0 * block.b2;
    d.d_op = 4.0 * (block.b[0] * block.s[0] + block.b[1] * block.s[1] + block.b[2] * block.s[2]);
    d.slash_d = d.d_op + 1.5 * identity(d.dim);
    const CMatrix shifted = d.slash_d - 0.5 * identity(d.dim);
    d.h = -0.5 * (shifted * shifted).inverse();

    Eigen::SelfAdjointEigenSolver<CMatrix> es(d.slash_d);
    if (es.info() != Eigen::Success) throw std::runtime_error("Dirac diagonalization failed");
    d.eigenvalues = es.eigenvalues();
    d.eigenvectors = es.eigenvectors();
    d.spectrum = half_integer_spectrum(d.slash_d, 1e-6);
    return d;
}

DiracBlock build_dirac(HalfInt j) { return build_dirac(su2rep::build_block(j, true)); }

int laplacian_eigenvalue(HalfInt j) {
    const int n = j.twice() + 1;
    return n * n - 1;
}

CMatrix hydrogen_from_dirac(const DiracBlock& block) { return block.h; }

CVector dagger(const CVector& psi) {
    if (psi.size() % 2 != 0) throw std::invalid_argument("spin blocks have even dimension");
    CVector out(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); i += 2) {
        // eps acting on (v0, v1) after conjugation: (conj v1, -conj v0)
        out(i) = std::conj(psi(i + 1));
        out(i + 1) = -std::conj(psi(i));
    }
    return out;
}

CMatrix eigenspace(const DiracBlock& block, HalfInt lambda) {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < block.eigenvalues.size(); ++i)
        if (HalfInt::snap(block.eigenvalues(i), 1e-6) == lambda) cols.push_back(i);
    CMatrix out(block.dim, static_cast<Eigen::Index>(cols.size()));
    for (Eigen::Index c = 0; c < out.cols(); ++c) out.col(c) = block.eigenvectors.col(cols[c]);
    return out;
}

} // namespace keplerfock::dirac

#include "keplerfock/su2rep.hpp"

#include <cmath>
#include <stdexcept>

namespace keplerfock::su2rep {

std::array<CMatrix, 3> spin_matrices(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("spin must be non-negative");
    const int dim = j.twice() + 1;
    CMatrix jplus = CMatrix::Zero(dim, dim);
    CMatrix j3 = CMatrix::Zero(dim, dim);
    const double jv = j.value();
    for (int r = 0; r < dim; ++r) {
        const double m = jv - r; // row r holds |j, m>
        j3(r, r) = m;
        if (r > 0) // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
            jplus(r - 1, r) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
    }
    const CMatrix jminus = jplus.adjoint();
    std::array<CMatrix, 3> ops;
    ops[0] = 0.5 * (jplus + jminus);
    ops[1] = Complex(0.0, -0.5) * (jplus - jminus);
    ops[2] = j3;
    return ops;
}

BlockRep build_block(HalfInt j, bool with_spin) {
    const int d = j.twice() + 1;
    const auto spin_j = spin_matrices(j);
    const auto spin_half = spin_matrices(HalfInt(1));
    const CMatrix id_j = identity(d);
    const CMatrix id_spin = identity(2);

    BlockRep block;
    block.j = j;
    block.with_spin = with_spin;
    block.dim = with_spin ? 2 * d * d : d * d;
    for (int k = 0; k < 3; ++k) {
        CMatrix ak = kron(spin_j[k], id_j);
        CMatrix bk = kron(id_j, spin_j[k]);
        if (with_spin) {
            block.a[k] = kron(ak, id_spin);
            block.b[k] = kron(bk, id_spin);
            block.s[k] = kron(kron(id_j, id_j), spin_half[k]);
        } else {
            block.a[k] = std::move(ak);
            block.b[k] = std::move(bk);
            block.s[k] = CMatrix::Zero(block.dim, block.dim);
        }
        block.l[k] = block.a[k] + block.b[k];
        block.jtot[k] = block.l[k] + block.s[k];
    }
    block.a2 = block.a[0] * block.a[0] + block.a[1] * block.a[1] + block.a[2] * block.a[2];
    block.b2 = block.b[0] * block.b[0] + block.b[1] * block.b[1] + block.b[2] * block.b[2];
    block.l2 = block.l[0] * block.l[0] + block.l[1] * block.l[1] + block.l[2] * block.l[2];
    return block;
}

CMatrix h0_block(HalfInt j) {
    const BlockRep block = build_block(j, false);
    const CMatrix shifted = 8.0 * (block.a2 + 0.25 * identity(block.dim));
    return -shifted.inverse();
}

std::vector<std::pair<int, int>> clebsch_gordan_spectrum(HalfInt j) {
    const BlockRep block = build_block(j, false);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(block.l2, Eigen::EigenvaluesOnly);
    std::vector<std::pair<int, int>> out; // (l, multiplicity), l ascending
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        // invert l(l+1)
        const int l = static_cast<int>(std::lround(0.5 * (std::sqrt(4.0 * lam + 1.0) - 1.0)));
        if (std::abs(static_cast<double>(l) * (l + 1) - lam) > 1e-8)
            throw std::runtime_error("L^2 eigenvalue is not of the form l(l+1)");
        if (!out.empty() && out.back().first == l)
            out.back().second++;
        else
            out.emplace_back(l, 1);
    }
    return out;
}

CMatrix conjugation_intertwiner(HalfInt j) {
    const int dim = j.twice() + 1;
    CMatrix eps = CMatrix::Zero(dim, dim);
    for (int c = 0; c < dim; ++c) eps(dim - 1 - c, c) = (c % 2 == 0) ? 1.0 : -1.0;
    return eps;
}

std::vector<QuantumLabel> label_shell(int n) {
    if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
    std::vector<QuantumLabel> labels;
    labels.reserve(2 * n * n);
    for (int l = 0; l <= n - 1; ++l)
        for (int m = l; m >= -l; --m)
            for (int twice_s : {1, -1})
                labels.push_back({n, l, m, twice_s});
    return labels;
}

} // namespace keplerfock::su2rep

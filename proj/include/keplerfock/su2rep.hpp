#pragma once

#include <array>
#include <vector>

#include "keplerfock/halfint.hpp"
#include "keplerfock/linalg.hpp"

namespace keplerfock::su2rep {

// Spin-j generators in the J3 eigenbasis ordered m = j, j-1, ..., -j.
std::array<CMatrix, 3> spin_matrices(HalfInt j);

// Orbital label (n, l, m, s). s is +-1/2 stored as twice its value.
struct QuantumLabel {
    int n;
    int l;
    int m;
    int twice_s;

    bool valid() const { return n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l &&
                                (twice_s == 1 || twice_s == -1); }
    friend bool operator==(const QuantumLabel&, const QuantumLabel&) = default;
};

// All generators on one Peter-Weyl block V_j (x) V_j, optionally tensored
// with the C^2 spin factor. Tensor order: (left SU(2), right SU(2), spin).
struct BlockRep {
    HalfInt j;
    bool with_spin;
    int dim;
    std::array<CMatrix, 3> a; // left translations
    std::array<CMatrix, 3> b; // right translations
    std::array<CMatrix, 3> s; // spin (zero matrices when with_spin is false)
    std::array<CMatrix, 3> l; // a + b
    std::array<CMatrix, 3> jtot; // l + s

    CMatrix a2; // Casimir sums, cached
    CMatrix b2;
    CMatrix l2;
};

BlockRep build_block(HalfInt j, bool with_spin);

// H0 = -(8(A^2 + 1/4))^{-1} on the spinless block; equals -1/(2n^2) I.
CMatrix h0_block(HalfInt j);

// Diagonalize L^2 on the spinless block: list of (l, multiplicity).
std::vector<std::pair<int, int>> clebsch_gordan_spectrum(HalfInt j);

// Labels of shell n in the order (l ascending, m descending, s = +1/2 first).
std::vector<QuantumLabel> label_shell(int n);

// Real antidiagonal matrix eps_j with eps_j conj(J_k) eps_j^{-1} = -J_k,
// the intertwiner between the spin-j representation and its conjugate.
CMatrix conjugation_intertwiner(HalfInt j);

} // namespace keplerfock::su2rep

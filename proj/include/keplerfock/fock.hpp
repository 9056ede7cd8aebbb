#pragma once

#include <cstdint>
#include <vector>

#include "keplerfock/linalg.hpp"

namespace keplerfock::fock {

// Occupation bitmask over a canonically ordered orbital list. Sign
// conventions follow from ascending index order of the wedge factors.
struct FockState {
    std::vector<std::uint64_t> words;
    int nbits{0};

    static FockState empty(int nbits);
    bool test(int i) const;
    void set(int i);
    int count() const;
    std::vector<int> indices() const; // ascending

    friend bool operator==(const FockState&, const FockState&) = default;
};

// All N-element subsets of {0..size-1} in colexicographic order.
std::vector<std::vector<int>> sector_index_sets(int size, int n_particles);
std::vector<FockState> sector_basis(int size, int n_particles);

// Colex rank of an ascending index set among C(size, N) subsets.
std::int64_t colex_rank(const std::vector<int>& indices);

std::int64_t binomial(int n, int k);

// Minor of u with the given rows and columns.
template <typename Matrix>
typename Matrix::Scalar minor_det(const Matrix& u, const std::vector<int>& rows,
                                  const std::vector<int>& cols);

// Second-quantized unitary on the N-particle sector: matrix elements are
// minors, <T| Gamma(u) |S> = det u[T, S].
CMatrix gamma_sector(const CMatrix& u, int n_particles);
RMatrix gamma_sector(const RMatrix& u, int n_particles);

// dGamma(a) on the N-particle sector: diagonal entries are occupied-orbital
// sums, off-diagonal entries connect states differing in one orbital.
CMatrix dgamma_sector(const CMatrix& a, int n_particles);
RMatrix dgamma_sector(const RMatrix& a, int n_particles);

// Single matrix element <T| dGamma(a) |S> without building the sector.
template <typename Matrix>
typename Matrix::Scalar dgamma_element(const Matrix& a, const std::vector<int>& t,
                                       const std::vector<int>& s);

// max_t || exp(i t dGamma(a)) - Gamma(exp(i t a)) || for the given times.
double exponentiation_residual(const CMatrix& hermitian, int n_particles,
                               const std::vector<double>& times);

// Residuals of the second-quantized intertwining identities on sector N of the realified
// truncated single-particle space (blocks j = 0, 1/2, ..., j_max):
//   Gamma(F) Gamma(rho) = Gamma(rho) Gamma(F)   (rho_H has the same matrix)
//   Gamma(F) dGamma(d)  = dGamma(d) Gamma(F)
// plus Gamma-functoriality Gamma(F rho) = Gamma(F) Gamma(rho). Sectors small
// enough are checked densely; larger ones on seeded sampled matrix elements.
struct SectorEquivalenceReport {
    double intertwining; // [Gamma(F), Gamma(rho)]
    double dgamma_commutation;
    double functoriality;
};

SectorEquivalenceReport second_quantized_equivalence(HalfInt j_max, int n_particles, int samples, std::uint64_t seed);

} // namespace keplerfock::fock

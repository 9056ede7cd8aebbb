#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "keplerfock/halfint.hpp"

namespace keplerfock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Real 2n x 2n matrix [[Re, -Im], [Im, Re]] acting on (Re psi, Im psi).
RMatrix realify(const CMatrix& m);

// Apply f to the eigenvalues of a self-adjoint matrix (spectral calculus).
CMatrix hermitian_function(const CMatrix& a, const std::function<double(double)>& f);

// exp(i t a) for self-adjoint a, via the spectral decomposition.
CMatrix unitary_exp(const CMatrix& a, double t);

// Matrix exponential by Pade-13 scaling and squaring; no normality assumed.
RMatrix real_expm(const RMatrix& a);

// Eigenvalues of a self-adjoint matrix snapped to half-integers, returned as
// (lambda, multiplicity) sorted by descending lambda. Throws if any eigenvalue
// is farther than snap_tol from Z/2.
std::vector<std::pair<HalfInt, int>> half_integer_spectrum(const CMatrix& herm, double snap_tol);

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline CMatrix identity(int n) { return CMatrix::Identity(n, n); }

// Numerical rank of a real matrix: singular values above rel_tol * sigma_max.
int numerical_rank(const RMatrix& m, double rel_tol);

} // namespace keplerfock

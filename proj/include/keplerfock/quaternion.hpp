#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "keplerfock/linalg.hpp"

namespace keplerfock::quaternion {

struct Quat {
    double w{0}, x{0}, y{0}, z{0};

    friend Quat operator+(const Quat& a, const Quat& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quat operator-(const Quat& a, const Quat& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quat operator*(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    double norm() const;
};

// exp(t e_axis) = cos t + e_axis sin t for axis in {0,1,2} ~ {i,j,k}.
Quat unit_exp(int axis, double t);

// Monomial exponents (k0,k1,k2,k3) of total degree k in graded-lex order
// (k0 decreasing first). Count is C(k+3, 3).
std::vector<std::array<int, 4>> monomial_exponents(int k);
int monomial_count(int k);

// H-valued homogeneous polynomial: one quaternion coefficient per monomial.
struct HPoly {
    int degree{0};
    std::vector<Quat> coeff;

    Quat eval(const Quat& q) const;
};

// Real matrix of the left Cauchy-Riemann operator
// dbar = d/dq0 + i d/dq1 + j d/dq2 + k d/dq3 from degree k to degree k-1
// H-valued polynomials; the zero map for k = 0. Exponent arithmetic is exact.
RMatrix cr_matrix(int k);

// Complex dimension of the regular subspace: real nullity of cr_matrix / 2.
// Throws if the nullity is odd.
int uk_dimension(int k);

// Real matrix of the flat 4-dimensional Laplacian (componentwise) from
// degree k to degree k-2 polynomials; zero map for k < 2.
RMatrix laplacian4_matrix(int k);

// Orthonormal basis of ker dbar in degree k, from the SVD of cr_matrix.
std::vector<HPoly> cr_kernel_basis(int k);

double cr_residual(const HPoly& psi);

// Restriction of the Dirac-like operator D to S^3 evaluated pointwise by
// central differences of step h along the flows g exp(t e_j):
//   (D psi)(g) = - sum_j e_j d/dt psi(g exp(t e_j)) |_0 .
// For regular psi of degree k this must equal k psi (and slash-D = D + 3/2
// must give k + 3/2). Returns the max residual over `samples` seeded random
// unit quaternions; throws if psi is not in ker dbar.
double dirac_eigenvalue_check(const HPoly& psi, int samples, double h, std::uint64_t seed);

} // namespace keplerfock::quaternion

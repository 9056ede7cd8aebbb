#include "keplerfock/linalg.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace keplerfock {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

RMatrix realify(const CMatrix& m) {
    const Eigen::Index n = m.rows(), k = m.cols();
    RMatrix out(2 * n, 2 * k);
    out.topLeftCorner(n, k) = m.real();
    out.topRightCorner(n, k) = -m.imag();
    out.bottomLeftCorner(n, k) = m.imag();
    out.bottomRightCorner(n, k) = m.real();
    return out;
}

CMatrix hermitian_function(const CMatrix& a, const std::function<double(double)>& f) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    RVector d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(d(i));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix unitary_exp(const CMatrix& a, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    CVector phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(Complex(0.0, t * es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// Pade-13 coefficients for the diagonal approximant of exp.
constexpr double kPade13[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                              1187353796428800.,  129060195264000.,   10559470521600.,
                              670442572800.,      33522128640.,       1323241920.,
                              40840800.,          960960.,            16380.,
                              182.,               1.};

} // namespace

RMatrix real_expm(const RMatrix& a) {
    const Eigen::Index n = a.rows();
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff(); // inf-norm
    int squarings = 0;
    const double theta13 = 5.371920351148152;
    RMatrix as = a;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        as /= std::pow(2.0, squarings);
    }
    const RMatrix a2 = as * as;
    const RMatrix a4 = a2 * a2;
    const RMatrix a6 = a4 * a2;
    const RMatrix ident = RMatrix::Identity(n, n);
    const RMatrix u_odd =
        as * (a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2) + kPade13[7] * a6 +
              kPade13[5] * a4 + kPade13[3] * a2 + kPade13[1] * ident);
    const RMatrix v_even = a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2) +
                           kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * ident;
    RMatrix r = (v_even - u_odd).partialPivLu().solve(v_even + u_odd);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

std::vector<std::pair<HalfInt, int>> half_integer_spectrum(const CMatrix& herm, double snap_tol) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    std::map<int, int> counts; // twice_lambda -> multiplicity
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        counts[HalfInt::snap(es.eigenvalues()(i), snap_tol).twice()]++;
    std::vector<std::pair<HalfInt, int>> out;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        out.emplace_back(HalfInt(it->first), it->second);
    return out;
}

int numerical_rank(const RMatrix& m, double rel_tol) {
    Eigen::JacobiSVD<RMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

} // namespace keplerfock

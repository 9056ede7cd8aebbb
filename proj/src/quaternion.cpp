#include "keplerfock/quaternion.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace keplerfock::quaternion {

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat unit_exp(int axis, double t) {
    Quat q;
    q.w = std::cos(t);
    const double s = std::sin(t);
    if (axis == 0)
        q.x = s;
    else if (axis == 1)
        q.y = s;
    else if (axis == 2)
        q.z = s;
    else
        throw std::invalid_argument("axis must be 0, 1 or 2");
    return q;
}

std::vector<std::array<int, 4>> monomial_exponents(int k) {
    std::vector<std::array<int, 4>> out;
    for (int k0 = k; k0 >= 0; --k0)
        for (int k1 = k - k0; k1 >= 0; --k1)
            for (int k2 = k - k0 - k1; k2 >= 0; --k2)
                out.push_back({k0, k1, k2, k - k0 - k1 - k2});
    return out;
}

int monomial_count(int k) { return (k + 1) * (k + 2) * (k + 3) / 6; }

Quat HPoly::eval(const Quat& q) const {
    const auto exps = monomial_exponents(degree);
    Quat value;
    for (std::size_t a = 0; a < exps.size(); ++a) {
        double mono = 1.0;
        for (int rep = 0; rep < exps[a][0]; ++rep) mono *= q.w;
        for (int rep = 0; rep < exps[a][1]; ++rep) mono *= q.x;
        for (int rep = 0; rep < exps[a][2]; ++rep) mono *= q.y;
        for (int rep = 0; rep < exps[a][3]; ++rep) mono *= q.z;
        value = value + mono * coeff[a];
    }
    return value;
}

namespace {

// Left multiplication by 1, i, j, k on components (w, x, y, z).
const std::array<std::array<std::array<double, 4>, 4>, 4> kLeftMul = {{
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
    {{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
    {{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}},
    {{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
}};

std::map<std::array<int, 4>, int> exponent_index(const std::vector<std::array<int, 4>>& exps) {
    std::map<std::array<int, 4>, int> index;
    for (std::size_t a = 0; a < exps.size(); ++a) index[exps[a]] = static_cast<int>(a);
    return index;
}

constexpr double kRankTol = 1e-8;

} // namespace

RMatrix cr_matrix(int k) {
    if (k < 0) throw std::invalid_argument("degree must be non-negative");
    if (k == 0) return RMatrix::Zero(1, 4); // constants map to the zero space
    const auto src = monomial_exponents(k);
    const auto dst = monomial_exponents(k - 1);
    const auto dst_index = exponent_index(dst);
    RMatrix m = RMatrix::Zero(4 * static_cast<int>(dst.size()), 4 * static_cast<int>(src.size()));
    for (std::size_t a = 0; a < src.size(); ++a) {
        for (int mu = 0; mu < 4; ++mu) {
            if (src[a][mu] == 0) continue;
            auto reduced = src[a];
            reduced[mu] -= 1;
            const int b = dst_index.at(reduced);
            const double factor = src[a][mu];
            for (int row = 0; row < 4; ++row)
                for (int col = 0; col < 4; ++col)
                    m(4 * b + row, 4 * static_cast<int>(a) + col) +=
                        factor * kLeftMul[mu][row][col];
        }
    }
    return m;
}

int uk_dimension(int k) {
    const RMatrix m = cr_matrix(k);
    const int nullity = static_cast<int>(m.cols()) - numerical_rank(m, kRankTol);
    if (nullity % 2 != 0)
        throw std::runtime_error("odd real nullity: right complex action failed to pair");
    return nullity / 2;
}

RMatrix laplacian4_matrix(int k) {
    if (k < 2) return RMatrix::Zero(1, 4 * monomial_count(std::max(k, 0)));
    const auto src = monomial_exponents(k);
    const auto dst = monomial_exponents(k - 2);
    const auto dst_index = exponent_index(dst);
    RMatrix m = RMatrix::Zero(4 * static_cast<int>(dst.size()), 4 * static_cast<int>(src.size()));
    for (std::size_t a = 0; a < src.size(); ++a)
        for (int mu = 0; mu < 4; ++mu) {
            if (src[a][mu] < 2) continue;
            auto reduced = src[a];
            reduced[mu] -= 2;
            const int b = dst_index.at(reduced);
            const double factor = src[a][mu] * (src[a][mu] - 1);
            for (int comp = 0; comp < 4; ++comp)
                m(4 * b + comp, 4 * static_cast<int>(a) + comp) += factor;
        }
    return m;
}

std::vector<HPoly> cr_kernel_basis(int k) {
    const RMatrix m = cr_matrix(k);
    Eigen::JacobiSVD<RMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? kRankTol * sv(0) : 0.0;
    std::vector<HPoly> basis;
    for (Eigen::Index c = 0; c < svd.matrixV().cols(); ++c) {
        if (c < sv.size() && sv(c) > cutoff) continue;
        const RVector v = svd.matrixV().col(c);
        HPoly psi;
        psi.degree = k;
        psi.coeff.resize(monomial_count(k));
        for (std::size_t a = 0; a < psi.coeff.size(); ++a)
            psi.coeff[a] = {v(4 * a), v(4 * a + 1), v(4 * a + 2), v(4 * a + 3)};
        basis.push_back(std::move(psi));
    }
    return basis;
}

double cr_residual(const HPoly& psi) {
    const RMatrix m = cr_matrix(psi.degree);
    RVector v(4 * psi.coeff.size());
    for (std::size_t a = 0; a < psi.coeff.size(); ++a) {
        v(4 * a) = psi.coeff[a].w;
        v(4 * a + 1) = psi.coeff[a].x;
        v(4 * a + 2) = psi.coeff[a].y;
        v(4 * a + 3) = psi.coeff[a].z;
    }
    return (m * v).cwiseAbs().maxCoeff();
}

double dirac_eigenvalue_check(const HPoly& psi, int samples, double h, std::uint64_t seed) {
    if (h <= 0.0) throw std::invalid_argument("difference step must be positive");
    if (cr_residual(psi) > 1e-8)
        throw std::invalid_argument("psi is not a regular polynomial (dbar psi != 0)");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const Quat units[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Quat g{normal(rng), normal(rng), normal(rng), normal(rng)};
        g = (1.0 / g.norm()) * g;
        Quat dpsi;
        for (int axis = 0; axis < 3; ++axis) {
            const Quat plus = psi.eval(g * unit_exp(axis, h));
            const Quat minus = psi.eval(g * unit_exp(axis, -h));
            dpsi = dpsi - units[axis] * ((1.0 / (2.0 * h)) * (plus - minus));
        }
        const Quat value = psi.eval(g);
        const double k = psi.degree;
        worst = std::max(worst, (dpsi - k * value).norm());
        // slash-D route: (D + 3/2) psi = (k + 3/2) psi is the same residual,
        // evaluated explicitly.
        const Quat slash = dpsi + 1.5 * value;
        worst = std::max(worst, (slash - (k + 1.5) * value).norm());
    }
    return worst;
}

} // namespace keplerfock::quaternion

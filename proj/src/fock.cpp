#include "keplerfock/fock.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "keplerfock/dirac.hpp"
#include "keplerfock/su2rep.hpp"
#include "keplerfock/weyl.hpp"

namespace keplerfock::fock {

FockState FockState::empty(int nbits) {
    FockState s;
    s.nbits = nbits;
    s.words.assign((nbits + 63) / 64, 0);
    return s;
}

bool FockState::test(int i) const { return (words[i / 64] >> (i % 64)) & 1u; }

void FockState::set(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }

int FockState::count() const {
    int total = 0;
    for (auto w : words) total += std::popcount(w);
    return total;
}

std::vector<int> FockState::indices() const {
    std::vector<int> out;
    for (int i = 0; i < nbits; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

namespace {

// Subsets with a smaller maximum come first; recurse on the leading elements.
std::vector<std::vector<int>> colex_sets(int size, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int top = n - 1; top < size; ++top) {
        auto partial = colex_sets(top, n - 1);
        for (auto& p : partial) {
            p.push_back(top);
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace

std::vector<std::vector<int>> sector_index_sets(int size, int n_particles) {
    if (n_particles < 0 || n_particles > size)
        throw std::invalid_argument("particle number out of range for the orbital basis");
    return colex_sets(size, n_particles);
}

std::vector<FockState> sector_basis(int size, int n_particles) {
    std::vector<FockState> out;
    for (const auto& set : sector_index_sets(size, n_particles)) {
        FockState s = FockState::empty(size);
        for (int i : set) s.set(i);
        out.push_back(std::move(s));
    }
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::int64_t colex_rank(const std::vector<int>& indices) {
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < indices.size(); ++i)
        rank += binomial(indices[i], static_cast<int>(i) + 1);
    return rank;
}

template <typename Matrix>
typename Matrix::Scalar minor_det(const Matrix& u, const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
    using Scalar = typename Matrix::Scalar;
    const int n = static_cast<int>(rows.size());
    switch (n) {
    case 0:
        return Scalar(1);
    case 1:
        return u(rows[0], cols[0]);
    case 2:
        return u(rows[0], cols[0]) * u(rows[1], cols[1]) -
               u(rows[0], cols[1]) * u(rows[1], cols[0]);
    case 3: {
        const Scalar a = u(rows[0], cols[0]), b = u(rows[0], cols[1]), c = u(rows[0], cols[2]);
        const Scalar d = u(rows[1], cols[0]), e = u(rows[1], cols[1]), f = u(rows[1], cols[2]);
        const Scalar g = u(rows[2], cols[0]), h = u(rows[2], cols[1]), i = u(rows[2], cols[2]);
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    }
    default: {
        Matrix sub(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) sub(r, c) = u(rows[r], cols[c]);
        return sub.determinant();
    }
    }
}

template CMatrix::Scalar minor_det<CMatrix>(const CMatrix&, const std::vector<int>&,
                                            const std::vector<int>&);
template RMatrix::Scalar minor_det<RMatrix>(const RMatrix&, const std::vector<int>&,
                                            const std::vector<int>&);

namespace {

template <typename Matrix>
Matrix gamma_sector_impl(const Matrix& u, int n_particles) {
    if (u.rows() != u.cols()) throw std::invalid_argument("Gamma needs a square matrix");
    const auto sets = sector_index_sets(static_cast<int>(u.rows()), n_particles);
    const auto dim = static_cast<Eigen::Index>(sets.size());
    Matrix out(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col)
        for (Eigen::Index row = 0; row < dim; ++row)
            out(row, col) = minor_det(u, sets[row], sets[col]);
    return out;
}

template <typename Matrix>
typename Matrix::Scalar dgamma_element_impl(const Matrix& a, const std::vector<int>& t,
                                            const std::vector<int>& s) {
    using Scalar = typename Matrix::Scalar;
    if (t == s) {
        Scalar sum(0);
        for (int i : s) sum += a(i, i);
        return sum;
    }
    std::vector<int> t_only, s_only;
    std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(t_only));
    std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(s_only));
    if (t_only.size() != 1 || s_only.size() != 1) return Scalar(0);
    const int to = t_only[0], from = s_only[0];
    const int lo = std::min(from, to), hi = std::max(from, to);
    int crossings = 0;
    for (int i : s)
        if (i != from && i > lo && i < hi) ++crossings;
    const double sign = (crossings % 2 == 0) ? 1.0 : -1.0;
    return sign * a(to, from);
}

template <typename Matrix>
Matrix dgamma_sector_impl(const Matrix& a, int n_particles) {
    if (a.rows() != a.cols()) throw std::invalid_argument("dGamma needs a square matrix");
    const int size = static_cast<int>(a.rows());
    const auto sets = sector_index_sets(size, n_particles);
    const auto dim = static_cast<Eigen::Index>(sets.size());
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto& s = sets[col];
        typename Matrix::Scalar diag(0);
        for (int i : s) diag += a(i, i);
        out(col, col) = diag;
        // single substitutions i -> t
        for (int i : s) {
            for (int t = 0; t < size; ++t) {
                if (std::binary_search(s.begin(), s.end(), t)) continue;
                std::vector<int> target;
                target.reserve(s.size());
                for (int x : s)
                    if (x != i) target.push_back(x);
                target.insert(std::upper_bound(target.begin(), target.end(), t), t);
                out(colex_rank(target), col) += dgamma_element_impl(a, target, s);
            }
        }
    }
    return out;
}

} // namespace

CMatrix gamma_sector(const CMatrix& u, int n_particles) { return gamma_sector_impl(u, n_particles); }
RMatrix gamma_sector(const RMatrix& u, int n_particles) { return gamma_sector_impl(u, n_particles); }

CMatrix dgamma_sector(const CMatrix& a, int n_particles) {
    if ((a - a.adjoint()).norm() > 1e-10 * (1.0 + a.norm()))
        throw std::invalid_argument("dGamma requires a self-adjoint generator");
    return dgamma_sector_impl(a, n_particles);
}
RMatrix dgamma_sector(const RMatrix& a, int n_particles) { return dgamma_sector_impl(a, n_particles); }

template <typename Matrix>
typename Matrix::Scalar dgamma_element(const Matrix& a, const std::vector<int>& t,
                                       const std::vector<int>& s) {
    return dgamma_element_impl(a, t, s);
}

template CMatrix::Scalar dgamma_element<CMatrix>(const CMatrix&, const std::vector<int>&,
                                                 const std::vector<int>&);
template RMatrix::Scalar dgamma_element<RMatrix>(const RMatrix&, const std::vector<int>&,
                                                 const std::vector<int>&);

double exponentiation_residual(const CMatrix& hermitian, int n_particles,
                               const std::vector<double>& times) {
    const CMatrix dg = dgamma_sector(hermitian, n_particles);
    double worst = 0.0;
    for (double t : times) {
        const CMatrix lhs = unitary_exp(dg, t);
        const CMatrix rhs = gamma_sector(unitary_exp(hermitian, t), n_particles);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

namespace {

RMatrix block_diag(const std::vector<RMatrix>& blocks) {
    Eigen::Index total = 0;
    for (const auto& b : blocks) total += b.rows();
    RMatrix out = RMatrix::Zero(total, total);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

} // namespace

SectorEquivalenceReport second_quantized_equivalence(HalfInt j_max, int n_particles, int samples, std::uint64_t seed) {
    // Assemble the realified single-particle space over blocks j <= j_max.
    std::vector<su2rep::BlockRep> blocks;
    std::vector<RMatrix> f_blocks, d_blocks;
    for (int twice_j = 0; twice_j <= j_max.twice(); ++twice_j) {
        blocks.push_back(su2rep::build_block(HalfInt(twice_j), true));
        const auto dblock = dirac::build_dirac(blocks.back());
        const auto space = weyl::sign_and_structure(dblock);
        const auto c_op = weyl::charge_conjugation(HalfInt(twice_j));
        f_blocks.push_back(weyl::build_intertwiner(dblock, space, c_op).f);
        d_blocks.push_back(realify(dblock.slash_d));
    }
    const RMatrix f_all = block_diag(f_blocks);
    const RMatrix d_all = block_diag(d_blocks);
    const int size = static_cast<int>(f_all.rows());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    auto sample_rho = [&]() {
        double alpha[3], beta[3];
        for (int k = 0; k < 3; ++k) {
            alpha[k] = coeff(rng);
            beta[k] = coeff(rng);
        }
        std::vector<RMatrix> rho_blocks;
        for (const auto& block : blocks) {
            CMatrix gen = CMatrix::Zero(block.dim, block.dim);
            for (int k = 0; k < 3; ++k)
                gen += alpha[k] * block.a[k] + beta[k] * (block.b[k] + block.s[k]);
            rho_blocks.push_back(realify(unitary_exp(gen, 1.0)));
        }
        return block_diag(rho_blocks);
    };

    SectorEquivalenceReport report{0.0, 0.0, 0.0};
    const std::int64_t sector_dim = binomial(size, n_particles);
    const bool dense = sector_dim <= 2000;

    const auto sets = sector_index_sets(size, n_particles);
    std::uniform_int_distribution<std::int64_t> pick(0, sector_dim - 1);

    if (dense) {
        const RMatrix gf = gamma_sector(f_all, n_particles);
        const RMatrix dgd = dgamma_sector(d_all, n_particles);
        for (int s = 0; s < samples; ++s) {
            const RMatrix rho = sample_rho();
            const RMatrix grho = gamma_sector(rho, n_particles);
            report.intertwining = std::max(report.intertwining, (gf * grho - grho * gf).norm());
            report.functoriality = std::max(
                report.functoriality, (gamma_sector(RMatrix(f_all * rho), n_particles) - gf * grho).norm());
        }
        report.dgamma_commutation = (gf * dgd - dgd * gf).norm();
        return report;
    }

    // Sampled matrix elements for large sectors: expand one column of each
    // Gamma and probe a handful of rows through the explicit middle sum.
    const int n_sources = 4;
    const int n_probes = 8;
    for (int s = 0; s < samples; ++s) {
        const RMatrix rho = sample_rho();
        for (int src = 0; src < n_sources; ++src) {
            const auto& source = sets[pick(rng)];
            RVector rho_col(sector_dim), f_col(sector_dim);
            for (std::int64_t m = 0; m < sector_dim; ++m) {
                rho_col(m) = minor_det(rho, sets[m], source);
                f_col(m) = minor_det(f_all, sets[m], source);
            }
            for (int probe = 0; probe < n_probes; ++probe) {
                const auto& target = sets[pick(rng)];
                double lhs = 0.0, rhs = 0.0, fr = 0.0;
                for (std::int64_t m = 0; m < sector_dim; ++m) {
                    lhs += minor_det(f_all, target, sets[m]) * rho_col(m);
                    rhs += minor_det(rho, target, sets[m]) * f_col(m);
                }
                fr = minor_det(RMatrix(f_all * rho), target, source);
                report.intertwining = std::max(report.intertwining, std::abs(lhs - rhs));
                report.functoriality = std::max(report.functoriality, std::abs(fr - lhs));

                // dGamma identity through sparse neighbours of source/target.
                double lhs_d = 0.0, rhs_d = 0.0;
                auto neighbours = [&](const std::vector<int>& base) {
                    std::vector<std::vector<int>> out{base};
                    for (int i : base)
                        for (int t = 0; t < size; ++t) {
                            if (std::binary_search(base.begin(), base.end(), t)) continue;
                            std::vector<int> next;
                            for (int x : base)
                                if (x != i) next.push_back(x);
                            next.insert(std::upper_bound(next.begin(), next.end(), t), t);
                            out.push_back(std::move(next));
                        }
                    return out;
                };
                for (const auto& mid : neighbours(source))
                    lhs_d += minor_det(f_all, target, mid) * dgamma_element(d_all, mid, source);
                for (const auto& mid : neighbours(target))
                    rhs_d += dgamma_element(d_all, target, mid) * minor_det(f_all, mid, source);
                report.dgamma_commutation =
                    std::max(report.dgamma_commutation, std::abs(lhs_d - rhs_d));
            }
        }
    }
    return report;
}

} // namespace keplerfock::fock

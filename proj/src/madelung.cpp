#include "keplerfock/madelung.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace keplerfock::madelung {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::inverse() const {
    if (num == 0) throw std::domain_error("inverse of zero");
    return Rational(den, num);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

Rational subshell_energy(int n, int l) {
    if (l < 0 || l > n - 1) throw std::invalid_argument("subshell needs 0 <= l <= n-1");
    return Rational(2 * n) + Rational(2 * l + 1) + Rational(1, 2 * l + 1);
}

Rational wiswesser_energy(int n, int l) {
    if (l < 0 || l > n - 1) throw std::invalid_argument("subshell needs 0 <= l <= n-1");
    return Rational(n) + Rational(l) - Rational(l, l + 1);
}

Rational Subshell::energy() const { return subshell_energy(n, l); }

namespace {
constexpr const char* kOrbitalLetters = "spdfghik";
}

std::string Subshell::label() const {
    if (l > 7) return std::to_string(n) + "(l=" + std::to_string(l) + ")";
    return std::to_string(n) + kOrbitalLetters[l];
}

std::vector<Subshell> filling_order(int max_subshells) {
    std::vector<Subshell> all;
    // n <= max_subshells + 1 always covers the requested prefix.
    for (int n = 1; n <= max_subshells + 1; ++n)
        for (int l = 0; l <= n - 1; ++l) all.push_back({n, l});
    std::stable_sort(all.begin(), all.end(), [](const Subshell& a, const Subshell& b) {
        if (a.n + a.l != b.n + b.l) return a.n + a.l < b.n + b.l;
        return a.n < b.n;
    });
    if (max_subshells < static_cast<int>(all.size()))
        all.resize(std::max(max_subshells, 0));
    return all;
}

std::vector<su2rep::QuantumLabel> hund_assign(const Subshell& sub, int count) {
    if (count < 0 || count > sub.capacity())
        throw std::invalid_argument("occupancy exceeds subshell capacity");
    std::vector<su2rep::QuantumLabel> out;
    out.reserve(count);
    for (int twice_s : {1, -1})
        for (int m = sub.l; m >= -sub.l; --m) {
            if (static_cast<int>(out.size()) == count) return out;
            out.push_back({sub.n, sub.l, m, twice_s});
        }
    return out;
}

Configuration configuration(int z) {
    if (z < 0 || z > 120) throw std::invalid_argument("Z must be in 0..120");
    Configuration config;
    config.z = z;
    int remaining = z;
    for (const Subshell& sub : filling_order(64)) {
        if (remaining == 0) break;
        const int occ = std::min(remaining, sub.capacity());
        config.fills.emplace_back(sub, occ);
        const auto labels = hund_assign(sub, occ);
        config.orbitals.insert(config.orbitals.end(), labels.begin(), labels.end());
        remaining -= occ;
    }
    return config;
}

Rational Configuration::total_energy() const {
    Rational total;
    for (const auto& [sub, occ] : fills) total = total + Rational(occ) * sub.energy();
    return total;
}

std::string Configuration::str() const {
    std::string out;
    for (const auto& [sub, occ] : fills) {
        if (!out.empty()) out += ' ';
        out += sub.label() + std::to_string(occ);
    }
    return out;
}

CMatrix hsingle_block(const su2rep::BlockRep& block) {
    if (!block.with_spin) throw std::invalid_argument("hsingle needs the spin block");
    const CMatrix quarter = 0.25 * identity(block.dim);
    const CMatrix a_tilde = hermitian_function(block.a2 + quarter,
                                               [](double x) { return std::sqrt(x); });
    const CMatrix two_l_tilde = hermitian_function(
        block.l2 + quarter, [](double x) { return 2.0 * std::sqrt(x); });
    const CMatrix two_l_tilde_inv = hermitian_function(
        block.l2 + quarter, [](double x) { return 0.5 / std::sqrt(x); });
    return 4.0 * a_tilde + two_l_tilde + two_l_tilde_inv;
}

std::vector<SubshellLine> hsingle_spectrum(const su2rep::BlockRep& block) {
    const CMatrix h = hsingle_block(block);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    const int n = block.j.twice() + 1;
    std::vector<SubshellLine> lines;
    for (int l = 0; l <= n - 1; ++l) lines.push_back({{n, l}, 0, 0.0});
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double value = es.eigenvalues()(i);
        // assign to the nearest expected subshell energy
        int best = 0;
        double best_gap = 1e300;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            const double gap = std::abs(value - lines[k].sub.energy().to_double());
            if (gap < best_gap) {
                best_gap = gap;
                best = static_cast<int>(k);
            }
        }
        lines[best].multiplicity++;
        lines[best].value = value;
    }
    return lines;
}

OrbitalBasis aufbau_basis(int z_max) {
    OrbitalBasis basis;
    for (const Subshell& sub : filling_order(64)) {
        if (basis.size() >= z_max) break;
        for (const auto& label : hund_assign(sub, sub.capacity())) {
            basis.labels.push_back(label);
            basis.energies.push_back(sub.energy());
        }
    }
    return basis;
}

fock::FockState element_state(int z, const OrbitalBasis& basis) {
    if (z < 0 || z > basis.size())
        throw std::invalid_argument("Z exceeds the truncated orbital basis");
    fock::FockState state = fock::FockState::empty(basis.size());
    for (int i = 0; i < z; ++i) state.set(i);
    return state;
}

std::vector<TableRow> subshell_table() {
    std::vector<TableRow> rows;
    int z = 0;
    for (const Subshell& sub : filling_order(20)) {
        rows.push_back({z + 1, z + sub.capacity(), sub});
        z += sub.capacity();
    }
    return rows;
}

namespace {

const std::array<std::string, 121> kSymbols = {
    "n0", // element zero
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si", "P",
    "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
    "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh",
    "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W",  "Re",
    "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th",
    "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db",
    "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og", "Uue", "Ubn"};

} // namespace

const std::string& element_symbol(int z) {
    if (z < 0 || z > 120) throw std::invalid_argument("Z must be in 0..120");
    return kSymbols[static_cast<std::size_t>(z)];
}

ElementRow element_row(int z) {
    if (z < 1 || z > 120) throw std::invalid_argument("Z must be in 1..120");
    const Configuration config = configuration(z);
    const Subshell last = config.fills.back().first;
    // A period opens at each ns subshell in the filling order.
    int period = 1;
    for (const auto& [sub, occ] : config.fills)
        if (sub.l == 0) period = std::max(period, sub.n);
    ElementRow row;
    row.z = z;
    row.period = period;
    row.block = last.l <= 7 ? kOrbitalLetters[last.l] : '?';
    row.symbol = element_symbol(z);
    row.config = config.str();
    return row;
}

} // namespace keplerfock::madelung

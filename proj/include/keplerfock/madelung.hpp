#pragma once

#include <string>
#include <vector>

#include "keplerfock/fock.hpp"
#include "keplerfock/linalg.hpp"
#include "keplerfock/su2rep.hpp"

namespace keplerfock::madelung {

// Exact rational with the small denominators (2l+1 <= 15) of the table.
struct Rational {
    long long num{0};
    long long den{1};

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational inverse() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
};

struct Subshell {
    int n{1};
    int l{0};

    int capacity() const { return 2 * (2 * l + 1); }
    Rational energy() const; // 2n + (2l+1) + 1/(2l+1)
    std::string label() const; // "1s", "3d", ...
    friend bool operator==(const Subshell&, const Subshell&) = default;
};

Rational subshell_energy(int n, int l);

// Wiswesser's alternative: n + l - l/(l+1). Orders subshells identically.
Rational wiswesser_energy(int n, int l);

// Subshells sorted by (n+l ascending, n ascending) -- the Madelung order.
std::vector<Subshell> filling_order(int max_subshells);

struct Configuration {
    int z{0};
    std::vector<std::pair<Subshell, int>> fills; // occupancies in filling order
    std::vector<su2rep::QuantumLabel> orbitals;  // Hund-assigned
    Rational total_energy() const;
    std::string str() const; // "1s2 2s2 2p3"
};

Configuration configuration(int z); // 0 <= z <= 120 (z = 0 is element zero)

// Hund order: singly occupy m = l..-l with s = +1/2, then pair with -1/2.
std::vector<su2rep::QuantumLabel> hund_assign(const Subshell& sub, int count);

// H_single = 4 Atilde + 2 Ltilde + (2 Ltilde)^{-1} on a spin block, with
// Atilde = sqrt(A^2 + 1/4) and Ltilde = sqrt(L^2 + 1/4); eigenvalue E_{n,l}
// on the (n, l) joint eigenspace with multiplicity 2(2l+1).
CMatrix hsingle_block(const su2rep::BlockRep& block);

// Diagonalized hsingle spectrum grouped as (subshell, multiplicity, value).
struct SubshellLine {
    Subshell sub;
    int multiplicity;
    double value;
};
std::vector<SubshellLine> hsingle_spectrum(const su2rep::BlockRep& block);

// Orbital list in global Aufbau + Hund order covering at least z_max
// electrons, with exact per-orbital energies.
struct OrbitalBasis {
    std::vector<su2rep::QuantumLabel> labels;
    std::vector<Rational> energies;
    int size() const { return static_cast<int>(labels.size()); }
};
OrbitalBasis aufbau_basis(int z_max);

// Occupation of the z lowest orbitals of the Aufbau basis.
fock::FockState element_state(int z, const OrbitalBasis& basis);

struct TableRow {
    int z_lo;
    int z_hi;
    Subshell sub;
};

// The subshell table for Z = 1..120 (20 rows ending at 8s).
std::vector<TableRow> subshell_table();

// Period and block letter layout row for one element.
struct ElementRow {
    int z;
    int period;
    char block;
    std::string symbol;
    std::string config;
};
ElementRow element_row(int z);

const std::string& element_symbol(int z); // 1..120

} // namespace keplerfock::madelung

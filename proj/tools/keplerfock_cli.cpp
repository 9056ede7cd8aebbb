// Command-line front end: every subsystem is reachable as a subcommand and
// emits machine-readable reports. Exit codes: 0 pass, 1 check failure,
// 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>

#include "keplerfock/classical.hpp"
#include "keplerfock/dirac.hpp"
#include "keplerfock/fock.hpp"
#include "keplerfock/madelung.hpp"
#include "keplerfock/quaternion.hpp"
#include "keplerfock/su2rep.hpp"
#include "keplerfock/verify.hpp"
#include "keplerfock/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace keplerfock;

namespace {

classical::Vec3 parse_vec3(const std::string& text) {
    classical::Vec3 v;
    std::stringstream ss(text);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ',')) throw CLI::ValidationError("expected x,y,z");
        v(i) = std::stod(part);
    }
    return v;
}

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

json spectrum_json(const std::vector<std::pair<HalfInt, int>>& spectrum) {
    json out = json::array();
    for (const auto& [lambda, mult] : spectrum)
        out.push_back({{"twice_lambda", lambda.twice()}, {"multiplicity", mult}});
    return out;
}

int run_classical(const std::string& q_text, const std::string& p_text, double t_end, double tol,
                  const std::string& report) {
    using namespace classical;
    PhaseState start{parse_vec3(q_text), parse_vec3(p_text)};
    const ConservedSet c = conserved(start);
    json out;
    out["E"] = c.E;
    out["L"] = {c.L(0), c.L(1), c.L(2)};
    out["e"] = {c.e(0), c.e(1), c.e(2)};
    if (c.M) out["M"] = {(*c.M)(0), (*c.M)(1), (*c.M)(2)};
    if (c.A) out["A"] = {(*c.A)(0), (*c.A)(1), (*c.A)(2)};
    if (c.B) out["B"] = {(*c.B)(0), (*c.B)(1), (*c.B)(2)};
    if (t_end > 0) {
        const Trajectory traj = integrate(start, t_end, tol);
        const DriftReport drift = conservation_drift(traj);
        out["steps"] = traj.t.size();
        out["drift"] = {{"E", drift.dE}, {"L", drift.dL}, {"e", drift.de}};
        if (c.L.norm() > 1e-12) {
            const MomentumCircle circle = momentum_circle(traj);
            out["momentum_circle"] = {{"center", {circle.center(0), circle.center(1),
                                                  circle.center(2)}},
                                      {"radius", circle.radius},
                                      {"max_residual", circle.max_residual}};
            out["great_circle_planarity"] = great_circle_residual(traj);
        }
    }
    if (report == "csv") {
        std::cout << "key,value\n";
        std::cout << "E," << c.E << "\n";
        for (int k = 0; k < 3; ++k) std::cout << "L" << k + 1 << "," << c.L(k) << "\n";
        for (int k = 0; k < 3; ++k) std::cout << "e" << k + 1 << "," << c.e(k) << "\n";
        if (out.contains("drift")) {
            std::cout << "drift_E," << out["drift"]["E"].get<double>() << "\n";
            std::cout << "drift_L," << out["drift"]["L"].get<double>() << "\n";
            std::cout << "drift_e," << out["drift"]["e"].get<double>() << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_verify(const verify::RunConfig& config, const std::string& format) {
    const auto results = verify::verify_all(config);
    if (format == "csv") {
        std::cout << "module,check,value,threshold,pass\n";
        for (const auto& r : results)
            std::cout << r.module << ',' << r.check << ',' << r.value << ',' << r.threshold << ','
                      << (r.pass ? "true" : "false") << "\n";
    } else if (format == "text") {
        for (const auto& r : results)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.module << "." << r.check
                      << "  value=" << r.value << "  threshold=" << r.threshold << "\n";
    } else {
        json out = json::array();
        for (const auto& r : results)
            out.push_back({{"check", r.check},
                           {"value", r.value},
                           {"threshold", r.threshold},
                           {"pass", r.pass},
                           {"module", r.module}});
        std::cout << out.dump(2) << "\n";
    }
    return verify::all_pass(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kepler problem to Fock space: verification toolkit"};
    app.require_subcommand(1);

    // classical
    auto* cmd_classical = app.add_subcommand("classical", "conserved quantities and orbits");
    std::string q_text = "1,0,0", p_text = "0,1,0", report = "json";
    double t_end = 0.0, tol = 1e-10;
    cmd_classical->add_option("--q", q_text, "initial position x,y,z");
    cmd_classical->add_option("--p", p_text, "initial momentum x,y,z");
    cmd_classical->add_option("--t-end", t_end, "integration horizon (0: no integration)");
    cmd_classical->add_option("--tol", tol, "integrator tolerance");
    cmd_classical->add_option("--report", report)->check(CLI::IsMember({"json", "csv"}));

    // rep
    auto* cmd_rep = app.add_subcommand("rep", "SU(2) block generators and spectra");
    std::string rep_j = "1/2", rep_emit = "spectrum", rep_format = "json";
    bool with_spin = false;
    cmd_rep->add_option("--j", rep_j, "block spin j (e.g. 3/2)");
    cmd_rep->add_flag("--with-spin", with_spin);
    cmd_rep->add_option("--emit", rep_emit)->check(CLI::IsMember({"ops", "spectrum"}));
    cmd_rep->add_option("--format", rep_format)->check(CLI::IsMember({"json", "csv"}));

    // dirac
    auto* cmd_dirac = app.add_subcommand("dirac", "Dirac operator spectrum and identities");
    std::string dirac_j = "1/2", dirac_emit = "spectrum", dirac_format = "json";
    cmd_dirac->add_option("--j", dirac_j);
    cmd_dirac->add_option("--emit", dirac_emit)->check(CLI::IsMember({"spectrum", "identities"}));
    cmd_dirac->add_option("--format", dirac_format)->check(CLI::IsMember({"json"}));

    // quaternion
    auto* cmd_quat = app.add_subcommand("quaternion", "regular polynomial kernel checks");
    int quat_k = 1, quat_samples = 25;
    std::string quat_emit = "dim";
    cmd_quat->add_option("--k", quat_k, "homogeneity degree");
    cmd_quat->add_option("--emit", quat_emit)->check(CLI::IsMember({"dim", "check"}));
    cmd_quat->add_option("--samples", quat_samples);

    // weyl
    auto* cmd_weyl = app.add_subcommand("weyl", "positive-energy structure checks");
    std::string weyl_j = "1/2", weyl_check = "theorem1", weyl_format = "json";
    std::uint64_t weyl_seed = 20260808;
    cmd_weyl->add_option("--j", weyl_j);
    cmd_weyl->add_option("--check", weyl_check)->check(CLI::IsMember({"theorem1", "evolution"}));
    cmd_weyl->add_option("--seed", weyl_seed);
    cmd_weyl->add_option("--format", weyl_format)->check(CLI::IsMember({"json"}));

    // fock
    auto* cmd_fock = app.add_subcommand("fock", "second quantization checks");
    std::string fock_jmax = "1", fock_check = "functor";
    int fock_sector = 2;
    std::uint64_t fock_seed = 20260808;
    cmd_fock->add_option("--j-max", fock_jmax);
    cmd_fock->add_option("--sector", fock_sector);
    cmd_fock->add_option("--check", fock_check)
        ->check(CLI::IsMember({"functor", "theorem2", "exp"}));
    cmd_fock->add_option("--seed", fock_seed);

    // table
    auto* cmd_table = app.add_subcommand("table", "Madelung periodic table");
    int table_z = 0;
    bool table_all = false;
    std::string table_format = "text";
    cmd_table->add_option("--z", table_z, "single atomic number");
    cmd_table->add_flag("--all", table_all, "emit Z = 1..120");
    cmd_table->add_option("--format", table_format)
        ->check(CLI::IsMember({"csv", "json", "text"}));

    // hsingle
    auto* cmd_hsingle = app.add_subcommand("hsingle", "subshell Hamiltonian spectrum vs formula");
    std::string hsingle_j = "1/2";
    cmd_hsingle->add_option("--j", hsingle_j);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run every module's invariant suite");
    verify::RunConfig config = verify::RunConfig::defaults();
    std::string verify_jmax = "7/2", verify_format = "json";
    std::vector<std::string> tol_overrides;
    std::uint64_t verify_seed = config.seed;
    cmd_verify->add_option("--j-max", verify_jmax);
    cmd_verify->add_option("--seed", verify_seed);
    cmd_verify->add_option("--tol", tol_overrides, "override thresholds, e.g. dirac=1e-20");
    cmd_verify->add_option("--format", verify_format)
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits clean, usage errors exit 2
    }

    try {
        if (cmd_classical->parsed()) return run_classical(q_text, p_text, t_end, tol, report);

        if (cmd_rep->parsed()) {
            const HalfInt j = parse_half_int(rep_j);
            const auto block = su2rep::build_block(j, with_spin);
            json out;
            out["j"] = j.str();
            out["dim"] = block.dim;
            if (rep_emit == "ops") {
                const char* names[3] = {"1", "2", "3"};
                if (rep_format == "csv") {
                    std::cout << "op,row,col,re,im\n";
                    auto emit = [](const std::string& name, const CMatrix& m) {
                        for (Eigen::Index r = 0; r < m.rows(); ++r)
                            for (Eigen::Index c = 0; c < m.cols(); ++c)
                                if (m(r, c) != Complex(0, 0))
                                    std::cout << name << ',' << r << ',' << c << ','
                                              << m(r, c).real() << ',' << m(r, c).imag() << "\n";
                    };
                    for (int k = 0; k < 3; ++k) {
                        emit(std::string("A") + names[k], block.a[k]);
                        emit(std::string("B") + names[k], block.b[k]);
                        if (with_spin) emit(std::string("S") + names[k], block.s[k]);
                        emit(std::string("L") + names[k], block.l[k]);
                    }
                    return 0;
                }
                for (int k = 0; k < 3; ++k) {
                    out[std::string("A") + names[k]] = matrix_json(block.a[k]);
                    out[std::string("B") + names[k]] = matrix_json(block.b[k]);
                    if (with_spin) out[std::string("S") + names[k]] = matrix_json(block.s[k]);
                    out[std::string("L") + names[k]] = matrix_json(block.l[k]);
                }
                std::cout << out.dump() << "\n";
                return 0;
            }
            const auto cg = su2rep::clebsch_gordan_spectrum(j);
            if (rep_format == "csv") {
                std::cout << "l,multiplicity\n";
                for (const auto& [l, mult] : cg) std::cout << l << ',' << mult << "\n";
            } else {
                json rows = json::array();
                for (const auto& [l, mult] : cg)
                    rows.push_back({{"l", l}, {"multiplicity", mult}});
                out["l2_spectrum"] = rows;
                const int n = j.twice() + 1;
                out["h0"] = -1.0 / (2.0 * n * n);
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (cmd_dirac->parsed()) {
            const HalfInt j = parse_half_int(dirac_j);
            const auto block = su2rep::build_block(j, true);
            const auto d = dirac::build_dirac(block);
            json out;
            out["j"] = j.str();
            out["dim"] = d.dim;
            if (dirac_emit == "spectrum") {
                out["spectrum"] = spectrum_json(d.spectrum);
            } else {
                const CMatrix shifted = d.slash_d - 0.5 * identity(d.dim);
                out["laplacian_eigenvalue"] = dirac::laplacian_eigenvalue(j);
                out["d_squared_residual"] =
                    (d.d_op * d.d_op - (d.delta - 2.0 * d.d_op)).norm();
                out["shifted_square_residual"] =
                    (shifted * shifted - (d.delta + identity(d.dim))).norm();
                out["hydrogen_route_residual"] =
                    (d.h - kron(su2rep::h0_block(j), identity(2))).norm();
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_quat->parsed()) {
            json out;
            out["k"] = quat_k;
            if (quat_emit == "dim") {
                out["complex_dimension"] = quaternion::uk_dimension(quat_k);
                out["formula"] = (quat_k + 1) * (quat_k + 2);
            } else {
                const auto basis = quaternion::cr_kernel_basis(quat_k);
                double worst = 0;
                for (const auto& psi : basis)
                    worst = std::max(worst, quaternion::dirac_eigenvalue_check(
                                                psi, quat_samples, 1e-4, 20260808));
                out["samples"] = quat_samples;
                out["max_residual"] = worst;
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_weyl->parsed()) {
            const HalfInt j = parse_half_int(weyl_j);
            const auto block = su2rep::build_block(j, true);
            const auto d = dirac::build_dirac(block);
            json out;
            out["j"] = j.str();
            if (weyl_check == "theorem1") {
                const auto report = weyl::equivalence_report(block, d, 20, weyl_seed);
                out["orthogonality"] = report.orthogonality;
                out["complex_linearity"] = report.complex_linearity;
                out["dirac_commutation"] = report.dirac_commutation;
                out["intertwining"] = report.intertwining;
            } else {
                json rows = json::array();
                for (double t : {0.1, 1.0, 3.141592653589793})
                    rows.push_back({{"t", t},
                                    {"residual", weyl::evolution_structure_residual(d, t)}});
                out["evolution"] = rows;
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_fock->parsed()) {
            json out;
            std::mt19937_64 rng(fock_seed);
            std::normal_distribution<double> normal(0.0, 1.0);
            if (fock_check == "theorem2") {
                const auto report = fock::second_quantized_equivalence(parse_half_int(fock_jmax), fock_sector,
                                                         4, fock_seed);
                out["intertwining"] = report.intertwining;
                out["dgamma_commutation"] = report.dgamma_commutation;
                out["functoriality"] = report.functoriality;
            } else {
                const int size = 4;
                CMatrix m(size, size);
                for (int r = 0; r < size; ++r)
                    for (int c = 0; c < size; ++c) m(r, c) = Complex(normal(rng), normal(rng));
                if (fock_check == "functor") {
                    const CMatrix u = Eigen::HouseholderQR<CMatrix>(m).householderQ();
                    CMatrix v(size, size);
                    for (int r = 0; r < size; ++r)
                        for (int c = 0; c < size; ++c)
                            v(r, c) = Complex(normal(rng), normal(rng));
                    const CMatrix v_unitary = Eigen::HouseholderQR<CMatrix>(v).householderQ();
                    out["functoriality"] =
                        (fock::gamma_sector(CMatrix(u * v_unitary), fock_sector) -
                         fock::gamma_sector(u, fock_sector) *
                             fock::gamma_sector(v_unitary, fock_sector))
                            .norm();
                } else {
                    const CMatrix a = 0.5 * (m + m.adjoint());
                    out["exponentiation"] =
                        fock::exponentiation_residual(a, fock_sector, {0.3, 1.0});
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_table->parsed()) {
            using namespace madelung;
            if (!table_all && table_z == 0) {
                // subshell table
                if (table_format == "csv") {
                    std::cout << "z_lo,z_hi,subshell,n_plus_l,n,l,energy\n";
                    for (const auto& row : subshell_table())
                        std::cout << row.z_lo << ',' << row.z_hi << ',' << row.sub.label() << ','
                                  << row.sub.n + row.sub.l << ',' << row.sub.n << ',' << row.sub.l
                                  << ',' << row.sub.energy().str() << "\n";
                } else if (table_format == "json") {
                    json rows = json::array();
                    for (const auto& row : subshell_table())
                        rows.push_back({{"z_lo", row.z_lo},
                                        {"z_hi", row.z_hi},
                                        {"subshell", row.sub.label()},
                                        {"n_plus_l", row.sub.n + row.sub.l},
                                        {"n", row.sub.n},
                                        {"l", row.sub.l},
                                        {"energy", row.sub.energy().str()}});
                    std::cout << rows.dump(2) << "\n";
                } else {
                    std::cout << "atomic numbers | subshell | n+l | n | l | E\n";
                    for (const auto& row : subshell_table())
                        std::cout << row.z_lo << "-" << row.z_hi << " | " << row.sub.label()
                                  << " | " << row.sub.n + row.sub.l << " | " << row.sub.n << " | "
                                  << row.sub.l << " | " << row.sub.energy().str() << "\n";
                }
                return 0;
            }
            const int z_lo = table_all ? 1 : table_z;
            const int z_hi = table_all ? 120 : table_z;
            if (table_format == "csv")
                std::cout << "Z,subshell_sequence,configuration,total_energy_num,"
                             "total_energy_den\n";
            json rows = json::array();
            for (int z = z_lo; z <= z_hi; ++z) {
                const auto row = element_row(z);
                const auto config_z = configuration(z);
                const auto energy = config_z.total_energy();
                std::string sequence;
                for (const auto& [sub, occ] : config_z.fills) {
                    if (!sequence.empty()) sequence += ' ';
                    sequence += sub.label();
                }
                if (table_format == "csv") {
                    std::cout << z << ',' << sequence << ',' << row.config << ',' << energy.num
                              << ',' << energy.den << "\n";
                } else if (table_format == "json") {
                    rows.push_back({{"z", z},
                                    {"symbol", row.symbol},
                                    {"period", row.period},
                                    {"block", std::string(1, row.block)},
                                    {"configuration", row.config},
                                    {"total_energy", energy.str()}});
                } else {
                    std::cout << z << "  " << row.symbol << "  period " << row.period << "  "
                              << row.block << "-block  " << row.config << "  E=" << energy.str()
                              << "\n";
                }
            }
            if (table_format == "json") std::cout << rows.dump(2) << "\n";
            return 0;
        }

        if (cmd_hsingle->parsed()) {
            const HalfInt j = parse_half_int(hsingle_j);
            const auto block = su2rep::build_block(j, true);
            json rows = json::array();
            for (const auto& line : madelung::hsingle_spectrum(block))
                rows.push_back({{"subshell", line.sub.label()},
                                {"multiplicity", line.multiplicity},
                                {"expected_capacity", line.sub.capacity()},
                                {"eigenvalue", line.value},
                                {"formula", line.sub.energy().str()},
                                {"gap", std::abs(line.value -
                                                 line.sub.energy().to_double())}});
            std::cout << rows.dump(2) << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            config.j_max = parse_half_int(verify_jmax);
            config.seed = verify_seed;
            if (config.j_max.twice() > 15) {
                std::cerr << "j-max capped at 15/2\n";
                return 2;
            }
            for (const auto& override_text : tol_overrides) {
                const auto eq = override_text.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "bad --tol (want name=value): " << override_text << "\n";
                    return 2;
                }
                config.tolerances[override_text.substr(0, eq)] =
                    std::stod(override_text.substr(eq + 1));
            }
            return run_verify(config, verify_format);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "keplerfock/classical.hpp"
#include "keplerfock/dirac.hpp"
#include "keplerfock/fock.hpp"
#include "keplerfock/madelung.hpp"
#include "keplerfock/quaternion.hpp"
#include "keplerfock/su2rep.hpp"
#include "keplerfock/verify.hpp"
#include "keplerfock/weyl.hpp"

namespace py = pybind11;
using namespace keplerfock;

namespace {

HalfInt as_half_int(double j) { return HalfInt::snap(j, 1e-9); }

} // namespace

PYBIND11_MODULE(keplerfock, m) {
    m.doc() = "Kepler problem, Dirac operator on S^3, Fock space and Madelung rules";

    // classical
    m.def(
        "conserved",
        [](const classical::Vec3& q, const classical::Vec3& p) {
            const auto c = classical::conserved({q, p});
            py::dict out;
            out["E"] = c.E;
            out["L"] = c.L;
            out["e"] = c.e;
            if (c.A) {
                out["M"] = *c.M;
                out["A"] = *c.A;
                out["B"] = *c.B;
            }
            return out;
        },
        py::arg("q"), py::arg("p"));
    m.def("stereographic_lift", &classical::stereographic_lift, py::arg("p"));
    m.def(
        "orbit_drift",
        [](const classical::Vec3& q, const classical::Vec3& p, double t_end, double tol) {
            const auto traj = classical::integrate({q, p}, t_end, tol);
            const auto drift = classical::conservation_drift(traj);
            const auto circle = classical::momentum_circle(traj);
            py::dict out;
            out["steps"] = traj.t.size();
            out["dE"] = drift.dE;
            out["dL"] = drift.dL;
            out["de"] = drift.de;
            out["circle_residual"] = circle.max_residual;
            out["planarity"] = classical::great_circle_residual(traj);
            return out;
        },
        py::arg("q"), py::arg("p"), py::arg("t_end"), py::arg("tol") = 1e-10);

    // su2rep
    m.def(
        "spin_matrices",
        [](double j) {
            const auto ops = su2rep::spin_matrices(as_half_int(j));
            return py::make_tuple(ops[0], ops[1], ops[2]);
        },
        py::arg("j"));
    m.def(
        "block_operators",
        [](double j, bool with_spin) {
            const auto block = su2rep::build_block(as_half_int(j), with_spin);
            py::dict out;
            out["dim"] = block.dim;
            out["A"] = py::make_tuple(block.a[0], block.a[1], block.a[2]);
            out["B"] = py::make_tuple(block.b[0], block.b[1], block.b[2]);
            out["S"] = py::make_tuple(block.s[0], block.s[1], block.s[2]);
            out["L"] = py::make_tuple(block.l[0], block.l[1], block.l[2]);
            return out;
        },
        py::arg("j"), py::arg("with_spin") = true);
    m.def(
        "h0_block", [](double j) { return su2rep::h0_block(as_half_int(j)); }, py::arg("j"));
    m.def(
        "clebsch_gordan_spectrum",
        [](double j) { return su2rep::clebsch_gordan_spectrum(as_half_int(j)); }, py::arg("j"));
    m.def(
        "label_shell",
        [](int n) {
            py::list out;
            for (const auto& label : su2rep::label_shell(n))
                out.append(py::make_tuple(label.n, label.l, label.m, label.twice_s));
            return out;
        },
        py::arg("n"));

    // dirac
    m.def(
        "dirac_spectrum",
        [](double j) {
            py::list out;
            for (const auto& [lambda, mult] : dirac::build_dirac(as_half_int(j)).spectrum)
                out.append(py::make_tuple(lambda.twice(), mult));
            return out;
        },
        py::arg("j"));
    m.def(
        "dirac_operator", [](double j) { return dirac::build_dirac(as_half_int(j)).slash_d; },
        py::arg("j"));
    m.def(
        "hydrogen_block", [](double j) { return dirac::build_dirac(as_half_int(j)).h; },
        py::arg("j"));

    // quaternion
    m.def("uk_dimension", &quaternion::uk_dimension, py::arg("k"));
    m.def(
        "quaternion_dirac_residual",
        [](int k, int samples, std::uint64_t seed) {
            double worst = 0;
            for (const auto& psi : quaternion::cr_kernel_basis(k))
                worst = std::max(worst,
                                 quaternion::dirac_eigenvalue_check(psi, samples, 1e-4, seed));
            return worst;
        },
        py::arg("k"), py::arg("samples") = 25, py::arg("seed") = 20260808);

    // weyl
    m.def(
        "intertwiner_residuals",
        [](double j, int samples, std::uint64_t seed) {
            const auto block = su2rep::build_block(as_half_int(j), true);
            const auto report =
                weyl::equivalence_report(block, dirac::build_dirac(block), samples, seed);
            py::dict out;
            out["orthogonality"] = report.orthogonality;
            out["complex_linearity"] = report.complex_linearity;
            out["dirac_commutation"] = report.dirac_commutation;
            out["intertwining"] = report.intertwining;
            return out;
        },
        py::arg("j"), py::arg("samples") = 20, py::arg("seed") = 20260808);

    // fock
    m.def(
        "sector_basis",
        [](int size, int n) {
            py::list out;
            for (const auto& set : fock::sector_index_sets(size, n)) out.append(set);
            return out;
        },
        py::arg("size"), py::arg("n"));
    m.def("gamma", py::overload_cast<const CMatrix&, int>(&fock::gamma_sector), py::arg("u"),
          py::arg("n"));
    m.def("dgamma", py::overload_cast<const CMatrix&, int>(&fock::dgamma_sector), py::arg("a"),
          py::arg("n"));
    m.def(
        "second_quantized_residuals",
        [](double j_max, int n, int samples, std::uint64_t seed) {
            const auto report = fock::second_quantized_equivalence(as_half_int(j_max), n, samples, seed);
            py::dict out;
            out["intertwining"] = report.intertwining;
            out["dgamma_commutation"] = report.dgamma_commutation;
            out["functoriality"] = report.functoriality;
            return out;
        },
        py::arg("j_max") = 1.0, py::arg("n") = 2, py::arg("samples") = 4,
        py::arg("seed") = 20260808);

    // madelung
    m.def(
        "subshell_energy",
        [](int n, int l) {
            const auto e = madelung::subshell_energy(n, l);
            return py::make_tuple(e.num, e.den);
        },
        py::arg("n"), py::arg("l"));
    m.def(
        "wiswesser_energy",
        [](int n, int l) {
            const auto e = madelung::wiswesser_energy(n, l);
            return py::make_tuple(e.num, e.den);
        },
        py::arg("n"), py::arg("l"));
    m.def(
        "configuration",
        [](int z) {
            const auto config = madelung::configuration(z);
            py::dict out;
            out["z"] = z;
            out["string"] = config.str();
            py::list fills;
            for (const auto& [sub, occ] : config.fills)
                fills.append(py::make_tuple(sub.n, sub.l, occ));
            out["fills"] = fills;
            const auto energy = config.total_energy();
            out["total_energy"] = py::make_tuple(energy.num, energy.den);
            return out;
        },
        py::arg("z"));
    m.def("filling_order", [](int count) {
        py::list out;
        for (const auto& sub : madelung::filling_order(count)) out.append(sub.label());
        return out;
    });
    m.def("subshell_table", []() {
        py::list out;
        for (const auto& row : madelung::subshell_table())
            out.append(py::make_tuple(row.z_lo, row.z_hi, row.sub.label(),
                                      row.sub.energy().str()));
        return out;
    });
    m.def(
        "hsingle_block",
        [](double j) {
            return madelung::hsingle_block(su2rep::build_block(as_half_int(j), true));
        },
        py::arg("j"));
    m.def(
        "element_row",
        [](int z) {
            const auto row = madelung::element_row(z);
            py::dict out;
            out["z"] = row.z;
            out["period"] = row.period;
            out["block"] = std::string(1, row.block);
            out["symbol"] = row.symbol;
            out["configuration"] = row.config;
            return out;
        },
        py::arg("z"));

    // verify
    m.def(
        "verify_all",
        [](double j_max, std::uint64_t seed) {
            verify::RunConfig config = verify::RunConfig::defaults();
            config.j_max = as_half_int(j_max);
            config.seed = seed;
            py::list out;
            for (const auto& r : verify::verify_all(config)) {
                py::dict item;
                item["module"] = r.module;
                item["check"] = r.check;
                item["value"] = r.value;
                item["threshold"] = r.threshold;
                item["pass"] = r.pass;
                out.append(item);
            }
            return out;
        },
        py::arg("j_max") = 1.5, py::arg("seed") = 20260808);
}

"""Smoke tests for the python bindings: a few golden values per subsystem."""

import math

import numpy as np
import pytest

import keplerfock as kf


def test_conserved_reference_orbit():
    c = kf.conserved([1.0, 0.0, 0.0], [0.0, 0.5, 0.0])
    assert c["E"] == pytest.approx(-0.875)
    assert c["L"][2] == pytest.approx(0.5)
    assert c["e"][0] == pytest.approx(-0.75)
    # e^2 = 1 + 2 L^2 E
    e2 = np.dot(c["e"], c["e"])
    assert e2 == pytest.approx(1.0 + 2.0 * 0.25 * -0.875)


def test_orbit_drift_and_circle():
    period = 2.0 * math.pi * (2.0 * 0.875) ** -1.5
    out = kf.orbit_drift([1.0, 0.0, 0.0], [0.0, 0.5, 0.0], 3.0 * period, 1e-10)
    assert out["dE"] < 1e-8
    assert out["de"] < 1e-8
    assert out["circle_residual"] < 1e-6
    assert out["planarity"] < 1e-6


def test_stereographic_lift():
    x = kf.stereographic_lift([2.0, 0.0, 0.0])
    assert np.allclose(x, [0.6, 0.8, 0.0, 0.0])


def test_spin_matrices_pauli():
    j1, j2, j3 = kf.spin_matrices(0.5)
    assert np.allclose(j3, np.diag([0.5, -0.5]))
    comm = j1 @ j2 - j2 @ j1
    assert np.allclose(comm, 1j * j3, atol=1e-14)


def test_h0_block_eigenvalues():
    h0 = kf.h0_block(0.5)  # n = 2
    assert np.allclose(h0, -0.125 * np.eye(4), atol=1e-12)


def test_clebsch_gordan():
    assert kf.clebsch_gordan_spectrum(1.5) == [(0, 1), (1, 3), (2, 5), (3, 7)]


def test_dirac_spectrum():
    # j = 1/2: eigenvalues 5/2 and -3/2 with multiplicities 6 and 2
    assert kf.dirac_spectrum(0.5) == [(5, 6), (-3, 2)]
    d = kf.dirac_operator(0.5)
    assert np.allclose(d, d.conj().T, atol=1e-13)


def test_hydrogen_block():
    h = kf.hydrogen_block(1.0)  # n = 3
    assert np.allclose(h, -np.eye(18) / 18.0, atol=1e-12)


def test_uk_dimension():
    assert [kf.uk_dimension(k) for k in range(5)] == [2, 6, 12, 20, 30]


def test_quaternion_dirac_residual():
    assert kf.quaternion_dirac_residual(2, samples=10, seed=5) < 1e-4


def test_intertwiner_residuals():
    r = kf.intertwiner_residuals(1.0, samples=10, seed=3)
    assert r["orthogonality"] < 1e-10
    assert r["intertwining"] < 1e-8


def test_gamma_functorial():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    u, _ = np.linalg.qr(a)
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    v, _ = np.linalg.qr(b)
    lhs = kf.gamma(u @ v, 2)
    rhs = kf.gamma(u, 2) @ kf.gamma(v, 2)
    assert np.allclose(lhs, rhs, atol=1e-11)
    assert kf.gamma(np.eye(4, dtype=complex), 2).shape == (6, 6)


def test_dgamma_additivity():
    a = np.diag([1.0, 2.0, 3.0, 4.0]).astype(complex)
    dg = kf.dgamma(a, 2)
    # first colex state is {0, 1}: eigenvalue 3
    assert dg[0, 0] == pytest.approx(3.0)


def test_sector_basis():
    sets = kf.sector_basis(4, 2)
    assert len(sets) == 6
    assert sets[0] == [0, 1]


def test_subshell_energies():
    assert kf.subshell_energy(1, 0) == (4, 1)
    assert kf.subshell_energy(3, 2) == (56, 5)
    assert kf.subshell_energy(4, 3) == (106, 7)
    assert kf.wiswesser_energy(3, 2) == (13, 3)


def test_configuration_chromium():
    c = kf.configuration(24)
    assert c["string"] == "1s2 2s2 2p6 3s2 3p6 4s2 3d4"
    assert (4, 0, 2) in c["fills"]
    assert (3, 2, 4) in c["fills"]


def test_subshell_table():
    rows = kf.subshell_table()
    assert len(rows) == 20
    assert rows[0] == (1, 2, "1s", "4")
    assert rows[-1] == (119, 120, "8s", "18")


def test_element_row():
    row = kf.element_row(57)
    assert row["period"] == 6
    assert row["block"] == "f"


def test_hsingle_block_spectrum():
    h = kf.hsingle_block(0.5)
    values = np.sort(np.linalg.eigvalsh(h))
    assert np.allclose(values[:2], 6.0, atol=1e-9)
    assert np.allclose(values[2:], 22.0 / 3.0, atol=1e-9)


def test_verify_minimal():
    results = kf.verify_all(j_max=0.0, seed=20260808)
    assert all(r["pass"] for r in results)
    # determinism of the report
    again = kf.verify_all(j_max=0.0, seed=20260808)
    assert [(r["check"], r["value"]) for r in results] == [
        (r["check"], r["value"]) for r in again
    ]

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace keplerfock::classical {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

// Dimensionless units: the force law is qdd = -q / |q|^3.
struct PhaseState {
    Vec3 q;
    Vec3 p;
};

// E, L and e exist for every state; M = e / sqrt(-2E) and the su(2) x su(2)
// pair A = (L+M)/2, B = (L-M)/2 only on the bound region E < 0.
struct ConservedSet {
    double E;
    Vec3 L;
    Vec3 e;
    std::optional<Vec3> M;
    std::optional<Vec3> A;
    std::optional<Vec3> B;
};

struct SingularOrbitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ConservedSet conserved(const PhaseState& state);

struct Trajectory {
    std::vector<double> t;
    std::vector<PhaseState> states;
};

// Adaptive Dormand-Prince 5(4) integration of the equation of motion up to
// t_end; tol is used as both absolute and relative per-step tolerance.
Trajectory integrate(const PhaseState& initial, double t_end, double tol);

// Kepler's third law in these units, valid for E < 0.
double orbital_period(double energy);

struct MomentumCircle {
    Vec3 center;
    double radius;
    double max_residual;
};

// Fit-free check of Hamilton's circle: center (L x e)/L^2, radius 1/L.
MomentumCircle momentum_circle(const Trajectory& traj);

// Inverse stereographic projection R^3 -> S^3 in R^4.
Vec4 stereographic_lift(const Vec3& p);

// Lifts all momentum samples and measures how far they are from spanning a
// 2-plane through the origin: third singular value of the sample matrix
// relative to the first. Requires at least 3 samples.
double great_circle_residual(const Trajectory& traj);

using Observable = std::function<double(const PhaseState&)>;

// Canonical Poisson bracket by central differences of step h.
double poisson_bracket(const Observable& f, const Observable& g, const PhaseState& x, double h);

Observable obs_energy();
Observable obs_l(int k);
Observable obs_e(int k);
Observable obs_a(int k); // (L+M)/2, bound region only
Observable obs_b(int k); // (L-M)/2, bound region only

// Seeded generic bound state with moderate eccentricity, for property tests.
PhaseState random_bound_state(std::mt19937_64& rng);

// Drift of E, L and e over a trajectory relative to the initial values.
struct DriftReport {
    double dE;
    double dL;
    double de;
};
DriftReport conservation_drift(const Trajectory& traj);

} // namespace keplerfock::classical

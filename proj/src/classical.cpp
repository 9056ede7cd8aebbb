#include "keplerfock/classical.hpp"

#include <cmath>

namespace keplerfock::classical {

namespace {

constexpr double kSingularRadius = 1e-8;

Vec3 acceleration(const Vec3& q) {
    const double r = q.norm();
    if (r < kSingularRadius) throw SingularOrbitError("trajectory reached the force singularity");
    return -q / (r * r * r);
}

} // namespace

ConservedSet conserved(const PhaseState& state) {
    const double r = state.q.norm();
    if (r < kSingularRadius) throw SingularOrbitError("state at the force singularity q = 0");
    ConservedSet c;
    c.E = 0.5 * state.p.squaredNorm() - 1.0 / r;
    c.L = state.q.cross(state.p);
    c.e = state.p.cross(c.L) - state.q / r;
    if (c.E < 0.0) {
        const Vec3 m = c.e / std::sqrt(-2.0 * c.E);
        c.M = m;
        c.A = 0.5 * (c.L + m);
        c.B = 0.5 * (c.L - m);
    }
    return c;
}

Trajectory integrate(const PhaseState& initial, double t_end, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("integration tolerance must be positive");
    conserved(initial); // rejects q = 0

    // Dormand-Prince 5(4) tableau.
    static const double a21 = 1. / 5;
    static const double a31 = 3. / 40, a32 = 9. / 40;
    static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
    static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                        a54 = -212. / 729;
    static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                        a64 = 49. / 176, a65 = -5103. / 18656;
    static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
                        b6 = 11. / 84;
    static const double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920, e5 = -17253. / 339200,
                        e6 = 22. / 525, e7 = -1. / 40;

    using Vec6 = Eigen::Matrix<double, 6, 1>;
    auto pack = [](const PhaseState& s) {
        Vec6 y;
        y << s.q, s.p;
        return y;
    };
    auto unpack = [](const Vec6& y) {
        return PhaseState{y.head<3>(), y.tail<3>()};
    };
    auto deriv = [&](const Vec6& y) {
        Vec6 dy;
        dy.head<3>() = y.tail<3>();
        dy.tail<3>() = acceleration(y.head<3>());
        return dy;
    };

    Trajectory traj;
    Vec6 y = pack(initial);
    double t = 0.0;
    traj.t.push_back(t);
    traj.states.push_back(initial);

    const double direction = t_end >= 0.0 ? 1.0 : -1.0;
    double h = direction * std::min(1e-3, std::abs(t_end));
    Vec6 k1 = deriv(y);
    double err_prev = 1.0;

    while (direction * (t_end - t) > 0.0) {
        if (direction * (t + h) > direction * t_end) h = t_end - t;
        if (std::abs(h) < 1e-14 * (1.0 + std::abs(t)))
            throw SingularOrbitError("step size collapsed (near-collision orbit)");

        const Vec6 k2 = deriv(y + h * (a21 * k1));
        const Vec6 k3 = deriv(y + h * (a31 * k1 + a32 * k2));
        const Vec6 k4 = deriv(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vec6 k5 = deriv(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vec6 k6 = deriv(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vec6 y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vec6 k7 = deriv(y5);
        const Vec6 err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (int i = 0; i < 6; ++i) {
            const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(err_vec[i]) / scale);
        }

        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7; // FSAL
            traj.t.push_back(t);
            traj.states.push_back(unpack(y));
            err_prev = std::max(err, 1e-4);
        }
        const double safety = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
                              std::pow(err_prev, 0.4 / 5.0);
        h *= std::min(5.0, std::max(0.2, safety));
    }
    return traj;
}

double orbital_period(double energy) {
    if (energy >= 0.0) throw std::invalid_argument("orbital period requires a bound state (E < 0)");
    return 2.0 * M_PI * std::pow(-2.0 * energy, -1.5);
}

MomentumCircle momentum_circle(const Trajectory& traj) {
    if (traj.states.empty()) throw std::invalid_argument("empty trajectory");
    const ConservedSet c = conserved(traj.states.front());
    const double l2 = c.L.squaredNorm();
    if (l2 < 1e-20)
        throw std::invalid_argument("momentum circle undefined for L = 0 (collinear orbit)");
    MomentumCircle circle;
    circle.center = c.L.cross(c.e) / l2;
    circle.radius = 1.0 / std::sqrt(l2);
    circle.max_residual = 0.0;
    for (const auto& s : traj.states)
        circle.max_residual = std::max(
            circle.max_residual, std::abs((s.p - circle.center).norm() - circle.radius));
    return circle;
}

Vec4 stereographic_lift(const Vec3& p) {
    const double p2 = p.squaredNorm();
    Vec4 x;
    x(0) = (p2 - 1.0) / (p2 + 1.0);
    x.tail<3>() = 2.0 * p / (p2 + 1.0);
    return x;
}

double great_circle_residual(const Trajectory& traj) {
    if (traj.states.size() < 3)
        throw std::invalid_argument("great-circle check needs at least 3 samples");
    const ConservedSet c = conserved(traj.states.front());
    if (c.E >= 0.0)
        throw std::invalid_argument("great-circle check requires a bound orbit (E < 0)");
    if (c.L.norm() < 1e-10)
        throw std::invalid_argument("great-circle check requires L != 0");
    // The lift lands on a great circle once momenta are measured in units of
    // the energy-shell scale sqrt(-2E); the unit map alone does that only on
    // the E = -1/2 shell.
    const double scale = 1.0 / std::sqrt(-2.0 * c.E);
    Eigen::MatrixXd samples(traj.states.size(), 4);
    for (Eigen::Index i = 0; i < samples.rows(); ++i)
        samples.row(i) = stereographic_lift(scale * traj.states[i].p).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(samples);
    const auto& sv = svd.singularValues();
    return sv(2) / sv(0);
}

double poisson_bracket(const Observable& f, const Observable& g, const PhaseState& x, double h) {
    if (h <= 0.0) throw std::invalid_argument("difference step must be positive");
    auto diff = [&](const Observable& obs, int axis, bool momentum) {
        PhaseState plus = x, minus = x;
        (momentum ? plus.p : plus.q)(axis) += h;
        (momentum ? minus.p : minus.q)(axis) -= h;
        return (obs(plus) - obs(minus)) / (2.0 * h);
    };
    double sum = 0.0;
    for (int k = 0; k < 3; ++k)
        sum += diff(f, k, false) * diff(g, k, true) - diff(f, k, true) * diff(g, k, false);
    return sum;
}

Observable obs_energy() {
    return [](const PhaseState& s) { return conserved(s).E; };
}

Observable obs_l(int k) {
    return [k](const PhaseState& s) { return conserved(s).L(k); };
}

Observable obs_e(int k) {
    return [k](const PhaseState& s) { return conserved(s).e(k); };
}

Observable obs_a(int k) {
    return [k](const PhaseState& s) {
        const auto c = conserved(s);
        if (!c.A) throw std::domain_error("A_k defined only on the bound region E < 0");
        return (*c.A)(k);
    };
}

Observable obs_b(int k) {
    return [k](const PhaseState& s) {
        const auto c = conserved(s);
        if (!c.B) throw std::domain_error("B_k defined only on the bound region E < 0");
        return (*c.B)(k);
    };
}

PhaseState random_bound_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> radius(0.6, 1.4);
    for (;;) {
        Vec3 qdir(unit(rng), unit(rng), unit(rng));
        Vec3 pdir(unit(rng), unit(rng), unit(rng));
        if (qdir.norm() < 1e-3 || pdir.norm() < 1e-3) continue;
        PhaseState s;
        s.q = radius(rng) * qdir.normalized();
        std::uniform_real_distribution<double> speed(0.4, 0.95);
        s.p = speed(rng) * std::sqrt(2.0 / s.q.norm()) * pdir.normalized();
        const auto c = conserved(s);
        // Keep the property-test orbits away from near-collision geometry.
        if (c.E < -0.15 && c.L.norm() > 0.35 && c.e.norm() < 0.8) return s;
    }
}

DriftReport conservation_drift(const Trajectory& traj) {
    if (traj.states.empty()) throw std::invalid_argument("empty trajectory");
    const ConservedSet ref = conserved(traj.states.front());
    DriftReport drift{0.0, 0.0, 0.0};
    for (const auto& s : traj.states) {
        const ConservedSet c = conserved(s);
        drift.dE = std::max(drift.dE, std::abs(c.E - ref.E));
        drift.dL = std::max(drift.dL, (c.L - ref.L).cwiseAbs().maxCoeff());
        drift.de = std::max(drift.de, (c.e - ref.e).cwiseAbs().maxCoeff());
    }
    return drift;
}

} // namespace keplerfock::classical

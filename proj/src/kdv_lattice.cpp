#include "rpq/kdv_lattice.hpp"

#include "rpq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace rpq::kdv {

namespace {

constexpr double pi = std::numbers::pi;

std::size_t wrap(long i, long n) { return static_cast<std::size_t>(((i % n) + n) % n); }

void check_finite(const std::vector<double>& v, double t) {
    for (double x : v)
        if (!std::isfinite(x)) throw NumericalError("non-finite field value at t = " + std::to_string(t));
}

std::vector<double> axpy(const std::vector<double>& x, double a, const std::vector<double>& y) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + a * y[i];
    return r;
}

KdVState integrate(KdVState s, KdVParams p, double horizon, double dt) {
    p.dt = dt;
    int n = static_cast<int>(std::llround(horizon / dt));
    for (int i = 0; i < n; ++i) s = rk4_step(s, p);
    return s;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

void KdVParams::validate() const {
    if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
    if (std::fabs(std::sin(tau)) < 1e-14) throw MathError("sin(tau) = 0 makes the lattice equation singular");
    if (shift < 1) throw std::invalid_argument("shift must be at least 1");
    if (grid_points <= 2 * shift) throw std::invalid_argument("grid_points must exceed 2 * shift");
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    if (snapshot_every < 1) throw std::invalid_argument("snapshot_every must be at least 1");
}

double theta_for(const Deformation& d, double p, double q) {
    double prod = (d.eps(1, 1) * d.eps(2, 1)).eval(p, q);
    if (!(prod > 0)) throw MathError("Theta needs e1 e2 > 0");
    return 1.0 / std::sqrt(prod);
}

double delta_for(const Deformation& d, double p, double q) {
    double ratio = (d.eps(2, 1) / d.eps(1, 1)).eval(p, q);
    if (!(ratio > 0)) throw MathError("Delta needs e2/e1 > 0");
    return std::sqrt(ratio);
}

std::vector<double> linear_term(const std::vector<double>& v, const KdVParams& p) {
    long n = static_cast<long>(v.size()), s = p.shift;
    double c = -p.central_c * std::pow(p.theta, 3) / (2.0 * std::sin(p.tau));
    std::vector<double> r(v.size());
    for (long i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = c * (v[wrap(i + s, n)] - v[wrap(i - s, n)]);
    return r;
}

std::vector<double> rhs(const KdVState& st, const KdVParams& p) {
    const auto& v = st.v;
    long n = static_cast<long>(v.size()), s = p.shift;
    double scale = p.theta / (2.0 * std::sin(p.tau));
    std::vector<double> r = linear_term(v, p);
    if (!p.nonlinear) return r;
    for (long i = 0; i < n; ++i) {
        double back = v[wrap(i - s, n)], fwd = v[wrap(i + s, n)], here = v[static_cast<std::size_t>(i)];
        r[static_cast<std::size_t>(i)] += scale * (back * back - here * fwd);
    }
    return r;
}

KdVState rk4_step(const KdVState& s, const KdVParams& p) {
    if (p.courant > 0) {
        double vmax = 0;
        for (double x : s.v) vmax = std::max(vmax, std::fabs(x));
        if (vmax > 0 && p.dt > p.courant * p.dx() / vmax)
            throw NumericalError("dt violates the Courant guard at t = " + std::to_string(s.t));
    }
    double h = p.dt;
    auto k1 = rhs(s, p);
    auto k2 = rhs({axpy(s.v, h / 2, k1), s.t + h / 2}, p);
    auto k3 = rhs({axpy(s.v, h / 2, k2), s.t + h / 2}, p);
    auto k4 = rhs({axpy(s.v, h, k3), s.t + h}, p);
    KdVState out{s.v, s.t + h};
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    check_finite(out.v, out.t);
    return out;
}

Trajectory run(const KdVState& initial, const KdVParams& p) {
    p.validate();
    if (initial.v.size() != static_cast<std::size_t>(p.grid_points))
        throw std::invalid_argument("initial state length differs from grid_points");
    check_finite(initial.v, initial.t);
    Trajectory tr{{initial}};
    KdVState s = initial;
    for (int i = 1; i <= p.steps; ++i) {
        s = rk4_step(s, p);
        if (i % p.snapshot_every == 0 || i == p.steps) tr.snapshots.push_back(s);
    }
    return tr;
}

KdVState initial_state(Shape shape, const KdVParams& p, double amplitude, int mode, double width) {
    KdVState s;
    double len = p.length();
    for (int i = 0; i < p.grid_points; ++i) {
        double x = i * p.dx();
        if (shape == Shape::Cosine) {
            s.v.push_back(amplitude * std::cos(2 * pi * mode * x / len));
        } else {
            double c = 1.0 / std::cosh((x - len / 2) / width);
            s.v.push_back(amplitude * c * c);
        }
    }
    return s;
}

double dispersion_frequency(const KdVParams& p, int mode) {
    double k = 2 * pi * mode / p.length();
    return p.central_c * std::pow(p.theta, 3) * std::sin(2 * k * p.tau) / std::sin(p.tau);
}

double mode_phase(const std::vector<double>& v, const KdVParams& p, int mode) {
    double a = 0, b = 0, k = 2 * pi * mode / p.length();
    for (std::size_t i = 0; i < v.size(); ++i) {
        double x = static_cast<double>(i) * p.dx();
        a += v[i] * std::cos(k * x);
        b += v[i] * std::sin(k * x);
    }
    return std::atan2(b, a);
}

TauConsistency tau_consistency(double theta, double central_c, const std::vector<double>& taus) {
    TauConsistency out;
    out.taus = taus;
    const double w = 2 * pi;
    for (double tau : taus) {
        KdVParams p;
        p.tau = tau;
        p.theta = theta;
        p.central_c = central_c;
        p.shift = 1;
        p.grid_points = static_cast<int>(std::llround(1.0 / p.dx()));
        KdVState s;
        for (int i = 0; i < p.grid_points; ++i) {
            double x = i * p.dx();
            s.v.push_back(std::sin(w * x) + 0.3 * std::cos(2 * w * x));
        }
        auto r = rhs(s, p);
        double dev = 0;
        for (int i = 0; i < p.grid_points; ++i) {
            double x = i * p.dx();
            double v = std::sin(w * x) + 0.3 * std::cos(2 * w * x);
            double v1 = w * std::cos(w * x) - 0.6 * w * std::sin(2 * w * x);
            double v2 = -w * w * std::sin(w * x) - 1.2 * w * w * std::cos(2 * w * x);
            // -3 Theta v v' - 2 C Theta^3 v' + tau Theta (2 v'^2 + v v'')
            double taylor = -3 * theta * v * v1 - 2 * central_c * std::pow(theta, 3) * v1 +
                            tau * theta * (2 * v1 * v1 + v * v2);
            dev = std::max(dev, std::fabs(r[static_cast<std::size_t>(i)] - taylor));
        }
        out.deviations.push_back(dev);
    }
    double n = static_cast<double>(taus.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        double x = std::log(taus[i]), y = std::log(out.deviations[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

Refinement rk4_refinement(const KdVState& initial, const KdVParams& p, double horizon) {
    p.validate();
    KdVState ref = integrate(initial, p, horizon, p.dt / 10);
    Refinement r;
    r.error_dt = max_diff(integrate(initial, p, horizon, p.dt).v, ref.v);
    r.error_half = max_diff(integrate(initial, p, horizon, p.dt / 2).v, ref.v);
    r.ratio = r.error_dt / r.error_half;
    return r;
}

void write_csv(std::ostream& out, const Trajectory& tr, const KdVParams& p,
               const std::map<std::string, std::string>& meta) {
    nlohmann::json j;
    j["tau"] = p.tau;
    j["theta"] = p.theta;
    j["central_c"] = p.central_c;
    j["shift"] = p.shift;
    j["grid_points"] = p.grid_points;
    j["dx"] = p.dx();
    j["dt"] = p.dt;
    j["steps"] = p.steps;
    j["snapshot_every"] = p.snapshot_every;
    j["nonlinear"] = p.nonlinear;
    for (const auto& [k, v] : meta) j[k] = v;
    out << "# " << j.dump() << "\n";
    out << "t,x,v\n";
    char buf[96];
    for (const auto& s : tr.snapshots)
        for (std::size_t i = 0; i < s.v.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.17g\n", s.t, static_cast<double>(i) * p.dx(), s.v[i]);
            out << buf;
        }
}

}  // namespace rpq::kdv

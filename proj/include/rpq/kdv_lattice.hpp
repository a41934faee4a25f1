#pragma once

#include "rpq/deformation.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rpq::kdv {

/// Lattice for 2 sin(tau) dv/dt = Theta (v^2(x - 2tau) - v(x) v(x + 2tau))
///                               - C Theta^3 (v(x + 2tau) - v(x - 2tau)),
/// with 2 tau = shift * dx so both shifts land on grid points.
struct KdVParams {
    double tau = 0.05;
    double theta = 1.0;
    double central_c = 1.0;
    int shift = 1;
    int grid_points = 256;
    double dt = 0.01;
    int steps = 100;
    int snapshot_every = 10;
    /// dt <= courant * dx / max|v|; <= 0 disables the guard.
    double courant = 1.0;
    /// false keeps only the central-charge term.
    bool nonlinear = true;

    double dx() const { return 2.0 * tau / shift; }
    double length() const { return dx() * grid_points; }
    /// Throws MathError on sin(tau) = 0 and std::invalid_argument on a bad grid.
    void validate() const;
};

struct KdVState {
    std::vector<double> v;
    double t = 0.0;
};

/// Theta = (e1 e2)^(-1/2) at numeric p, q.
double theta_for(const Deformation& d, double p, double q);
/// Delta = (e2/e1)^(1/2); enters only the dressing w = Delta^(2N) v, not the lattice flow.
double delta_for(const Deformation& d, double p, double q);

std::vector<double> rhs(const KdVState& s, const KdVParams& p);
/// The central-charge part of rhs alone; skew-symmetric on the periodic grid.
std::vector<double> linear_term(const std::vector<double>& v, const KdVParams& p);

/// Classical fourth-order Runge-Kutta. Throws NumericalError on NaN/Inf or a
/// violated Courant guard.
KdVState rk4_step(const KdVState& s, const KdVParams& p);

struct Trajectory {
    std::vector<KdVState> snapshots;  // initial state first, then every snapshot_every steps
};
Trajectory run(const KdVState& initial, const KdVParams& p);

enum class Shape { Cosine, Soliton };
/// Cosine: a cos(2 pi mode x / L). Soliton: a sech^2((x - L/2)/width).
KdVState initial_state(Shape shape, const KdVParams& p, double amplitude = 1.0, int mode = 1, double width = 1.0);

/// Linear dispersion of a single mode a cos(k x - omega t): omega = C Theta^3 sin(2 k tau)/sin(tau).
double dispersion_frequency(const KdVParams& p, int mode);
/// phi with v ~ a cos(k x - phi) for the given lattice mode.
double mode_phase(const std::vector<double>& v, const KdVParams& p, int mode);

/// Max grid deviation between rhs and its small-tau Taylor expansion through
/// first order in tau, for v = sin(2 pi x) + 3/10 cos(4 pi x) on L = 1, shift 1.
struct TauConsistency {
    std::vector<double> taus;
    std::vector<double> deviations;
    double slope = 0.0;  // least-squares slope of log deviation vs log tau
};
TauConsistency tau_consistency(double theta, double central_c, const std::vector<double>& taus = {0.02, 0.01, 0.005});

/// Errors at a fixed horizon for dt and dt/2 against a dt/10 reference.
struct Refinement {
    double error_dt = 0.0;
    double error_half = 0.0;
    double ratio = 0.0;
};
Refinement rk4_refinement(const KdVState& initial, const KdVParams& p, double horizon);

/// "# {json metadata}" line, then "t,x,v" rows for every snapshot.
void write_csv(std::ostream& out, const Trajectory& tr, const KdVParams& p,
               const std::map<std::string, std::string>& meta = {});

}  // namespace rpq::kdv

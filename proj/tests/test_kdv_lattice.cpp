#include "doctest.h"
#include "rpq/errors.hpp"
#include "rpq/kdv_lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

using namespace rpq;
using namespace rpq::kdv;

namespace {

KdVParams small_grid() {
    KdVParams p;
    p.tau = 0.1;
    p.shift = 2;
    p.grid_points = 40;
    p.theta = 0.8;
    p.central_c = 1.3;
    p.dt = 0.01;
    return p;
}

}  // namespace

TEST_CASE("constant field is a fixed point") {
    KdVParams p = small_grid();
    KdVState s{std::vector<double>(40, 2.75), 0.0};
    for (double r : rhs(s, p)) CHECK(r == 0.0);
    p.steps = 50;
    Trajectory tr = run(s, p);
    CHECK(tr.snapshots.back().v == s.v);
    KdVState zero{std::vector<double>(40, 0.0), 0.0};
    CHECK(run(zero, p).snapshots.back().v == zero.v);
}

TEST_CASE("single Fourier mode under the linear term") {
    KdVParams p = small_grid();
    p.nonlinear = false;
    const double L = p.length(), k = 2 * std::numbers::pi * 3 / L;
    KdVState s = initial_state(Shape::Cosine, p, 1.0, 3);
    auto r = rhs(s, p);
    double c3 = p.central_c * std::pow(p.theta, 3);
    for (int i = 0; i < p.grid_points; ++i) {
        double x = i * p.dx();
        double expect = -c3 * std::sin(2 * p.tau * k) * (-2 * std::sin(k * x)) / (2 * std::sin(p.tau));
        CHECK(r[static_cast<std::size_t>(i)] == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("translation equivariance") {
    KdVParams p = small_grid();
    KdVState s = initial_state(Shape::Soliton, p, 1.5, 1, 0.3);
    s.v[3] += 0.25;
    auto base = rhs(s, p);
    for (int g : {1, 5, 17}) {
        KdVState shifted = s;
        for (int i = 0; i < p.grid_points; ++i)
            shifted.v[static_cast<std::size_t>((i + g) % p.grid_points)] = s.v[static_cast<std::size_t>(i)];
        auto r = rhs(shifted, p);
        for (int i = 0; i < p.grid_points; ++i)
            CHECK(r[static_cast<std::size_t>((i + g) % p.grid_points)] == base[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("central-charge term is skew-symmetric") {
    KdVParams p = small_grid();
    std::size_t n = static_cast<std::size_t>(p.grid_points);
    std::vector<std::vector<double>> cols;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        cols.push_back(linear_term(e, p));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(cols[j][i] == -cols[i][j]);
    KdVState s = initial_state(Shape::Soliton, p, 1.0, 1, 0.5);
    auto l = linear_term(s.v, p);
    double dot = 0, scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dot += s.v[i] * l[i];
        scale += std::fabs(s.v[i] * l[i]);
    }
    CHECK(std::fabs(dot) <= 1e-14 * scale);
}

TEST_CASE("linear mode keeps the exact dispersion phase") {
    KdVParams p;
    p.tau = 0.05;
    p.grid_points = 256;
    p.dt = 0.01;
    p.steps = 1000;
    p.snapshot_every = 1000;
    p.nonlinear = false;
    for (int mode : {1, 4}) {
        Trajectory tr = run(initial_state(Shape::Cosine, p, 1.0, mode), p);
        const KdVState& last = tr.snapshots.back();
        double exact = dispersion_frequency(p, mode) * last.t;
        double numeric = mode_phase(last.v, p, mode);
        double err = std::fabs(std::remainder(numeric - exact, 2 * std::numbers::pi));
        CHECK(err / std::fabs(exact) < 1e-6);
    }
}

TEST_CASE("RK4 refinement and small-tau consistency") {
    KdVParams p;
    p.tau = 0.1;
    p.grid_points = 64;
    p.dt = 0.02;
    Refinement r = rk4_refinement(initial_state(Shape::Cosine, p, 0.5, 1), p, 2.0);
    CHECK(r.ratio >= 12.0);
    CHECK(r.ratio <= 20.0);
    TauConsistency tc = tau_consistency(1.0, 1.0);
    CHECK(tc.deviations.size() == 3);
    CHECK(tc.slope >= 1.8);
    CHECK(tc.slope <= 2.2);
    TauConsistency other = tau_consistency(0.7, 2.0);
    CHECK(other.slope == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("guards") {
    KdVParams p = small_grid();
    p.tau = std::numbers::pi;
    CHECK_THROWS_AS(p.validate(), MathError);
    p = small_grid();
    p.grid_points = 4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = small_grid();
    KdVState big{std::vector<double>(40, 0.0), 0.0};
    big.v[0] = 100.0;
    CHECK_THROWS_AS(rk4_step(big, p), NumericalError);
    p.courant = 0;
    big.v[0] = 1e200;
    CHECK_THROWS_AS(rk4_step(big, p), NumericalError);
    big.v[0] = std::numeric_limits<double>::quiet_NaN();
    p.steps = 1;
    CHECK_THROWS_AS(run(big, p), NumericalError);
    CHECK_THROWS_AS(run(KdVState{std::vector<double>(3, 0.0), 0.0}, p), std::invalid_argument);
}

TEST_CASE("Theta and Delta from presets") {
    auto js = Deformation::from_preset(Preset::JagannathanSrinivasa);
    CHECK(theta_for(js, 2.0, 0.5) == doctest::Approx(1.0));
    CHECK(delta_for(js, 2.0, 0.5) == doctest::Approx(0.5));
    auto sq = Deformation::from_preset(Preset::SymmetricQ);
    CHECK(theta_for(sq, 1.0, 1.7) == doctest::Approx(1.0));
    auto heine = Deformation::from_preset(Preset::Heine);
    CHECK(theta_for(heine, 3.0, 4.0) == doctest::Approx(0.5));
    auto cj = Deformation::from_preset(Preset::ChakrabartyJagannathan);
    CHECK(theta_for(cj, 2.0, 8.0) == doctest::Approx(0.5));
}

TEST_CASE("CSV output is deterministic") {
    KdVParams p = small_grid();
    p.steps = 20;
    p.snapshot_every = 10;
    KdVState s = initial_state(Shape::Soliton, p, 1.0, 1, 0.4);
    std::ostringstream a, b;
    write_csv(a, run(s, p), p, {{"preset", "js"}});
    write_csv(b, run(s, p), p, {{"preset", "js"}});
    CHECK(a.str() == b.str());
    std::istringstream in(a.str());
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first.rfind("# {", 0) == 0);
    CHECK(first.find("\"preset\":\"js\"") != std::string::npos);
    CHECK(second == "t,x,v");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 3 * 40);
}

#pragma once

// Reference computations used only by the tests. None of these go through the
// library's integration engine.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aphidsim/integrator.hpp"
#include "aphidsim/model.hpp"
#include "aphidsim/scenario.hpp"

namespace oracle {

// Plain forward Euler on the raw equations, gate on the current x_A, a biotype
// frozen once its density is exactly zero. No event handling.
aphidsim::SystemState euler_substeps(aphidsim::SystemState s, const aphidsim::ModelParams& p, double dt, int n);

// Time at which x_A first exceeds `level`, found by stepping the raw
// equations with fine Euler steps from s0. Negative if not reached by t_max.
double euler_crossing_time(aphidsim::SystemState s0, const aphidsim::ModelParams& p, double level, double dt_fine,
                           double t_max);

// Hand-written classical RK4 step for dh/dt = a x, dx/dt = (r - h) x.
aphidsim::Model1State model1_rk4(const aphidsim::Model1State& s, double r, double a, double dt);

// Model 1 first integral: x - (r h - h^2 / 2) / a is constant along exact solutions.
double model1_invariant(double h, double x, double r, double a);

// Per component, max_k |a_k - b_k| / max_k |b_k| over paired samples;
// components that are identically zero in `b` compare absolutely.
struct SupNorm {
  double h = 0, x_A = 0, x_V = 0, R = 0;
  double max() const;
};
SupNorm relative_sup_norm(const aphidsim::Trajectory& a, const aphidsim::Trajectory& b);

// Threshold on x_A(0) where a single-avirulent run (x_V0 = 0) switches from
// extinct to persistent, by bisection on repeated integrate() calls.
double avirulent_threshold(aphidsim::Scenario base, double lo, double hi, double tol);

// Random scenario within the non-stiff regime: the largest resistance decay
// rate times dt stays below one.
aphidsim::Scenario random_scenario(std::mt19937_64& rng);

// Returns a description of the first broken trajectory invariant, or empty.
std::string check_trajectory_invariants(const aphidsim::Trajectory& tr);

}  // namespace oracle

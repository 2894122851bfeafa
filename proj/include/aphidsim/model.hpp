#pragma once

// Two-biotype aphid model on a resistant host plant.
//
//   dh/dt   = a (x_A + x_V)
//   dx_A/dt = (r - h)(x_A - R)
//   dx_V/dt = (r - h) x_V
//   dR/dt   = -(k_r x_V + k_f x_V + k_f gate(x_A - A) x_A) R
//
// h is the scaled cumulative density, x_A / x_V the avirulent / virulent
// densities and R the plant's dynamic resistance level (aphids).

#include <string>
#include <vector>

namespace aphidsim {

struct ModelParams {
  double r = 0.27;              // max growth rate, 1/day
  double a = 5e-6;              // cumulative-density scaling, 1/(aphid day)
  double k_f = 1e-3;            // feeding facilitation, 1/(aphid day)
  double k_r = 1e-2;            // obviation of resistance, 1/(aphid day)
  double A = 30.0;              // avirulent facilitation threshold, aphids
  double epsilon_ext = 1e-12;   // extinction cutoff, aphids

  bool operator==(const ModelParams&) const = default;
};

struct SystemState {
  double t = 0.0;
  double h = 0.0;
  double x_A = 0.0;
  double x_V = 0.0;
  double R = 0.0;

  bool operator==(const SystemState&) const = default;
};

struct Derivative {
  double dh = 0.0;
  double dx_A = 0.0;
  double dx_V = 0.0;
  double dR = 0.0;

  bool operator==(const Derivative&) const = default;
};

// Discrete part of the hybrid state. An extinct biotype is frozen at zero.
struct HybridMode {
  bool gate = false;
  bool avirulent_alive = true;
  bool virulent_alive = true;

  bool operator==(const HybridMode&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// 1 iff x_A - A is strictly positive.
int facilitation_gate(double x_A, double A);

// Right-hand side with the discrete mode supplied by the caller. The
// integrator holds the mode fixed across a step and only changes it at
// located events.
Derivative rhs(const SystemState& state, const ModelParams& params, const HybridMode& mode);

// Mode inferred from the state itself: gate on the current x_A, and a
// density that is exactly zero is treated as an absent (extinct) biotype.
Derivative rhs(const SystemState& state, const ModelParams& params);

HybridMode infer_mode(const SystemState& state, const ModelParams& params);

ValidationReport validate_params(const ModelParams& params);

// Single-biotype reduction: dh/dt = a x, dx/dt = (r - h) x.
struct Model1Params {
  double r = 0.27;
  double a = 5e-6;
  double epsilon_ext = 1e-12;
};

struct Model1State {
  double t = 0.0;
  double h = 0.0;
  double x = 0.0;
};

struct Model1Derivative {
  double dh = 0.0;
  double dx = 0.0;
};

Model1Derivative model1_rhs(const Model1State& state, const Model1Params& params);

}  // namespace aphidsim

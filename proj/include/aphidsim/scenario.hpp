#pragma once

#include <string>

#include "aphidsim/model.hpp"

namespace aphidsim {

struct IntegrationControls {
  double t_end = 120.0;     // season length, days
  double dt = 0.01;         // base step, days
  int sample_every = 100;   // output decimation, steps
  double event_tol = 1e-6;  // bisection tolerance on event times, days

  bool operator==(const IntegrationControls&) const = default;
};

struct InitialDensities {
  double x_A0 = 0.0;
  double x_V0 = 0.0;
  double R0 = 30.0;

  bool operator==(const InitialDensities&) const = default;
};

// One simulation run. h(0) and t(0) are always zero.
struct Scenario {
  std::string name = "scenario";
  ModelParams params;
  InitialDensities initial;
  IntegrationControls controls;
  // Freeze the facilitation gate at its value for x_A(0) instead of tracking x_A(t).
  bool gate_on_initial = false;

  bool operator==(const Scenario&) const = default;
};

ValidationReport validate_controls(const IntegrationControls& controls);

// Parameters, controls and initial densities together.
ValidationReport validate_scenario(const Scenario& scenario);

SystemState initial_state(const Scenario& scenario);

}  // namespace aphidsim

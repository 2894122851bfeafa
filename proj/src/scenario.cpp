#include "aphidsim/scenario.hpp"

#include <cmath>

namespace aphidsim {

ValidationReport validate_controls(const IntegrationControls& c) {
  ValidationReport report;
  auto check = [&](bool ok, const char* message) {
    if (!ok) report.violations.emplace_back(message);
  };
  check(std::isfinite(c.t_end) && c.t_end > 0.0, "t_end must be positive");
  check(std::isfinite(c.dt) && c.dt > 0.0 && c.dt <= c.t_end, "dt must satisfy 0 < dt <= t_end");
  check(std::isfinite(c.event_tol) && c.event_tol > 0.0 && c.event_tol < c.dt,
        "event_tol must satisfy 0 < event_tol < dt");
  check(c.sample_every >= 1, "sample_every must be at least 1");
  return report;
}

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report = validate_params(s.params);
  for (auto& v : validate_controls(s.controls).violations) report.violations.push_back(std::move(v));
  auto check = [&](bool ok, const char* message) {
    if (!ok) report.violations.emplace_back(message);
  };
  check(std::isfinite(s.initial.x_A0) && s.initial.x_A0 >= 0.0, "x_A0 must be non-negative");
  check(std::isfinite(s.initial.x_V0) && s.initial.x_V0 >= 0.0, "x_V0 must be non-negative");
  check(std::isfinite(s.initial.R0) && s.initial.R0 >= 0.0, "R0 must be non-negative");
  return report;
}

SystemState initial_state(const Scenario& s) {
  return SystemState{0.0, 0.0, s.initial.x_A0, s.initial.x_V0, s.initial.R0};
}

}  // namespace aphidsim

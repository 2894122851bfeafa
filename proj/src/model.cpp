#include "aphidsim/model.hpp"

#include <cmath>

#include "aphidsim/errors.hpp"

namespace aphidsim {

namespace {

void require_finite(const SystemState& s) {
  if (!std::isfinite(s.t) || !std::isfinite(s.h) || !std::isfinite(s.x_A) || !std::isfinite(s.x_V) ||
      !std::isfinite(s.R)) {
    throw NumericalDomainError("rhs: non-finite state at t=" + std::to_string(s.t));
  }
}

}  // namespace

int facilitation_gate(double x_A, double A) { return (x_A - A) > 0.0 ? 1 : 0; }

Derivative rhs(const SystemState& s, const ModelParams& p, const HybridMode& mode) {
  require_finite(s);
  const double growth = p.r - s.h;
  const double gate = mode.gate ? 1.0 : 0.0;
  Derivative d;
  d.dh = p.a * (s.x_A + s.x_V);
  d.dx_A = mode.avirulent_alive ? growth * (s.x_A - s.R) : 0.0;
  d.dx_V = mode.virulent_alive ? growth * s.x_V : 0.0;
  d.dR = -(p.k_r * s.x_V + p.k_f * s.x_V + p.k_f * gate * s.x_A) * s.R;
  return d;
}

HybridMode infer_mode(const SystemState& s, const ModelParams& p) {
  return HybridMode{facilitation_gate(s.x_A, p.A) == 1, s.x_A != 0.0, s.x_V != 0.0};
}

Derivative rhs(const SystemState& s, const ModelParams& p) {
  require_finite(s);
  return rhs(s, p, infer_mode(s, p));
}

ValidationReport validate_params(const ModelParams& p) {
  ValidationReport report;
  auto check = [&](bool ok, const char* message) {
    if (!ok) report.violations.emplace_back(message);
  };
  // Negated comparisons so NaN fails every check.
  check(std::isfinite(p.r) && p.r > 0.0, "r must be positive");
  check(std::isfinite(p.a) && p.a > 0.0, "a must be positive");
  check(std::isfinite(p.k_f) && p.k_f >= 0.0, "k_f must be non-negative");
  check(std::isfinite(p.k_r) && p.k_r >= 0.0, "k_r must be non-negative");
  check(std::isfinite(p.A) && p.A >= 0.0, "A must be non-negative");
  check(std::isfinite(p.epsilon_ext) && p.epsilon_ext > 0.0, "epsilon_ext must be positive");
  if (p.k_f > 0.0 && p.k_r > 0.0) check(p.k_r > p.k_f, "k_r must exceed k_f");
  return report;
}

Model1Derivative model1_rhs(const Model1State& s, const Model1Params& p) {
  if (!std::isfinite(s.h) || !std::isfinite(s.x)) {
    throw NumericalDomainError("model1_rhs: non-finite state at t=" + std::to_string(s.t));
  }
  return Model1Derivative{p.a * s.x, (p.r - s.h) * s.x};
}

}  // namespace aphidsim

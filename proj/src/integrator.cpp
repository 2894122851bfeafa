#include "aphidsim/integrator.hpp"

#include <cmath>

#include "aphidsim/errors.hpp"
#include "hybrid_engine.hpp"

namespace aphidsim {

namespace {

using detail::event_bit;
using detail::EventMask;

// State vector layout: h, x_A, x_V, R.
class Model2System {
 public:
  using Vector = std::array<double, 4>;
  using Mode = HybridMode;

  // With a frozen gate only one GateOn can ever be pending (at t=0).
  Model2System(const ModelParams& params, std::optional<bool> frozen_gate)
      : params_(params), frozen_gate_(frozen_gate) {}

  Vector derivative(const Vector& y, const Mode& mode) const {
    const Derivative d = rhs(to_state(y, 0.0), params_, mode);
    return {d.dh, d.dx_A, d.dx_V, d.dR};
  }

  EventMask pending(const Vector& y, const Mode& mode) const {
    EventMask m = 0;
    if (frozen_gate_) {
      if (*frozen_gate_ && !mode.gate) m |= event_bit(EventKind::GateOn);
    } else {
      const bool open = facilitation_gate(y[1], params_.A) == 1;
      if (open && !mode.gate) m |= event_bit(EventKind::GateOn);
      if (!open && mode.gate) m |= event_bit(EventKind::GateOff);
    }
    if (mode.avirulent_alive && y[1] < params_.epsilon_ext) m |= event_bit(EventKind::ExtinctA);
    if (mode.virulent_alive && y[2] < params_.epsilon_ext) m |= event_bit(EventKind::ExtinctV);
    return m;
  }

  void apply(Vector& y, Mode& mode, EventMask m) const {
    if (m & event_bit(EventKind::ExtinctA)) {
      y[1] = 0.0;
      mode.avirulent_alive = false;
    }
    if (m & event_bit(EventKind::ExtinctV)) {
      y[2] = 0.0;
      mode.virulent_alive = false;
    }
    if (m & event_bit(EventKind::GateOn)) mode.gate = true;
    if (m & event_bit(EventKind::GateOff)) mode.gate = false;
    // Extinction at the same instant can close a gate opened by a tracked reading.
    if (!frozen_gate_ && mode.gate && facilitation_gate(y[1], params_.A) == 0) mode.gate = false;
  }

  double clamp_floor() const { return params_.epsilon_ext; }

  static SystemState to_state(const Vector& y, double t) { return SystemState{t, y[0], y[1], y[2], y[3]}; }
  static Vector to_vector(const SystemState& s) { return {s.h, s.x_A, s.x_V, s.R}; }

 private:
  ModelParams params_;
  std::optional<bool> frozen_gate_;
};

// State vector layout: h, x.
class Model1System {
 public:
  using Vector = std::array<double, 2>;
  struct Mode {
    bool alive = true;
  };

  explicit Model1System(const Model1Params& params) : params_(params) {}

  Vector derivative(const Vector& y, const Mode& mode) const {
    const Model1Derivative d = model1_rhs(Model1State{0.0, y[0], y[1]}, params_);
    return {d.dh, mode.alive ? d.dx : 0.0};
  }

  EventMask pending(const Vector& y, const Mode& mode) const {
    return mode.alive && y[1] < params_.epsilon_ext ? event_bit(EventKind::ExtinctV) : 0u;
  }

  void apply(Vector& y, Mode& mode, EventMask m) const {
    if (m & event_bit(EventKind::ExtinctV)) {
      y[1] = 0.0;
      mode.alive = false;
    }
  }

  double clamp_floor() const { return params_.epsilon_ext; }

 private:
  Model1Params params_;
};

Trajectory to_trajectory(const detail::RawRun<Model2System>& raw) {
  Trajectory out;
  out.samples.reserve(raw.y.size());
  for (std::size_t i = 0; i < raw.y.size(); ++i) out.samples.push_back(Model2System::to_state(raw.y[i], raw.t[i]));
  out.events = raw.events;
  out.sample_interval = raw.sample_interval;
  return out;
}

void require_valid(const Scenario& s) {
  auto report = validate_scenario(s);
  if (!report.ok()) throw ValidationError(std::move(report.violations));
}

Trajectory run_scenario(const Scenario& s, const IntegrationControls& controls, Stepper stepper) {
  std::optional<bool> frozen;
  if (s.gate_on_initial) frozen = facilitation_gate(s.initial.x_A0, s.params.A) == 1;
  Model2System sys(s.params, frozen);
  try {
    return to_trajectory(
        detail::run(sys, Model2System::to_vector(initial_state(s)), HybridMode{false, true, true}, controls, stepper));
  } catch (const NumericalDomainError& e) {
    throw NumericalDomainError("scenario '" + s.name + "': " + e.what());
  } catch (const EventLocalizationError& e) {
    throw EventLocalizationError("scenario '" + s.name + "': " + e.what());
  }
}

SystemState single_step(const SystemState& s, const ModelParams& p, const HybridMode& mode, double dt,
                        Stepper stepper) {
  if (!(dt > 0.0)) throw ContractError("step size must be positive");
  Model2System sys(p, std::nullopt);
  auto y = detail::advance(sys, Model2System::to_vector(s), mode, s.t, dt, stepper);
  return Model2System::to_state(y, s.t + dt);
}

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::GateOn:
      return "GateOn";
    case EventKind::GateOff:
      return "GateOff";
    case EventKind::ExtinctA:
      return "ExtinctA";
    case EventKind::ExtinctV:
      return "ExtinctV";
  }
  return "?";
}

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (EventKind k : detail::kAllEventKinds)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

SystemState rk4_step(const SystemState& s, const ModelParams& p, double dt) {
  return single_step(s, p, infer_mode(s, p), dt, Stepper::RungeKutta4);
}

SystemState rk4_step(const SystemState& s, const ModelParams& p, const HybridMode& mode, double dt) {
  return single_step(s, p, mode, dt, Stepper::RungeKutta4);
}

SystemState euler_step(const SystemState& s, const ModelParams& p, const HybridMode& mode, double dt) {
  return single_step(s, p, mode, dt, Stepper::ForwardEuler);
}

std::optional<LocatedEvent> locate_event(const SystemState& s0, const SystemState& s1, const ModelParams& p,
                                         const HybridMode& mode, double event_tol, Stepper stepper) {
  const double h = s1.t - s0.t;
  if (!(h > 0.0)) throw ContractError("locate_event: s1 must come after s0");
  if (!(event_tol > 0.0)) throw ContractError("locate_event: event_tol must be positive");
  Model2System sys(p, std::nullopt);
  auto hit = detail::locate(sys, Model2System::to_vector(s0), Model2System::to_vector(s1), mode, s0.t, h,
                            event_tol, stepper);
  if (!hit) return std::nullopt;
  return LocatedEvent{hit->t, detail::kinds_of(hit->mask), Model2System::to_state(hit->y, hit->t)};
}

std::optional<LocatedEvent> locate_event(const SystemState& s0, const SystemState& s1, const ModelParams& p,
                                         double event_tol) {
  return locate_event(s0, s1, p, infer_mode(s0, p), event_tol);
}

Trajectory integrate(const Scenario& s) { return integrate_with(s, Stepper::RungeKutta4); }

Trajectory integrate_with(const Scenario& s, Stepper stepper) {
  require_valid(s);
  return run_scenario(s, s.controls, stepper);
}

Trajectory euler_oracle(const Scenario& s, double dt_fine) {
  require_valid(s);
  if (!(dt_fine > 0.0) || dt_fine > s.controls.dt / 10.0 * (1.0 + 1e-12)) {
    throw ContractError("euler_oracle: dt_fine must satisfy 0 < dt_fine <= dt/10");
  }
  const double interval = s.controls.dt * s.controls.sample_every;
  const double ratio = interval / dt_fine;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * rounded) {
    throw ContractError("euler_oracle: sample interval is not a whole number of fine steps");
  }
  IntegrationControls fine = s.controls;
  fine.dt = dt_fine;
  fine.sample_every = static_cast<int>(rounded);
  fine.event_tol = std::min(s.controls.event_tol, dt_fine / 10.0);
  return run_scenario(s, fine, Stepper::ForwardEuler);
}

Model1Trajectory integrate_model1(const Model1Params& p, double x0, const IntegrationControls& controls,
                                  Stepper stepper) {
  auto report = validate_controls(controls);
  if (!(p.r > 0.0)) report.violations.emplace_back("r must be positive");
  if (!(p.a > 0.0)) report.violations.emplace_back("a must be positive");
  if (!(p.epsilon_ext > 0.0)) report.violations.emplace_back("epsilon_ext must be positive");
  if (!(x0 >= 0.0)) report.violations.emplace_back("x0 must be non-negative");
  if (!report.ok()) throw ValidationError(std::move(report.violations));

  Model1System sys(p);
  auto raw = detail::run(sys, Model1System::Vector{0.0, x0}, Model1System::Mode{}, controls, stepper);
  Model1Trajectory out;
  for (std::size_t i = 0; i < raw.y.size(); ++i) out.samples.push_back(Model1State{raw.t[i], raw.y[i][0], raw.y[i][1]});
  out.events = std::move(raw.events);
  out.sample_interval = raw.sample_interval;
  return out;
}

}  // namespace aphidsim

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "aphidsim/model.hpp"
#include "aphidsim/scenario.hpp"

namespace aphidsim {

enum class EventKind { GateOn, GateOff, ExtinctA, ExtinctV };

std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);

struct Event {
  double t = 0.0;
  EventKind kind = EventKind::GateOn;

  bool operator==(const Event&) const = default;
};

// Sampled solution over [0, t_end]. Samples are taken every
// `sample_interval` days plus the final time; events carry the located
// switching times (bracketed to event_tol). An initially open gate and a
// biotype absent at t=0 are logged as events at t=0.
struct Trajectory {
  std::vector<SystemState> samples;
  std::vector<Event> events;
  double sample_interval = 0.0;
};

enum class Stepper { RungeKutta4, ForwardEuler };

// One classical RK4 step with the mode inferred from `state`.
// Clamps negative roundoff smaller than epsilon_ext to zero.
SystemState rk4_step(const SystemState& state, const ModelParams& params, double dt);
SystemState rk4_step(const SystemState& state, const ModelParams& params, const HybridMode& mode, double dt);
SystemState euler_step(const SystemState& state, const ModelParams& params, const HybridMode& mode, double dt);

struct LocatedEvent {
  double t = 0.0;
  std::vector<EventKind> kinds;  // every event pending at t, in enum order
  SystemState state;             // state at t, before the event is applied
};

// Looks for a mode change between consecutive step endpoints s0 and s1
// (s1.t - s0.t apart). Events already pending at s0 are reported at s0.t.
// Otherwise the crossing is bracketed by bisection, re-integrating from s0
// with sub-steps, until the bracket is narrower than event_tol; the upper end
// of the bracket is returned. Throws EventLocalizationError when 64 halvings
// are not enough.
std::optional<LocatedEvent> locate_event(const SystemState& s0, const SystemState& s1, const ModelParams& params,
                                         const HybridMode& mode, double event_tol,
                                         Stepper stepper = Stepper::RungeKutta4);

// Same, with the mode inferred from s0 (see infer_mode).
std::optional<LocatedEvent> locate_event(const SystemState& s0, const SystemState& s1, const ModelParams& params,
                                         double event_tol);

// Fixed-step RK4 over the scenario's season with event splitting and
// absorbing extinction.
Trajectory integrate(const Scenario& scenario);

// Forward Euler at dt_fine with the same event and clamping rules, sampled at
// the same times as integrate(). dt_fine must not exceed dt / 10 and the
// sample interval must be a whole number of fine steps.
Trajectory euler_oracle(const Scenario& scenario, double dt_fine);

// Same integration engine with an explicit stepper and controls.
Trajectory integrate_with(const Scenario& scenario, Stepper stepper);

struct Model1Trajectory {
  std::vector<Model1State> samples;
  std::vector<Event> events;  // ExtinctV when x falls below epsilon_ext
  double sample_interval = 0.0;
};

// Standalone single-biotype run on the same engine and stepper as integrate().
Model1Trajectory integrate_model1(const Model1Params& params, double x0, const IntegrationControls& controls,
                                  Stepper stepper = Stepper::RungeKutta4);

}  // namespace aphidsim

#pragma once

// Fixed-step integration of a hybrid system: a continuous state that flows
// under a mode-dependent vector field, and discrete mode changes triggered by
// state predicates. A System provides
//
//   using Vector = std::array<double, N>;
//   using Mode = ...;
//   Vector derivative(const Vector&, const Mode&) const;
//   EventMask pending(const Vector&, const Mode&) const;   // events due now
//   void apply(Vector&, Mode&, EventMask) const;           // must clear them
//   double clamp_floor() const;                            // roundoff band
//
// Both Model 2 and the Model 1 reduction run through this code, so their
// shared components see exactly the same floating-point operations.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aphidsim/errors.hpp"
#include "aphidsim/integrator.hpp"

namespace aphidsim::detail {

using EventMask = unsigned;

constexpr EventMask event_bit(EventKind kind) { return 1u << static_cast<unsigned>(kind); }

constexpr std::array<EventKind, 4> kAllEventKinds = {EventKind::GateOn, EventKind::GateOff, EventKind::ExtinctA,
                                                     EventKind::ExtinctV};

inline std::vector<EventKind> kinds_of(EventMask mask) {
  std::vector<EventKind> out;
  for (EventKind k : kAllEventKinds)
    if (mask & event_bit(k)) out.push_back(k);
  return out;
}

constexpr int kMaxBisectionIterations = 64;

template <class Vector>
void require_finite(const Vector& v, const char* stage, double t) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw NumericalDomainError(std::string("non-finite value in stage ") + stage + " of step starting at t=" +
                                 std::to_string(t));
    }
  }
}

template <class System>
typename System::Vector advance(const System& sys, const typename System::Vector& y,
                                const typename System::Mode& mode, double t, double h, Stepper stepper) {
  using Vector = typename System::Vector;
  constexpr std::size_t n = std::tuple_size_v<Vector>;

  auto eval = [&](const Vector& at, const char* stage) {
    require_finite(at, stage, t);
    Vector d = sys.derivative(at, mode);
    require_finite(d, stage, t);
    return d;
  };

  Vector out;
  if (stepper == Stepper::ForwardEuler) {
    const Vector k1 = eval(y, "euler");
    for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + h * k1[i];
  } else {
    const double half = 0.5 * h;
    Vector tmp;
    const Vector k1 = eval(y, "k1");
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + half * k1[i];
    const Vector k2 = eval(tmp, "k2");
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + half * k2[i];
    const Vector k3 = eval(tmp, "k3");
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    const Vector k4 = eval(tmp, "k4");
    const double sixth = h / 6.0;
    for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + sixth * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  require_finite(out, "update", t);

  const double floor = sys.clamp_floor();
  for (double& v : out)
    if (v < 0.0 && v > -floor) v = 0.0;
  return out;
}

template <class System>
struct Hit {
  double t;
  typename System::Vector y;
  EventMask mask;
};

// y1 is the full-step endpoint from y0 over [t0, t0 + h].
template <class System>
std::optional<Hit<System>> locate(const System& sys, const typename System::Vector& y0,
                                  const typename System::Vector& y1, const typename System::Mode& mode, double t0,
                                  double h, double tol, Stepper stepper) {
  if (EventMask m = sys.pending(y0, mode)) return Hit<System>{t0, y0, m};
  if (!sys.pending(y1, mode)) return std::nullopt;

  double lo = 0.0;
  double hi = h;
  auto y_hi = y1;
  for (int it = 0; hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (it == kMaxBisectionIterations || !(mid > lo && mid < hi)) {
      throw EventLocalizationError("event bisection did not reach tolerance " + std::to_string(tol) +
                                   " in step starting at t=" + std::to_string(t0));
    }
    auto y_mid = advance(sys, y0, mode, t0, mid, stepper);
    if (sys.pending(y_mid, mode)) {
      hi = mid;
      y_hi = y_mid;
    } else {
      lo = mid;
    }
  }
  const double t_hit = hi == h ? t0 + h : t0 + hi;
  return Hit<System>{t_hit, y_hi, sys.pending(y_hi, mode)};
}

template <class System>
struct RawRun {
  std::vector<double> t;
  std::vector<typename System::Vector> y;
  std::vector<Event> events;
  double sample_interval = 0.0;
};

template <class System>
RawRun<System> run(const System& sys, typename System::Vector y, typename System::Mode mode,
                   const IntegrationControls& c, Stepper stepper) {
  RawRun<System> out;
  out.sample_interval = c.dt * c.sample_every;

  auto fire = [&](EventMask mask, double at) {
    sys.apply(y, mode, mask);
    for (EventKind k : kinds_of(mask)) out.events.push_back(Event{at, k});
    if (sys.pending(y, mode)) throw ContractError("event application left events pending");
  };

  double t = 0.0;
  if (EventMask m = sys.pending(y, mode)) fire(m, t);
  out.t.push_back(t);
  out.y.push_back(y);

  const auto n_steps = std::max<long long>(1, static_cast<long long>(std::ceil(c.t_end / c.dt - 1e-9)));
  for (long long k = 1; k <= n_steps; ++k) {
    const double t_target = k == n_steps ? c.t_end : static_cast<double>(k) * c.dt;
    while (t < t_target) {
      const double h = t_target - t;
      auto y1 = advance(sys, y, mode, t, h, stepper);
      auto hit = locate(sys, y, y1, mode, t, h, c.event_tol, stepper);
      if (!hit) {
        y = y1;
        t = t_target;
        continue;
      }
      y = hit->y;
      t = std::min(hit->t, t_target);
      fire(hit->mask, t);
    }
    if (k % c.sample_every == 0 || k == n_steps) {
      out.t.push_back(t);
      out.y.push_back(y);
    }
  }
  return out;
}

}  // namespace aphidsim::detail

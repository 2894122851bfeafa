#include "aphidsim/outcomes.hpp"

#include <array>
#include <cmath>

#include "aphidsim/errors.hpp"

namespace aphidsim {

namespace {

constexpr std::array<OutcomeClass, 4> kAllClasses = {OutcomeClass::Coexistence, OutcomeClass::VirulentOnly,
                                                     OutcomeClass::AvirulentOnly, OutcomeClass::BothExtinct};

template <class Field>
std::size_t argmax(const std::vector<SystemState>& samples, Field field) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (field(samples[i]) > field(samples[best])) best = i;
  return best;
}

std::optional<double> first_event(const Trajectory& tr, EventKind kind) {
  for (const Event& e : tr.events)
    if (e.kind == kind) return e.t;
  return std::nullopt;
}

Order order_of(double a, double b) {
  if (b > a) return Order::Higher;
  if (b < a) return Order::Lower;
  return Order::Equal;
}

}  // namespace

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::Coexistence:
      return "Coexistence";
    case OutcomeClass::VirulentOnly:
      return "VirulentOnly";
    case OutcomeClass::AvirulentOnly:
      return "AvirulentOnly";
    case OutcomeClass::BothExtinct:
      return "BothExtinct";
  }
  return "?";
}

std::optional<OutcomeClass> parse_outcome_class(std::string_view text) {
  for (OutcomeClass c : kAllClasses)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::Lower:
      return "lower";
    case Order::Equal:
      return "equal";
    case Order::Higher:
      return "higher";
  }
  return "?";
}

OutcomeSummary classify(const Trajectory& tr) {
  if (tr.samples.empty()) throw ContractError("classify: empty trajectory");

  OutcomeSummary out;
  out.extinct_A_at = first_event(tr, EventKind::ExtinctA);
  out.extinct_V_at = first_event(tr, EventKind::ExtinctV);

  const bool a_gone = out.extinct_A_at.has_value();
  const bool v_gone = out.extinct_V_at.has_value();
  if (!a_gone && !v_gone) {
    out.classification = OutcomeClass::Coexistence;
  } else if (a_gone && v_gone) {
    out.classification = OutcomeClass::BothExtinct;
  } else {
    out.classification = a_gone ? OutcomeClass::VirulentOnly : OutcomeClass::AvirulentOnly;
  }

  const auto ia = argmax(tr.samples, [](const SystemState& s) { return s.x_A; });
  const auto iv = argmax(tr.samples, [](const SystemState& s) { return s.x_V; });
  out.peak_A = Peak{tr.samples[ia].t, tr.samples[ia].x_A};
  out.peak_V = Peak{tr.samples[iv].t, tr.samples[iv].x_V};
  out.terminal = tr.samples.back();
  out.cumulative_h_end = tr.samples.back().h;
  return out;
}

bool peak_coincidence(const Trajectory& tr, int tol_steps) {
  if (tr.samples.empty()) throw ContractError("peak_coincidence: empty trajectory");
  if (tol_steps < 0) throw ContractError("peak_coincidence: tol_steps must be non-negative");
  if (first_event(tr, EventKind::ExtinctA) || first_event(tr, EventKind::ExtinctV)) {
    throw InapplicableError("peak_coincidence: both biotypes must persist to the end of the season");
  }
  const auto ia = argmax(tr.samples, [](const SystemState& s) { return s.x_A; });
  const auto iv = argmax(tr.samples, [](const SystemState& s) { return s.x_V; });
  const double gap = std::abs(tr.samples[ia].t - tr.samples[iv].t);
  // Half a percent of one interval absorbs roundoff in accumulated sample times.
  return gap <= (tol_steps + 0.005) * tr.sample_interval;
}

PeakComparison compare_peaks(const OutcomeSummary& a, const OutcomeSummary& b) {
  return PeakComparison{order_of(a.peak_A.density, b.peak_A.density), order_of(a.peak_V.density, b.peak_V.density)};
}

}  // namespace aphidsim

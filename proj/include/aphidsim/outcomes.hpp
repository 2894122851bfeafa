#pragma once

#include <optional>
#include <string_view>

#include "aphidsim/integrator.hpp"

namespace aphidsim {

enum class OutcomeClass { Coexistence, VirulentOnly, AvirulentOnly, BothExtinct };

std::string_view to_string(OutcomeClass c);
std::optional<OutcomeClass> parse_outcome_class(std::string_view text);

struct Peak {
  double t = 0.0;
  double density = 0.0;

  bool operator==(const Peak&) const = default;
};

struct OutcomeSummary {
  OutcomeClass classification = OutcomeClass::BothExtinct;
  Peak peak_A;
  Peak peak_V;
  std::optional<double> extinct_A_at;
  std::optional<double> extinct_V_at;
  SystemState terminal;
  double cumulative_h_end = 0.0;

  bool operator==(const OutcomeSummary&) const = default;
};

// Verdict from the ExtinctA / ExtinctV events; a biotype absent at t=0 is
// extinct at t=0. Peaks are the first sampled maxima, not interpolated.
// Throws ContractError on an empty trajectory.
OutcomeSummary classify(const Trajectory& trajectory);

// True iff the sampled argmax times of x_A and x_V are within
// tol_steps * sample_interval. Throws InapplicableError unless both biotypes
// persist to the end of the season.
bool peak_coincidence(const Trajectory& trajectory, int tol_steps = 2);

enum class Order { Lower, Equal, Higher };

std::string_view to_string(Order o);

// Direction of `b` relative to `a` for each biotype's peak density.
struct PeakComparison {
  Order peak_A = Order::Equal;
  Order peak_V = Order::Equal;

  bool operator==(const PeakComparison&) const = default;
};

PeakComparison compare_peaks(const OutcomeSummary& a, const OutcomeSummary& b);

}  // namespace aphidsim

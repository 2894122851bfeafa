// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "aphidsim/integrator.hpp"
#include "aphidsim/outcomes.hpp"
#include "aphidsim/presets.hpp"
#include "aphidsim/sweep.hpp"
#include "oracles.hpp"

using namespace aphidsim;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void criterion(int n, const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(n, name, pass, detail.str());
}

bool persists_V(const OutcomeSummary& s) {
  return s.classification == OutcomeClass::Coexistence || s.classification == OutcomeClass::VirulentOnly;
}

bool figure_verdicts(std::ostringstream& out) {
  int mismatched = 0;
  std::vector<std::string> notes;
  for (const auto& p : figure_presets()) {
    const OutcomeSummary s = classify(integrate(p.scenario));
    if (s.classification != p.expected) {
      ++mismatched;
      notes.push_back(p.id + " is " + std::string(to_string(s.classification)));
    }
    const double half = p.scenario.controls.t_end / 2;
    if (p.id == "1C" || p.id == "1D") {
      if (!(s.peak_V.density > 100 * p.scenario.initial.x_V0 && s.peak_V.density > s.peak_A.density))
        notes.push_back(p.id + " lacks a high virulent peak");
    }
    if (p.id == "1E" || p.id == "1F" || p.id == "1G") {
      if (!(s.peak_V.density > s.peak_A.density)) notes.push_back(p.id + " virulent peak not above avirulent");
    }
    if (p.id == "2A" || p.id == "2B") {
      if (!(s.extinct_A_at && *s.extinct_A_at < half)) notes.push_back(p.id + " avirulent not lost early");
    }
  }
  const double c = classify(integrate(find_preset("2C")->scenario)).peak_A.density;
  const double e = classify(integrate(find_preset("2E")->scenario)).peak_A.density;
  const double a = classify(integrate(find_preset("2A")->scenario)).peak_A.density;
  if (!(a < c && c < e)) notes.push_back("avirulent peak not increasing in x_V0 across 2A/2C/2E");
  out << 18 - mismatched << "/18 verdicts match";
  for (const auto& n : notes) out << "; " << n;
  return notes.empty();
}

bool threshold_flip(std::ostringstream& out) {
  Scenario base = find_preset("1A")->scenario;
  int flips = 0;
  OutcomeClass prev{};
  for (int x = 26; x <= 34; ++x) {
    base.initial.x_A0 = x;
    const OutcomeClass c = classify(integrate(base)).classification;
    if (c != OutcomeClass::BothExtinct && c != OutcomeClass::AvirulentOnly) {
      out << "x_A0=" << x << " gave " << to_string(c);
      return false;
    }
    if (x > 26 && c != prev) ++flips;
    prev = c;
  }
  base.initial.x_A0 = 26;
  const bool low_extinct = classify(integrate(base)).classification == OutcomeClass::BothExtinct;
  const double threshold = oracle::avirulent_threshold(base, 20, 40, 1e-3);
  out << flips << " flip(s) on 26..34, threshold " << threshold;
  return flips == 1 && low_extinct && std::abs(threshold - 30.0) <= 1.0;
}

bool peaks_coincide(std::ostringstream& out) {
  int checked = 0;
  std::string bad;
  for (const auto& p : figure_presets()) {
    if (p.expected != OutcomeClass::Coexistence) continue;
    ++checked;
    if (!peak_coincidence(integrate(p.scenario), 2)) bad += " " + p.id;
  }
  out << checked << " coexistence presets checked";
  if (!bad.empty()) out << "; apart:" << bad;
  return checked > 0 && bad.empty();
}

bool virulent_peak_at_r(std::ostringstream& out) {
  int checked = 0;
  std::string bad;
  for (const auto& p : figure_presets()) {
    const Trajectory tr = integrate(p.scenario);
    if (!persists_V(classify(tr))) continue;
    ++checked;
    std::size_t k = 0;
    for (std::size_t i = 1; i < tr.samples.size(); ++i)
      if (tr.samples[i].x_V > tr.samples[k].x_V) k = i;
    const double r = p.scenario.params.r;
    const bool ok = k > 0 && k + 1 < tr.samples.size() && tr.samples[k - 1].h <= r && r <= tr.samples[k + 1].h;
    if (!ok) bad += " " + p.id;
  }
  out << checked << " presets with a persistent virulent biotype";
  if (!bad.empty()) out << "; off:" << bad;
  return checked > 0 && bad.empty();
}

bool euler_agreement(std::ostringstream& out) {
  double worst = 0;
  std::string worst_id;
  for (const auto& p : figure_presets()) {
    const double d = oracle::relative_sup_norm(integrate(p.scenario), euler_oracle(p.scenario, 1e-4)).max();
    if (d > worst) {
      worst = d;
      worst_id = p.id;
    }
  }
  out << "worst relative sup-norm " << worst << " (" << worst_id << "), limit 1e-3";
  return worst <= 1e-3;
}

bool model1_reduction(std::ostringstream& out) {
  int compared = 0;
  for (double x0 : {0.5, 5.0, 25.0, 60.0, 200.0}) {
    Scenario s;
    s.initial = InitialDensities{0, x0, 0};
    const Trajectory two = integrate(s);
    const Model1Trajectory one =
        integrate_model1(Model1Params{s.params.r, s.params.a, s.params.epsilon_ext}, x0, s.controls);
    if (two.samples.size() != one.samples.size()) {
      out << "sample count differs for x_V0=" << x0;
      return false;
    }
    for (std::size_t k = 0; k < one.samples.size(); ++k) {
      const auto& a = two.samples[k];
      const auto& b = one.samples[k];
      if (a.t != b.t || a.h != b.h || a.x_V != b.x || a.x_A != 0 || a.R != 0) {
        out << "x_V0=" << x0 << " differs at sample " << k;
        return false;
      }
      ++compared;
    }
  }
  out << compared << " samples identical";
  return true;
}

bool random_invariants(std::ostringstream& out) {
  std::mt19937_64 rng(1000);
  int violations = 0;
  std::string first;
  for (int n = 0; n < 1000; ++n) {
    const Scenario s = oracle::random_scenario(rng);
    const std::string broken = oracle::check_trajectory_invariants(integrate(s));
    if (!broken.empty()) {
      if (violations++ == 0) first = "scenario " + std::to_string(n) + ": " + broken;
    }
  }

  SweepSpec spec;
  spec.base.params.k_r = 0.005;
  spec.axis1 = SweepAxis{SweepField::x_A0, 10, 50, 9};
  spec.axis2 = SweepAxis{SweepField::x_V0, 0, 60, 7};
  std::vector<SweepResult> runs;
  for (unsigned w : {1u, 2u, 4u}) {
    spec.workers = w;
    runs.push_back(run_sweep(spec));
  }
  bool deterministic = true;
  for (const auto& run : runs) {
    for (std::size_t i = 0; i < run.cells.size(); ++i) {
      const auto& a = run.cells[i];
      const auto& b = runs[0].cells[i];
      deterministic = deterministic && a.classification == b.classification && a.peak_A.density == b.peak_A.density &&
                      a.peak_V.density == b.peak_V.density && a.terminal.h == b.terminal.h;
    }
  }
  out << violations << " violation(s) in 1000 scenarios; sweep " << (deterministic ? "" : "not ")
      << "identical across 1/2/4 workers";
  if (!first.empty()) out << "; first " << first;
  return violations == 0 && deterministic;
}

bool richardson(std::ostringstream& out) {
  Scenario s = find_preset("3C")->scenario;
  s.gate_on_initial = true;
  std::vector<SystemState> ends;
  for (double dt : {0.04, 0.02, 0.01}) {
    s.controls.dt = dt;
    s.controls.sample_every = static_cast<int>(std::lround(1.0 / dt));
    const Trajectory tr = integrate(s);
    if (tr.events.size() != 1) {
      out << "season is not event-free at dt=" << dt;
      return false;
    }
    ends.push_back(tr.samples.back());
  }
  auto dist = [&](const SystemState& a, const SystemState& b) {
    return std::max({std::abs(a.h - b.h) / std::abs(ends[2].h), std::abs(a.x_A - b.x_A) / std::abs(ends[2].x_A),
                     std::abs(a.x_V - b.x_V) / std::abs(ends[2].x_V)});
  };
  const double ratio = dist(ends[0], ends[1]) / dist(ends[1], ends[2]);
  out << "ratio " << ratio << ", need >= 8";
  return ratio >= 8.0;
}

}  // namespace

int main() {
  criterion(1, "figure verdicts", figure_verdicts);
  criterion(2, "single-biotype threshold near A", threshold_flip);
  criterion(3, "peak coincidence under coexistence", peaks_coincide);
  criterion(4, "virulent peak where h reaches r", virulent_peak_at_r);
  criterion(5, "RK4 against fine Euler", euler_agreement);
  criterion(6, "reduction to the single-biotype model", model1_reduction);
  criterion(7, "invariants and sweep determinism", random_invariants);
  criterion(8, "fourth-order convergence", richardson);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "aphidsim/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "aphidsim/errors.hpp"
#include "aphidsim/integrator.hpp"

namespace aphidsim {

namespace {

constexpr std::array<SweepField, 6> kAllFields = {SweepField::x_A0, SweepField::x_V0, SweepField::k_f,
                                                  SweepField::k_r,  SweepField::A,    SweepField::R0};

void assign(Scenario& s, SweepField f, double v) {
  switch (f) {
    case SweepField::x_A0:
      s.initial.x_A0 = v;
      break;
    case SweepField::x_V0:
      s.initial.x_V0 = v;
      break;
    case SweepField::k_f:
      s.params.k_f = v;
      break;
    case SweepField::k_r:
      s.params.k_r = v;
      break;
    case SweepField::A:
      s.params.A = v;
      break;
    case SweepField::R0:
      s.initial.R0 = v;
      break;
  }
}

void check_axis(const SweepAxis& axis, const char* name, ValidationReport& report) {
  const std::string prefix(name);
  if (axis.n_points < 2) report.violations.push_back(prefix + " needs at least 2 points");
  if (!(std::isfinite(axis.min) && std::isfinite(axis.max) && axis.min < axis.max)) {
    report.violations.push_back(prefix + " must satisfy min < max");
  }
}

}  // namespace

std::string_view to_string(SweepField f) {
  switch (f) {
    case SweepField::x_A0:
      return "x_A0";
    case SweepField::x_V0:
      return "x_V0";
    case SweepField::k_f:
      return "k_f";
    case SweepField::k_r:
      return "k_r";
    case SweepField::A:
      return "A";
    case SweepField::R0:
      return "R0";
  }
  return "?";
}

std::optional<SweepField> parse_sweep_field(std::string_view text) {
  for (SweepField f : kAllFields)
    if (to_string(f) == text) return f;
  return std::nullopt;
}

double SweepAxis::value(int i) const {
  if (i == n_points - 1) return max;
  return min + i * (max - min) / (n_points - 1);
}

ValidationReport validate_sweep_spec(const SweepSpec& spec) {
  ValidationReport report;
  check_axis(spec.axis1, "axis1", report);
  check_axis(spec.axis2, "axis2", report);
  if (spec.axis1.field == spec.axis2.field) report.violations.emplace_back("sweep axes must target distinct fields");
  if (spec.workers < 1) report.violations.emplace_back("workers must be at least 1");
  return report;
}

Scenario resolve_cell(const SweepSpec& spec, int i, int j) {
  Scenario s = spec.base;
  assign(s, spec.axis1.field, spec.axis1.value(i));
  assign(s, spec.axis2.field, spec.axis2.value(j));
  s.name = spec.base.name + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  return s;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (auto report = validate_sweep_spec(spec); !report.ok()) throw ValidationError(std::move(report.violations));

  SweepResult result;
  result.spec = spec;
  const int n1 = spec.axis1.n_points;
  const int n2 = spec.axis2.n_points;
  for (int i = 0; i < n1; ++i) result.axis1_values.push_back(spec.axis1.value(i));
  for (int j = 0; j < n2; ++j) result.axis2_values.push_back(spec.axis2.value(j));

  result.provenance.reserve(static_cast<std::size_t>(n1) * n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      Scenario cell = resolve_cell(spec, i, j);
      if (auto report = validate_scenario(cell); !report.ok()) {
        std::string what = "invalid scenario:";
        for (const auto& v : report.violations) what += " " + v + ";";
        throw SweepCellError(i, j, what);
      }
      result.provenance.push_back(std::move(cell));
    }
  }
  result.cells.resize(result.provenance.size());

  const unsigned workers = std::clamp<unsigned>(spec.workers, 1u, static_cast<unsigned>(n1));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    const int begin = static_cast<int>(static_cast<long long>(n1) * w / workers);
    const int end = static_cast<int>(static_cast<long long>(n1) * (w + 1) / workers);
    try {
      for (int i = begin; i < end; ++i) {
        for (int j = 0; j < n2; ++j) {
          const std::size_t idx = static_cast<std::size_t>(i) * n2 + j;
          result.cells[idx] = classify(integrate(result.provenance[idx]));
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Lowest row block first, so the reported failure is the same for any worker count.
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return result;
}

BoundaryTrace boundary_trace(const SweepResult& result, OutcomeClass cls) {
  BoundaryTrace trace;
  const std::size_t rows = result.rows();
  const std::size_t cols = result.cols();
  if (result.cells.size() != rows * cols) throw ContractError("boundary_trace: grid is not fully populated");

  auto inside = [&](std::size_t i, std::size_t j) { return result.at(i, j).classification == cls; };
  std::set<GridCell> touched;
  auto add = [&](GridCell a, GridCell b) {
    trace.edges.push_back(CellEdge{a, b});
    touched.insert(a);
    touched.insert(b);
  };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols && inside(i, j) != inside(i, j + 1)) add({i, j}, {i, j + 1});
      if (i + 1 < rows && inside(i, j) != inside(i + 1, j)) add({i, j}, {i + 1, j});
    }
  }
  trace.cells.assign(touched.begin(), touched.end());
  return trace;
}

}  // namespace aphidsim

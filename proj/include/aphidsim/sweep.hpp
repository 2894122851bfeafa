#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aphidsim/outcomes.hpp"
#include "aphidsim/scenario.hpp"

namespace aphidsim {

enum class SweepField { x_A0, x_V0, k_f, k_r, A, R0 };

std::string_view to_string(SweepField f);
std::optional<SweepField> parse_sweep_field(std::string_view text);

// Linear axis; point i is min + i (max - min) / (n - 1), with point n-1 exactly max.
struct SweepAxis {
  SweepField field = SweepField::x_A0;
  double min = 0.0;
  double max = 1.0;
  int n_points = 2;

  double value(int i) const;
};

struct SweepSpec {
  Scenario base;
  SweepAxis axis1;
  SweepAxis axis2;
  unsigned workers = 1;
};

ValidationReport validate_sweep_spec(const SweepSpec& spec);

// Grid of outcomes, row-major: cell (i, j) has axis1 point i and axis2 point j.
struct SweepResult {
  SweepSpec spec;
  std::vector<double> axis1_values;
  std::vector<double> axis2_values;
  std::vector<OutcomeSummary> cells;
  std::vector<Scenario> provenance;

  std::size_t rows() const { return axis1_values.size(); }
  std::size_t cols() const { return axis2_values.size(); }
  const OutcomeSummary& at(std::size_t i, std::size_t j) const { return cells.at(i * cols() + j); }
  const Scenario& scenario_at(std::size_t i, std::size_t j) const { return provenance.at(i * cols() + j); }
};

// A cell whose resolved scenario fails validation.
class SweepCellError : public std::runtime_error {
 public:
  SweepCellError(std::size_t i, std::size_t j, const std::string& what)
      : std::runtime_error("sweep cell (" + std::to_string(i) + ", " + std::to_string(j) + "): " + what),
        i_(i),
        j_(j) {}
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

Scenario resolve_cell(const SweepSpec& spec, int i, int j);

// Each cell is classify(integrate(resolve_cell(i, j))). Rows are split into
// contiguous blocks across `workers` threads and written into a preallocated
// grid, so the result does not depend on the worker count.
SweepResult run_sweep(const SweepSpec& spec);

struct GridCell {
  std::size_t i = 0;
  std::size_t j = 0;

  bool operator==(const GridCell&) const = default;
  auto operator<=>(const GridCell&) const = default;
};

// Edge between two 4-adjacent cells, one inside the class region and one outside.
struct CellEdge {
  GridCell a;
  GridCell b;

  bool operator==(const CellEdge&) const = default;
};

struct BoundaryTrace {
  std::vector<CellEdge> edges;  // row-major by `a`, right neighbour before lower
  std::vector<GridCell> cells;  // every cell touching an edge, row-major, unique

  bool empty() const { return edges.empty(); }
};

// Purely combinatorial on the grid. A class absent from (or filling) the grid
// gives an empty trace.
BoundaryTrace boundary_trace(const SweepResult& result, OutcomeClass cls);

}  // namespace aphidsim

#include <doctest.h>

#include "aphidsim/errors.hpp"
#include "aphidsim/io.hpp"
#include "aphidsim/sweep.hpp"
#include "oracles.hpp"

using namespace aphidsim;

namespace {

SweepSpec fig1_corners() {
  SweepSpec spec;
  spec.base.params.k_r = 0;
  spec.axis1 = SweepAxis{SweepField::x_A0, 25, 40, 2};
  spec.axis2 = SweepAxis{SweepField::x_V0, 0, 60, 2};
  return spec;
}

SweepResult fake_grid(std::size_t rows, std::size_t cols, std::vector<OutcomeClass> classes) {
  SweepResult r;
  for (std::size_t i = 0; i < rows; ++i) r.axis1_values.push_back(double(i));
  for (std::size_t j = 0; j < cols; ++j) r.axis2_values.push_back(double(j));
  for (OutcomeClass c : classes) {
    OutcomeSummary s;
    s.classification = c;
    r.cells.push_back(s);
  }
  return r;
}

}  // namespace

TEST_CASE("axis points include both endpoints exactly") {
  const SweepAxis axis{SweepField::x_A0, 0.1, 0.7, 7};
  CHECK(axis.value(0) == 0.1);
  CHECK(axis.value(6) == 0.7);
  CHECK(axis.value(3) == 0.1 + 3 * (0.7 - 0.1) / 6);
}

TEST_CASE("2x2 sweep reproduces the feeding-facilitation corners") {
  const SweepResult r = run_sweep(fig1_corners());
  REQUIRE(r.rows() == 2);
  REQUIRE(r.cols() == 2);
  CHECK(r.at(0, 0).classification == OutcomeClass::BothExtinct);    // 25, 0
  CHECK(r.at(0, 1).classification == OutcomeClass::Coexistence);    // 25, 60
  CHECK(r.at(1, 0).classification == OutcomeClass::AvirulentOnly);  // 40, 0
  CHECK(r.at(1, 1).classification == OutcomeClass::Coexistence);    // 40, 60
  CHECK(r.scenario_at(1, 0).initial.x_A0 == 40);
  CHECK(r.scenario_at(1, 0).initial.x_V0 == 0);
}

TEST_CASE("near-degenerate axis gives the base run everywhere") {
  SweepSpec spec;
  spec.base.initial = InitialDensities{50, 20, 30};
  spec.axis1 = SweepAxis{SweepField::x_A0, 50, 50 + 1e-9, 2};
  spec.axis2 = SweepAxis{SweepField::k_r, 1e-2, 1e-2 + 1e-12, 3};
  const SweepResult r = run_sweep(spec);
  const OutcomeSummary base = classify(integrate(spec.base));
  for (const auto& c : r.cells) {
    CHECK(c.classification == base.classification);
    CHECK(c.peak_A.t == base.peak_A.t);
    CHECK(c.peak_A.density == doctest::Approx(base.peak_A.density).epsilon(1e-8));
    CHECK(c.peak_V.density == doctest::Approx(base.peak_V.density).epsilon(1e-8));
  }
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepSpec spec;
  spec.axis1 = SweepAxis{SweepField::x_A0, 0, 60, 7};
  spec.axis2 = SweepAxis{SweepField::x_V0, 0, 60, 5};
  spec.workers = 1;
  const std::string one = format_sweep_grid(run_sweep(spec));
  for (unsigned w : {2u, 3u, 16u}) {
    spec.workers = w;
    CHECK(format_sweep_grid(run_sweep(spec)) == one);
  }
}

TEST_CASE("each sweep cell equals a standalone run") {
  SweepSpec spec;
  spec.axis1 = SweepAxis{SweepField::A, 10, 50, 3};
  spec.axis2 = SweepAxis{SweepField::R0, 10, 50, 3};
  spec.base.initial.x_A0 = 35;
  spec.base.initial.x_V0 = 12;
  spec.workers = 2;
  const SweepResult r = run_sweep(spec);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(r.at(i, j) == classify(integrate(resolve_cell(spec, int(i), int(j)))));
}

TEST_CASE("invalid cell aborts with its index") {
  SweepSpec spec;
  spec.axis1 = SweepAxis{SweepField::x_A0, 0, 10, 2};
  spec.axis2 = SweepAxis{SweepField::k_f, 0, 0.015, 3};  // only k_f = 0.015 exceeds k_r = 0.01
  try {
    run_sweep(spec);
    FAIL("expected SweepCellError");
  } catch (const SweepCellError& e) {
    CHECK(e.i() == 0);
    CHECK(e.j() == 2);
  }
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec;
  spec.axis1 = SweepAxis{SweepField::x_A0, 0, 10, 1};
  spec.axis2 = SweepAxis{SweepField::x_A0, 5, 5, 3};
  const auto report = validate_sweep_spec(spec);
  CHECK(report.violations.size() == 3);
  CHECK_THROWS_AS(run_sweep(spec), ValidationError);
}

TEST_CASE("boundary_trace on small grids") {
  using C = OutcomeClass;
  SUBCASE("uniform") {
    const auto r = fake_grid(3, 3, std::vector<C>(9, C::Coexistence));
    CHECK(boundary_trace(r, C::Coexistence).empty());
    CHECK(boundary_trace(r, C::BothExtinct).empty());
  }
  SUBCASE("checkerboard") {
    const auto r = fake_grid(2, 2, {C::Coexistence, C::VirulentOnly, C::VirulentOnly, C::Coexistence});
    const auto t = boundary_trace(r, C::Coexistence);
    CHECK(t.edges.size() == 4);
    CHECK(t.cells == std::vector<GridCell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
  SUBCASE("half plane") {
    const auto r = fake_grid(2, 3, {C::BothExtinct, C::Coexistence, C::Coexistence, C::BothExtinct, C::Coexistence,
                                    C::Coexistence});
    const auto t = boundary_trace(r, C::Coexistence);
    CHECK(t.edges.size() == 2);
    CHECK(t.cells == std::vector<GridCell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
}

TEST_CASE("phase map: persistence threshold near A on the x_V(0) = 0 column") {
  Scenario base;
  base.params.k_r = 0;
  const double threshold = oracle::avirulent_threshold(base, 0, 60, 1e-3);
  CHECK(threshold == doctest::Approx(30.0).epsilon(1.0 / 30.0));

  SweepSpec spec;
  spec.base = base;
  spec.axis1 = SweepAxis{SweepField::x_A0, 0, 60, 50};
  spec.axis2 = SweepAxis{SweepField::x_V0, 0, 60, 50};
  spec.workers = 4;
  const SweepResult r = run_sweep(spec);

  // Column j = 0: exactly one flip, on the cell pair bracketing the threshold.
  int flips = 0;
  std::size_t flip_at = 0;
  for (std::size_t i = 1; i < r.rows(); ++i) {
    const bool prev = !r.at(i - 1, 0).extinct_A_at.has_value();
    const bool cur = !r.at(i, 0).extinct_A_at.has_value();
    if (prev != cur) {
      ++flips;
      flip_at = i;
    }
  }
  CHECK(flips == 1);
  CHECK(r.axis1_values[flip_at - 1] < threshold);
  CHECK(r.axis1_values[flip_at] >= threshold);

  const auto trace = boundary_trace(r, OutcomeClass::BothExtinct);
  REQUIRE_FALSE(trace.empty());
  bool near = false;
  for (const auto& c : trace.cells)
    if (c.j == 0 && std::abs(r.axis1_values[c.i] - 30.0) < 2.0) near = true;
  CHECK(near);
}

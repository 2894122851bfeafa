#pragma once

// Plain-text formats.
//
// Scenario / sweep files: one `key = value` per line, `#` starts a comment.
// Scenario keys: r, a, k_f, k_r, A, R0, x_A0, x_V0, epsilon_ext, t_end, dt,
// sample_every, event_tol, gate_on_initial. Omitted keys take the library
// defaults. Sweep files accept the scenario keys plus axis1, axis1_min,
// axis1_max, axis1_n (same for axis2) and workers.
//
// Time series: header `t,h,x_A,x_V,R`, one row per sample, then one
// `# event t=<t> kind=<kind>` line per event.
//
// Sweep grid: header `axis1_value,axis2_value,classification,peak_A_t,peak_A,
// peak_V_t,peak_V,extinct_A_at,extinct_V_at`, one row per cell in row-major
// order (empty extinction fields mean "never"), then `# axis1=<field>` and
// `# axis2=<field>` lines.
//
// Numbers are written in scientific notation with 17 significant digits and
// never depend on the C or C++ locale.

#include <filesystem>
#include <string>
#include <string_view>

#include "aphidsim/integrator.hpp"
#include "aphidsim/outcomes.hpp"
#include "aphidsim/scenario.hpp"
#include "aphidsim/sweep.hpp"

namespace aphidsim {

std::string format_number(double v);

// Parses without validating; throws ConfigError for syntax, unknown or
// duplicate keys.
Scenario parse_scenario(std::string_view text, std::string name = "scenario");

// Parse plus validate_scenario; throws ValidationError listing every violated
// invariant. The scenario name is the file stem.
Scenario load_scenario(const std::filesystem::path& path);

std::string format_scenario(const Scenario& scenario);
void write_scenario(const Scenario& scenario, const std::filesystem::path& path);

SweepSpec parse_sweep_spec(std::string_view text, std::string name = "sweep");
SweepSpec load_sweep_spec(const std::filesystem::path& path);

std::string format_timeseries(const Trajectory& trajectory);
void write_timeseries(const Trajectory& trajectory, const std::filesystem::path& path);

// `key = value` lines describing the run and its outcome.
std::string format_summary(const Scenario& scenario, const OutcomeSummary& summary);

std::string format_sweep_grid(const SweepResult& result);
void write_sweep_grid(const SweepResult& result, const std::filesystem::path& path);

// `i,j,axis1_value,axis2_value` for every cell on the boundary.
std::string format_boundary(const SweepResult& result, const BoundaryTrace& trace);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace aphidsim

#include "aphidsim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iomanip>

#include "aphidsim/errors.hpp"
#include "aphidsim/integrator.hpp"
#include "aphidsim/io.hpp"
#include "aphidsim/outcomes.hpp"
#include "aphidsim/presets.hpp"
#include "aphidsim/sweep.hpp"

namespace aphidsim {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

int cmd_run(const fs::path& file, const fs::path& out_dir, std::ostream& out) {
  const Scenario scenario = load_scenario(file);
  const Trajectory tr = integrate(scenario);
  const OutcomeSummary summary = classify(tr);
  ensure_dir(out_dir);
  write_timeseries(tr, out_dir / (scenario.name + "_timeseries.csv"));
  const std::string text = format_summary(scenario, summary);
  write_text_file(out_dir / (scenario.name + "_summary.txt"), text);
  out << text;
  return kExitOk;
}

int cmd_figures(const std::vector<std::string>& which, const fs::path& out_dir, std::ostream& out) {
  std::vector<const FigurePreset*> selected;
  if (which.empty()) {
    for (const auto& p : figure_presets()) selected.push_back(&p);
  } else {
    for (const auto& id : which) {
      const FigurePreset* p = find_preset(id);
      if (!p) throw ConfigError(0, "unknown figure '" + id + "' (expected 1A-1G, 2A-2F or 3A-3E)");
      selected.push_back(p);
    }
  }
  ensure_dir(out_dir);

  std::string table = "figure,x_A0,x_V0,k_r,expected,observed,extinct_A_at,extinct_V_at,peak_A,peak_V,verdict\n";
  int mismatches = 0;
  out << std::left << std::setw(8) << "figure" << std::setw(15) << "expected" << std::setw(15) << "observed"
      << "verdict\n";
  for (const FigurePreset* p : selected) {
    const Trajectory tr = integrate(p->scenario);
    const OutcomeSummary s = classify(tr);
    const bool match = s.classification == p->expected;
    if (!match) ++mismatches;
    write_timeseries(tr, out_dir / ("fig" + p->id + "_timeseries.csv"));
    std::string summary = format_summary(p->scenario, s);
    summary += "expected = " + std::string(to_string(p->expected)) + "\n";
    summary += "verdict = " + std::string(match ? "match" : "mismatch") + "\n";
    summary += "notes = " + p->notes + "\n";
    write_text_file(out_dir / ("fig" + p->id + "_summary.txt"), summary);

    auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    table += p->id + ',' + format_number(p->scenario.initial.x_A0) + ',' + format_number(p->scenario.initial.x_V0) +
             ',' + format_number(p->scenario.params.k_r) + ',' + std::string(to_string(p->expected)) + ',' +
             std::string(to_string(s.classification)) + ',' + opt(s.extinct_A_at) + ',' + opt(s.extinct_V_at) + ',' +
             format_number(s.peak_A.density) + ',' + format_number(s.peak_V.density) + ',' +
             (match ? "match" : "mismatch") + '\n';
    out << std::setw(8) << p->id << std::setw(15) << to_string(p->expected) << std::setw(15)
        << to_string(s.classification) << (match ? "match" : "MISMATCH") << "\n";
  }
  write_text_file(out_dir / "verdicts.csv", table);
  out << selected.size() << " figure(s), " << mismatches << " mismatch(es)\n";
  return mismatches == 0 ? kExitOk : kExitValidation;
}

int cmd_sweep(const fs::path& file, const fs::path& out_dir, std::ostream& out) {
  const SweepSpec spec = load_sweep_spec(file);
  const SweepResult result = run_sweep(spec);
  ensure_dir(out_dir);
  write_sweep_grid(result, out_dir / (spec.base.name + "_grid.csv"));
  const BoundaryTrace trace = boundary_trace(result, OutcomeClass::Coexistence);
  write_text_file(out_dir / (spec.base.name + "_coexistence_boundary.csv"), format_boundary(result, trace));

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& c : result.cells) ++counts[static_cast<int>(c.classification)];
  out << "sweep " << spec.base.name << ": " << result.rows() << " x " << result.cols() << " cells\n";
  for (OutcomeClass c : {OutcomeClass::Coexistence, OutcomeClass::VirulentOnly, OutcomeClass::AvirulentOnly,
                         OutcomeClass::BothExtinct}) {
    out << "  " << to_string(c) << ": " << counts[static_cast<int>(c)] << "\n";
  }
  out << "  coexistence boundary cells: " << trace.cells.size() << "\n";
  return kExitOk;
}

int cmd_validate(const fs::path& file, std::ostream& out) {
  const Scenario s = parse_scenario(read_text_file(file), file.stem().string());
  const ValidationReport report = validate_scenario(s);
  if (report.ok()) {
    out << "valid: " << file.string() << "\n";
    return kExitOk;
  }
  out << "invalid: " << file.string() << "\n";
  for (const auto& v : report.violations) out << "  - " << v << "\n";
  return kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-biotype soybean aphid simulator", "aphidsim"};
  app.require_subcommand(1);

  std::string run_file;
  std::string out_dir = ".";
  auto* run = app.add_subcommand("run", "Integrate one scenario file");
  run->add_option("scenario", run_file, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");

  std::vector<std::string> which;
  auto* figures = app.add_subcommand("figures", "Run the built-in figure presets");
  figures->add_option("--which", which, "Figure ids, e.g. 2B or 1A,3E")->delimiter(',');
  figures->add_option("--out", out_dir, "Output directory");

  std::string sweep_file;
  auto* sweep = app.add_subcommand("sweep", "Run a two-axis sweep file");
  sweep->add_option("sweep", sweep_file, "Sweep file")->required();
  sweep->add_option("--out", out_dir, "Output directory");

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", validate_file, "Scenario file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitError;
  }

  try {
    if (*run) return cmd_run(run_file, out_dir, out);
    if (*figures) return cmd_figures(which, out_dir, out);
    if (*sweep) return cmd_sweep(sweep_file, out_dir, out);
    if (*validate) return cmd_validate(validate_file, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SweepCellError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace aphidsim

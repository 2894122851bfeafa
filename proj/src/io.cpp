#include "aphidsim/io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include "aphidsim/errors.hpp"

namespace aphidsim {

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Entry> parse_entries(std::string_view text) {
  std::vector<Entry> out;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + key + "'");
    if (auto it = seen.find(key); it != seen.end()) {
      throw ConfigError(line_no, "duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")");
    }
    seen.emplace(key, line_no);
    out.push_back(Entry{key, value, line_no});
  }
  return out;
}

double to_double(const Entry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigError(e.line, "'" + e.key + "' expects a number, got '" + e.value + "'");
  return v;
}

int to_int(const Entry& e) {
  int v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(e.line, "'" + e.key + "' expects an integer, got '" + e.value + "'");
  }
  return v;
}

bool to_bool(const Entry& e) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  throw ConfigError(e.line, "'" + e.key + "' expects true or false, got '" + e.value + "'");
}

// Returns false when the key is not a scenario key.
bool apply_scenario_key(Scenario& s, const Entry& e) {
  static const std::map<std::string, std::function<void(Scenario&, const Entry&)>, std::less<>> setters = {
      {"r", [](Scenario& s, const Entry& e) { s.params.r = to_double(e); }},
      {"a", [](Scenario& s, const Entry& e) { s.params.a = to_double(e); }},
      {"k_f", [](Scenario& s, const Entry& e) { s.params.k_f = to_double(e); }},
      {"k_r", [](Scenario& s, const Entry& e) { s.params.k_r = to_double(e); }},
      {"A", [](Scenario& s, const Entry& e) { s.params.A = to_double(e); }},
      {"epsilon_ext", [](Scenario& s, const Entry& e) { s.params.epsilon_ext = to_double(e); }},
      {"R0", [](Scenario& s, const Entry& e) { s.initial.R0 = to_double(e); }},
      {"x_A0", [](Scenario& s, const Entry& e) { s.initial.x_A0 = to_double(e); }},
      {"x_V0", [](Scenario& s, const Entry& e) { s.initial.x_V0 = to_double(e); }},
      {"t_end", [](Scenario& s, const Entry& e) { s.controls.t_end = to_double(e); }},
      {"dt", [](Scenario& s, const Entry& e) { s.controls.dt = to_double(e); }},
      {"sample_every", [](Scenario& s, const Entry& e) { s.controls.sample_every = to_int(e); }},
      {"event_tol", [](Scenario& s, const Entry& e) { s.controls.event_tol = to_double(e); }},
      {"gate_on_initial", [](Scenario& s, const Entry& e) { s.gate_on_initial = to_bool(e); }},
  };
  auto it = setters.find(e.key);
  if (it == setters.end()) return false;
  it->second(s, e);
  return true;
}

std::string fmt_optional(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  if (ec != std::errc()) throw ContractError("format_number: buffer too small");
  return std::string(buf, ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

Scenario parse_scenario(std::string_view text, std::string name) {
  Scenario s;
  s.name = std::move(name);
  for (const Entry& e : parse_entries(text)) {
    if (!apply_scenario_key(s, e)) throw ConfigError(e.line, "unknown key '" + e.key + "'");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  Scenario s = parse_scenario(read_text_file(path), path.stem().string());
  if (auto report = validate_scenario(s); !report.ok()) throw ValidationError(std::move(report.violations));
  return s;
}

std::string format_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "# scenario " << s.name << "\n";
  auto kv = [&](const char* key, double v) { out << key << " = " << format_number(v) << "\n"; };
  kv("r", s.params.r);
  kv("a", s.params.a);
  kv("k_f", s.params.k_f);
  kv("k_r", s.params.k_r);
  kv("A", s.params.A);
  kv("epsilon_ext", s.params.epsilon_ext);
  kv("R0", s.initial.R0);
  kv("x_A0", s.initial.x_A0);
  kv("x_V0", s.initial.x_V0);
  kv("t_end", s.controls.t_end);
  kv("dt", s.controls.dt);
  out << "sample_every = " << s.controls.sample_every << "\n";
  kv("event_tol", s.controls.event_tol);
  out << "gate_on_initial = " << (s.gate_on_initial ? "true" : "false") << "\n";
  return out.str();
}

void write_scenario(const Scenario& s, const std::filesystem::path& path) { write_text_file(path, format_scenario(s)); }

SweepSpec parse_sweep_spec(std::string_view text, std::string name) {
  SweepSpec spec;
  spec.base.name = std::move(name);
  bool seen_axis1 = false;
  bool seen_axis2 = false;
  for (const Entry& e : parse_entries(text)) {
    if (apply_scenario_key(spec.base, e)) continue;
    if (e.key == "axis1" || e.key == "axis2") {
      auto field = parse_sweep_field(e.value);
      if (!field) throw ConfigError(e.line, "unknown sweep field '" + e.value + "'");
      (e.key == "axis1" ? spec.axis1 : spec.axis2).field = *field;
      (e.key == "axis1" ? seen_axis1 : seen_axis2) = true;
    } else if (e.key == "axis1_min") {
      spec.axis1.min = to_double(e);
    } else if (e.key == "axis1_max") {
      spec.axis1.max = to_double(e);
    } else if (e.key == "axis1_n") {
      spec.axis1.n_points = to_int(e);
    } else if (e.key == "axis2_min") {
      spec.axis2.min = to_double(e);
    } else if (e.key == "axis2_max") {
      spec.axis2.max = to_double(e);
    } else if (e.key == "axis2_n") {
      spec.axis2.n_points = to_int(e);
    } else if (e.key == "workers") {
      const int w = to_int(e);
      if (w < 1) throw ConfigError(e.line, "workers must be at least 1");
      spec.workers = static_cast<unsigned>(w);
    } else {
      throw ConfigError(e.line, "unknown key '" + e.key + "'");
    }
  }
  if (!seen_axis1 || !seen_axis2) throw ConfigError(0, "sweep file must set both axis1 and axis2");
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  SweepSpec spec = parse_sweep_spec(read_text_file(path), path.stem().string());
  auto report = validate_sweep_spec(spec);
  for (auto& v : validate_scenario(spec.base).violations) report.violations.push_back("base scenario: " + v);
  if (!report.ok()) throw ValidationError(std::move(report.violations));
  return spec;
}

std::string format_timeseries(const Trajectory& tr) {
  std::string out = "t,h,x_A,x_V,R\n";
  for (const SystemState& s : tr.samples) {
    out += format_number(s.t) + ',' + format_number(s.h) + ',' + format_number(s.x_A) + ',' + format_number(s.x_V) +
           ',' + format_number(s.R) + '\n';
  }
  for (const Event& e : tr.events) {
    out += "# event t=" + format_number(e.t) + " kind=" + std::string(to_string(e.kind)) + '\n';
  }
  return out;
}

void write_timeseries(const Trajectory& tr, const std::filesystem::path& path) {
  write_text_file(path, format_timeseries(tr));
}

std::string format_summary(const Scenario& scenario, const OutcomeSummary& s) {
  std::ostringstream out;
  out << "scenario = " << scenario.name << "\n"
      << "classification = " << to_string(s.classification) << "\n"
      << "peak_A_t = " << format_number(s.peak_A.t) << "\n"
      << "peak_A = " << format_number(s.peak_A.density) << "\n"
      << "peak_V_t = " << format_number(s.peak_V.t) << "\n"
      << "peak_V = " << format_number(s.peak_V.density) << "\n"
      << "extinct_A_at = " << (s.extinct_A_at ? format_number(*s.extinct_A_at) : "none") << "\n"
      << "extinct_V_at = " << (s.extinct_V_at ? format_number(*s.extinct_V_at) : "none") << "\n"
      << "terminal_t = " << format_number(s.terminal.t) << "\n"
      << "terminal_x_A = " << format_number(s.terminal.x_A) << "\n"
      << "terminal_x_V = " << format_number(s.terminal.x_V) << "\n"
      << "terminal_R = " << format_number(s.terminal.R) << "\n"
      << "cumulative_h_end = " << format_number(s.cumulative_h_end) << "\n";
  return out.str();
}

std::string format_sweep_grid(const SweepResult& result) {
  std::string out = "axis1_value,axis2_value,classification,peak_A_t,peak_A,peak_V_t,peak_V,extinct_A_at,extinct_V_at\n";
  for (std::size_t i = 0; i < result.rows(); ++i) {
    for (std::size_t j = 0; j < result.cols(); ++j) {
      const OutcomeSummary& c = result.at(i, j);
      out += format_number(result.axis1_values[i]) + ',' + format_number(result.axis2_values[j]) + ',' +
             std::string(to_string(c.classification)) + ',' + format_number(c.peak_A.t) + ',' +
             format_number(c.peak_A.density) + ',' + format_number(c.peak_V.t) + ',' +
             format_number(c.peak_V.density) + ',' + fmt_optional(c.extinct_A_at) + ',' +
             fmt_optional(c.extinct_V_at) + '\n';
    }
  }
  out += "# axis1=" + std::string(to_string(result.spec.axis1.field)) + '\n';
  out += "# axis2=" + std::string(to_string(result.spec.axis2.field)) + '\n';
  return out;
}

void write_sweep_grid(const SweepResult& result, const std::filesystem::path& path) {
  write_text_file(path, format_sweep_grid(result));
}

std::string format_boundary(const SweepResult& result, const BoundaryTrace& trace) {
  std::string out = "i,j,axis1_value,axis2_value\n";
  for (const GridCell& c : trace.cells) {
    out += std::to_string(c.i) + ',' + std::to_string(c.j) + ',' + format_number(result.axis1_values[c.i]) + ',' +
           format_number(result.axis2_values[c.j]) + '\n';
  }
  return out;
}

}  // namespace aphidsim

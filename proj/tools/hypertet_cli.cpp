// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "hypertet/hypertet.h"

namespace {

using nlohmann::json;

constexpr double kDefaultTol = 1e-9;
constexpr double kDefaultDt = 1e-3;
constexpr std::uint64_t kDefaultSamples = 10'000;
constexpr std::uint64_t kDefaultSeed = 1;
constexpr double kPi = 3.14159265358979323846;

enum Exit { kOk = 0, kValidation = 1, kNumerical = 2, kCampaignFailures = 3 };

// Failure carrying the exit code it should produce.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(ht_status s) {
  switch (s) {
    case HT_INVALID_ARGUMENT:
    case HT_DOMAIN:
    case HT_NOT_A_TETRAHEDRON:
    case HT_NOT_IN_CLOSURE:
    case HT_INCONSISTENCY:
    case HT_PRECONDITION:
      return kValidation;
    default:
      return kNumerical;
  }
}

void check(ht_status s) {
  if (s != HT_OK)
    throw Failure{exit_code_for(s), std::string(ht_status_name(s)) + ": " + ht_last_error_message()};
}

struct TetraDeleter {
  void operator()(ht_tetrahedron* p) const { ht_tetrahedron_free(p); }
};
struct ReportDeleter {
  void operator()(ht_report* p) const { ht_report_free(p); }
};
struct TrajectoryDeleter {
  void operator()(ht_trajectory* p) const { ht_trajectory_free(p); }
};
struct StringDeleter {
  void operator()(ht_string* p) const { ht_string_free(p); }
};
using Tetra = std::unique_ptr<ht_tetrahedron, TetraDeleter>;
using Report = std::unique_ptr<ht_report, ReportDeleter>;
using Trajectory = std::unique_ptr<ht_trajectory, TrajectoryDeleter>;
using String = std::unique_ptr<ht_string, StringDeleter>;

std::string take(ht_string* s) {
  String owned(s);
  return std::string(ht_string_data(s), ht_string_size(s));
}

// Shortest text that parses back to the same double.
std::string fmt(double x) { return std::isfinite(x) ? json(x).dump() : "nan"; }

std::string join(const double* v, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? " " : "") + fmt(v[i]);
  return out;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const char* begin = item.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    while (end && (*end == ' ' || *end == '\t')) ++end;
    if (end == begin || *end != '\0' || !std::isfinite(x))
      throw Failure{kValidation, std::string(flag) + ": malformed number '" + item + "'"};
    out.push_back(x);
  }
  return out;
}

std::array<double, 6> parse_vector(const std::string& text, const char* flag) {
  const auto v = parse_list(text, flag);
  if (v.size() != 6) throw Failure{kValidation, std::string(flag) + ": expected 6 comma-separated numbers"};
  std::array<double, 6> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

enum class Format { text, json, csv };

// Options shared by the subcommands.
struct Settings {
  std::string angles;
  std::string lengths;
  bool degrees = false;
  double ell = NAN;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
  double dt = kDefaultDt;
  bool as_json = false;
  bool as_csv = false;
  unsigned threads = 1;

  Format format() const { return as_json ? Format::json : as_csv ? Format::csv : Format::text; }
};

void add_input(CLI::App* cmd, Settings& s) {
  auto* a = cmd->add_option("--angles", s.angles, "Dihedral angles a,b,c,d,e,f (edges 12,13,14,34,24,23)");
  auto* l = cmd->add_option("--lengths", s.lengths, "Edge lengths a,b,c,d,e,f (edges 12,13,14,34,24,23)");
  a->excludes(l);
  cmd->add_flag("--degrees", s.degrees, "Read --angles in degrees");
  cmd->add_option("--tol", s.tol, "Round-trip tolerance for length input")->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Settings& s, bool csv) {
  auto* j = cmd->add_flag("--json", s.as_json, "JSON output");
  if (csv) cmd->add_flag("--csv", s.as_csv, "CSV output")->excludes(j);
}

bool has_input(const Settings& s) { return !s.angles.empty() || !s.lengths.empty(); }

Tetra read_tetrahedron(const Settings& s) {
  ht_tetrahedron* t = nullptr;
  if (!s.angles.empty()) {
    auto a = parse_vector(s.angles, "--angles");
    if (s.degrees)
      for (double& x : a) x *= kPi / 180.0;
    check(ht_tetrahedron_from_angles(a.data(), &t));
  } else if (!s.lengths.empty()) {
    if (s.degrees) throw Failure{kValidation, "--degrees applies to --angles only"};
    const auto l = parse_vector(s.lengths, "--lengths");
    check(ht_tetrahedron_from_lengths(l.data(), s.tol, &t));
  } else {
    throw Failure{kValidation, "one of --angles or --lengths is required"};
  }
  return Tetra(t);
}

json record(const ht_tetrahedron* t) {
  ht_string* s = nullptr;
  check(ht_tetrahedron_json(t, -1, &s));
  return json::parse(take(s));
}

struct Tetra6 {
  std::array<double, 6> angles, lengths;
  double volume;
};

Tetra6 values(const ht_tetrahedron* t) {
  Tetra6 v{};
  check(ht_tetrahedron_angles(t, v.angles.data()));
  check(ht_tetrahedron_lengths(t, v.lengths.data()));
  check(ht_tetrahedron_volume(t, &v.volume));
  return v;
}

double min_length(const ht_tetrahedron* t) {
  const Tetra6 v = values(t);
  return *std::min_element(v.lengths.begin(), v.lengths.end());
}

void print_tetra_text(std::ostream& out, const ht_tetrahedron* t) {
  const Tetra6 v = values(t);
  out << "angles  " << join(v.angles.data(), 6) << "\n";
  out << "lengths " << join(v.lengths.data(), 6) << "\n";
  out << "volume  " << fmt(v.volume) << "\n";
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- subcommands ---------------------------------------------------------

int run_convert(const Settings& s, std::ostream& out) {
  const Tetra t = read_tetrahedron(s);
  if (s.format() == Format::json) {
    print(out, record(t.get()));
  } else {
    print_tetra_text(out, t.get());
  }
  return kOk;
}

int run_volume(const Settings& s, std::ostream& out) {
  if (!s.angles.empty()) {
    // Angle input may lie on the boundary of O, where only the volume exists.
    auto a = parse_vector(s.angles, "--angles");
    if (s.degrees)
      for (double& x : a) x *= kPi / 180.0;
    int inside = 0;
    check(ht_in_O(a.data(), 1, &inside));
    if (!inside) {
      double v = 0.0;
      check(ht_volume_of_angles(a.data(), &v));
      if (s.format() == Format::json)
        print(out, json{{"angles", a}, {"volume", v}});
      else
        out << fmt(v) << "\n";
      return kOk;
    }
  }
  const Tetra t = read_tetrahedron(s);
  if (s.format() == Format::json) {
    print(out, record(t.get()));
  } else {
    out << fmt(values(t.get()).volume) << "\n";
  }
  return kOk;
}

int run_grad(const Settings& s, const std::string& chart, std::ostream& out) {
  const Tetra t = read_tetrahedron(s);
  std::array<double, 6> g{};
  if (chart == "angles")
    check(ht_dvol_dangles(t.get(), g.data()));
  else
    check(ht_dvol_dlengths(t.get(), g.data()));
  if (s.format() == Format::json) {
    print(out, json{{"chart", chart}, {"gradient", g}, {"tetrahedron", record(t.get())}});
  } else {
    out << "dV/d" << (chart == "angles" ? "theta" : "l") << " " << join(g.data(), 6) << "\n";
  }
  return kOk;
}

void print_report(std::ostream& out, const ht_report* r, const Settings& s, Format format) {
  ht_string* str = nullptr;
  check(ht_report_json(r, -1, &str));
  json j = json::parse(take(str));
  j["settings"] = {{"samples", s.samples}, {"seed", s.seed}, {"tol", s.tol}, {"dt", s.dt}};
  if (format == Format::json) {
    print(out, j);
    return;
  }
  out << "# campaign=" << j["campaign"].get<std::string>() << " regime=" << j["regime"].get<std::string>()
      << " samples=" << s.samples << " seed=" << s.seed << " tol=" << fmt(s.tol) << " dt=" << fmt(s.dt) << "\n";
  for (auto& [k, v] : j["parameters"].items()) out << k << " " << (v.is_null() ? "nan" : fmt(v.get<double>())) << "\n";
  out << "samples " << j["samples"].get<std::uint64_t>() << "\n";
  out << "pass " << j["passes"].get<std::uint64_t>() << "\n";
  out << "fail " << j["failures"].get<std::uint64_t>() << "\n";
  out << "indeterminate " << j["indeterminate"].get<std::uint64_t>() << "\n";
  for (auto& [k, v] : j["counters"].items()) out << k << " " << v.get<std::uint64_t>() << "\n";
  const auto& wm = j["worst_margin"];
  out << "worst_margin " << (wm.is_null() ? "nan" : fmt(wm.get<double>())) << "\n";
  for (const auto& w : j["witnesses"]) {
    std::vector<double> a = w["tetrahedron"]["angles"].get<std::vector<double>>();
    out << "witness " << fmt(w["margin"].get<double>()) << " angles " << join(a.data(), a.size()) << "\n";
  }
}

int campaign_exit(const ht_report* r) {
  std::uint64_t failures = 0;
  check(ht_report_counts(r, nullptr, nullptr, &failures));
  return failures > 0 ? kCampaignFailures : kOk;
}

int run_verify_theorem(const Settings& s, std::ostream& out) {
  if (!std::isfinite(s.ell)) throw Failure{kValidation, "--ell is required"};
  ht_report* r = nullptr;
  check(ht_verify_theorem(s.ell, s.samples, s.seed, s.tol, s.threads, &r));
  const Report report(r);
  print_report(out, r, s, s.format());
  return campaign_exit(r);
}

int run_verify_angle_sum(const Settings& s, double theta_sum, std::ostream& out) {
  ht_report* r = nullptr;
  check(ht_verify_fixed_angle_sum(theta_sum, s.samples, s.seed, s.tol, s.threads, &r));
  const Report report(r);
  print_report(out, r, s, s.format());
  return campaign_exit(r);
}

int run_flow(const Settings& s, std::uint64_t max_steps, std::ostream& out) {
  const Tetra start = read_tetrahedron(s);
  double floor = s.ell;
  if (!std::isfinite(floor)) floor = min_length(start.get());
  ht_trajectory* tr = nullptr;
  check(ht_deformation_flow(start.get(), floor, s.dt, max_steps, &tr));
  const Trajectory owned(tr);
  ht_string* str = nullptr;
  switch (s.format()) {
    case Format::csv:
      check(ht_trajectory_csv(tr, &str));
      out << take(str);
      break;
    case Format::json:
      check(ht_trajectory_json(tr, -1, &str));
      print(out, json::parse(take(str)));
      break;
    case Format::text: {
      check(ht_trajectory_json(tr, -1, &str));
      const json j = json::parse(take(str));
      const auto& pts = j["points"];
      out << "# ell_floor=" << fmt(floor) << " dt=" << fmt(s.dt) << "\n";
      out << "reason " << j["reason"].get<std::string>() << "\n";
      out << "points " << pts.size() << "\n";
      out << "t_end " << fmt(pts.back()["t"].get<double>()) << "\n";
      out << "volume_start " << fmt(pts.front()["tetrahedron"]["volume"].get<double>()) << "\n";
      out << "volume_end " << fmt(pts.back()["tetrahedron"]["volume"].get<double>()) << "\n";
      auto l = pts.back()["tetrahedron"]["lengths"].get<std::vector<double>>();
      out << "lengths_end " << join(l.data(), l.size()) << "\n";
      if (!j["diagnostics"].get<std::string>().empty())
        out << "diagnostics " << j["diagnostics"].get<std::string>() << "\n";
      break;
    }
  }
  return kOk;
}

int run_prima(const Settings& s, std::ostream& out) {
  if (!has_input(s)) {
    ht_report* r = nullptr;
    check(ht_verify_average_angle(s.samples, s.seed, s.threads, &r));
    const Report report(r);
    print_report(out, r, s, s.format());
    return kOk;
  }
  const Tetra t = read_tetrahedron(s);
  double ell = s.ell;
  if (!std::isfinite(ell)) ell = min_length(t.get());
  int holds = 0, indeterminate = 0;
  double margin = 0.0;
  check(ht_average_angle_test(t.get(), ell, &holds, &indeterminate, &margin));
  if (s.format() == Format::json) {
    print(out, json{{"ell", ell}, {"holds", holds != 0}, {"indeterminate", indeterminate != 0}, {"margin", margin},
                    {"tetrahedron", record(t.get())}});
  } else {
    out << "ell " << fmt(ell) << "\nholds " << (holds ? "true" : "false") << "\nindeterminate "
        << (indeterminate ? "true" : "false") << "\nmargin " << fmt(margin) << "\n";
  }
  return kOk;
}

int run_prima2(const Settings& s, std::uint64_t probes, std::ostream& out) {
  const Tetra t = read_tetrahedron(s);
  double ell = s.ell;
  if (!std::isfinite(ell)) ell = min_length(t.get());
  int nonempty = 0;
  std::uint64_t used = 0;
  ht_tetrahedron* w = nullptr;
  check(ht_orbit_hull_test(t.get(), ell, probes, s.seed, &nonempty, &used, &w));
  const Tetra witness(w);
  if (s.format() == Format::json) {
    print(out, json{{"ell", ell},
                    {"nonempty", nonempty != 0},
                    {"inconclusive", nonempty == 0},
                    {"probes", probes},
                    {"probes_used", used},
                    {"witness", witness ? record(witness.get()) : json(nullptr)}});
  } else {
    out << "ell " << fmt(ell) << "\nnonempty " << (nonempty ? "true" : "false") << "\nprobes_used " << used << "\n";
    if (witness) {
      const Tetra6 v = values(witness.get());
      out << "witness_angles " << join(v.angles.data(), 6) << "\n";
      out << "witness_lengths " << join(v.lengths.data(), 6) << "\n";
    } else {
      out << "inconclusive true\n";
    }
  }
  return kOk;
}

int run_degenerate(const Settings& s, std::size_t steps, std::ostream& out) {
  if (steps < 2) throw Failure{kValidation, "--steps must be at least 2"};
  std::vector<double> angles(6 * steps), volumes(steps);
  check(ht_degeneration_path(steps, angles.data(), volumes.data()));
  if (s.format() == Format::json) {
    json pts = json::array();
    for (std::size_t k = 0; k < steps; ++k)
      pts.push_back({{"angles", std::vector<double>(angles.begin() + 6 * k, angles.begin() + 6 * k + 6)},
                     {"volume", volumes[k]}});
    print(out, json{{"steps", steps}, {"points", pts}});
  } else {
    const bool csv = s.format() == Format::csv;
    out << (csv ? "a12,a13,a14,a34,a24,a23,volume\n" : "# angles(12 13 14 34 24 23) volume\n");
    for (std::size_t k = 0; k < steps; ++k) {
      for (int e = 0; e < 6; ++e) out << fmt(angles[6 * k + e]) << (csv ? "," : " ");
      out << fmt(volumes[k]) << "\n";
    }
  }
  return kOk;
}

int run_scan(const Settings& s, const std::string& grid_text, double from, double to, std::size_t points,
             std::ostream& out) {
  std::vector<double> grid;
  if (!grid_text.empty()) {
    grid = parse_list(grid_text, "--grid");
  } else {
    if (points == 0) throw Failure{kValidation, "--points must be positive"};
    for (std::size_t k = 0; k < points; ++k)
      grid.push_back(points == 1 ? from : k + 1 == points ? to : from + (to - from) * double(k) / double(points - 1));
  }
  for (double x : grid)
    if (!(x > 0.0)) throw Failure{kValidation, "scan grid must be positive"};
  std::vector<double> volumes(grid.size());
  check(ht_regular_volume_scan(grid.data(), grid.size(), volumes.data()));
  if (s.format() == Format::json) {
    json pts = json::array();
    for (std::size_t k = 0; k < grid.size(); ++k) pts.push_back({{"ell", grid[k]}, {"volume", volumes[k]}});
    print(out, json{{"points", pts}});
  } else {
    const bool csv = s.format() == Format::csv;
    out << (csv ? "ell,volume\n" : "# ell volume\n");
    for (std::size_t k = 0; k < grid.size(); ++k) out << fmt(grid[k]) << (csv ? "," : " ") << fmt(volumes[k]) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated hyperbolic tetrahedra: conversions, volumes, gradients and volume-maximisation checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ht_version()));

  Settings s;
  std::string chart = "angles";
  double theta_sum = kPi;
  std::uint64_t max_steps = 10'000'000;
  std::uint64_t probes = 1000;
  std::size_t steps = 13;
  std::string grid;
  double from = 0.05, to = 3.0;
  std::size_t points = 100;

  auto* convert = app.add_subcommand("convert", "Convert between angles and lengths");
  add_input(convert, s);
  add_format(convert, s, false);

  auto* volume = app.add_subcommand("volume", "Volume from angles or lengths");
  add_input(volume, s);
  add_format(volume, s, false);

  auto* grad = app.add_subcommand("grad", "Volume gradient in the angle or length chart");
  add_input(grad, s);
  add_format(grad, s, false);
  grad->add_option("--chart", chart, "angles or lengths")->check(CLI::IsMember({"angles", "lengths"}));

  auto* verify = app.add_subcommand("verify", "Sampling campaigns");
  verify->require_subcommand(1);
  auto* theorem = verify->add_subcommand("theorem", "vol <= vol(regular of length ell) over T_ell");
  auto* angle_sum = verify->add_subcommand("angle-sum", "vol <= vol(regular) at fixed angle sum");
  for (auto* cmd : {theorem, angle_sum}) {
    cmd->add_option("--samples", s.samples, "Number of samples");
    cmd->add_option("--seed", s.seed, "Master seed");
    cmd->add_option("--tol", s.tol, "Violation tolerance")->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", s.threads, "Worker threads (0 = all); output does not depend on it");
    add_format(cmd, s, false);
  }
  theorem->add_option("--ell", s.ell, "Length floor")->required()->check(CLI::PositiveNumber);
  angle_sum->add_option("--sum", theta_sum, "Angle sum (default pi)")->check(CLI::PositiveNumber);

  auto* flow = app.add_subcommand("flow", "Shrink the longest edges until the tetrahedron is regular");
  add_input(flow, s);
  add_format(flow, s, true);
  flow->add_option("--ell", s.ell, "Length floor (default: minimum length of the start)");
  flow->add_option("--dt", s.dt, "Step in length space")->check(CLI::PositiveNumber);
  flow->add_option("--max-steps", max_steps, "Step budget");

  auto* conjecture = app.add_subcommand("conjecture", "Probes of the open conjectures");
  conjecture->require_subcommand(1);
  auto* prima = conjecture->add_subcommand(
      "prima", "Average-angle regular tetrahedron stays in T_ell (campaign when no tetrahedron is given)");
  auto* prima2 = conjecture->add_subcommand("prima2", "Convex hull of the S4-orbit meets T_ell");
  for (auto* cmd : {prima, prima2}) {
    add_input(cmd, s);
    add_format(cmd, s, false);
    cmd->add_option("--ell", s.ell, "Length floor (default: minimum length of the input)");
    cmd->add_option("--seed", s.seed, "Seed");
  }
  prima->add_option("--samples", s.samples, "Campaign samples");
  prima->add_option("--threads", s.threads, "Worker threads (0 = all)");
  prima2->add_option("--probes", probes, "Probe budget");

  auto* degenerate = app.add_subcommand("degenerate", "Volume along a path to the flat right-angled octagon");
  add_format(degenerate, s, true);
  degenerate->add_option("--steps", steps, "Number of points (>= 2)");

  auto* scan = app.add_subcommand("scan", "Volume of the regular tetrahedron over a grid of lengths");
  add_format(scan, s, true);
  scan->add_option("--grid", grid, "Explicit comma-separated lengths");
  scan->add_option("--from", from, "Grid start")->check(CLI::PositiveNumber);
  scan->add_option("--to", to, "Grid end")->check(CLI::PositiveNumber);
  scan->add_option("--points", points, "Grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  std::ostringstream out;
  int code = kOk;
  try {
    if (*convert) code = run_convert(s, out);
    else if (*volume) code = run_volume(s, out);
    else if (*grad) code = run_grad(s, chart, out);
    else if (*theorem) code = run_verify_theorem(s, out);
    else if (*angle_sum) code = run_verify_angle_sum(s, theta_sum, out);
    else if (*flow) code = run_flow(s, max_steps, out);
    else if (*prima) code = run_prima(s, out);
    else if (*prima2) code = run_prima2(s, probes, out);
    else if (*degenerate) code = run_degenerate(s, steps, out);
    else if (*scan) code = run_scan(s, grid, from, to, points, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  std::cout << out.str();
  return code;
}

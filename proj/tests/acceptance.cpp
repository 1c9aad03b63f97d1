// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hypertet/convert.hpp"
#include "hypertet/domain.hpp"
#include "hypertet/extremal.hpp"
#include "hypertet/random.hpp"
#include "hypertet/schlafli.hpp"
#include "hypertet/volume.hpp"

using namespace hypertet;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

std::string format(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double min_len(const EdgeLengths& l) { return *std::min_element(l.begin(), l.end()); }

Outcome golden_volumes() {
  const double v1 = ushijima_volume(DihedralAngles::filled(kPi / 6));
  const double v2 = ushijima_volume(DihedralAngles{{kPi / 2, 0, 0, 0, 0, 0}});
  const double v3 = ushijima_volume(DihedralAngles{{7 * kPi / 24, 7 * kPi / 24, 0, 0, 0, 0}});
  const bool ok = v1 >= 3.225 && v1 <= 3.227 && v2 >= 3.010 && v2 <= 3.012 && v3 >= 3.209 && v3 <= 3.211;
  return {ok, format("%.12f %.12f %.12f", v1, v2, v3)};
}

Outcome closed_form() {
  const double diff = std::abs(regular_volume_l0() - ushijima_volume(DihedralAngles::filled(kPi / 6)));
  return {diff < 1e-6, format("|closed form - dilogarithm formula| = %.3e", diff)};
}

Outcome conversion_golden() {
  const double l0 = std::acosh((3 + std::sqrt(3.0)) / 4);
  const EdgeLengths l = angles_to_lengths(DihedralAngles::filled(kPi / 6));
  double err_l = 0, err_a = 0;
  for (double x : l) err_l = std::max(err_l, std::abs(x - l0));
  for (double x : lengths_to_angles(EdgeLengths::filled(l0))) err_a = std::max(err_a, std::abs(x - kPi / 6));
  return {err_l < 1e-12 && err_a < 1e-12, format("l0=%.15f length err %.2e, angle err %.2e", l0, err_l, err_a)};
}

Outcome schlafli_gradient() {
  Rng rng(2024);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const DihedralAngles a = sample_O(rng, SampleConstraint::acute());
    const EdgeLengths l = angles_to_lengths(a);
    const double h = std::min(1e-3, 0.4 * margin_O(a));
    for (int e = 0; e < 6; ++e) {
      auto f = [&](double x) {
        DihedralAngles b = a;
        b[e] = x;
        return ushijima_volume(b);
      };
      const double d1 = (f(a[e] + h) - f(a[e] - h)) / (2 * h);
      const double d2 = (f(a[e] + h / 2) - f(a[e] - h / 2)) / h;
      const double fd = (4 * d2 - d1) / 3;
      worst = std::max(worst, std::abs(fd + l[e] / 2));
    }
  }
  return {worst < 1e-6, format("max |FD dV/dtheta + l/2| = %.3e over 100 points", worst)};
}

Outcome round_trip() {
  Rng rng(2025);
  double worst_a = 0, worst_l = 0;
  for (int i = 0; i < 10000; ++i) {
    const DihedralAngles a = sample_O(rng, SampleConstraint::acute());
    const EdgeLengths l = angles_to_lengths(a);
    worst_a = std::max(worst_a, max_abs_difference(lengths_to_angles(l), a));
    worst_l = std::max(worst_l, max_abs_difference(angles_to_lengths(lengths_to_angles(l)), l));
  }
  return {worst_a < 1e-9 && worst_l < 1e-9, format("angles %.3e, lengths %.3e over 1e4 points", worst_a, worst_l)};
}

Outcome concavity_monotonicity() {
  Rng rng(2026);
  int concave_bad = 0, mono_bad = 0;
  double worst = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const DihedralAngles a = sample_O(rng, SampleConstraint::interior());
    const DihedralAngles b = sample_O(rng, SampleConstraint::interior());
    DihedralAngles m;
    for (int e = 0; e < 6; ++e) m[e] = 0.5 * (a[e] + b[e]);
    const double gap = ushijima_volume(m) - 0.5 * (ushijima_volume(a) + ushijima_volume(b));
    worst = std::min(worst, gap);
    if (gap < -1e-10) ++concave_bad;
  }
  for (int i = 0; i < 1000; ++i) {
    const DihedralAngles hi = sample_O(rng, SampleConstraint::interior());
    DihedralAngles lo;
    for (int e = 0; e < 6; ++e) lo[e] = hi[e] * rng.uniform();
    if (ushijima_volume(lo) < ushijima_volume(hi) - 1e-10) ++mono_bad;
  }
  return {concave_bad == 0 && mono_bad == 0,
          format("concavity violations %.0f (min gap %.3e), monotonicity violations %.0f", concave_bad, worst,
                 mono_bad)};
}

Outcome theorem_campaigns() {
  CampaignOptions options;
  options.threads = 0;
  std::ostringstream detail;
  bool ok = true;
  for (double ell : {0.1, 0.3, regular_length_l0()}) {
    const VerificationReport r = verify_theorem(ell, 100000, 7, options);
    ok = ok && r.samples == 100000 && r.failures() == 0;
    detail << format("ell=%.4f fail=%.0f worst=%.3e; ", ell, double(r.failures()), r.worst_margin);
  }
  return {ok, detail.str()};
}

Outcome key_proposition() {
  Rng rng(2027);
  int bad_gap = 0, bad_bracket = 0, bad_grad = 0, bad_g1 = 0, bad_g2 = 0, bad_g3 = 0;
  const double floor = regular_volume_l0();
  for (int i = 0; i < 10000; ++i) {
    const Tetrahedron t = longest_edge_first(Tetrahedron::from_angles(sample_O(rng, SampleConstraint::volume_floor(floor))));
    const DihedralAngles& a = t.angles();
    if (trig_inequality_gap(a) < -1e-12) ++bad_gap;
    if (!(edge12_bracket(t) > 0)) ++bad_bracket;
    if (!(dvol_dlengths(t)[0] < 0)) ++bad_grad;
    const TrigLemmaGaps g = trig_lemma_gaps(a);
    if (g.cross_vs_constant < -1e-12) ++bad_g2;
    if (g.bracket_vs_half_angle < -1e-12) ++bad_g3;
    if (a[0] >= kPi / 6 && a[0] <= kPi / 3 && g.cross_vs_half_angle < -1e-12) ++bad_g1;
  }
  const bool ok = bad_gap + bad_bracket + bad_grad + bad_g1 + bad_g2 + bad_g3 == 0;
  std::ostringstream d;
  d << "violations: gap " << bad_gap << ", bracket " << bad_bracket << ", dV/dl12 " << bad_grad << ", g1 " << bad_g1
    << ", g2 " << bad_g2 << ", g3 " << bad_g3 << " over 1e4 samples";
  return {ok, d.str()};
}

Outcome deformation_flows() {
  Rng rng(2028);
  const double floor = regular_volume_l0();
  int ok_count = 0, started = 0;
  std::size_t points = 0;
  while (started < 100) {
    const Tetrahedron t = Tetrahedron::from_angles(sample_O(rng, SampleConstraint::volume_floor(floor)));
    if (min_len(t.lengths()) < 0.3 || t.is_regular(1e-9)) continue;
    ++started;
    const Trajectory tr = deformation_flow(t, 0.3);
    points += tr.points.size();
    bool inc = true, mono = true;
    for (std::size_t i = 1; i < tr.points.size(); ++i) {
      if (!(tr.points[i].tetra.volume() > tr.points[i - 1].tetra.volume())) inc = false;
      if (tr.points[i].multiplicity < tr.points[i - 1].multiplicity) mono = false;
    }
    if (tr.reason == Termination::regular && inc && mono) ++ok_count;
  }
  return {ok_count == 100, format("%.0f/100 flows regular, increasing, m non-decreasing (%.0f points)", ok_count,
                                  double(points))};
}

Outcome boundary_vanishing() {
  const auto path = degeneration_path(100);
  const double v = path.back().volume;
  return {std::abs(v) < 1e-6, format("endpoint volume %.3e", v)};
}

Outcome regular_monotone() {
  const auto scan = regular_volume_scan(linear_grid(0.05, 3.0, 100));
  int bad = 0;
  for (std::size_t i = 1; i < scan.size(); ++i)
    if (!(scan[i].volume < scan[i - 1].volume)) ++bad;
  return {bad == 0 && scan.size() == 100,
          format("%.0f violations; V(0.05)=%.6f V(3)=%.6f", bad, scan.front().volume, scan.back().volume)};
}

struct Run {
  int status;
  std::string output;
};

Run run_command(const std::string& cmd) {
  Run r{-1, {}};
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  r.status = pclose(p);
  return r;
}

Outcome cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const std::string p6 = "0.5235987755982988,0.5235987755982988,0.5235987755982988,0.5235987755982988,"
                         "0.5235987755982988,0.5235987755982988";
  const std::vector<std::string> commands{
      "convert --angles " + p6 + " --json",
      "volume --angles " + p6,
      "grad --angles 0.4,0.5,0.6,0.55,0.45,0.5 --chart lengths --json",
      "verify theorem --ell 0.59 --samples 20000 --seed 7 --json",
      "verify theorem --ell 0.3 --samples 20000 --seed 11 --threads 4",
      "verify angle-sum --sum 3 --samples 5000 --seed 3",
      "flow --angles 0.4,0.5,0.6,0.55,0.45,0.5 --ell 0.3 --csv",
      "conjecture prima --samples 5000 --seed 5 --json",
      "conjecture prima2 --angles 0.4,0.5,0.6,0.55,0.45,0.5 --probes 50 --seed 2",
      "degenerate --steps 20 --csv",
      "scan --points 30 --json",
      "convert --angles 1,2,3",
  };
  int differing = 0;
  for (const auto& c : commands) {
    const Run a = run_command("\"" + cli + "\" " + c);
    const Run b = run_command("\"" + cli + "\" " + c);
    if (a.status != b.status || a.output != b.output || a.output.empty()) ++differing;
  }
  return {differing == 0, format("%.0f of %.0f invocations differ between runs", differing, double(commands.size()))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "golden volumes", 1, golden_volumes},
      {2, "closed-form cross-check", 1, closed_form},
      {3, "conversion golden", 1, conversion_golden},
      {4, "Schlafli gradient", 10, schlafli_gradient},
      {5, "round-trip property", 10, round_trip},
      {6, "concavity and monotonicity", 30, concavity_monotonicity},
      {7, "volume bound on T_ell sampling", 300, theorem_campaigns},
      {8, "edge-12 derivative sign suite", 120, key_proposition},
      {9, "deformation flow", 120, deformation_flows},
      {10, "boundary vanishing", 1, boundary_vanishing},
      {11, "regular-family monotonicity", 5, regular_monotone},
      {12, "CLI determinism", 600, [&] { return cli_determinism(cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %-32s %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.time_limit, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "hypertet/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <sstream>
#include <thread>

#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"
#include "hypertet/random.hpp"
#include "hypertet/volume.hpp"

namespace hypertet {

const char* to_string(Termination reason) {
  switch (reason) {
    case Termination::merged: return "merged";
    case Termination::regular: return "regular";
    case Termination::boundary: return "boundary";
    case Termination::budget: return "budget";
  }
  return "unknown";
}

int max_edge_multiplicity(const EdgeLengths& l) {
  const double top = *std::max_element(l.begin(), l.end());
  int m = 0;
  for (double x : l)
    if (top - x <= kTieTolerance) ++m;
  return m;
}

namespace {

double min_length(const EdgeLengths& l) { return *std::min_element(l.begin(), l.end()); }
double max_length(const EdgeLengths& l) { return *std::max_element(l.begin(), l.end()); }

}  // namespace

Trajectory deformation_flow(const Tetrahedron& start, double ell_floor, double dt,
                            const FlowOptions& options) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorCode::precondition, "deformation_flow: dt must be positive");
  if (!(min_length(start.lengths()) >= ell_floor - kTieTolerance))
    throw Error(ErrorCode::precondition, "deformation_flow: start is not in T_ell");

  Trajectory traj;
  traj.ell_floor = ell_floor;
  traj.dt = dt;

  Tetrahedron current = start;
  double t = 0.0;
  int m = max_edge_multiplicity(current.lengths());
  traj.points.push_back({t, current, m});

  for (std::uint64_t step = 0;; ++step) {
    const EdgeLengths& l = current.lengths();
    if (max_length(l) - min_length(l) <= kTieTolerance) {
      traj.reason = Termination::regular;
      return traj;
    }
    if (step >= options.max_steps) {
      traj.reason = Termination::budget;
      return traj;
    }

    const double top = max_length(l);
    double second = -INFINITY;
    for (double x : l)
      if (top - x > kTieTolerance) second = std::max(second, x);

    const double gap = top - second;
    const bool merging = gap <= dt;
    const double h = merging ? gap : dt;
    EdgeLengths next = l;
    for (int e = 0; e < 6; ++e) {
      if (top - l[e] <= kTieTolerance) next[e] = merging ? second : l[e] - h;
    }
    // Keep ties exact once merged so later comparisons are not disturbed by noise.
    if (merging) {
      for (int e = 0; e < 6; ++e)
        if (std::abs(next[e] - second) <= kTieTolerance) next[e] = second;
    }

    try {
      current = Tetrahedron::from_lengths(next);
    } catch (const Error& err) {
      std::ostringstream msg;
      msg << "left L at t=" << t + h << ": " << err.what();
      traj.diagnostics = msg.str();
      traj.reason = Termination::boundary;
      return traj;
    }
    t += h;
    m = max_edge_multiplicity(current.lengths());
    traj.points.push_back({t, current, m});
    if (merging && options.stop_at_first_merge) {
      traj.reason = Termination::merged;
      return traj;
    }
  }
}

namespace {

constexpr std::uint64_t kChunkSize = 1024;

struct ChunkResult {
  std::uint64_t samples = 0;
  std::uint64_t passes = 0;
  std::uint64_t indeterminate = 0;
  double worst = INFINITY;
  std::vector<Witness> witnesses;
  std::vector<std::uint64_t> counters;
};

void keep_best(std::vector<Witness>& ws, Witness w, std::size_t k) {
  if (k == 0) return;
  auto pos = std::upper_bound(ws.begin(), ws.end(), w.margin,
                              [](double m, const Witness& x) { return m < x.margin; });
  if (ws.size() >= k && pos == ws.end()) return;
  ws.insert(pos, std::move(w));
  if (ws.size() > k) ws.pop_back();
}

// Runs `body(rng, count, result)` on every chunk and folds the results in
// chunk order, so the outcome does not depend on scheduling.
template <class Body>
void run_chunks(VerificationReport& report, std::uint64_t n, std::uint64_t seed,
                std::size_t n_counters, const CampaignOptions& options, Body body) {
  const std::uint64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        Rng rng(Rng::derive(seed, c));
        ChunkResult& r = results[c];
        r.counters.assign(n_counters, 0);
        const std::uint64_t count = std::min(kChunkSize, n - c * kChunkSize);
        body(rng, count, r);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<std::uint64_t> counters(n_counters, 0);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (errors[c]) std::rethrow_exception(errors[c]);
    const ChunkResult& r = results[c];
    report.samples += r.samples;
    report.passes += r.passes;
    report.indeterminate += r.indeterminate;
    report.worst_margin = std::min(report.worst_margin, r.worst);
    for (const auto& w : r.witnesses) keep_best(report.witnesses, w, options.witnesses);
    for (std::size_t i = 0; i < n_counters; ++i) counters[i] += r.counters[i];
  }
  for (std::size_t i = 0; i < n_counters; ++i) report.counters[i].second = counters[i];
}

void record(ChunkResult& r, const Tetrahedron& t, double margin, bool pass, std::size_t k) {
  ++r.samples;
  if (pass) ++r.passes;
  r.worst = std::min(r.worst, margin);
  keep_best(r.witnesses, {t, margin}, k);
}

// Draws an interior point of O whose lengths are all >= ell.
Tetrahedron sample_T(Rng& rng, double ell) {
  for (std::uint64_t draw = 0; draw < kDefaultRejectionBudget; ++draw) {
    const DihedralAngles a = sample_O(rng, SampleConstraint::interior());
    EdgeLengths l;
    try {
      l = angles_to_lengths(a);
    } catch (const Error&) {
      continue;
    }
    if (min_length(l) >= ell) return Tetrahedron::from_angles(a);
  }
  std::ostringstream msg;
  msg << "no tetrahedron with all lengths >= " << ell << " after " << kDefaultRejectionBudget
      << " proposals; use a smaller floor or a wider proposal distribution";
  throw Error(ErrorCode::sampling, msg.str());
}

}  // namespace

VerificationReport verify_theorem(double ell, std::uint64_t n, std::uint64_t seed,
                                  const CampaignOptions& options) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("verify_theorem: ell must be positive", ell);
  const Tetrahedron reference = regular_from_length(ell);
  const double ref_volume = reference.volume();
  const double ref_sum = sum(reference.angles());
  const double tol = options.tolerance;

  VerificationReport report;
  report.campaign = "theorem";
  report.regime = ell <= regular_length_l0() ? "theorem" : "conjecture";
  report.seed = seed;
  report.parameters = {{"ell", ell}, {"tol", tol}, {"regular_volume", ref_volume},
                       {"regular_angle_sum", ref_sum}};
  report.counters = {{"area_violations", 0}};

  run_chunks(report, n, seed, 1, options, [&](Rng& rng, std::uint64_t count, ChunkResult& r) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const Tetrahedron t = sample_T(rng, ell);
      const double margin = ref_volume - t.volume();
      record(r, t, margin, margin >= -tol, options.witnesses);
      if (sum(t.angles()) < ref_sum - tol) ++r.counters[0];
    }
  });
  return report;
}

VerificationReport verify_fixed_angle_sum(double theta_sum, std::uint64_t n, std::uint64_t seed,
                                          const CampaignOptions& options) {
  if (!(theta_sum > 0.0 && theta_sum < 2.0 * kPi))
    throw DomainError("verify_fixed_angle_sum: angle sum must lie in (0, 2 pi)", theta_sum);
  const Tetrahedron reference = regular_from_angle(theta_sum / 6.0);
  const double ref_volume = reference.volume();
  const double tol = options.tolerance;

  VerificationReport report;
  report.campaign = "angle-sum";
  report.regime = "proposition";
  report.seed = seed;
  report.parameters = {{"angle_sum", theta_sum}, {"tol", tol}, {"regular_volume", ref_volume}};

  run_chunks(report, n, seed, 0, options, [&](Rng& rng, std::uint64_t count, ChunkResult& r) {
    for (std::uint64_t i = 0; i < count; ++i) {
      DihedralAngles a;
      std::uint64_t draw = 0;
      for (;; ++draw) {
        if (draw >= kDefaultRejectionBudget)
          throw Error(ErrorCode::sampling, "verify_fixed_angle_sum: rejection budget exhausted");
        double total = 0.0;
        for (double& x : a) {
          x = -std::log1p(-rng.uniform());
          total += x;
        }
        for (double& x : a) x *= theta_sum / total;
        if (in_O(a)) break;
      }
      const Tetrahedron t = Tetrahedron::from_angles(a);
      const double margin = ref_volume - t.volume();
      record(r, t, margin, margin >= -tol, options.witnesses);
    }
  });
  return report;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid;
  if (count == 0) return grid;
  if (count == 1) return {lo};
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    grid.push_back(k + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(k) / (count - 1));
  return grid;
}

std::vector<ScanPoint> regular_volume_scan(const std::vector<double>& ell_grid) {
  std::vector<ScanPoint> out;
  out.reserve(ell_grid.size());
  for (double ell : ell_grid) out.push_back({ell, regular_from_length(ell).volume()});
  return out;
}

std::vector<DegenerationPoint> degeneration_path(std::size_t steps) {
  if (steps < 2) throw Error(ErrorCode::invalid_argument, "degeneration_path: need at least 2 steps");
  std::vector<DegenerationPoint> out;
  out.reserve(steps);
  const double eps0 = kPi / 12.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double eps = k + 1 == steps ? 0.0 : eps0 * (1.0 - static_cast<double>(k) / (steps - 1));
    const double far = kPi - 3.0 * eps;
    const DihedralAngles a{{eps, eps, far, eps, eps, far}};
    out.push_back({a, ushijima_volume(a)});
  }
  return out;
}

ConjectureOutcome average_angle_test(const Tetrahedron& t, double ell) {
  const double mean = sum(t.angles()) / 6.0;
  if (!(mean < kPi / 3.0)) throw DomainError("average_angle_test: mean angle >= pi/3", mean);
  const double margin = regular_length(mean) - ell;
  return {margin >= -kCampaignTolerance, std::abs(margin) < kIndeterminateBand, margin};
}

VerificationReport verify_average_angle(std::uint64_t n, std::uint64_t seed,
                                        const CampaignOptions& options) {
  VerificationReport report;
  report.campaign = "prima";
  report.regime = "conjecture";
  report.seed = seed;
  report.parameters = {{"tol", kCampaignTolerance}, {"indeterminate_band", kIndeterminateBand}};
  report.counters = {{"refuted", 0}};

  run_chunks(report, n, seed, 1, options, [&](Rng& rng, std::uint64_t count, ChunkResult& r) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const Tetrahedron t = Tetrahedron::from_angles(sample_O(rng, SampleConstraint::interior()));
      const ConjectureOutcome o = average_angle_test(t, min_length(t.lengths()));
      record(r, t, o.margin, o.holds, options.witnesses);
      if (o.indeterminate) ++r.indeterminate;
      if (!o.holds && !o.indeterminate) ++r.counters[0];
    }
  });
  return report;
}

OrbitHullOutcome orbit_hull_test(const Tetrahedron& t, double ell, std::uint64_t probes,
                                 std::uint64_t seed) {
  if (t.is_regular(kTieTolerance))
    throw Error(ErrorCode::precondition, "orbit_hull_test: tetrahedron is regular");
  if (!(min_length(t.lengths()) >= ell - kTieTolerance))
    throw Error(ErrorCode::precondition, "orbit_hull_test: tetrahedron is not in T_ell");

  const auto& perms = VertexPermutation::all();
  std::array<DihedralAngles, 24> orbit;
  for (std::size_t s = 0; s < perms.size(); ++s) orbit[s] = permute(perms[s], t.angles());

  OrbitHullOutcome out{false, false, 0, std::nullopt, {}};
  Rng rng(seed);
  std::vector<double> w(24);
  for (std::uint64_t p = 0; p < probes; ++p) {
    if (p == 0) {
      std::fill(w.begin(), w.end(), 1.0 / 24.0);
    } else {
      double total = 0.0;
      for (double& x : w) {
        x = -std::log1p(-rng.uniform());
        total += x;
      }
      for (double& x : w) x /= total;
    }
    DihedralAngles a = DihedralAngles::filled(0.0);
    for (std::size_t s = 0; s < 24; ++s)
      for (int e = 0; e < 6; ++e) a[e] += w[s] * orbit[s][e];
    out.probes_used = p + 1;
    if (!in_O(a)) continue;
    EdgeLengths l;
    try {
      l = angles_to_lengths(a);
    } catch (const Error&) {
      continue;
    }
    if (min_length(l) >= ell) {
      out.nonempty = true;
      out.witness = Tetrahedron::from_angles(a);
      out.weights = w;
      return out;
    }
  }
  out.inconclusive = true;
  return out;
}

}  // namespace hypertet

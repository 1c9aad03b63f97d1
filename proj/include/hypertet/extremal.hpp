#pragma once

// Volume maximisation over T_l (tetrahedra with all edge lengths >= l):
// the longest-edge shrinking flow, sampling campaigns, regular-family scans,
// the flat degeneration path and probes of the open conjectures.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypertet/domain.hpp"

namespace hypertet {

/// Two edge lengths closer than this count as tied.
inline constexpr double kTieTolerance = 1e-9;
/// Numerical slack of every campaign inequality.
inline constexpr double kCampaignTolerance = 1e-9;
/// Conjecture margins within this band of zero are reported as indeterminate.
inline constexpr double kIndeterminateBand = 1e-6;

inline constexpr double kDefaultFlowStep = 1e-3;
inline constexpr std::uint64_t kDefaultSamples = 10'000;

enum class Termination { merged, regular, boundary, budget };
const char* to_string(Termination reason);

/// Number of edges whose length is within kTieTolerance of the maximum.
int max_edge_multiplicity(const EdgeLengths& l);

struct TrajectoryPoint {
  double t;
  Tetrahedron tetra;
  int multiplicity;  // number of maximal edges
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  double ell_floor = 0.0;
  double dt = kDefaultFlowStep;
  Termination reason = Termination::budget;
  std::string diagnostics;
};

struct FlowOptions {
  std::uint64_t max_steps = 10'000'000;
  /// Stop as soon as the maximal edges merge with the next length (a single
  /// piecewise-linear segment) instead of running to the regular tetrahedron.
  bool stop_at_first_merge = false;
};

/// Shrinks all maximal edges in lockstep by `dt` per step (clipped so they
/// merge exactly with the second largest length), re-validating membership
/// in L at every step. Ends with `regular` when all six lengths agree within
/// kTieTolerance, `boundary` when a step leaves L, `budget` after
/// max_steps. Throws Error(precondition) unless start is in T_{ell_floor}
/// and dt > 0.
Trajectory deformation_flow(const Tetrahedron& start, double ell_floor, double dt = kDefaultFlowStep,
                            const FlowOptions& options = {});

struct Witness {
  Tetrahedron tetra;
  double margin;
};

struct VerificationReport {
  std::string campaign;
  std::string regime;  // "theorem", "conjecture" or "proposition"
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t passes = 0;
  std::uint64_t indeterminate = 0;
  double worst_margin = INFINITY;
  std::vector<Witness> witnesses;  // smallest margins first
  /// Named inputs and reference values echoed into the serialized report.
  std::vector<std::pair<std::string, double>> parameters;
  /// Secondary counters (for example truncation-area violations).
  std::vector<std::pair<std::string, std::uint64_t>> counters;

  std::uint64_t failures() const { return samples - passes; }
};

struct CampaignOptions {
  unsigned threads = 1;     // 0 = hardware concurrency
  std::size_t witnesses = 5;
  double tolerance = kCampaignTolerance;
};

/// Samples n tetrahedra of T_ell (uniform angles in O, rejected on minimum
/// length) and checks vol <= vol(regular, length ell) + tolerance. Also counts
/// violations of angle sum >= angle sum of the regular one. ell <= l0 is the
/// "theorem" regime, ell > l0 the "conjecture" regime. Margins are
/// vol(regular) - vol. Output does not depend on `threads`.
VerificationReport verify_theorem(double ell, std::uint64_t n, std::uint64_t seed,
                                  const CampaignOptions& options = {});

/// Samples n points of O with fixed angle sum (uniform on the simplex slice,
/// rejected against O) and checks vol <= vol(regular with angles sum/6).
/// Throws DomainError unless 0 < theta_sum < 2 pi.
VerificationReport verify_fixed_angle_sum(double theta_sum, std::uint64_t n, std::uint64_t seed,
                                          const CampaignOptions& options = {});

struct ScanPoint {
  double ell;
  double volume;
};

/// Volume of the regular tetrahedron for each length of the grid.
std::vector<ScanPoint> regular_volume_scan(const std::vector<double>& ell_grid);

/// `count` evenly spaced points from `lo` to `hi` inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

struct DegenerationPoint {
  DihedralAngles angles;
  double volume;
};

/// Walks (e, e, pi - 3e, e, e, pi - 3e) for e from pi/12 down to 0 in
/// `steps` evenly spaced points; the last point is the flat limit
/// (0, 0, pi, 0, 0, pi). Throws Error(invalid_argument) when steps < 2.
std::vector<DegenerationPoint> degeneration_path(std::size_t steps);

struct ConjectureOutcome {
  bool holds;
  bool indeterminate;
  double margin;
};

/// Regular tetrahedron with the average angle of t must still have edge
/// length >= ell. margin = that length - ell.
ConjectureOutcome average_angle_test(const Tetrahedron& t, double ell);

/// Runs average_angle_test over n tetrahedra sampled uniformly in O with
/// ell = their own minimum length.
VerificationReport verify_average_angle(std::uint64_t n, std::uint64_t seed,
                                        const CampaignOptions& options = {});

struct OrbitHullOutcome {
  bool nonempty;
  bool inconclusive;  // probe budget exhausted without a witness
  std::uint64_t probes_used;
  std::optional<Tetrahedron> witness;
  std::vector<double> weights;  // convex weights over the 24 orbit points
};

/// Searches the convex hull of the S4-orbit of t (in angle space, excluding
/// the orbit points) for a tetrahedron of T_ell. The orbit barycenter is tried
/// first, then random convex combinations. Throws Error(precondition) when t
/// is regular or not in T_ell.
OrbitHullOutcome orbit_hull_test(const Tetrahedron& t, double ell, std::uint64_t probes,
                                 std::uint64_t seed);

}  // namespace hypertet

#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"
#include "hypertet/extremal.hpp"
#include "hypertet/volume.hpp"

using namespace hypertet;

namespace {

double min_len(const Tetrahedron& t) { return *std::min_element(t.lengths().begin(), t.lengths().end()); }

// High-volume start with every length >= ell.
Tetrahedron flow_start(Rng& rng, double ell) {
  for (;;) {
    const Tetrahedron t =
        Tetrahedron::from_angles(sample_O(rng, SampleConstraint::volume_floor(regular_volume_l0())));
    if (min_len(t) >= ell && !t.is_regular(1e-6)) return t;
  }
}

}  // namespace

TEST_CASE("max_edge_multiplicity") {
  CHECK(max_edge_multiplicity(EdgeLengths::filled(1.0)) == 6);
  CHECK(max_edge_multiplicity(EdgeLengths{{1, 2, 2 - 1e-10, 0.5, 1, 1}}) == 2);
  CHECK(max_edge_multiplicity(EdgeLengths{{1, 2, 2 - 1e-8, 0.5, 1, 1}}) == 1);
}

TEST_CASE("flow from a regular tetrahedron is a single point") {
  const Trajectory tr = deformation_flow(regular_from_length(0.5), 0.4);
  CHECK(tr.points.size() == 1);
  CHECK(tr.reason == Termination::regular);
}

TEST_CASE("flow preconditions") {
  const Tetrahedron r = regular_from_length(0.5);
  CHECK_THROWS_AS(deformation_flow(r, 0.4, 0.0), Error);
  CHECK_THROWS_AS(deformation_flow(r, 0.6), Error);
}

TEST_CASE("flow invariants from high-volume starts") {
  gen::for_all(61, 10, [](Rng& rng, int) {
    const Tetrahedron start = flow_start(rng, 0.3);
    const Trajectory tr = deformation_flow(start, 0.3);
    REQUIRE(tr.reason == Termination::regular);
    const auto& pts = tr.points;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i].t > pts[i - 1].t);
      CHECK(pts[i].tetra.volume() > pts[i - 1].tetra.volume());
      CHECK(pts[i].multiplicity >= pts[i - 1].multiplicity);
      CHECK(min_len(pts[i].tetra) >= 0.3 - 1e-9);
    }
    const auto& end = pts.back().tetra.lengths();
    CHECK(*std::max_element(end.begin(), end.end()) - *std::min_element(end.begin(), end.end()) < 1e-6);
    CHECK(pts.back().multiplicity == 6);
    // The flow never shortens the minimal edge: the endpoint is the regular
    // tetrahedron on the starting minimum.
    CHECK(end[0] == doctest::Approx(min_len(start)).epsilon(1e-12));
  });
}

TEST_CASE("flow stops at the first merge on request") {
  Rng rng(62);
  const Tetrahedron start = flow_start(rng, 0.3);
  FlowOptions options;
  options.stop_at_first_merge = true;
  const Trajectory tr = deformation_flow(start, 0.3, kDefaultFlowStep, options);
  CHECK(tr.reason == Termination::merged);
  CHECK(tr.points.back().multiplicity > tr.points.front().multiplicity);
  // Within the segment the maximal set is constant.
  for (std::size_t i = 0; i + 1 < tr.points.size(); ++i)
    CHECK(tr.points[i].multiplicity == tr.points.front().multiplicity);
}

TEST_CASE("flow budget") {
  Rng rng(63);
  FlowOptions options;
  options.max_steps = 3;
  const Trajectory tr = deformation_flow(flow_start(rng, 0.3), 0.3, 1e-4, options);
  CHECK(tr.reason == Termination::budget);
  CHECK(tr.points.size() == 4);
}

TEST_CASE("verify_theorem small campaigns") {
  const VerificationReport r = verify_theorem(0.3, 3000, 7);
  CHECK(r.samples == 3000);
  CHECK(r.passes == 3000);
  CHECK(r.regime == "theorem");
  CHECK(r.worst_margin > 0);
  CHECK(r.counters.at(0).second == 0);
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) CHECK(r.witnesses[i - 1].margin <= r.witnesses[i].margin);
  for (const auto& w : r.witnesses) CHECK(min_len(w.tetra) >= 0.3);

  CHECK(verify_theorem(1.5, 200, 7).regime == "conjecture");
  const VerificationReport empty = verify_theorem(0.3, 0, 7);
  CHECK(empty.samples == 0);
  CHECK(empty.witnesses.empty());
  CHECK_THROWS_AS(verify_theorem(0.0, 10, 7), DomainError);
}

TEST_CASE("campaign results do not depend on the thread count") {
  CampaignOptions one, four;
  four.threads = 4;
  const VerificationReport a = verify_theorem(0.5, 5000, 99, one);
  const VerificationReport b = verify_theorem(0.5, 5000, 99, four);
  CHECK(a.passes == b.passes);
  CHECK(a.worst_margin == b.worst_margin);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    CHECK(a.witnesses[i].tetra.angles() == b.witnesses[i].tetra.angles());
  const VerificationReport c = verify_theorem(0.5, 5000, 100, one);
  CHECK(c.worst_margin != a.worst_margin);
}

TEST_CASE("fixed angle sum") {
  for (double sum_ : {kPi / 2, kPi, 4.0}) {
    const VerificationReport r = verify_fixed_angle_sum(sum_, 2000, 3);
    CHECK(r.passes == r.samples);
    CHECK(r.worst_margin >= 0);
    for (const auto& w : r.witnesses) CHECK(sum(w.tetra.angles()) == doctest::Approx(sum_).epsilon(1e-12));
  }
  CHECK(verify_fixed_angle_sum(kPi, 0, 3).samples == 0);
  CHECK_THROWS_AS(verify_fixed_angle_sum(2 * kPi, 10, 3), DomainError);
  CHECK_THROWS_AS(verify_fixed_angle_sum(0.0, 10, 3), DomainError);
}

TEST_CASE("regular volume scan") {
  const auto scan = regular_volume_scan(linear_grid(0.2, 2.0, 10));
  REQUIRE(scan.size() == 10);
  for (std::size_t i = 1; i < scan.size(); ++i) CHECK(scan[i].volume < scan[i - 1].volume);
  CHECK(regular_volume_scan({regular_length_l0()})[0].volume == doctest::Approx(3.226).epsilon(3e-4));
  CHECK(regular_volume_scan({0.7}).size() == 1);
  CHECK(linear_grid(0.05, 3, 100).back() == 3.0);
}

TEST_CASE("degeneration path") {
  const auto two = degeneration_path(2);
  CHECK(two.size() == 2);
  const auto path = degeneration_path(50);
  CHECK(path.front().angles[0] == doctest::Approx(kPi / 12));
  CHECK(path.back().angles == DihedralAngles{{0, 0, kPi, 0, 0, kPi}});
  CHECK(std::abs(path.back().volume) < 1e-9);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    CHECK(path[i].volume > 0);
    CHECK(path[i].volume < path[i - 1].volume);
  }
  CHECK_THROWS_AS(degeneration_path(1), Error);
}

TEST_CASE("average-angle test") {
  const Tetrahedron r = regular_from_length(0.8);
  const ConjectureOutcome o = average_angle_test(r, r.lengths()[0]);
  CHECK(o.holds);
  CHECK(o.indeterminate);
  CHECK(std::abs(o.margin) < 1e-9);

  // A sampled tetrahedron for which the regular tetrahedron with the same
  // angle sum is shorter than its shortest edge.
  const Tetrahedron c = Tetrahedron::from_angles(DihedralAngles{{0.13071226651917356, 0.060428707867874062,
                                                                  0.072119862496415249, 1.5716380791678888,
                                                                  1.4906014041495861, 1.5042434794317414}});
  const ConjectureOutcome bad = average_angle_test(c, min_len(c));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.indeterminate);
  CHECK(bad.margin == doctest::Approx(-0.2394397).epsilon(1e-6));
}

TEST_CASE("average-angle campaign holds for large-volume tetrahedra at l0") {
  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    const Tetrahedron t = Tetrahedron::from_angles(sample_O(rng, SampleConstraint::volume_floor(regular_volume_l0())));
    if (min_len(t) < regular_length_l0()) continue;
    CHECK(average_angle_test(t, regular_length_l0()).holds);
  }
  const VerificationReport r = verify_average_angle(2000, 5);
  CHECK(r.samples == 2000);
  CHECK(r.regime == "conjecture");
}

TEST_CASE("orbit hull test") {
  CHECK_THROWS_AS(orbit_hull_test(regular_from_length(0.5), 0.4, 10, 1), Error);
  // Near-regular input: the barycenter already works.
  const Tetrahedron t = Tetrahedron::from_angles(DihedralAngles{{0.5, 0.51, 0.52, 0.5, 0.51, 0.53}});
  const OrbitHullOutcome o = orbit_hull_test(t, min_len(t), 100, 1);
  CHECK(o.nonempty);
  CHECK(o.probes_used == 1);
  REQUIRE(o.witness.has_value());
  CHECK(min_len(*o.witness) >= min_len(t));
  double total = 0;
  for (double w : o.weights) total += w;
  CHECK(total == doctest::Approx(1.0));

  const OrbitHullOutcome none = orbit_hull_test(t, min_len(t), 0, 1);
  CHECK_FALSE(none.nonempty);
  CHECK(none.inconclusive);
  CHECK_THROWS_AS(orbit_hull_test(t, min_len(t) + 0.1, 10, 1), Error);
}

#pragma once

// Parameter charts of marked truncated tetrahedra: dihedral angles and edge
// lengths (both as 6-vectors in the edge ordering of edges.hpp), the angle
// polytope O, the S4 relabelling action, samplers, and the Tetrahedron record.

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>

#include "hypertet/edges.hpp"
#include "hypertet/random.hpp"

namespace hypertet {

inline constexpr double kPi = std::numbers::pi;

/// Six reals indexed by edge position. `Tag` keeps the two charts apart.
template <class Tag>
struct EdgeVector {
  std::array<double, 6> values{};

  constexpr double& operator[](std::size_t e) { return values[e]; }
  constexpr double operator[](std::size_t e) const { return values[e]; }
  constexpr auto begin() { return values.begin(); }
  constexpr auto end() { return values.end(); }
  constexpr auto begin() const { return values.begin(); }
  constexpr auto end() const { return values.end(); }
  static constexpr std::size_t size() { return 6; }

  static constexpr EdgeVector filled(double x) { return {{x, x, x, x, x, x}}; }

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

struct AngleTag {};
struct LengthTag {};
using DihedralAngles = EdgeVector<AngleTag>;  // radians
using EdgeLengths = EdgeVector<LengthTag>;    // hyperbolic length units

double sum(const DihedralAngles& a);
double max_abs_difference(const DihedralAngles& a, const DihedralAngles& b);
double max_abs_difference(const EdgeLengths& a, const EdgeLengths& b);

/// Membership in O: entries > 0 and the four vertex sums < pi. With
/// strict = false, the closure (>= 0, <= pi) is tested instead.
bool in_O(const DihedralAngles& a, bool strict = true);

/// Signed distance-like margin to the boundary of O: the minimum over the six
/// entries and the four quantities pi - (vertex sum). Positive inside O.
double margin_O(const DihedralAngles& a);

/// Necessary conditions for vol >= vol of the pi/6-regular tetrahedron:
/// angle sum <= pi, every angle < pi/2, adjacent pairs sum to < 7 pi / 12.
bool acute_constraints_hold(const DihedralAngles& a);

/// A bijection of the four vertices (stored 0-based).
class VertexPermutation {
 public:
  VertexPermutation() : image_{0, 1, 2, 3} {}
  /// Throws Error(invalid_argument) unless `image` is a permutation of 0..3.
  explicit VertexPermutation(std::array<int, 4> image);

  static VertexPermutation identity() { return {}; }
  static VertexPermutation transposition(int a, int b);
  /// All 24 elements in lexicographic order of their images.
  static const std::array<VertexPermutation, 24>& all();

  int operator()(int v) const { return image_[v]; }
  const std::array<int, 4>& images() const { return image_; }
  VertexPermutation inverse() const;

  /// Composition (f * g)(v) = f(g(v)).
  friend VertexPermutation operator*(const VertexPermutation& f, const VertexPermutation& g);
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::array<int, 4> image_;
};

/// Relabelling of edge data: entry {i,j} of the result is entry
/// {sigma(i), sigma(j)} of the input. This is a right action:
/// permute(s, permute(t, a)) == permute(t * s, a).
template <class Tag>
EdgeVector<Tag> permute(const VertexPermutation& sigma, const EdgeVector<Tag>& a) {
  EdgeVector<Tag> out;
  for (int e = 0; e < 6; ++e) out[e] = a[edge_index(sigma(kEdges[e].i), sigma(kEdges[e].j))];
  return out;
}

/// Permutation moving edge position `e` to position 0 (edge 12).
VertexPermutation permutation_moving_edge_to_front(int e);

/// Coherent (angles, lengths, volume) triple of a marked truncated tetrahedron.
class Tetrahedron {
 public:
  /// Requires angles strictly inside O.
  static Tetrahedron from_angles(const DihedralAngles& angles);
  /// Requires lengths in L: converts to angles and checks the round trip
  /// within `tol`. The given lengths are stored unchanged.
  static Tetrahedron from_lengths(const EdgeLengths& lengths, double tol = 1e-9);

  const DihedralAngles& angles() const { return angles_; }
  const EdgeLengths& lengths() const { return lengths_; }
  double volume() const { return volume_; }

  /// Entries equal within `tol` (angles chart).
  bool is_regular(double tol = 1e-12) const;

 private:
  Tetrahedron(const DihedralAngles& a, const EdgeLengths& l, double v)
      : angles_(a), lengths_(l), volume_(v) {}

  DihedralAngles angles_;
  EdgeLengths lengths_;
  double volume_;
};

/// Relabelled tetrahedron sigma . t (same volume).
Tetrahedron permute(const VertexPermutation& sigma, const Tetrahedron& t);

/// Regular tetrahedron with all dihedral angles equal to theta in (0, pi/3).
Tetrahedron regular_from_angle(double theta);

/// Regular tetrahedron with all edge lengths equal to ell > 0, by bisection on
/// the strictly increasing map theta -> length.
Tetrahedron regular_from_length(double ell);

/// Edge length of the regular tetrahedron with angles theta (closed form).
double regular_length(double theta);

struct SampleConstraint {
  enum class Kind { interior, acute, volume_floor };
  Kind kind = Kind::interior;
  double floor = 0.0;

  static SampleConstraint interior() { return {Kind::interior, 0.0}; }
  static SampleConstraint acute() { return {Kind::acute, 0.0}; }
  static SampleConstraint volume_floor(double v) { return {Kind::volume_floor, v}; }
};

inline constexpr std::uint64_t kDefaultRejectionBudget = 1'000'000;

/// Rejection sampler on O. Interior draws are uniform on O; acute and
/// volume-floor draws are uniform on the simplex {sum <= pi} restricted to
/// the constraint. Throws Error(sampling) after `budget` rejected draws.
DihedralAngles sample_O(Rng& rng, const SampleConstraint& constraint,
                        std::uint64_t budget = kDefaultRejectionBudget);

}  // namespace hypertet

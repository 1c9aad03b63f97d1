#include "hypertet/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"
#include "hypertet/volume.hpp"

namespace hypertet {

double sum(const DihedralAngles& a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

namespace {

template <class Tag>
double max_abs_diff(const EdgeVector<Tag>& a, const EdgeVector<Tag>& b) {
  double m = 0.0;
  for (int e = 0; e < 6; ++e) m = std::max(m, std::abs(a[e] - b[e]));
  return m;
}

double vertex_sum(const DihedralAngles& a, int v) {
  const auto& es = kVertexEdges[v];
  return a[es[0]] + a[es[1]] + a[es[2]];
}

}  // namespace

double max_abs_difference(const DihedralAngles& a, const DihedralAngles& b) {
  return max_abs_diff(a, b);
}
double max_abs_difference(const EdgeLengths& a, const EdgeLengths& b) {
  return max_abs_diff(a, b);
}

bool in_O(const DihedralAngles& a, bool strict) {
  for (double x : a) {
    if (!std::isfinite(x)) return false;
    if (strict ? !(x > 0.0) : !(x >= 0.0)) return false;
  }
  for (int v = 0; v < 4; ++v) {
    const double s = vertex_sum(a, v);
    if (strict ? !(s < kPi) : !(s <= kPi)) return false;
  }
  return true;
}

double margin_O(const DihedralAngles& a) {
  double m = *std::min_element(a.begin(), a.end());
  for (int v = 0; v < 4; ++v) m = std::min(m, kPi - vertex_sum(a, v));
  return m;
}

bool acute_constraints_hold(const DihedralAngles& a) {
  if (!(sum(a) <= kPi)) return false;
  for (double x : a)
    if (!(x < kPi / 2)) return false;
  for (const auto& es : kVertexEdges)
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        if (!(a[es[p]] + a[es[q]] < 7.0 * kPi / 12.0)) return false;
  return true;
}

VertexPermutation::VertexPermutation(std::array<int, 4> image) : image_(image) {
  std::array<bool, 4> seen{};
  for (int x : image) {
    if (x < 0 || x > 3 || seen[x])
      throw Error(ErrorCode::invalid_argument, "VertexPermutation: not a bijection of {0,1,2,3}");
    seen[x] = true;
  }
}

VertexPermutation VertexPermutation::transposition(int a, int b) {
  std::array<int, 4> image{0, 1, 2, 3};
  std::swap(image.at(a), image.at(b));
  return VertexPermutation(image);
}

const std::array<VertexPermutation, 24>& VertexPermutation::all() {
  static const std::array<VertexPermutation, 24> group = [] {
    std::array<VertexPermutation, 24> out;
    std::array<int, 4> image{0, 1, 2, 3};
    int k = 0;
    do {
      out[k++] = VertexPermutation(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }();
  return group;
}

VertexPermutation VertexPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int v = 0; v < 4; ++v) inv[image_[v]] = v;
  return VertexPermutation(inv);
}

VertexPermutation operator*(const VertexPermutation& f, const VertexPermutation& g) {
  std::array<int, 4> image{};
  for (int v = 0; v < 4; ++v) image[v] = f(g(v));
  return VertexPermutation(image);
}

VertexPermutation permutation_moving_edge_to_front(int e) {
  const Edge front = kEdges.at(e);
  const Edge rest = complementary_pair(e);
  return VertexPermutation({front.i, front.j, rest.i, rest.j});
}

Tetrahedron Tetrahedron::from_angles(const DihedralAngles& angles) {
  if (!in_O(angles, true)) throw NotATetrahedron("Tetrahedron: angles not inside O", -1);
  return Tetrahedron(angles, angles_to_lengths(angles), ushijima_volume(angles));
}

Tetrahedron Tetrahedron::from_lengths(const EdgeLengths& lengths, double tol) {
  for (double x : lengths)
    if (!std::isfinite(x) || !(x > 0.0))
      throw Error(ErrorCode::invalid_argument, "Tetrahedron: lengths must be finite and positive");
  const DihedralAngles angles = lengths_to_angles(lengths);
  if (!in_O(angles, true))
    throw NotATetrahedron("Tetrahedron: lengths map to the boundary of O", -1);
  const double miss = max_abs_difference(angles_to_lengths(angles), lengths);
  if (miss > tol) {
    std::ostringstream os;
    os.precision(3);
    os << "Tetrahedron: length round trip misses by " << miss;
    throw NotATetrahedron(os.str(), -1);
  }
  return Tetrahedron(angles, lengths, ushijima_volume(angles));
}

bool Tetrahedron::is_regular(double tol) const {
  const auto [lo, hi] = std::minmax_element(angles_.begin(), angles_.end());
  return *hi - *lo <= tol;
}

Tetrahedron permute(const VertexPermutation& sigma, const Tetrahedron& t) {
  return Tetrahedron::from_angles(permute(sigma, t.angles()));
}

double regular_length(double theta) {
  const double c = std::cos(theta);
  const double s2 = 1.0 - c * c;
  const double d = 2.0 * c * c * c + 3.0 * c * c - 1.0;
  const double cc = 2.0 * c * c * c + 2.0 * c * c + c * s2;
  if (!(d > 0.0)) throw NotATetrahedron("regular_length: d <= 0", 0);
  return acosh_checked(cc / d);
}

Tetrahedron regular_from_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi / 3.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "regular_from_angle: theta " << theta << " outside (0, pi/3)";
    throw DomainError(os.str(), theta);
  }
  return Tetrahedron::from_angles(DihedralAngles::filled(theta));
}

Tetrahedron regular_from_length(double ell) {
  if (!std::isfinite(ell) || !(ell > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "regular_from_length: length " << ell << " must be positive";
    throw DomainError(os.str(), ell);
  }
  double lo = 1e-9, hi = kPi / 3.0 - 1e-9;
  if (!(regular_length(lo) <= ell && ell <= regular_length(hi)))
    throw AccuracyError("regular_from_length: length outside the bracketed range", 0.5 * (lo + hi));
  int iterations = 0;
  while (hi - lo > 1e-12) {
    if (++iterations > 200) throw AccuracyError("regular_from_length: bisection stalled", 0.5 * (lo + hi));
    const double mid = 0.5 * (lo + hi);
    (regular_length(mid) < ell ? lo : hi) = mid;
  }
  const DihedralAngles angles = DihedralAngles::filled(0.5 * (lo + hi));
  return Tetrahedron::from_angles(angles);
}

namespace {

// Uniform point of the simplex {x >= 0, x_1 + ... + x_n <= scale}.
template <std::size_t N>
std::array<double, N> simplex_point(Rng& rng, double scale) {
  std::array<double, N> u;
  for (auto& x : u) x = rng.uniform();
  std::sort(u.begin(), u.end());
  std::array<double, N> out;
  double prev = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = scale * (u[k] - prev);
    prev = u[k];
  }
  return out;
}

bool accept(const DihedralAngles& a, const SampleConstraint& c) {
  switch (c.kind) {
    case SampleConstraint::Kind::interior:
      return in_O(a, true);
    case SampleConstraint::Kind::acute:
      return in_O(a, true) && acute_constraints_hold(a);
    case SampleConstraint::Kind::volume_floor:
      return in_O(a, true) && acute_constraints_hold(a) && ushijima_volume(a) >= c.floor;
  }
  return false;
}

}  // namespace

DihedralAngles sample_O(Rng& rng, const SampleConstraint& constraint, std::uint64_t budget) {
  for (std::uint64_t draw = 0; draw < budget; ++draw) {
    DihedralAngles a;
    if (constraint.kind == SampleConstraint::Kind::interior) {
      // Vertex-1 triple on its simplex, the opposite triple on the cube.
      const auto first = simplex_point<3>(rng, kPi);
      for (int e = 0; e < 3; ++e) {
        a[e] = first[e];
        a[e + 3] = rng.uniform(0.0, kPi);
      }
    } else {
      const auto p = simplex_point<6>(rng, kPi);
      std::copy(p.begin(), p.end(), a.begin());
    }
    if (accept(a, constraint)) return a;
  }
  throw Error(ErrorCode::sampling, "sample_O: rejection budget exhausted");
}

}  // namespace hypertet

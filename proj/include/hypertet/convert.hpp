#pragma once

// Closed-form conversion between dihedral angles and edge lengths, and the
// operational membership test for the length chart L.

#include <array>

#include "hypertet/domain.hpp"

namespace hypertet {

/// d_i (one per vertex) and c_ij (one per edge) of the angle-to-length formula
/// cosh l_ij = c_ij / sqrt(d_i d_j).
struct AngleCoefficients {
  std::array<double, 4> d;
  std::array<double, 6> c;
};

/// z_i (one per vertex, built from the face opposite it) and w_ij of the
/// length-to-angle formula cos theta_ij = w_ij / sqrt(z_k z_l).
struct LengthCoefficients {
  std::array<double, 4> z;
  std::array<double, 6> w;
};

struct ConversionCoefficients {
  AngleCoefficients angle;
  LengthCoefficients length;
};

AngleCoefficients coefficients_from_angles(const DihedralAngles& a);
LengthCoefficients coefficients_from_lengths(const EdgeLengths& l);

/// Throws NotATetrahedron when some d_i <= 0 (index = vertex) or a cosh
/// argument falls below 1 - kClampEpsilon (index = edge position).
EdgeLengths angles_to_lengths(const DihedralAngles& a);

/// Slack allowed on the closure of O when validating converted angles.
inline constexpr double kClosureSlack = 1e-7;

/// Throws Error(not_in_closure) when some z_k <= 0 or a cosine argument leaves
/// [-1 - kClampEpsilon, 1 + kClampEpsilon]; Error(inconsistency) when the
/// angles land outside the closure of O (by more than kClosureSlack).
DihedralAngles lengths_to_angles(const EdgeLengths& l);

enum class Membership { inside, outside, indeterminate };

/// Round-trip classification of a length vector: `inside` when the angles lie
/// strictly inside O with margin above `tol` and convert back within `tol`;
/// `outside` when conversion fails or the round trip misses by more than
/// 100 tol; `indeterminate` in between.
Membership classify_lengths(const EdgeLengths& l, double tol = 1e-9);

/// True iff classify_lengths(l, tol) == Membership::inside.
bool in_L(const EdgeLengths& l, double tol = 1e-9);

}  // namespace hypertet

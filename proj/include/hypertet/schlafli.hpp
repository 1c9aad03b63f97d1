#pragma once

// Volume gradients in the angle and length charts and the trigonometric
// expressions controlling the sign of dV/dl_12.

#include <array>

#include "hypertet/domain.hpp"

namespace hypertet {

enum class Chart { angles, lengths };

struct GradientVector {
  std::array<double, 6> values{};
  Chart chart = Chart::angles;

  double operator[](std::size_t e) const { return values[e]; }
};

using Matrix6 = std::array<std::array<double, 6>, 6>;

/// dV/dtheta_ij = -l_ij / 2 (closed form).
GradientVector dvol_dangles(const Tetrahedron& t);

/// Step used by the finite-difference Jacobians (4th-order Richardson).
inline constexpr double kJacobianStep = 1e-5;

struct LengthJacobian {
  Matrix6 dtheta_dl;         // entry [r][c] = d theta_r / d l_c
  double inverse_residual;   // max |J * J_l(theta) - I|
  double condition;          // 2-norm condition number of J
};

/// d theta / d l by Richardson-extrapolated central differences of
/// lengths_to_angles (one-sided stencils where a central stencil leaves L),
/// cross-checked against the inverse of jacobian_lengths_of_angles.
/// Throws Error(near_degenerate) when the condition number exceeds 1e10.
LengthJacobian jacobian_angles_of_lengths(const EdgeLengths& l);

/// d l / d theta by the same differencing scheme on angles_to_lengths.
Matrix6 jacobian_lengths_of_angles(const DihedralAngles& a);

/// dV/dl_ij = -1/2 sum_kl l_kl d theta_kl / d l_ij.
GradientVector dvol_dlengths(const Tetrahedron& t);

/// The bracket B whose sign is opposite to dV/dl_12:
///   l12 (cos12 (cos13 cos23 + cos14 cos24) + cos13 cos24 + cos14 cos23)
///   - l13 sin12 sin13 cos23 - l14 sin12 sin14 cos24 + l34 sin12 sin34
///   - l24 sin12 sin24 cos14 - l23 sin12 sin23 cos13.
double edge12_bracket(const Tetrahedron& t);

/// Empirical proportionality factor dV/dl_12 / B (negative in practice).
double edge12_bracket_scale(const Tetrahedron& t);

/// cos12 (cos13 cos23 + cos14 cos24) + cos13 cos24 + cos14 cos23
///   - sin12 (sin(t13 + t23) + sin(t14 + t24)).
/// Non-negative whenever vol >= vol of the pi/6-regular tetrahedron.
double trig_inequality_gap(const DihedralAngles& a);

struct TrigLemmaGaps {
  double cross_vs_half_angle;    // cos13 cos24 + cos14 cos23 - 2 sin(t12/2)
  double cross_vs_constant;      // cos13 cos24 + cos14 cos23 - (1 - sin(pi/12))
  double bracket_vs_half_angle;  // cos12(...) - sin12(...) + 2 sin(t12/2)
};

TrigLemmaGaps trig_lemma_gaps(const DihedralAngles& a);

/// Relabelled copy whose edge 12 (position 0) has maximal length.
Tetrahedron longest_edge_first(const Tetrahedron& t);

}  // namespace hypertet

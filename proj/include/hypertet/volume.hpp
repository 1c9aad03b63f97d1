#pragma once

#include <array>

#include "hypertet/domain.hpp"
#include "hypertet/error.hpp"
#include "hypertet/specfun.hpp"

namespace hypertet {

/// Symmetric 4x4 matrix with unit diagonal and entries -cos(theta).
struct GramMatrix {
  std::array<std::array<double, 4>, 4> m;

  double operator()(int r, int c) const { return m[r][c]; }
  /// Gaussian elimination with partial pivoting.
  double determinant() const;
};

GramMatrix gram(const DihedralAngles& a);

struct UshijimaIntermediates {
  std::array<Complex, 6> phases;  // a..f = exp(i theta) in edge order
  double det_gram;
  Complex denominator;
  Complex z1, z2;
};

UshijimaIntermediates ushijima_intermediates(const DihedralAngles& a);

/// Non-finite intermediate values during volume evaluation.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, const UshijimaIntermediates& diag)
      : Error(ErrorCode::evaluation, what), diagnostics_(diag) {}
  const UshijimaIntermediates& diagnostics() const noexcept { return diagnostics_; }

 private:
  UshijimaIntermediates diagnostics_;
};

/// Volume from dihedral angles on the closure of O (dilogarithm formula).
/// At boundary points where the formula degenerates (vanishing common
/// denominator) the continuous extension is returned, computed as the
/// extrapolated limit along the segment toward the pi/6-regular point.
/// Throws DomainError outside the closure of O.
double ushijima_volume(const DihedralAngles& a);

/// ushijima_volume(lengths_to_angles(l)).
double volume_of_lengths(const EdgeLengths& l);

/// Volume of the pi/6-regular tetrahedron from its closed form
/// 8 L(pi/4) - 3 int_0^{pi/6} arccosh(cos t / (2 cos t - 1)) dt.
double regular_volume_l0();

/// Edge length of the pi/6-regular tetrahedron, arccosh((3 + sqrt 3) / 4).
double regular_length_l0();

/// Total area of the four truncation triangles, 4 pi - 2 sum(theta).
double truncation_area(const DihedralAngles& a);

}  // namespace hypertet

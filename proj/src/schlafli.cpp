#include "hypertet/schlafli.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "finite_difference.hpp"
#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"

namespace hypertet {

namespace {

Eigen::Matrix<double, 6, 6> to_eigen(const Matrix6& m) {
  Eigen::Matrix<double, 6, 6> out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) out(r, c) = m[r][c];
  return out;
}

template <class Point, class F>
Matrix6 jacobian(const F& f, const Point& x) {
  Matrix6 j{};
  for (int c = 0; c < 6; ++c) {
    const auto column = detail::directional_derivative(f, x, c, kJacobianStep);
    for (int r = 0; r < 6; ++r) j[r][c] = column[r];
  }
  return j;
}

}  // namespace

GradientVector dvol_dangles(const Tetrahedron& t) {
  GradientVector g{{}, Chart::angles};
  for (int e = 0; e < 6; ++e) g.values[e] = -0.5 * t.lengths()[e];
  return g;
}

Matrix6 jacobian_lengths_of_angles(const DihedralAngles& a) {
  return jacobian([](const DihedralAngles& x) { return angles_to_lengths(x).values; }, a);
}

LengthJacobian jacobian_angles_of_lengths(const EdgeLengths& l) {
  // Stencils that land on the boundary of O count as having left the chart.
  auto to_angles = [](const EdgeLengths& x) {
    const DihedralAngles a = lengths_to_angles(x);
    if (!in_O(a, true)) throw Error(ErrorCode::not_in_closure, "stencil left L");
    return a.values;
  };
  LengthJacobian out;
  out.dtheta_dl = jacobian(to_angles, l);

  const auto j = to_eigen(out.dtheta_dl);
  const Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(j);
  const auto& sv = svd.singularValues();
  out.condition = sv(5) > 0.0 ? sv(0) / sv(5) : INFINITY;
  if (!(out.condition <= 1e10)) {
    std::ostringstream os;
    os.precision(3);
    os << "jacobian_angles_of_lengths: condition number " << out.condition;
    throw Error(ErrorCode::near_degenerate, os.str());
  }

  const auto inverse = to_eigen(jacobian_lengths_of_angles(lengths_to_angles(l)));
  out.inverse_residual =
      (j * inverse - Eigen::Matrix<double, 6, 6>::Identity()).cwiseAbs().maxCoeff();
  return out;
}

GradientVector dvol_dlengths(const Tetrahedron& t) {
  const LengthJacobian jac = jacobian_angles_of_lengths(t.lengths());
  GradientVector g{{}, Chart::lengths};
  for (int c = 0; c < 6; ++c) {
    double s = 0.0;
    for (int r = 0; r < 6; ++r) s += t.lengths()[r] * jac.dtheta_dl[r][c];
    g.values[c] = -0.5 * s;
  }
  return g;
}

namespace {

struct Trig {
  double c12, c13, c14, c34, c24, c23;
  double s12, s13, s14, s34, s24, s23;

  explicit Trig(const DihedralAngles& a)
      : c12(std::cos(a[0])), c13(std::cos(a[1])), c14(std::cos(a[2])),
        c34(std::cos(a[3])), c24(std::cos(a[4])), c23(std::cos(a[5])),
        s12(std::sin(a[0])), s13(std::sin(a[1])), s14(std::sin(a[2])),
        s34(std::sin(a[3])), s24(std::sin(a[4])), s23(std::sin(a[5])) {}

  double leading() const { return c12 * (c13 * c23 + c14 * c24) + c13 * c24 + c14 * c23; }
  double cross() const { return c13 * c24 + c14 * c23; }
};

double sine_sum(const DihedralAngles& a) {
  return std::sin(a[0]) * (std::sin(a[1] + a[5]) + std::sin(a[2] + a[4]));
}

}  // namespace

double edge12_bracket(const Tetrahedron& t) {
  const Trig g(t.angles());
  const auto& l = t.lengths();
  return l[0] * g.leading() - l[1] * g.s12 * g.s13 * g.c23 - l[2] * g.s12 * g.s14 * g.c24 +
         l[3] * g.s12 * g.s34 - l[4] * g.s12 * g.s24 * g.c14 - l[5] * g.s12 * g.s23 * g.c13;
}

double edge12_bracket_scale(const Tetrahedron& t) { return dvol_dlengths(t)[0] / edge12_bracket(t); }

double trig_inequality_gap(const DihedralAngles& a) { return Trig(a).leading() - sine_sum(a); }

TrigLemmaGaps trig_lemma_gaps(const DihedralAngles& a) {
  const Trig g(a);
  const double half = 2.0 * std::sin(a[0] / 2.0);
  return {
      g.cross() - half,
      g.cross() - (1.0 - std::sin(kPi / 12.0)),
      g.c12 * (g.c13 * g.c23 + g.c14 * g.c24) - sine_sum(a) + half,
  };
}

Tetrahedron longest_edge_first(const Tetrahedron& t) {
  const auto& l = t.lengths();
  const int e = int(std::max_element(l.begin(), l.end()) - l.begin());
  return permute(permutation_moving_edge_to_front(e), t);
}

}  // namespace hypertet

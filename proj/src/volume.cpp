#include "hypertet/volume.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "hypertet/convert.hpp"

namespace hypertet {

double GramMatrix::determinant() const {
  auto a = m;
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

GramMatrix gram(const DihedralAngles& a) {
  // Row/column order of the faces: the off-diagonal (r, c) entry involves
  // the edge listed in kGramEdge.
  static constexpr int kGramEdge[4][4] = {
      {-1, 0, 1, 5},
      {0, -1, 2, 4},
      {1, 2, -1, 3},
      {5, 4, 3, -1},
  };
  GramMatrix g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g.m[r][c] = r == c ? 1.0 : -std::cos(a[kGramEdge[r][c]]);
  return g;
}

UshijimaIntermediates ushijima_intermediates(const DihedralAngles& a) {
  UshijimaIntermediates out{};
  for (int e = 0; e < 6; ++e) out.phases[e] = std::polar(1.0, a[e]);
  const auto& [pa, pb, pc, pd, pe, pf] = out.phases;

  out.det_gram = gram(a).determinant();
  out.denominator = pa * pd + pb * pe + pc * pf + pa * pb * pf + pa * pc * pe + pb * pc * pd +
                    pd * pe * pf + pa * pb * pc * pd * pe * pf;
  const double sines = std::sin(a[0]) * std::sin(a[3]) + std::sin(a[1]) * std::sin(a[4]) +
                       std::sin(a[2]) * std::sin(a[5]);
  // det G < 0 on compact tetrahedra: the principal root is i sqrt|det G|.
  const Complex root = std::sqrt(Complex(out.det_gram, 0.0));
  out.z1 = -2.0 * (sines - root) / out.denominator;
  out.z2 = -2.0 * (sines + root) / out.denominator;
  return out;
}

namespace {

constexpr double kDenominatorGuard = 1e-14;

Complex ushijima_u(Complex z, const std::array<Complex, 6>& p) {
  const auto& [a, b, c, d, e, f] = p;
  return 0.5 * (dilog(z) + dilog(a * b * d * e * z) + dilog(a * c * d * f * z) +
                dilog(b * c * e * f * z) - dilog(-a * b * c * z) - dilog(-a * e * f * z) -
                dilog(-b * d * f * z) - dilog(-c * d * e * z));
}

double raw_volume(const UshijimaIntermediates& k) {
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(k.z1) || !finite(k.z2) || !std::isfinite(k.det_gram))
    throw EvaluationError("ushijima_volume: non-finite intermediates", k);
  const double v = 0.5 * (ushijima_u(k.z1, k.phases) - ushijima_u(k.z2, k.phases)).imag();
  if (!std::isfinite(v)) throw EvaluationError("ushijima_volume: non-finite volume", k);
  return v;
}

double clamp_volume(double v, const UshijimaIntermediates& k) {
  if (v >= 0.0) return v;
  if (v >= -1e-9) return 0.0;
  std::ostringstream os;
  os.precision(17);
  os << "ushijima_volume: negative volume " << v;
  throw EvaluationError(os.str(), k);
}

// Continuous extension at a degenerate boundary point p: limit of V along
// p + s (q - p), q the pi/6-regular point, via Richardson extrapolation in s.
double boundary_limit(const DihedralAngles& p) {
  const DihedralAngles q = DihedralAngles::filled(kPi / 6.0);
  auto along = [&](double s) {
    DihedralAngles x;
    for (int e = 0; e < 6; ++e) x[e] = p[e] + s * (q[e] - p[e]);
    const auto k = ushijima_intermediates(x);
    if (std::abs(k.denominator) < kDenominatorGuard)
      throw EvaluationError("ushijima_volume: degenerate denominator near boundary", k);
    return raw_volume(k);
  };
  // Steps stay above ~1e-3: closer to p the formula loses digits to
  // cancellation (error grows like 1/s^2).
  constexpr double h = 0.05;
  constexpr int levels = 6;
  std::array<double, levels> t;
  for (int k = 0; k < levels; ++k) t[k] = along(h / double(1 << k));
  for (int m = 1; m < levels; ++m) {
    const double w = double(1 << m);
    for (int k = 0; k + m < levels; ++k) t[k] = (w * t[k + 1] - t[k]) / (w - 1.0);
  }
  return t[0];
}

}  // namespace

double ushijima_volume(const DihedralAngles& a) {
  for (double x : a)
    if (!std::isfinite(x)) throw Error(ErrorCode::invalid_argument, "ushijima_volume: non-finite angle");
  const double margin = margin_O(a);
  if (margin < -kClampEpsilon) throw DomainError("ushijima_volume: angles outside the closure of O", margin);

  const auto k = ushijima_intermediates(a);
  if (std::abs(k.denominator) < kDenominatorGuard) {
    if (margin > kClampEpsilon)
      throw EvaluationError("ushijima_volume: vanishing denominator at an interior point", k);
    return clamp_volume(boundary_limit(a), k);
  }
  return clamp_volume(raw_volume(k), k);
}

double volume_of_lengths(const EdgeLengths& l) { return ushijima_volume(lengths_to_angles(l)); }

double regular_length_l0() { return std::acosh((3.0 + std::sqrt(3.0)) / 4.0); }

double regular_volume_l0() {
  static const double value = [] {
    const double integral = integrate(
        [](double t) {
          const double c = std::cos(t);
          return acosh_checked(c / (2.0 * c - 1.0));
        },
        0.0, kPi / 6.0, 1e-13);
    return 8.0 * lobachevsky(kPi / 4.0) - 3.0 * integral;
  }();
  return value;
}

double truncation_area(const DihedralAngles& a) { return 4.0 * kPi - 2.0 * sum(a); }

}  // namespace hypertet

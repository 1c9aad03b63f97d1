#include "hypertet/convert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypertet/error.hpp"
#include "hypertet/specfun.hpp"

namespace hypertet {

namespace {

std::string describe(const char* what, int index, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at index " << index << " (value " << value << ")";
  return os.str();
}

// Shared shape of d_i and z_i: 2xyz + x^2 + y^2 + z^2 - 1.
double triple_form(double x, double y, double z) {
  return 2.0 * x * y * z + x * x + y * y + z * z - 1.0;
}

}  // namespace

AngleCoefficients coefficients_from_angles(const DihedralAngles& a) {
  std::array<double, 6> cs, sn;
  for (int e = 0; e < 6; ++e) {
    cs[e] = std::cos(a[e]);
    sn[e] = std::sin(a[e]);
  }
  auto C = [&](int i, int j) { return cs[edge_index(i, j)]; };

  AngleCoefficients out;
  for (int v = 0; v < 4; ++v) {
    const auto& es = kVertexEdges[v];
    out.d[v] = triple_form(cs[es[0]], cs[es[1]], cs[es[2]]);
  }
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kEdges[e];
    const auto [k, l] = complementary_pair(e);
    out.c[e] = cs[e] * (C(i, l) * C(j, k) + C(i, k) * C(j, l)) + C(i, l) * C(j, l) +
               C(i, k) * C(j, k) + C(k, l) * sn[e] * sn[e];
  }
  return out;
}

LengthCoefficients coefficients_from_lengths(const EdgeLengths& l) {
  std::array<double, 6> ch, sh;
  for (int e = 0; e < 6; ++e) {
    ch[e] = std::cosh(l[e]);
    sh[e] = std::sinh(l[e]);
  }
  auto C = [&](int i, int j) { return ch[edge_index(i, j)]; };

  LengthCoefficients out;
  for (int v = 0; v < 4; ++v) {
    // Face opposite v: its three edges are the ones not at v.
    int f[3], n = 0;
    for (int u = 0; u < 4; ++u)
      if (u != v) f[n++] = u;
    out.z[v] = triple_form(C(f[0], f[1]), C(f[1], f[2]), C(f[2], f[0]));
  }
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kEdges[e];
    const auto [k, m] = complementary_pair(e);
    out.w[e] = ch[e] * (C(i, m) * C(j, k) + C(i, k) * C(j, m)) + C(i, k) * C(i, m) +
               C(j, k) * C(j, m) - sh[e] * sh[e] * C(k, m);
  }
  return out;
}

EdgeLengths angles_to_lengths(const DihedralAngles& a) {
  for (double x : a)
    if (!std::isfinite(x)) throw Error(ErrorCode::invalid_argument, "angles_to_lengths: non-finite angle");
  const AngleCoefficients k = coefficients_from_angles(a);
  for (int v = 0; v < 4; ++v)
    if (!(k.d[v] > 0.0)) throw NotATetrahedron(describe("angles_to_lengths: d <= 0", v, k.d[v]), v);

  EdgeLengths out;
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kEdges[e];
    const double x = k.c[e] / std::sqrt(k.d[i] * k.d[j]);
    if (!(x >= 1.0 - kClampEpsilon))
      throw NotATetrahedron(describe("angles_to_lengths: cosh argument below 1", e, x), e);
    out[e] = acosh_checked(x);
  }
  return out;
}

DihedralAngles lengths_to_angles(const EdgeLengths& l) {
  for (double x : l)
    if (!std::isfinite(x) || x < 0.0)
      throw Error(ErrorCode::invalid_argument, "lengths_to_angles: lengths must be finite and >= 0");
  const LengthCoefficients k = coefficients_from_lengths(l);
  for (int v = 0; v < 4; ++v)
    if (!(k.z[v] > 0.0))
      throw Error(ErrorCode::not_in_closure, describe("lengths_to_angles: z <= 0", v, k.z[v]));

  DihedralAngles out;
  for (int e = 0; e < 6; ++e) {
    const auto [p, q] = complementary_pair(e);
    const double x = k.w[e] / std::sqrt(k.z[p] * k.z[q]);
    if (!(std::abs(x) <= 1.0 + kClampEpsilon))
      throw Error(ErrorCode::not_in_closure,
                  describe("lengths_to_angles: cosine argument outside [-1, 1]", e, x));
    out[e] = std::acos(std::clamp(x, -1.0, 1.0));
  }
  if (margin_O(out) < -kClosureSlack)
    throw Error(ErrorCode::inconsistency, "lengths_to_angles: angles outside the closure of O");
  return out;
}

Membership classify_lengths(const EdgeLengths& l, double tol) {
  for (double x : l)
    if (!std::isfinite(x) || !(x > 0.0)) return Membership::outside;
  DihedralAngles a;
  EdgeLengths back;
  try {
    a = lengths_to_angles(l);
    if (margin_O(a) <= 0.0) return Membership::outside;
    back = angles_to_lengths(a);
  } catch (const Error&) {
    return Membership::outside;
  }
  const double miss = max_abs_difference(back, l);
  if (miss <= tol && margin_O(a) > tol) return Membership::inside;
  if (miss > 100.0 * tol) return Membership::outside;
  return Membership::indeterminate;
}

bool in_L(const EdgeLengths& l, double tol) { return classify_lengths(l, tol) == Membership::inside; }

}  // namespace hypertet

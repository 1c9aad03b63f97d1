#pragma once

#include <array>

#include "hypertet/error.hpp"

namespace hypertet::detail {

// Derivative of a map R^6 -> R^6 along coordinate `coord`, by central
// differences with one Richardson step (O(h^4)). When a central stencil
// throws hypertet::Error (left the chart), a second-order one-sided stencil
// with one Richardson step (O(h^3)) is used instead, forward then backward.
template <class Point, class F>
auto directional_derivative(const F& f, const Point& x, int coord, double h) {
  using Value = decltype(f(x));
  auto at = [&](double dx) {
    Point y = x;
    y[coord] += dx;
    return f(y);
  };
  auto combine = [](const Value& hi, const Value& lo, double w) {
    Value out;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = (w * lo[r] - hi[r]) / (w - 1.0);
    return out;
  };
  auto central = [&](double step) {
    const Value p = at(step), m = at(-step);
    Value d;
    for (std::size_t r = 0; r < d.size(); ++r) d[r] = (p[r] - m[r]) / (2.0 * step);
    return d;
  };
  auto one_sided = [&](double step) {
    const Value f0 = f(x), f1 = at(step), f2 = at(2.0 * step);
    Value d;
    for (std::size_t r = 0; r < d.size(); ++r) d[r] = (-3.0 * f0[r] + 4.0 * f1[r] - f2[r]) / (2.0 * step);
    return d;
  };
  try {
    return combine(central(h), central(h / 2), 4.0);
  } catch (const Error&) {
  }
  try {
    return combine(one_sided(h), one_sided(h / 2), 4.0);
  } catch (const Error&) {
  }
  return combine(one_sided(-h), one_sided(-h / 2), 4.0);
}

}  // namespace hypertet::detail

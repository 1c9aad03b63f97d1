#include "hypertet/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "hypertet/error.hpp"

namespace hypertet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::not_a_tetrahedron: return "not a tetrahedron";
    case ErrorCode::not_in_closure: return "not in closure";
    case ErrorCode::inconsistency: return "inconsistency";
    case ErrorCode::accuracy: return "accuracy";
    case ErrorCode::evaluation: return "evaluation error";
    case ErrorCode::sampling: return "sampling error";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::near_degenerate: return "near degenerate";
  }
  return "unknown";
}

namespace {

// B_{2k} / (2k+1)!, k = 1, 2, ...
constexpr std::array<double, 16> kBernoulliCoefficients = {
    2.77777777777777762e-02,  -2.77777777777777778e-04, 4.72411186696900978e-06,
    -9.18577307466196408e-08, 1.89788699889710005e-09,  -4.06476164514422560e-11,
    8.92169102045645230e-13,  -1.99392958607210744e-14, 4.51898002961991825e-16,
    -1.03565176121812472e-17, 2.39521862102618698e-19,  -5.58178587432500898e-21,
    1.30915075541832125e-22,  -3.08741980242674029e-24, 7.31597565270220293e-26,
    -1.74084565723400088e-27,
};

// sum_{k>=1} z^k / k^2, |z| <= 1/2.
Complex dilog_series(Complex z) {
  Complex power = z;
  Complex sum = z;
  for (int k = 2; k < 80; ++k) {
    power *= z;
    const Complex term = power / double(k * k);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Series in u = -log(1 - z); converges for |u| < 2 pi, used on |z| <= 1,
// Re z <= 1/2 where |u| stays below ~1.05.
Complex dilog_bernoulli(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex power = u;
  Complex sum = u - 0.25 * u2;
  for (double c : kBernoulliCoefficients) {
    power *= u2;
    const Complex term = c * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

Complex dilog_unit_disk(Complex z) {
  if (std::norm(z) <= 0.25) return dilog_series(z);
  if (z.real() > 0.5) {
    if (z == Complex(1.0, 0.0)) return kZeta2;
    // Reflection: Li2(z) + Li2(1-z) = pi^2/6 - log z log(1-z).
    const Complex w = 1.0 - z;
    const Complex reflected = std::norm(w) <= 0.25 ? dilog_series(w) : dilog_bernoulli(w);
    return kZeta2 - std::log(z) * std::log(w) - reflected;
  }
  return dilog_bernoulli(z);
}

}  // namespace

Complex dilog(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorCode::invalid_argument, "dilog: non-finite argument");
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);  // drop a negative zero
  if (std::norm(z) <= 1.0) return dilog_unit_disk(z);
  // Inversion: Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z) / 2.
  const Complex l = std::log(-z);
  return -kZeta2 - 0.5 * l * l - dilog_unit_disk(1.0 / z);
}

double lobachevsky(double theta) {
  if (!std::isfinite(theta))
    throw Error(ErrorCode::invalid_argument, "lobachevsky: non-finite argument");
  const double r = theta - std::numbers::pi * std::nearbyint(theta / std::numbers::pi);
  if (r == 0.0) return 0.0;
  return 0.5 * dilog(std::polar(1.0, 2.0 * r)).imag();
}

double acosh_checked(double x, double eps) {
  if (!std::isfinite(x))
    throw Error(ErrorCode::invalid_argument, "acosh_checked: non-finite argument");
  if (x < 1.0 - eps) {
    std::ostringstream os;
    os.precision(17);
    os << "acosh_checked: argument " << x << " below 1";
    throw DomainError(os.str(), x);
  }
  return x <= 1.0 ? 0.0 : std::acosh(x);
}

namespace {

// Gauss-Kronrod 15-point nodes (non-negative half) and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y))
      throw Error(ErrorCode::invalid_argument, "integrate: integrand is not finite");
    return y;
  };
  const double fc = eval(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = eval(center - dx) + eval(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_subdivisions) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b)
    throw Error(ErrorCode::invalid_argument, "integrate: need finite a <= b");
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "integrate: tol must be positive");
  if (a == b) return 0.0;

  std::vector<Panel> panels{gauss_kronrod(f, a, b)};
  auto total = [&](double Panel::*field) {
    double s = 0.0;
    for (const auto& p : panels) s += p.*field;
    return s;
  };
  for (int split = 0;; ++split) {
    if (total(&Panel::error) <= tol) break;
    if (split == max_subdivisions) {
      std::ostringstream os;
      os.precision(3);
      os << "integrate: estimated error " << total(&Panel::error) << " above tol after "
         << max_subdivisions << " subdivisions";
      throw AccuracyError(os.str(), total(&Panel::value));
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const Panel p = *worst;
    const double mid = 0.5 * (p.a + p.b);
    *worst = gauss_kronrod(f, p.a, mid);
    panels.push_back(gauss_kronrod(f, mid, p.b));
  }
  return total(&Panel::value);
}

}  // namespace hypertet

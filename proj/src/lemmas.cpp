#include "trigroots/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "trigroots/errors.hpp"

namespace trigroots {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0;
  return w;
}

// arg of (e^{is} - z) / (e^{it} - z), the argument change from t to s.
double arg_step(Complex z, double t, double s) {
  const Complex a = std::polar(1.0, t) - z;
  const Complex b = std::polar(1.0, s) - z;
  return std::arg(b / a);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 < f2 ? x2 : x1;
}

double closed_form(double r, double s) {
  const double h = std::sin(0.5 * s);
  const double num = (1.0 - r) + 2.0 * r * h * h;
  const double den = (1.0 - r) * (1.0 - r) + 4.0 * r * h * h;
  return num / den;
}

}  // namespace

bool Arc::contains(double theta) const {
  if (length >= kTwoPi) return true;
  return wrap(theta - start) <= length;
}

double arg_derivative(double r, double theta, double t) {
  const double h = std::sin(0.5 * (t - theta));
  const double den = (1.0 - r) * (1.0 - r) + 4.0 * r * h * h;
  if (den == 0.0) throw SingularInputError("arg_derivative: e^{it} coincides with z");
  return ((1.0 - r) + 2.0 * r * h * h) / den;
}

double unwrapped_arg_change(Complex z, double t0, double t1) {
  if (t1 < t0) return -unwrapped_arg_change(z, t1, t0);
  double total = 0;
  double t = t0;
  while (t < t1) {
    const double d = std::abs(std::polar(1.0, t) - z);
    if (d == 0.0) throw SingularInputError("unwrapped_arg_change: root on the path");
    const double step = std::min(0.02, 0.25 * d);
    const double next = std::min(t1, t + step);
    total += arg_step(z, t, next);
    t = next;
  }
  return total;
}

QuadResult integrate_arg_derivative(double r, double theta, double a, double b, double abs_tol) {
  std::vector<double> bp{a, b};
  const double scale = std::max(std::abs(r - 1.0), 1e-300);
  const double k0 = std::ceil((a - theta) / kTwoPi - 1.0);
  for (double k = k0; theta + k * kTwoPi <= b + 1.0; k += 1.0) {
    const double c = theta + k * kTwoPi;
    bp.push_back(c);
    for (double d = scale; d < b - a; d *= 4.0) {
      bp.push_back(c - d);
      bp.push_back(c + d);
    }
  }
  std::erase_if(bp, [&](double x) { return x < a || x > b; });
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  QuadOptions qo;
  qo.abs_tol = abs_tol;
  qo.max_panels = 20000;
  qo.min_width = 0;
  return integrate_adaptive([&](double t) { return closed_form(r, t - theta); }, bp, qo);
}

LemmaCheckResult check_full_circle(double r, double theta, double tol) {
  if (!(r >= 0) || r == 1.0) throw ParameterError("check_full_circle: need r >= 0, r != 1");
  LemmaCheckResult res;
  res.name = "full_circle";
  res.tolerance = tol;
  const QuadResult q = integrate_arg_derivative(r, theta, theta - kPi, theta + kPi, 1e-11);
  const double expected = r > 1.0 ? 0.0 : kTwoPi;
  res.value = q.value;
  res.max_violation = std::abs(q.value - expected);
  res.samples = 1;
  res.worst_case = {{"r", r}, {"theta", theta}};
  res.pass = q.converged && q.error < 1e-9 && res.max_violation <= tol;
  return res;
}

DropIntegral drop_integral(double r) {
  const double e = r - 1.0;
  QuadOptions qo;
  qo.abs_tol = 1e-11;
  qo.min_width = 0;
  const double bp[] = {-e, -0.5 * e, 0.0, 0.5 * e, e};
  const QuadResult q = integrate_adaptive([&](double t) { return closed_form(r, t); }, bp, qo);
  return {q.value, q.error};
}

LemmaCheckResult check_drop(double r) {
  if (!(r > 1.0 && r <= 1.1)) throw ParameterError("check_drop: need 1 < r <= 1.1");
  const DropIntegral d = drop_integral(r);
  LemmaCheckResult res;
  res.name = "drop";
  res.tolerance = 0;
  res.value = d.value;
  res.max_violation = d.value + 1.5;
  res.samples = 1;
  res.worst_case = {{"r", r}};
  res.pass = d.error < 1e-9 && res.max_violation <= 0;
  return res;
}

LemmaCheckResult check_drop_sweep(int count) {
  if (count < 2) throw ParameterError("check_drop_sweep: need count >= 2");
  LemmaCheckResult res;
  res.name = "drop_sweep";
  res.tolerance = 0;
  res.max_violation = -std::numeric_limits<double>::infinity();
  bool quad_ok = true;
  double prev = 0, prev_err = 0;
  for (int i = 1; i <= count; ++i) {
    const double r = 1.0 + 0.1 * i / count;
    const DropIntegral d = drop_integral(r);
    quad_ok = quad_ok && d.error < 1e-9;
    auto note = [&](double v, const char* what) {
      if (v > res.max_violation) {
        res.max_violation = v;
        res.worst_case = {{"r", r}, {what, 1.0}};
      }
    };
    note(d.value + 1.5, "bound");
    if (i > 1) note(prev - d.value - 2.0 * std::max({prev_err, d.error, 1e-11}), "monotone");
    if (i == count) {
      res.value = d.value;
      note(d.value + 1.52, "endpoint");
    }
    prev = d.value;
    prev_err = d.error;
  }
  res.samples = count;
  res.pass = quad_ok && res.max_violation <= 0;
  return res;
}

double pointwise_maximizer(double r, int grid) {
  int best = 0;
  double fbest = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double v = closed_form(r, kTwoPi * k / grid);
    if (v > fbest) {
      fbest = v;
      best = k;
    }
  }
  const double lo = kTwoPi * (best - 1) / grid, hi = kTwoPi * (best + 1) / grid;
  return wrap(golden_max([&](double s) { return closed_form(r, s); }, lo, hi));
}

LemmaCheckResult check_pointwise(double r, int grid) {
  if (!(r > 1.0)) throw ParameterError("check_pointwise: need r > 1");
  if (grid < 4) throw ParameterError("check_pointwise: grid too small");
  const double s = pointwise_maximizer(r, grid);
  const double fmax = closed_form(r, s);
  LemmaCheckResult res;
  res.name = "pointwise";
  res.tolerance = 1e-12;
  res.value = fmax;
  res.max_violation = fmax - 1.0 / (1.0 + r);
  res.samples = grid;
  res.worst_case = {{"r", r}, {"t_minus_theta", s}};
  res.pass = res.max_violation <= res.tolerance && fmax <= 0.5 + res.tolerance;
  return res;
}

LemmaCheckResult check_arc_bounds(double r, const std::vector<Arc>& arcs, double theta) {
  if (!(r >= 0) || r == 1.0) throw ParameterError("check_arc_bounds: need r >= 0, r != 1");
  LemmaCheckResult res;
  res.name = r > 1.0 ? "arc_bound_outside" : "arc_bound_inside";
  res.tolerance = 1e-8;
  res.max_violation = -std::numeric_limits<double>::infinity();
  bool quad_ok = true;
  for (const Arc& J : arcs) {
    const QuadResult q = integrate_arg_derivative(r, theta, J.start, J.end(), 1e-11);
    quad_ok = quad_ok && q.converged && q.error < 1e-9;
    const double v = r > 1.0 ? q.value - kPi : std::max(-q.value, q.value - kTwoPi);
    if (v > res.max_violation) {
      res.max_violation = v;
      res.value = q.value;
      res.worst_case = {{"r", r}, {"start", J.start}, {"length", J.length}};
    }
  }
  res.samples = static_cast<long>(arcs.size());
  res.pass = quad_ok && res.max_violation <= res.tolerance;
  return res;
}

std::vector<Arc> random_arcs(unsigned long long seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<Arc> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double a = u(rng);
    out.push_back({a, u(rng)});
  }
  return out;
}

LemmaCheckResult check_finite_difference(unsigned long long seed, int samples, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  const double inside = 0.99, outside = 10.0 - 1.01;
  const double h = 1e-5;
  LemmaCheckResult res;
  res.name = "finite_difference";
  res.tolerance = tol;
  for (int i = 0; i < samples; ++i) {
    const double w = u01(rng) * (inside + outside);
    const double r = w < inside ? w : 1.01 + (w - inside);
    const double theta = ang(rng), t = ang(rng);
    const Complex z = std::polar(r, theta);
    const double fd = (-arg_step(z, t, t + 2 * h) + 8 * arg_step(z, t, t + h) -
                       8 * arg_step(z, t, t - h) + arg_step(z, t, t - 2 * h)) /
                      (12 * h);
    const double err = std::abs(fd - arg_derivative(r, theta, t));
    if (err > res.max_violation || i == 0) {
      res.max_violation = err;
      res.worst_case = {{"r", r}, {"theta", theta}, {"t", t}};
    }
  }
  res.samples = samples;
  res.pass = res.max_violation < tol;
  return res;
}

}  // namespace trigroots

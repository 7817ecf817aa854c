#include "trigroots/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace trigroots {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts) {
  const double bp[2] = {a, b};
  return integrate_adaptive(f, bp, opts);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints, const QuadOptions& opts) {
  QuadResult out;
  if (breakpoints.size() < 2) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> heap;
  double total = 0, err = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    Panel p = gk15(f, breakpoints[i], breakpoints[i + 1]);
    out.evals += 15;
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  // Panels that cannot be split any further are parked here.
  std::vector<Panel> frozen;
  int panels = static_cast<int>(heap.size());
  while (err > opts.abs_tol && !heap.empty() && panels < opts.max_panels) {
    Panel worst = heap.top();
    heap.pop();
    if (std::abs(worst.b - worst.a) <= opts.min_width) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    out.evals += 30;
    ++panels;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the panels to avoid drift from the running updates.
  total = 0;
  err = 0;
  while (!heap.empty()) {
    frozen.push_back(heap.top());
    heap.pop();
  }
  std::sort(frozen.begin(), frozen.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : frozen) {
    total += p.value;
    err += p.error;
  }
  out.value = total;
  out.error = err;
  out.converged = err <= opts.abs_tol;
  return out;
}

}  // namespace trigroots

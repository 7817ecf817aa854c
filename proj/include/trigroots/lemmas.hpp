#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigroots/polynomial.hpp"
#include "trigroots/quadrature.hpp"

namespace trigroots {

/// Closed circular arc {start + s : 0 <= s <= length}, length in [0, 2pi].
struct Arc {
  double start = 0;
  double length = 0;

  double end() const { return start + length; }
  bool contains(double theta) const;
};

// d/dt arg(e^{it} - z) for z = r e^{i theta}:
//   (1 - r cos(t - theta)) / (1 - 2 r cos(t - theta) + r^2).
// Throws SingularInputError when the denominator vanishes (r = 1, t = theta).
double arg_derivative(double r, double theta, double t);

// Net change of arg(e^{it} - z) over [t0, t1] from the principal branch,
// summed in steps that never turn by more than a fraction of pi.
double unwrapped_arg_change(Complex z, double t0, double t1);

// Adaptive quadrature of the closed form over [a, b], with breakpoints graded
// toward t = theta at the scale |r - 1|.
QuadResult integrate_arg_derivative(double r, double theta, double a, double b, double abs_tol = 1e-11);

struct LemmaCheckResult {
  std::string name;
  // Largest signed amount by which the checked quantity exceeds its bound;
  // negative values are slack.
  double max_violation = 0;
  double tolerance = 0;
  long samples = 0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> worst_case;
  // Measured value at the worst case, when meaningful.
  double value = 0;
};

// int_0^{2pi} of the closed form: 0 for r > 1, 2pi for r < 1.
LemmaCheckResult check_full_circle(double r, double theta, double tol = 1e-8);

struct DropIntegral {
  double value = 0;
  double error = 0;
};

// int_{-(r-1)}^{r-1} of the closed form at theta = 0 (theta-invariant).
DropIntegral drop_integral(double r);

// drop_integral(r) <= -3/2 for one r in (1, 1.1]; ParameterError otherwise.
LemmaCheckResult check_drop(double r);

// Grid r_i = 1 + 0.1 i / count, i = 1..count: bound -3/2 at every point,
// monotone nondecreasing within twice the quadrature tolerance, and
// <= -1.52 at r = 1.1.
LemmaCheckResult check_drop_sweep(int count = 1000);

// max over t - theta of the closed form <= 1/(1+r) + 1e-12 (and <= 1/2).
// The maximizer is located on a 1e5 grid and refined by golden section.
LemmaCheckResult check_pointwise(double r, int grid = 100000);
// Location of the maximizer found by check_pointwise, in [0, 2pi).
double pointwise_maximizer(double r, int grid = 100000);

// For r > 1: int_J <= pi. For r < 1: 0 <= int_J <= 2pi. Tolerance 1e-8.
LemmaCheckResult check_arc_bounds(double r, const std::vector<Arc>& arcs, double theta = 0.0);

// Seeded arcs with uniform start and uniform length in [0, 2pi].
std::vector<Arc> random_arcs(unsigned long long seed, int count);

// Closed form against a fourth-order centered difference (step 1e-5) of
// the unwrapped argument, r in [0, 0.99] U [1.01, 10].
LemmaCheckResult check_finite_difference(unsigned long long seed, int samples = 10000, double tol = 1e-5);

}  // namespace trigroots

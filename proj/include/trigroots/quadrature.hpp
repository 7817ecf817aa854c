#pragma once

#include <functional>
#include <span>

namespace trigroots {

struct QuadResult {
  double value = 0;
  double error = 0;  // sum of per-panel |K15 - G7|
  long evals = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  int max_panels = 4000;
  // Panels narrower than this are never split further.
  double min_width = 1e-14;
};

// Globally adaptive Gauss-Kronrod (7/15): repeatedly bisects the panel with
// the largest error estimate until the summed estimate drops below abs_tol.
// Integrand singularities at panel endpoints are fine, nodes are interior.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts = {});

// Same, starting from a caller-supplied partition (sorted breakpoints,
// first = a, last = b).
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints, const QuadOptions& opts = {});

}  // namespace trigroots

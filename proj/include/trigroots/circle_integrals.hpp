#pragma once

#include "trigroots/polynomial.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

struct CircleIntegralOptions {
  // Converged when error_estimate <= rel_target * (1 + |value|).
  double rel_target = 1e-6;
  int nodes_per_degree = 64;
  long max_nodes = 1L << 21;
  // A node is treated as close to a zero of p when |p| < near_zero_rel * max|p|
  // or when the Newton distance |p/p'| is under near_zero_spacing node spacings.
  double near_zero_rel = 1e-6;
  double near_zero_spacing = 4.0;
};

/// One log-modulus integral over the unit circle.
///
/// The bulk is a uniform trapezoid sum, which is spectrally accurate for the
/// smooth periodic part. Windows around zeros of p near the circle (log
/// singularities) and around kinks of log+ are cut out, integrated by
/// adaptive Gauss-Kronrod on a mesh graded toward the singular point, and
/// stitched back with Euler-Maclaurin corrections at the window edges.
struct CircleIntegralResult {
  double value = 0;
  // |value - value_half| plus the window quadrature error estimates.
  double error_estimate = 0;
  // Same windows, every other trapezoid node.
  double value_half = 0;
  long nodes_used = 0;
  int refined_windows = 0;
  // Windows opened around suspected zeros of p on or near the circle.
  int near_circle_points = 0;
  bool converged = false;
};

// int_0^{2pi} log|p(e^{it})| dt, no normalization.
// Throws DegenerateInputError for the zero polynomial.
CircleIntegralResult log_abs_integral(const Polynomial& p, const CircleIntegralOptions& opts = {});

// h(p) = (1/2pi) int_0^{2pi} log+(|p(e^{it})| / sqrt|a_0|) dt.
// Throws DegenerateInputError when a_0 = 0.
CircleIntegralResult h_measure(const Polynomial& p, const CircleIntegralOptions& opts = {});

// 2pi sum over roots with |z_k| > 1 of log|z_k|.
double jensen_sum(const RootSet& rs);

struct JensenCheck {
  double integral = 0;   // log_abs_integral(p)
  double root_sum = 0;   // 2pi log|a_n| + jensen_sum(rs)
  double residual = 0;   // |integral - root_sum|
  double error_estimate = 0;
  bool converged = false;
  // Some root lies within 1e-3 of the circle; the accuracy contract then
  // rests on the quadrature error estimate alone.
  bool near_circle = false;
  // residual <= 1e-6 (1 + |integral|)
  bool within_contract = false;
};

// For |a_n| = 1 the 2pi log|a_n| term vanishes and root_sum is jensen_sum.
JensenCheck jensen_residual(const Polynomial& p, const RootSet& rs, const CircleIntegralOptions& opts = {});
// Same, reusing an already computed log_abs_integral(p).
JensenCheck jensen_residual(const CircleIntegralResult& integral, const Polynomial& p, const RootSet& rs);

}  // namespace trigroots

#pragma once

#include <string>
#include <vector>

#include "trigroots/polynomial.hpp"

namespace trigroots {

enum class TrigRootMethod { sampling, self_inversive };

std::string to_string(TrigRootMethod m);

struct TrigZero {
  double theta = 0;         // in [0, 2pi)
  bool tangential = false;  // q touches zero without changing sign
};

/// Distinct real zeros of q(theta) on [0, 2pi).
struct TrigRootReport {
  int X = 0;
  int sign_changes = 0;
  int tangential = 0;
  // Near-zero local minima of |q| that missed the tangential threshold by
  // less than three orders of magnitude. Reported, never counted.
  int borderline = 0;
  std::vector<TrigZero> zeros;  // sorted by theta
  TrigRootMethod method = TrigRootMethod::sampling;
  int grid = 0;
  double threshold = 0;

  std::vector<double> locations() const;
};

struct TrigCountOptions {
  int grid = 0;                 // 0 means 16 n
  double tangential_rel = 1e-9; // relative to max grid |q|
  double theta_tol = 1e-12;
  double merge_tol = 1e-9;
};

// Samples q on a uniform grid, brackets sign changes and refines them by
// bisection, then looks for tangential zeros at local minima of |q|.
// Throws ParameterError when the grid is coarser than 8n and
// DegenerateInputError for degree 0 or q identically zero.
TrigRootReport count_real_roots(const TrigView& v, const TrigCountOptions& opts = {});
TrigRootReport count_real_roots(const TrigView& v, int grid);

// R(z) = sum_k a_k z^(n+k) + sum_k conj(a_k) z^(n-k), degree 2n, so that
// R(e^{it}) = 2 e^{int} Re p(e^{it}). Coefficients satisfy c_j = conj(c_{2n-j}).
Polynomial self_inversive_lift(const Polynomial& p);

struct AlgebraicCountOptions {
  double unit_tol = 1e-6;     // | |z| - 1 | below this counts as on the circle
  double cluster_tol = 1e-6;  // unit roots closer than this in angle are one zero
};

// Zeros of q from the unit-circle roots of the self-inversive lift; a
// cluster of even size (a double root of R) is a tangential zero.
TrigRootReport count_real_roots_algebraic(const TrigView& v, const AlgebraicCountOptions& opts = {});

// Solutions of arg p(e^{it}) = x, via the rotated view with phase pi/2 - x.
// The rotated real part also vanishes where arg p = x + pi; both are counted,
// exactly as for the real-part hypothesis.
TrigRootReport count_level_crossings(const Polynomial& p, double x, const TrigCountOptions& opts = {});

}  // namespace trigroots

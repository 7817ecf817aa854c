#pragma once

#include <string>
#include <vector>

#include "trigroots/polynomial.hpp"

namespace trigroots {

/// All n roots of a polynomial, with multiplicity, plus per-root residuals
/// |p(z_k)| / max_k |a_k|.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  int iterations = 0;
  bool certified = false;
  double tolerance = 1e-10;
  // Empty when certified; otherwise says why not.
  std::string diagnostic;
};

struct RootOptions {
  double tol = 1e-10;
  int max_sweeps = 500;
  // Fixed so repeated runs give bit-identical roots.
  unsigned long long seed = 0x5eed;
};

// Ehrlich-Aberth simultaneous iteration. Never throws on non-convergence:
// the result comes back uncertified with a diagnostic instead.
// Throws DegenerateInputError for degree < 1.
RootSet find_roots(const Polynomial& p, const RootOptions& opts);
RootSet find_roots(const Polynomial& p, double tol = 1e-10);

// Eigenvalues of the balanced companion matrix via shifted Hessenberg QR.
// Slow O(n^3) test oracle; refuses degree > 500.
RootSet companion_oracle(const Polynomial& p);

// |p(z)| / max|a_k| for |z| <= 1. For |z| > 1 the same ratio for the reversed
// polynomial at 1/z, i.e. |z^-n p(z)| / max|a_k|, so high degrees do not
// overflow.
double scaled_residual(const Polynomial& p, Complex z);

// Cauchy upper bound: the positive root of |a_n| x^n - sum_{k<n} |a_k| x^k.
double cauchy_root_bound(const Polynomial& p);

// Greedy minimal-distance matching of two root multisets; returns the
// largest matched distance (infinity when sizes differ).
double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

// max over a of min over b |a - b|, symmetrized.
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Coefficients of a_n prod (z - z_k), via values on the unit circle.
Polynomial reconstruct(const std::vector<Complex>& roots, Complex leading);

}  // namespace trigroots

namespace trigroots {

/// Root arguments mapped to [0, 2pi), sorted ascending. Roots exactly at
/// the origin have no argument; they are left out of `angles` and counted in
/// `origin_count`, but still count toward `n_total`.
struct AngularSample {
  std::vector<double> angles;
  int n_total = 0;
  int origin_count = 0;

  int n_angular() const { return static_cast<int>(angles.size()); }
};

AngularSample angular_sample(const RootSet& rs);
AngularSample angular_sample(const std::vector<Complex>& roots);

// arg z in [0, 2pi).
double wrapped_arg(Complex z);

}  // namespace trigroots

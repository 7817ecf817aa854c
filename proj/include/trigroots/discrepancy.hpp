#pragma once

#include <utility>
#include <vector>

#include "trigroots/circle_integrals.hpp"
#include "trigroots/lemmas.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

// sup over all arcs J of |#{arg z_k in J} / n_total - |J| / 2pi|, exact.
// Throws DegenerateInputError for an empty sample.
double angular_discrepancy(const AngularSample& s);

// (8/pi) sqrt(h / n).
double et_bound_from_h(double h, int n);
// Uses h_measure(p) and n = number of roots. Throws DegenerateInputError
// for degree 0 or a_0 = 0.
double et_bound(const Polynomial& p, const RootSet& rs, const CircleIntegralOptions& opts = {});

enum class IntervalConvention { half_open, closed };

struct ClusterInterval {
  double start = 0;  // in [0, 2pi)
  double end = 0;    // start + length, may exceed 2pi
  int count = 0;
};

/// Dense-interval packing at one scale.
struct ClusterReport {
  double alpha = 0;
  double interval_length = 0;  // n^-alpha
  double factor = 5;
  int threshold_count = 0;     // ceil(factor |J| n / 2pi)
  // Maximum number of pairwise disjoint intervals of length n^-alpha that
  // each hold at least threshold_count root arguments. Intervals are
  // (a, a + len]; I_closed repeats the count for closed [a, a + len].
  int I = 0;
  int I_closed = 0;
  std::vector<ClusterInterval> chosen_intervals;
  int cuts_examined = 0;

  double bound_x_term = 0;    // n^(alpha-1) X
  double bound_log_term = 0;  // n^(2 alpha - 1) int log|p|
  bool has_ratio = false;
  double empirical_ratio = 0; // I / (bound_x_term + bound_log_term)
};

// Exact maximum packing: for each qualifying window (t - len, t] ending at
// an angle the circle is cut at its left end and swept greedily by earliest
// right endpoint. A gap of at least 2 len allows a single cut.
// Throws ParameterError for alpha outside [0,1], factor <= 1 or n_total < 2,
// DegenerateInputError when n^-alpha >= 2pi.
ClusterReport clustering_count(const AngularSample& s, double alpha, double factor = 5.0);

// Maximum packing for one convention, exposed for testing.
int max_packing(const AngularSample& s, double length, int threshold, IntervalConvention conv,
                std::vector<ClusterInterval>* chosen = nullptr, int* cuts = nullptr);

// (n^(alpha-1) X, n^(2alpha-1) log_integral); no implied constant.
std::pair<double, double> theorem_bound(int X, double log_integral, int n, double alpha);

// Fills the bound terms and empirical_ratio of a report.
void attach_bound(ClusterReport& report, int X, double log_integral, int n);

enum class CaseLabel { a, b, c, none };
char to_char(CaseLabel c);

struct CensusOptions {
  double largeness = 0.01;  // "large" means >= largeness * n^(1-alpha)
  double factor = 5.0;
  // Moduli within this of 1 count as on the circle (A3 resp. B1).
  double circle_tol = 1e-12;
};

struct RegionCensus {
  Arc J;
  int A1 = 0, A2 = 0, A3 = 0, B1 = 0, B2 = 0;
  int n_total = 0;
  bool dense = false;
  CaseLabel case_label = CaseLabel::none;
  double largeness = 0.01;
};

// A = roots with argument in J (origin roots never), split at moduli
// 1 + n^-alpha and 1; B = the rest, split at modulus 1.
RegionCensus region_census(const RootSet& rs, const Arc& J, double alpha, const CensusOptions& opts = {});

// int_J d/dt arg p(e^{it}) dt as a sum of per-root argument changes.
// Throws SingularInputError when a root lies within 1e-8 of the arc.
double winding_integral(const RootSet& rs, const Arc& J);
double root_winding(Complex z, const Arc& J);

struct GapStatistics {
  double mean = 0;
  double stddev = 0;
  double cv = 0;  // stddev / mean
  double max_gap = 0;
};

// Consecutive circular gaps between sorted angles, the wrap-around included.
GapStatistics gap_statistics(const AngularSample& s);

}  // namespace trigroots

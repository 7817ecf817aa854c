#include "trigroots/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trigroots/errors.hpp"

namespace trigroots {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Counts on the doubled sequence U = angles ++ (angles + 2pi), which covers
// [0, 4pi). Every window handled here lies inside that range.
class Packer {
 public:
  Packer(const std::vector<double>& angles, double len, int threshold, IntervalConvention conv)
      : m_(static_cast<int>(angles.size())), len_(len), T_(threshold), conv_(conv) {
    U_.reserve(2 * angles.size());
    for (double a : angles) U_.push_back(a);
    for (double a : angles) U_.push_back(a + kTwoPi);
  }

  int upper(double x) const {
    return static_cast<int>(std::upper_bound(U_.begin(), U_.end(), x) - U_.begin());
  }
  int lower(double x) const {
    return static_cast<int>(std::lower_bound(U_.begin(), U_.end(), x) - U_.begin());
  }
  int half(double a, double b) const { return upper(b) - upper(a); }
  int closed(double a, double b) const { return upper(b) - lower(a); }
  int window(int j) const {
    const double x = U_[j];
    return conv_ == IntervalConvention::half_open ? half(x - len_, x) : closed(x - len_, x);
  }
  double at(int j) const { return U_[j]; }
  int size() const { return 2 * m_; }

  // Greedy by earliest right endpoint on the line starting at c. With
  // first >= 0 the first interval is forced to end at U[first].
  int run(double c, int first, std::vector<ClusterInterval>* out) const {
    const bool is_half = conv_ == IntervalConvention::half_open;
    const double limit = c + kTwoPi;
    std::vector<ClusterInterval> got;
    double e = c;
    bool strict = is_half;
    if (first >= 0) {
      got.push_back({U_[first] - len_, U_[first], window(first)});
      e = U_[first];
      strict = true;
    }
    int j = upper(e);
    for (;;) {
      const double b = e + len_;
      if (is_half ? b <= limit : b < limit) {
        const int cnt = strict ? half(e, b) : closed(e, b);
        if (cnt >= T_) {
          got.push_back({e, b, cnt});
          e = b;
          strict = true;
          continue;
        }
      }
      j = std::max(j, upper(b));
      bool found = false;
      for (; j < size(); ++j) {
        const double x = U_[j];
        if (is_half ? x > limit : x >= limit) break;
        const int cnt = window(j);
        if (cnt >= T_) {
          got.push_back({x - len_, x, cnt});
          e = x;
          strict = true;
          found = true;
          ++j;
          break;
        }
      }
      if (!found) break;
    }
    if (out) *out = std::move(got);
    return static_cast<int>(out ? out->size() : got.size());
  }

 private:
  int m_;
  double len_;
  int T_;
  IntervalConvention conv_;
  std::vector<double> U_;
};

void normalize(std::vector<ClusterInterval>& iv) {
  for (auto& c : iv) {
    while (c.start >= kTwoPi) {
      c.start -= kTwoPi;
      c.end -= kTwoPi;
    }
    while (c.start < 0) {
      c.start += kTwoPi;
      c.end += kTwoPi;
    }
  }
  std::sort(iv.begin(), iv.end(),
            [](const ClusterInterval& a, const ClusterInterval& b) { return a.start < b.start; });
}

}  // namespace

double angular_discrepancy(const AngularSample& s) {
  const int m = s.n_angular();
  if (m == 0 || s.n_total < m) throw DegenerateInputError("angular_discrepancy: empty sample");
  const double N = s.n_total;
  const std::vector<double>& phi = s.angles;
  // phi_j - phi_i with j taken mod m; the wrapped case adds 2pi last so a
  // full turn is exactly 2pi.
  auto span = [&](int i, int j) { return j < m ? phi[j] - phi[i] : (phi[j - m] - phi[i]) + kTwoPi; };
  double best = 1.0 - m / N;
  for (int i = 0; i < m; ++i) {
    // Closed arc [phi_i, phi_{i+k-1}] holds at least k angles; the open arc
    // (phi_i, phi_{i+k+1}) at most k.
    for (int k = 1; k <= m; ++k) best = std::max(best, k / N - span(i, i + k - 1) / kTwoPi);
    for (int k = 0; k < m; ++k) best = std::max(best, span(i, i + k + 1) / kTwoPi - k / N);
  }
  return best;
}

double et_bound_from_h(double h, int n) {
  if (n < 1) throw ParameterError("et_bound: need n >= 1");
  if (h < 0) h = 0;
  return 8.0 / std::numbers::pi * std::sqrt(h / n);
}

double et_bound(const Polynomial& p, const RootSet& rs, const CircleIntegralOptions& opts) {
  const int n = rs.roots.empty() ? p.degree() : static_cast<int>(rs.roots.size());
  if (n < 1) throw DegenerateInputError("et_bound: degree 0");
  return et_bound_from_h(h_measure(p, opts).value, n);
}

int max_packing(const AngularSample& s, double length, int threshold, IntervalConvention conv,
                std::vector<ClusterInterval>* chosen, int* cuts) {
  const int m = s.n_angular();
  if (chosen) chosen->clear();
  if (cuts) *cuts = 0;
  if (m == 0 || threshold > m) return 0;
  Packer pk(s.angles, length, threshold, conv);

  int g = m - 1;
  double gap = s.angles[0] + kTwoPi - s.angles[m - 1];
  for (int i = 0; i + 1 < m; ++i) {
    const double d = s.angles[i + 1] - s.angles[i];
    if (d > gap) {
      gap = d;
      g = i;
    }
  }
  if (gap >= 2.0 * length) {
    double c = s.angles[g] + length;
    if (c >= kTwoPi) c -= kTwoPi;
    if (cuts) *cuts = 1;
    return pk.run(c, -1, chosen);
  }

  int best = 0;
  int examined = 0;
  std::vector<ClusterInterval> tmp;
  for (int j = 0; j < m; ++j) {
    if (j > 0 && s.angles[j] == s.angles[j - 1]) continue;
    const int jc = s.angles[j] - length >= 0 ? j : j + m;
    if (pk.window(jc) < threshold) continue;
    ++examined;
    const int got = pk.run(pk.at(jc) - length, jc, chosen ? &tmp : nullptr);
    if (got > best) {
      best = got;
      if (chosen) *chosen = tmp;
    }
  }
  if (cuts) *cuts = examined;
  return best;
}

ClusterReport clustering_count(const AngularSample& s, double alpha, double factor) {
  if (!(alpha >= 0 && alpha <= 1)) throw ParameterError("clustering_count: alpha must lie in [0, 1]");
  if (!(factor > 1)) throw ParameterError("clustering_count: factor must exceed 1");
  if (s.n_total < 2) throw ParameterError("clustering_count: need n_total >= 2");
  const double n = s.n_total;
  ClusterReport rep;
  rep.alpha = alpha;
  rep.factor = factor;
  rep.interval_length = std::pow(n, -alpha);
  if (rep.interval_length >= kTwoPi)
    throw DegenerateInputError("clustering_count: interval length >= 2pi");
  rep.threshold_count =
      std::max(1, static_cast<int>(std::ceil(factor * rep.interval_length * n / kTwoPi)));
  rep.I = max_packing(s, rep.interval_length, rep.threshold_count, IntervalConvention::half_open,
                      &rep.chosen_intervals, &rep.cuts_examined);
  rep.I_closed = max_packing(s, rep.interval_length, rep.threshold_count, IntervalConvention::closed);
  normalize(rep.chosen_intervals);
  return rep;
}

std::pair<double, double> theorem_bound(int X, double log_integral, int n, double alpha) {
  if (n < 1) throw ParameterError("theorem_bound: need n >= 1");
  const double dn = n;
  return {std::pow(dn, alpha - 1.0) * X, std::pow(dn, 2.0 * alpha - 1.0) * log_integral};
}

void attach_bound(ClusterReport& report, int X, double log_integral, int n) {
  const auto [bx, bl] = theorem_bound(X, log_integral, n, report.alpha);
  report.bound_x_term = bx;
  report.bound_log_term = bl;
  const double den = bx + bl;
  report.has_ratio = den > 0;
  report.empirical_ratio = den > 0 ? report.I / den : 0.0;
}

char to_char(CaseLabel c) {
  switch (c) {
    case CaseLabel::a: return 'a';
    case CaseLabel::b: return 'b';
    case CaseLabel::c: return 'c';
    case CaseLabel::none: break;
  }
  return '-';
}

RegionCensus region_census(const RootSet& rs, const Arc& J, double alpha, const CensusOptions& opts) {
  const int n = static_cast<int>(rs.roots.size());
  if (n < 1) throw DegenerateInputError("region_census: no roots");
  RegionCensus c;
  c.J = J;
  c.n_total = n;
  c.largeness = opts.largeness;
  const double outer = 1.0 + std::pow(static_cast<double>(n), -alpha);
  const double tol = opts.circle_tol;
  for (const Complex& z : rs.roots) {
    const double r = std::abs(z);
    if (r > 0 && J.contains(wrapped_arg(z))) {
      if (r >= outer)
        ++c.A1;
      else if (r > 1.0 + tol)
        ++c.A2;
      else
        ++c.A3;
    } else if (r >= 1.0 - tol) {
      ++c.B1;
    } else {
      ++c.B2;
    }
  }
  const double large = opts.largeness * std::pow(static_cast<double>(n), 1.0 - alpha);
  const int T = std::max(1, static_cast<int>(std::ceil(opts.factor * J.length * n / kTwoPi)));
  c.dense = c.A1 + c.A2 + c.A3 >= T;
  if (c.A1 >= large)
    c.case_label = CaseLabel::a;
  else if (c.A3 >= large)
    c.case_label = CaseLabel::b;
  else if (c.dense)
    c.case_label = CaseLabel::c;
  return c;
}

double root_winding(Complex z, const Arc& J) {
  const double r = std::abs(z);
  if (r == 0) return J.length;
  const double theta = wrapped_arg(z);
  double d = std::min(std::abs(z - std::polar(1.0, J.start)), std::abs(z - std::polar(1.0, J.end())));
  if (J.contains(theta)) d = std::min(d, std::abs(r - 1.0));
  if (d < 1e-8) throw SingularInputError("winding_integral: root within 1e-8 of the arc");
  if (std::abs(r - 1.0) > 1e-6) {
    const QuadResult q = integrate_arg_derivative(r, theta, J.start, J.end(), 1e-12);
    return q.value;
  }
  return unwrapped_arg_change(z, J.start, J.end());
}

double winding_integral(const RootSet& rs, const Arc& J) {
  double total = 0;
  for (const Complex& z : rs.roots) total += root_winding(z, J);
  return total;
}

GapStatistics gap_statistics(const AngularSample& s) {
  const int m = s.n_angular();
  if (m == 0) throw DegenerateInputError("gap_statistics: empty sample");
  std::vector<double> gaps(m);
  for (int i = 0; i + 1 < m; ++i) gaps[i] = s.angles[i + 1] - s.angles[i];
  gaps[m - 1] = s.angles[0] + kTwoPi - s.angles[m - 1];
  GapStatistics g;
  g.mean = kTwoPi / m;
  double ss = 0;
  for (double x : gaps) {
    ss += (x - g.mean) * (x - g.mean);
    g.max_gap = std::max(g.max_gap, x);
  }
  g.stddev = std::sqrt(ss / m);
  g.cv = g.stddev / g.mean;
  return g;
}

}  // namespace trigroots

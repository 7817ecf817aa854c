#include "trigroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "trigroots/errors.hpp"

namespace trigroots {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NewtonTerm {
  Complex ratio;  // p'(z) / p(z)
  bool exact_zero = false;
  bool at_rounding_level = false;
};

// p'/p at z together with a rounding-level test |p(z)| <= 4 n eps sum|a_k||z|^k.
// For |z| > 1 the computation runs on the reversed polynomial in w = 1/z.
NewtonTerm newton_term(std::span<const Complex> a, Complex z) {
  const std::size_t n = a.size() - 1;
  const double nd = static_cast<double>(n);
  const double rz = std::abs(z);
  NewtonTerm out;
  if (rz <= 1.0) {
    Complex b = a[n], d{};
    double s = std::abs(a[n]);
    for (std::size_t k = n; k-- > 0;) {
      d = d * z + b;
      b = b * z + a[k];
      s = s * rz + std::abs(a[k]);
    }
    if (b == Complex{}) {
      out.exact_zero = true;
      return out;
    }
    out.at_rounding_level = std::abs(b) <= 4.0 * nd * kEps * s;
    out.ratio = d / b;
    return out;
  }
  const Complex w = 1.0 / z;
  const double rw = 1.0 / rz;
  // rev(w) = sum_k a_k w^(n-k): Horner from a_0 upward.
  Complex b = a[0], d{};
  double s = std::abs(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    d = d * w + b;
    b = b * w + a[k];
    s = s * rw + std::abs(a[k]);
  }
  if (b == Complex{}) {
    out.exact_zero = true;
    return out;
  }
  out.at_rounding_level = std::abs(b) <= 4.0 * nd * kEps * s;
  // p'/p = w (n - w rev'(w)/rev(w))
  out.ratio = w * (nd - w * d / b);
  return out;
}

// Starting points on the circles of the Newton polygon of (k, log|a_k|).
std::vector<Complex> initial_guesses(std::span<const Complex> a, unsigned long long seed) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= n; ++k)
    if (a[k] != Complex{}) pts.emplace_back(k, std::log(std::abs(a[k])));

  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      const double cross = (q.first - o.first) * (p.second - o.second) -
                           (q.second - o.second) * (p.first - o.first);
      if (cross >= 0) hull.pop_back();  // q is not strictly above o--p
      else break;
    }
    hull.push_back(p);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int m = hull[e + 1].first - hull[e].first;
    const double radius = std::exp((hull[e].second - hull[e + 1].second) / m);
    const double offset = two_pi * hull[e].first / n + 0.4;
    for (int j = 0; j < m; ++j) {
      const double angle = offset + two_pi * (j + 0.5 + jitter(rng)) / m;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

double scaled_residual(const Polynomial& p, Complex z) {
  const double scale = p.max_abs_coeff();
  if (scale == 0) return 0;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::numeric_limits<double>::infinity();
  const double rz = std::abs(z);
  if (rz <= 1.0) return std::abs(eval(p, z)) / scale;
  const auto a = p.coeffs();
  const Complex w = 1.0 / z;
  Complex b = a[0];
  for (std::size_t k = 1; k < a.size(); ++k) b = b * w + a[k];
  return std::abs(b) / scale;
}

double cauchy_root_bound(const Polynomial& p) {
  const auto a = p.coeffs();
  const int n = p.degree();
  if (n < 1) throw DegenerateInputError("cauchy_root_bound: degree < 1");
  const double lead = std::abs(a[n]);
  // The positive root of sum_{k<n} (|a_k|/|a_n|) x^(k-n) = 1; the left side
  // decreases in x, and 1 + max ratio is the classical upper bracket.
  double hi = 1.0, any = 0.0;
  for (int k = 0; k < n; ++k) {
    hi = std::max(hi, 1.0 + std::abs(a[k]) / lead);
    any += std::abs(a[k]);
  }
  if (any == 0) return 0;
  auto excess = [&](double x) {
    double f = -1.0;
    for (int k = 0; k < n; ++k)
      if (a[k] != Complex{}) f += std::abs(a[k]) / lead * std::pow(x, k - n);
    return f;
  };
  double lo = 0.0;
  while (hi - lo > 4 * kEps * hi) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return hi;
}

RootSet find_roots(const Polynomial& p, double tol) {
  RootOptions opts;
  opts.tol = tol;
  return find_roots(p, opts);
}

RootSet find_roots(const Polynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw DegenerateInputError("find_roots: degree must be >= 1");
  const auto all = p.coeffs();

  RootSet out;
  out.tolerance = opts.tol;

  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  out.roots.assign(zeros, Complex{});
  const std::span<const Complex> a = all.subspan(zeros);
  const int n = static_cast<int>(a.size()) - 1;

  if (n == 1) {
    out.roots.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    std::vector<Complex> z = initial_guesses(a, opts.seed);
    std::vector<char> done(z.size(), 0);
    std::size_t remaining = z.size();
    int sweep = 0;
    while (remaining > 0 && sweep < opts.max_sweeps) {
      ++sweep;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (done[i]) continue;
        const NewtonTerm t = newton_term(a, z[i]);
        if (t.exact_zero) {
          done[i] = 1;
          --remaining;
          continue;
        }
        Complex s{};
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (j == i) continue;
          const Complex diff = z[i] - z[j];
          if (diff != Complex{}) s += 1.0 / diff;
        }
        const Complex denom = t.ratio - s;
        if (denom == Complex{}) continue;
        const Complex corr = 1.0 / denom;
        z[i] -= corr;
        // At rounding level one more correction is still worth taking, then stop.
        if (t.at_rounding_level || std::abs(corr) <= opts.tol * std::max(std::abs(z[i]), kEps)) {
          done[i] = 1;
          --remaining;
        }
      }
    }
    out.iterations = sweep;
    if (remaining > 0) {
      std::ostringstream msg;
      msg << "Aberth iteration stopped after " << sweep << " sweeps with " << remaining
          << " unconverged approximations";
      out.diagnostic = msg.str();
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  out.residuals.reserve(out.roots.size());
  double worst = 0;
  for (const auto& r : out.roots) {
    out.residuals.push_back(scaled_residual(p, r));
    worst = std::max(worst, out.residuals.back());
  }
  out.certified = worst <= opts.tol;
  if (!out.certified) {
    std::ostringstream msg;
    if (!out.diagnostic.empty()) msg << out.diagnostic << "; ";
    msg << "max scaled residual " << worst << " exceeds tolerance " << opts.tol;
    out.diagnostic = msg.str();
  }
  return out;
}

double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  struct Pair {
    double d;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) pairs.push_back({std::abs(a[i] - b[j]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  double worst = 0;
  std::size_t matched = 0;
  for (const auto& pr : pairs) {
    if (used_a[pr.i] || used_b[pr.j]) continue;
    used_a[pr.i] = used_b[pr.j] = 1;
    worst = std::max(worst, pr.d);
    if (++matched == a.size()) break;
  }
  return worst;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto directed = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    double worst = 0;
    for (const auto& u : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& v : y) best = std::min(best, std::abs(u - v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

Polynomial reconstruct(const std::vector<Complex>& roots, Complex leading) {
  // Values at the N-th roots of unity are products of accurate factors; an
  // inverse DFT recovers the coefficients with error about n eps max|p| on
  // the circle. Expanding the product directly can lose every digit.
  const std::size_t n = roots.size();
  const std::size_t N = n + 1;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> unit(N);
  for (std::size_t j = 0; j < N; ++j) unit[j] = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(N));
  std::vector<Complex> values(N);
  for (std::size_t j = 0; j < N; ++j) {
    Complex v = leading;
    for (const auto& r : roots) v *= unit[j] - r;
    values[j] = v;
  }
  std::vector<Complex> c(N);
  for (std::size_t k = 0; k < N; ++k) {
    Complex s{};
    for (std::size_t j = 0; j < N; ++j) s += values[j] * std::conj(unit[(j * k) % N]);
    c[k] = s / static_cast<double>(N);
  }
  c[n] = leading;
  return Polynomial(std::move(c));
}

double wrapped_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

AngularSample angular_sample(const std::vector<Complex>& roots) {
  AngularSample s;
  s.n_total = static_cast<int>(roots.size());
  for (const auto& z : roots) {
    if (z == Complex{}) ++s.origin_count;
    else s.angles.push_back(wrapped_arg(z));
  }
  std::sort(s.angles.begin(), s.angles.end());
  return s;
}

AngularSample angular_sample(const RootSet& rs) { return angular_sample(rs.roots); }

}  // namespace trigroots

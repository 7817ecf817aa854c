#include "trigroots/trig_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trigroots/errors.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0;
  return t;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap(a - b));
  return std::min(d, kTwoPi - d);
}

int sign(double x) { return (x > 0) - (x < 0); }

template <class F>
double bisect(F&& f, double a, double b, double fa, double tol) {
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0) return m;
    if (sign(fm) == sign(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string to_string(TrigRootMethod m) {
  return m == TrigRootMethod::sampling ? "sampling" : "self_inversive";
}

std::vector<double> TrigRootReport::locations() const {
  std::vector<double> out;
  out.reserve(zeros.size());
  for (const auto& z : zeros) out.push_back(z.theta);
  return out;
}

TrigRootReport count_real_roots(const TrigView& v, int grid) {
  TrigCountOptions opts;
  opts.grid = grid;
  return count_real_roots(v, opts);
}

TrigRootReport count_real_roots(const TrigView& v, const TrigCountOptions& opts) {
  const int n = v.base.degree();
  if (n < 1) throw DegenerateInputError("count_real_roots: degree must be >= 1");
  const int grid = opts.grid > 0 ? opts.grid : 16 * n;
  if (grid < 8 * n) throw ParameterError("count_real_roots: grid must be at least 8n");

  const double h = kTwoPi / grid;
  auto q = [&](double t) { return eval_trig(v, t); };
  auto dq = [&](double t) { return eval_trig_derivative(v, t); };
  auto node = [&](long j) { return h * static_cast<double>(j); };
  auto idx = [&](long j) { return static_cast<std::size_t>(((j % grid) + grid) % grid); };

  std::vector<double> qv(static_cast<std::size_t>(grid)), dv(static_cast<std::size_t>(grid));
  const Complex rot = std::polar(1.0, v.phase);
  double qmax = 0;
  for (int j = 0; j < grid; ++j) {
    const Complex z = std::polar(1.0, node(j));
    const auto [val, d1] = eval_with_derivative(v.base, z);
    qv[j] = (rot * val).real();
    dv[j] = (rot * d1 * Complex{0.0, 1.0} * z).real();
    qmax = std::max(qmax, std::abs(qv[j]));
  }
  if (qmax == 0) throw DegenerateInputError("count_real_roots: q vanishes on the whole grid");

  TrigRootReport rep;
  rep.method = TrigRootMethod::sampling;
  rep.grid = grid;
  rep.threshold = opts.tangential_rel * qmax;
  const double thr = rep.threshold;

  std::vector<double> crossings;  // unwrapped, then wrapped at the end
  for (long j = 0; j < grid; ++j) {
    const double a = qv[idx(j)], b = qv[idx(j + 1)];
    if (a * b < 0) crossings.push_back(wrap(bisect(q, node(j), node(j + 1), a, opts.theta_tol)));
  }

  struct NearZero {
    double theta;
  };
  std::vector<NearZero> near;
  for (long j = 0; j < grid; ++j) {
    const double qm = qv[idx(j - 1)], q0 = qv[idx(j)], qp = qv[idx(j + 1)];
    if (!(std::abs(q0) <= std::abs(qm) && std::abs(q0) <= std::abs(qp))) continue;
    const double a = node(j - 1), b = node(j + 1);
    const double da = dv[idx(j - 1)], db = dv[idx(j + 1)];
    if (da * db < 0) {
      const double ts = bisect(dq, a, b, da, opts.theta_tol);
      const double qs = q(ts);
      if (std::abs(qs) <= thr) {
        near.push_back({wrap(ts)});
      } else {
        if (std::abs(qs) <= 1e3 * thr) ++rep.borderline;
        const bool unbracketed = sign(qm) == sign(q0) && sign(q0) == sign(qp) && sign(q0) != 0;
        if (unbracketed && sign(qs) == -sign(q0)) {
          // Two sign changes hidden inside one pair of grid cells.
          crossings.push_back(wrap(bisect(q, a, ts, qm, opts.theta_tol)));
          crossings.push_back(wrap(bisect(q, ts, b, qs, opts.theta_tol)));
        }
      }
    } else if (q0 == 0 && qm * qp < 0) {
      crossings.push_back(wrap(bisect(q, a, b, qm, opts.theta_tol)));
    }
  }

  std::sort(crossings.begin(), crossings.end());
  // Each cell brackets at most its own crossings, so only exact repeats are
  // dropped; two noise crossings next to a double zero must both survive to
  // pair up below.
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
  std::sort(near.begin(), near.end(), [](const NearZero& x, const NearZero& y) { return x.theta < y.theta; });
  near.erase(std::unique(near.begin(), near.end(),
                         [&](const NearZero& x, const NearZero& y) { return y.theta - x.theta <= opts.merge_tol; }),
             near.end());

  // A near-zero extremum swallows the sign changes that are only rounding
  // noise around it; an even number of them leaves a tangential zero.
  std::vector<char> absorbed(crossings.size(), 0);
  for (const auto& nz : near) {
    int count = 0;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (absorbed[i]) continue;
      const double d = circular_distance(crossings[i], nz.theta);
      if (d > h) continue;
      if (d > opts.merge_tol) {
        const double mid = nz.theta + 0.5 * std::remainder(crossings[i] - nz.theta, kTwoPi);
        if (std::abs(q(mid)) > thr) continue;
      }
      absorbed[i] = 1;
      ++count;
    }
    rep.zeros.push_back({nz.theta, count % 2 == 0});
  }
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (!absorbed[i]) rep.zeros.push_back({crossings[i], false});

  std::sort(rep.zeros.begin(), rep.zeros.end(),
            [](const TrigZero& x, const TrigZero& y) { return x.theta < y.theta; });
  if (rep.zeros.size() > 1 &&
      circular_distance(rep.zeros.front().theta, rep.zeros.back().theta) <= opts.merge_tol) {
    rep.zeros.front().tangential = rep.zeros.front().tangential && rep.zeros.back().tangential;
    rep.zeros.pop_back();
  }
  for (const auto& z : rep.zeros) (z.tangential ? rep.tangential : rep.sign_changes)++;
  rep.X = static_cast<int>(rep.zeros.size());
  return rep;
}

Polynomial self_inversive_lift(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw DegenerateInputError("self_inversive_lift: degree must be >= 1");
  std::vector<Complex> c(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[n + k] += p[k];
    c[n - k] += std::conj(p[k]);
  }
  return Polynomial(std::move(c));
}

TrigRootReport count_real_roots_algebraic(const TrigView& v, const AlgebraicCountOptions& opts) {
  const Polynomial lift = self_inversive_lift(rotate_coeffs(v.base, v.phase));
  if (lift.degree() < 1) throw DegenerateInputError("count_real_roots_algebraic: q is identically zero");
  const RootSet rs = find_roots(lift);

  std::vector<double> angles;
  for (const auto& z : rs.roots)
    if (std::abs(std::abs(z) - 1.0) < opts.unit_tol) angles.push_back(wrapped_arg(z));
  std::sort(angles.begin(), angles.end());

  TrigRootReport rep;
  rep.method = TrigRootMethod::self_inversive;
  rep.threshold = opts.unit_tol;
  if (!angles.empty()) {
    // Start clustering right after the widest gap so no cluster straddles 0.
    std::size_t start = 0;
    double widest = -1;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + kTwoPi;
      if (next - angles[i] > widest) {
        widest = next - angles[i];
        start = (i + 1) % angles.size();
      }
    }
    std::vector<double> run{angles[start]};
    auto flush = [&] {
      double mean = 0;
      for (double a : run) mean += a;
      mean /= static_cast<double>(run.size());
      rep.zeros.push_back({wrap(mean), run.size() % 2 == 0});
      run.clear();
    };
    for (std::size_t k = 1; k < angles.size(); ++k) {
      const std::size_t i = (start + k) % angles.size();
      double a = angles[i];
      while (a < run.back()) a += kTwoPi;
      if (a - run.back() > opts.cluster_tol) flush();
      run.push_back(a);
    }
    flush();
  }
  std::sort(rep.zeros.begin(), rep.zeros.end(),
            [](const TrigZero& x, const TrigZero& y) { return x.theta < y.theta; });
  for (const auto& z : rep.zeros) (z.tangential ? rep.tangential : rep.sign_changes)++;
  rep.X = static_cast<int>(rep.zeros.size());
  return rep;
}

TrigRootReport count_level_crossings(const Polynomial& p, double x, const TrigCountOptions& opts) {
  return count_real_roots(TrigView{p, std::numbers::pi / 2 - x}, opts);
}

}  // namespace trigroots

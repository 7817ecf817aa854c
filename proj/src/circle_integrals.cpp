#include "trigroots/circle_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "trigroots/errors.hpp"
#include "trigroots/quadrature.hpp"

namespace trigroots {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTinyModulus = 1e-300;

enum class Integrand { log_abs, log_plus };

struct Window {
  long ja, jb;                 // even node indices, ja < jb <= ja + N
  std::vector<double> logs;    // suspected zeros of p (unwrapped t)
  std::vector<double> scales;  // their estimated distance to the circle
  std::vector<double> kinks;
};

struct Derivs {
  double d1 = 0, d3 = 0;
};

double log_modulus(const Polynomial& p, double t) {
  return std::log(std::max(std::abs(eval(p, std::polar(1.0, t))), kTinyModulus));
}

// First and third derivative of log|p(e^{it})| in t.
Derivs log_modulus_derivs(const Polynomial& p, double t) {
  const Complex z = std::polar(1.0, t);
  const auto e = eval_with_derivatives3(p, z);
  if (e.value == Complex{}) return {};
  const Complex i{0.0, 1.0};
  const Complex u = z * e.d1 / e.value;
  const Complex v = z * z * e.d2 / e.value;
  const Complex w = z * z * z * e.d3 / e.value;
  const Complex g1 = i * u;
  const Complex g3 = -i * ((u + v - u * u) * (1.0 - 2.0 * u) + 2.0 * v + w - u * v);
  return {g1.real(), g3.real()};
}

class CircleIntegrator {
 public:
  CircleIntegrator(const Polynomial& p, Integrand kind, double level, const CircleIntegralOptions& opts)
      : p_(p), kind_(kind), level_(level), opts_(opts) {}

  CircleIntegralResult run() {
    const long n = std::max(1, p_.degree());
    long nodes = std::max<long>(128, opts_.nodes_per_degree * n);
    nodes += nodes % 2;
    CircleIntegralResult res;
    long used = 0;
    while (true) {
      res = level(nodes);
      used += res.nodes_used;
      if (res.converged || nodes * 2 > opts_.max_nodes) break;
      nodes *= 2;
    }
    res.nodes_used = used;
    return res;
  }

 private:
  double integrand(double t) const {
    const double f = log_modulus(p_, t);
    return kind_ == Integrand::log_abs ? f : std::max(0.0, f - level_);
  }

  Derivs integrand_derivs(double t) const {
    if (kind_ == Integrand::log_plus && log_modulus(p_, t) - level_ <= 0) return {};
    return log_modulus_derivs(p_, t);
  }

  CircleIntegralResult level(long N) {
    const double h = kTwoPi / static_cast<double>(N);
    auto node = [&](long j) { return h * static_cast<double>(j); };
    auto idx = [&](long j) { return static_cast<std::size_t>(((j % N) + N) % N); };

    std::vector<double> mod(static_cast<std::size_t>(N)), newton(static_cast<std::size_t>(N));
    std::vector<Complex> step(static_cast<std::size_t>(N));
    double pmax = 0;
    for (long j = 0; j < N; ++j) {
      const auto e = eval_with_derivative(p_, std::polar(1.0, node(j)));
      mod[j] = std::abs(e.value);
      step[j] = e.d1 == Complex{} ? Complex{} : e.value / e.d1;
      newton[j] = e.d1 == Complex{} ? std::numeric_limits<double>::infinity() : std::abs(step[j]);
      pmax = std::max(pmax, mod[j]);
    }

    std::vector<Window> windows;
    auto open_window = [&](double t, long pad) -> Window& {
      long ja = static_cast<long>(std::floor(t / h)) - pad;
      long jb = static_cast<long>(std::ceil(t / h)) + pad;
      if (ja % 2 != 0) --ja;
      if (jb % 2 != 0) ++jb;
      windows.push_back({ja, jb, {}, {}, {}});
      return windows.back();
    };

    int near_points = 0;
    if (kind_ == Integrand::log_abs) {
      for (long j = 0; j < N; ++j) {
        const bool tiny = mod[j] < opts_.near_zero_rel * pmax;
        if (!tiny && !(newton[j] < opts_.near_zero_spacing * h)) continue;
        const Complex z = std::polar(1.0, node(j));
        const Complex zeta = z - step[j];
        double t = node(j) + std::remainder(std::arg(zeta) - node(j), kTwoPi);
        if (std::abs(t - node(j)) > 2 * h || zeta == Complex{}) t = node(j);
        Window& w = open_window(t, 8);
        w.logs.push_back(t);
        w.scales.push_back(std::abs(std::abs(zeta) - 1.0));
        ++near_points;
      }
    } else {
      auto s = [&](double m) { return std::log(std::max(m, kTinyModulus)) - level_; };
      for (long j = 0; j < N; ++j) {
        const double a = s(mod[idx(j)]), b = s(mod[idx(j + 1)]);
        if ((a > 0) == (b > 0)) continue;
        double lo = node(j), hi = node(j + 1);
        const bool rising = b > 0;
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
          const double mid = 0.5 * (lo + hi);
          const bool above = log_modulus(p_, mid) - level_ > 0;
          if (above == rising) hi = mid;
          else lo = mid;
        }
        open_window(0.5 * (lo + hi), 2).kinks.push_back(0.5 * (lo + hi));
      }
    }

    merge(windows, N);

    std::vector<double> weight(static_cast<std::size_t>(N), 1.0);
    for (const auto& w : windows) {
      if (w.jb - w.ja >= N) {
        std::fill(weight.begin(), weight.end(), 0.0);
        break;
      }
      for (long j = w.ja + 1; j < w.jb; ++j) weight[idx(j)] = 0.0;
      weight[idx(w.ja)] = 0.5;
      weight[idx(w.jb)] = 0.5;
    }

    double full = 0, half = 0;
    for (long j = 0; j < N; ++j) {
      if (weight[j] == 0) continue;
      const double f = std::log(std::max(mod[j], kTinyModulus));
      const double g = kind_ == Integrand::log_abs ? f : std::max(0.0, f - level_);
      full += weight[j] * g;
      if (j % 2 == 0) half += weight[j] * g;
    }
    full *= h;
    half *= 2 * h;

    CircleIntegralResult res;
    res.refined_windows = static_cast<int>(windows.size());
    res.near_circle_points = near_points;
    res.nodes_used = N;
    double window_err = 0;
    bool windows_ok = true;
    const double window_budget = 0.1 * opts_.rel_target;
    auto f = [this](double t) { return integrand(t); };
    for (const auto& w : windows) {
      const double a = node(w.ja), b = node(w.jb);
      const auto bp = breakpoints(w, a, b);
      QuadOptions qo;
      qo.abs_tol = window_budget * (b - a) / kTwoPi;
      qo.max_panels = 20000;
      qo.min_width = 1e-15;
      const QuadResult q = integrate_adaptive(f, bp, qo);
      res.nodes_used += q.evals;
      window_err += q.error;
      windows_ok = windows_ok && q.converged;
      double corr_full = 0, corr_half = 0;
      if (w.jb - w.ja < N) {
        const Derivs da = integrand_derivs(a), db = integrand_derivs(b);
        auto em = [&](double hh) {
          return hh * hh / 12.0 * (da.d1 - db.d1) - std::pow(hh, 4) / 720.0 * (da.d3 - db.d3);
        };
        corr_full = em(h);
        corr_half = em(2 * h);
      }
      full += q.value - corr_full;
      half += q.value - corr_half;
    }

    res.value = full;
    res.value_half = half;
    res.error_estimate = std::abs(full - half) + window_err;
    res.converged = windows_ok && res.error_estimate <= opts_.rel_target * (1.0 + std::abs(full));
    return res;
  }

  static std::vector<double> breakpoints(const Window& w, double a, double b) {
    std::vector<double> bp{a, b};
    for (double k : w.kinks)
      if (k > a && k < b) bp.push_back(k);
    for (std::size_t i = 0; i < w.logs.size(); ++i) {
      const double t = w.logs[i];
      if (!(t > a && t < b)) continue;
      bp.push_back(t);
      const double finest = std::clamp(0.25 * w.scales[i], 1e-13, (b - a) / 4);
      for (double width = (b - a) / 2; width >= finest; width *= 0.5) {
        if (t - width > a) bp.push_back(t - width);
        if (t + width < b) bp.push_back(t + width);
      }
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
  }

  static void merge(std::vector<Window>& ws, long N) {
    if (ws.empty()) return;
    for (auto& w : ws) {
      const long shift = ((w.ja % N) + N) % N - w.ja;
      w.ja += shift;
      w.jb += shift;
      for (auto& t : w.logs) t += shift * (kTwoPi / N);
      for (auto& t : w.kinks) t += shift * (kTwoPi / N);
    }
    std::sort(ws.begin(), ws.end(), [](const Window& x, const Window& y) { return x.ja < y.ja; });
    std::vector<Window> out;
    for (auto& w : ws) {
      if (!out.empty() && w.ja <= out.back().jb) absorb(out.back(), w, 0.0);
      else out.push_back(std::move(w));
    }
    // The last window may wrap past 2pi into the first one.
    while (out.size() > 1 && out.back().jb >= out.front().ja + N) {
      Window last = std::move(out.back());
      out.pop_back();
      Window& first = out.front();
      Window merged{last.ja, std::max(last.jb, first.jb + N), {}, {}, {}};
      absorb(merged, last, 0.0);
      absorb(merged, first, kTwoPi);
      first = std::move(merged);
    }
    for (auto& w : out) w.jb = std::min(w.jb, w.ja + N);
    ws = std::move(out);
  }

  static void absorb(Window& into, const Window& from, double shift) {
    into.jb = std::max(into.jb, from.jb + static_cast<long>(0));
    for (std::size_t i = 0; i < from.logs.size(); ++i) {
      into.logs.push_back(from.logs[i] + shift);
      into.scales.push_back(from.scales[i]);
    }
    for (double k : from.kinks) into.kinks.push_back(k + shift);
  }

  const Polynomial& p_;
  Integrand kind_;
  double level_;
  CircleIntegralOptions opts_;
};

}  // namespace

CircleIntegralResult log_abs_integral(const Polynomial& p, const CircleIntegralOptions& opts) {
  if (p.is_zero()) throw DegenerateInputError("log_abs_integral: p is identically zero");
  return CircleIntegrator(p, Integrand::log_abs, 0.0, opts).run();
}

CircleIntegralResult h_measure(const Polynomial& p, const CircleIntegralOptions& opts) {
  if (p[0] == Complex{}) throw DegenerateInputError("h_measure: a_0 = 0, h(p) is undefined");
  const double level = 0.5 * std::log(std::abs(p[0]));
  CircleIntegralResult r = CircleIntegrator(p, Integrand::log_plus, level, opts).run();
  r.value /= kTwoPi;
  r.value_half /= kTwoPi;
  r.error_estimate /= kTwoPi;
  return r;
}

double jensen_sum(const RootSet& rs) {
  double s = 0;
  for (const auto& z : rs.roots) {
    const double r = std::abs(z);
    if (r > 1.0) s += std::log(r);
  }
  return kTwoPi * s;
}

JensenCheck jensen_residual(const Polynomial& p, const RootSet& rs, const CircleIntegralOptions& opts) {
  return jensen_residual(log_abs_integral(p, opts), p, rs);
}

JensenCheck jensen_residual(const CircleIntegralResult& q, const Polynomial& p, const RootSet& rs) {
  JensenCheck out;
  out.integral = q.value;
  out.error_estimate = q.error_estimate;
  out.converged = q.converged;
  out.root_sum = kTwoPi * std::log(std::abs(p.leading())) + jensen_sum(rs);
  out.residual = std::abs(out.integral - out.root_sum);
  for (const auto& z : rs.roots) out.near_circle = out.near_circle || std::abs(std::abs(z) - 1.0) < 1e-3;
  out.within_contract = out.residual <= 1e-6 * (1.0 + std::abs(out.integral));
  return out;
}

}  // namespace trigroots

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "trigroots/circle_integrals.hpp"
#include "trigroots/errors.hpp"
#include "trigroots/polynomial.hpp"
#include "trigroots/sampling.hpp"

using namespace trigroots;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Polynomial scaled(const Polynomial& p, Complex c) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : out) a *= c;
  return Polynomial(out);
}

}  // namespace

TEST_CASE("single-root closed forms") {
  const CircleIntegralResult a = log_abs_integral(Polynomial{-2.0, 1.0});
  CHECK(a.converged);
  CHECK(std::abs(a.value - kTwoPi * std::log(2.0)) < 1e-10);
  CHECK(a.nodes_used >= 128);
  const CircleIntegralResult b = log_abs_integral(Polynomial{-0.5, 1.0});
  CHECK(std::abs(b.value) < 1e-10);
  CHECK_THROWS_AS(log_abs_integral(Polynomial{0.0}), DegenerateInputError);
}

TEST_CASE("roots on the circle") {
  // int log|1 - e^{it}| dt = 0.
  const CircleIntegralResult a = log_abs_integral(Polynomial{-1.0, 1.0});
  CHECK(a.converged);
  CHECK(a.refined_windows >= 1);
  CHECK(a.near_circle_points >= 1);
  CHECK(std::abs(a.value) < 1e-8);
  // Double roots at the 51st roots of unity except 1: Fejer, log|p| = 2 log|...|.
  const Polynomial f = family({FamilyName::fejer, 50}).poly;
  const CircleIntegralResult q = log_abs_integral(f);
  CHECK(q.converged);
  const JensenCheck j = jensen_residual(f, find_roots(f));
  CHECK(j.residual <= j.error_estimate + 1e-9);
}

TEST_CASE("half-resolution check is inside the error estimate") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const CircleIntegralResult r = log_abs_integral(random_disk_polynomial(rng, 30));
    CHECK(r.error_estimate >= std::abs(r.value - r.value_half));
    CHECK(r.converged);
    CHECK(r.error_estimate <= 1e-6 * (1 + std::abs(r.value)));
  }
}

TEST_CASE("young log-integral grows like log n") {
  std::vector<double> L;
  for (int n : {16, 32, 64, 128}) L.push_back(log_abs_integral(family({FamilyName::young, n}).poly).value);
  for (std::size_t i = 1; i + 1 < L.size(); ++i) {
    const double ratio = (L[i + 1] - L[i]) / (L[i] - L[i - 1]);
    CHECK(std::abs(ratio - 1.0) < 0.25);
  }
}

TEST_CASE("h_measure") {
  CHECK(h_measure(Polynomial{Complex(0.6, 0.8)}).value == doctest::Approx(0.0));
  CHECK_THROWS_AS(h_measure(Polynomial{0.0, 1.0}), DegenerateInputError);

  // Brute-force Riemann sum of log+|1 + e^{it}| / 2pi.
  const int N = 10000000;
  double sum = 0;
  for (int j = 0; j < N; ++j) {
    const double v = std::abs(1.0 + std::polar(1.0, kTwoPi * (j + 0.5) / N));
    if (v > 1) sum += std::log(v);
  }
  const double brute = sum / N;
  const CircleIntegralResult h = h_measure(Polynomial{1.0, 1.0});
  CHECK(h.converged);
  CHECK(std::abs(h.value - brute) < 1e-5);
  CHECK(h.value >= 0);
}

TEST_CASE("h is invariant under rotations") {
  Rng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const Polynomial p = random_disk_polynomial(rng, 20);
    const double h = h_measure(p).value;
    CHECK(h >= 0);
    CHECK(std::abs(h_measure(rotate_coeffs(p, 1.1)).value - h) < 1e-10);
    CHECK(std::abs(h_measure(rotate_argument(p, 0.37)).value - h) < 1e-10);
  }
}

TEST_CASE("scale relation") {
  Rng rng(78);
  const Polynomial p = random_disk_polynomial(rng, 25);
  const double base = log_abs_integral(p).value;
  const Complex c = std::polar(3.0, 0.4);
  CHECK(std::abs(log_abs_integral(scaled(p, c)).value - base - kTwoPi * std::log(3.0)) < 1e-8);
}

TEST_CASE("jensen_sum") {
  RootSet a;
  a.roots = {2.0};
  CHECK(jensen_sum(a) == doctest::Approx(kTwoPi * std::log(2.0)));
  RootSet b;
  b.roots = {0.5, 1.0 / 3.0};
  CHECK(jensen_sum(b) == 0.0);
}

TEST_CASE("jensen_residual") {
  const Polynomial p{6.0, -5.0, 1.0};
  const JensenCheck j = jensen_residual(p, find_roots(p));
  CHECK(j.residual < 1e-8);
  CHECK(j.integral == doctest::Approx(kTwoPi * std::log(6.0)).epsilon(1e-12));
  CHECK(j.within_contract);
  CHECK_FALSE(j.near_circle);

  const Polynomial q{-1.0, 1.0};
  const JensenCheck k = jensen_residual(q, find_roots(q));
  CHECK(k.near_circle);
  CHECK(k.residual < 1e-6);

  // Leading coefficient not unimodular: the 2 pi log|a_n| term.
  const Polynomial r{-6.0, 3.0};
  CHECK(jensen_residual(r, find_roots(r)).residual < 1e-9);
}

TEST_CASE("jensen identity on random polynomials away from the circle") {
  Rng rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_rooted_polynomial(rng, 20, 1e-2);
    const JensenCheck j = jensen_residual(p, find_roots(p));
    CHECK(j.converged);
    CHECK(j.residual <= 1e-6 * (1 + std::abs(j.integral)));
  }
}

TEST_CASE("impossible targets come back unconverged") {
  std::vector<Complex> z{std::polar(1.0 + 1e-9, 0.3), 2.0, Complex(0.1, 0.2)};
  const Polynomial p = reconstruct(z, 1.0);
  CircleIntegralOptions o;
  o.rel_target = 1e-17;
  o.max_nodes = 4096;
  const CircleIntegralResult r = log_abs_integral(p, o);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value));
}

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "trigroots/errors.hpp"
#include "trigroots/polynomial.hpp"
#include "trigroots/sampling.hpp"
#include "trigroots/trig_roots.hpp"

using namespace trigroots;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Sign changes of q over a uniform grid of the full period.
int dense_sign_changes(const TrigView& v, int grid) {
  int count = 0;
  double first = eval_trig(v, 0.0), prev = first;
  for (int j = 1; j <= grid; ++j) {
    const double q = j == grid ? first : eval_trig(v, kTwoPi * j / grid);
    if ((q > 0 && prev < 0) || (q < 0 && prev > 0)) ++count;
    if (q != 0) prev = q;
  }
  return count;
}

Polynomial cos_n_plus_one(int n) {
  std::vector<Complex> c(n + 1);
  c[0] = 1.0;
  c[n] = 1.0;
  return Polynomial(c);
}

void check_consistent(const TrigRootReport& r, int n) {
  CHECK(r.X == r.sign_changes + r.tangential);
  CHECK(r.sign_changes % 2 == 0);
  CHECK(r.X <= 2 * n);
  CHECK(static_cast<int>(r.zeros.size()) == r.X);
  for (std::size_t i = 1; i < r.zeros.size(); ++i) CHECK(r.zeros[i - 1].theta < r.zeros[i].theta);
}

}  // namespace

TEST_CASE("cos theta") {
  const TrigRootReport r = count_real_roots(TrigView{Polynomial{0.0, 1.0}, 0.0});
  CHECK(r.X == 2);
  CHECK(r.sign_changes == 2);
  REQUIRE(r.zeros.size() == 2);
  CHECK(r.zeros[0].theta == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(r.zeros[1].theta == doctest::Approx(3 * kPi / 2).epsilon(1e-12));
  CHECK(r.method == TrigRootMethod::sampling);
}

TEST_CASE("cos(n theta) + 1 has n tangential zeros") {
  for (int n : {1, 7, 50}) {
    const TrigRootReport r = count_real_roots(TrigView{cos_n_plus_one(n), 0.0});
    CHECK(r.X == n);
    CHECK(r.tangential == n);
    CHECK(r.sign_changes == 0);
    REQUIRE(r.zeros.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) CHECK(std::abs(r.zeros[k].theta - (2 * k + 1) * kPi / n) < 1e-6);
    check_consistent(r, n);
  }
}

TEST_CASE("fejer(50) has 50 tangential zeros at 2 pi k / 51") {
  const TrigRootReport r = count_real_roots(TrigView{family({FamilyName::fejer, 50}).poly, 0.0});
  CHECK(r.X == 50);
  CHECK(r.tangential == 50);
  REQUIRE(r.zeros.size() == 50);
  for (int k = 1; k <= 50; ++k) CHECK(std::abs(r.zeros[k - 1].theta - kTwoPi * k / 51) < 1e-6);
  const TrigRootReport a = count_real_roots_algebraic(TrigView{family({FamilyName::fejer, 50}).poly, 0.0});
  CHECK(a.X == 50);
  CHECK(a.tangential == 50);
}

TEST_CASE("young(n) is strictly positive") {
  for (int n : {16, 32, 50, 64, 128}) {
    const TrigView v{family({FamilyName::young, n}).poly, 0.0};
    const TrigRootReport r = count_real_roots(v);
    CHECK(r.X == 0);
    CHECK(count_real_roots_algebraic(v).X == 0);
  }
}

TEST_CASE("argument checks") {
  const TrigView v{cos_n_plus_one(10), 0.0};
  CHECK_THROWS_AS(count_real_roots(v, 79), ParameterError);
  CHECK_NOTHROW(count_real_roots(v, 80));
  CHECK_THROWS_AS(count_real_roots(TrigView{Polynomial{1.0}, 0.0}), DegenerateInputError);
  // q = Re(i z^0 ...) identically zero.
  CHECK_THROWS_AS(count_real_roots(TrigView{Polynomial{Complex(0, 1), 0.0}, 0.0}), DegenerateInputError);
}

TEST_CASE("self_inversive_lift") {
  CHECK(self_inversive_lift(Polynomial{0.0, 1.0}) == Polynomial{1.0, 0.0, 1.0});
  CHECK(self_inversive_lift(Polynomial{1.0, 1.0}) == Polynomial{1.0, 2.0, 1.0});

  const TrigRootReport r = count_real_roots_algebraic(TrigView{Polynomial{1.0, 1.0}, 0.0});
  CHECK(r.X == 1);
  CHECK(r.tangential == 1);
  REQUIRE(r.zeros.size() == 1);
  CHECK(r.zeros[0].theta == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(r.method == TrigRootMethod::self_inversive);

  Rng rng(8);
  const Polynomial p = random_disk_polynomial(rng, 8);
  const Polynomial R = self_inversive_lift(p);
  REQUIRE(R.degree() == 16);
  for (int j = 0; j <= 16; ++j) CHECK(std::abs(R[j] - std::conj(R[16 - j])) == 0.0);
  for (double t : {0.3, 1.9, 4.4}) {
    const Complex lhs = eval(R, std::polar(1.0, t));
    const Complex rhs = 2.0 * std::polar(1.0, 8 * t) * eval_trig(TrigView{p, 0.0}, t);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("sampling and algebraic counts agree on random polynomials") {
  Rng rng(314);
  std::uniform_int_distribution<int> deg(1, 30);
  std::uniform_real_distribution<double> ph(0, kTwoPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = deg(rng);
    const TrigView v{random_disk_polynomial(rng, n), ph(rng)};
    const TrigRootReport s = count_real_roots(v);
    const TrigRootReport a = count_real_roots_algebraic(v);
    CHECK(s.X == a.X);
    CHECK(s.sign_changes == a.sign_changes);
    CHECK(s.tangential == a.tangential);
    check_consistent(s, n);
  }
}

TEST_CASE("dense sampling oracle for sign changes") {
  const Polynomial y = family({FamilyName::young, 50}).poly;
  const TrigRootReport r = count_level_crossings(y, 0.0);
  CHECK(r.sign_changes == dense_sign_changes(TrigView{y, kPi / 2}, 1000000));
  CHECK(r.tangential == 0);

  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const TrigView v{random_disk_polynomial(rng, 25), 0.0};
    CHECK(count_real_roots(v).sign_changes == dense_sign_changes(v, 200000));
  }
}

TEST_CASE("level crossings") {
  const Polynomial z{0.0, 1.0};
  const TrigRootReport r = count_level_crossings(z, kPi / 2);
  bool found = false;
  for (double t : r.locations()) found = found || std::abs(t - kPi / 2) < 1e-10;
  CHECK(found);

  // x = 0 is the imaginary-part view.
  Rng rng(4);
  const Polynomial p = random_disk_polynomial(rng, 12);
  CHECK(count_level_crossings(p, 0.0).X == count_real_roots(TrigView{p, kPi / 2}).X);

  std::uniform_real_distribution<double> ph(0, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial q = random_disk_polynomial(rng, 15);
    const double phi = ph(rng);
    const TrigRootReport a = count_real_roots(TrigView{q, phi});
    const TrigRootReport b = count_level_crossings(q, kPi / 2 - phi);
    CHECK(a.X == b.X);
    CHECK(a.sign_changes == b.sign_changes);
  }
}

TEST_CASE("rotated real part keeps roots, changes X") {
  const Polynomial f = family({FamilyName::fejer, 20}).poly;
  // The imaginary part of a nonnegative-real-part polynomial oscillates.
  CHECK(count_real_roots(TrigView{f, kPi / 2}).sign_changes > 0);
  CHECK(to_string(TrigRootMethod::sampling) == "sampling");
}

#include "trigroots/sampling.hpp"

#include <cmath>
#include <numbers>

#include "trigroots/errors.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

Complex unit_disk_point(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

Polynomial random_disk_polynomial(Rng& rng, int n, double a0_min) {
  if (n < 1) throw ParameterError("random_disk_polynomial: need n >= 1");
  std::vector<Complex> c(n + 1);
  do {
    c[0] = unit_disk_point(rng);
  } while (std::abs(c[0]) < a0_min);
  for (int k = 1; k < n; ++k) c[k] = unit_disk_point(rng);
  c[n] = 1.0;
  return Polynomial(std::move(c));
}

Polynomial random_rooted_polynomial(Rng& rng, int n, double gap, std::vector<Complex>* roots) {
  if (n < 1) throw ParameterError("random_rooted_polynomial: need n >= 1");
  if (!(gap >= 0 && gap < 0.8)) throw ParameterError("random_rooted_polynomial: gap out of range");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> z(n);
  for (auto& w : z) {
    const bool inside = u(rng) < 0.5;
    const double r = inside ? 0.2 + (0.8 - gap) * u(rng) : 1.0 + gap + (1.5 - gap) * u(rng);
    w = std::polar(r, 2.0 * std::numbers::pi * u(rng));
  }
  Polynomial p = reconstruct(z, 1.0);
  if (roots) *roots = std::move(z);
  return p;
}

}  // namespace trigroots

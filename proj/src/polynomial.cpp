#include "trigroots/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trigroots/errors.hpp"

namespace trigroots {

namespace {

void trim(std::vector<Complex>& c) {
  while (c.size() > 1 && c.back() == Complex{}) c.pop_back();
  if (c.empty()) c.emplace_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  trim(coeffs_);
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  return Polynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

double Polynomial::max_abs_coeff() const {
  double m = 0;
  for (const auto& a : coeffs_) m = std::max(m, std::abs(a));
  return m;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < coeffs_.size()) out[k] += coeffs_[k];
    if (k < other.coeffs_.size()) out[k] += other.coeffs_[k];
  }
  return Polynomial(std::move(out));
}

Complex eval(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

EvalDeriv eval_with_derivative(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex b = c.back();
  Complex d1{};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d1 = d1 * z + b;
    b = b * z + c[k];
  }
  return {b, d1};
}

EvalDeriv3 eval_with_derivatives3(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex b = c.back();
  Complex d1{}, d2{}, d3{};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d3 = d3 * z + d2;
    d2 = d2 * z + d1;
    d1 = d1 * z + b;
    b = b * z + c[k];
  }
  return {b, d1, 2.0 * d2, 6.0 * d3};
}

double eval_trig(const TrigView& v, double theta) {
  return (std::polar(1.0, v.phase) * eval(v.base, std::polar(1.0, theta))).real();
}

double eval_trig_derivative(const TrigView& v, double theta) {
  const Complex z = std::polar(1.0, theta);
  const auto [value, d1] = eval_with_derivative(v.base, z);
  return (std::polar(1.0, v.phase) * d1 * Complex{0.0, 1.0} * z).real();
}

Polynomial rotate_coeffs(const Polynomial& p, double phi) {
  const Complex w = std::polar(1.0, phi);
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : out) a *= w;
  return Polynomial(std::move(out));
}

Polynomial rotate_argument(const Polynomial& p, double psi) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] *= std::polar(1.0, static_cast<double>(k) * psi);
  return Polynomial(std::move(out));
}

Polynomial add_rotated_copy(const Polynomial& p, double psi) {
  return p + rotate_argument(p, psi);
}

Polynomial normalize_leading(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInputError("normalize_leading: zero polynomial");
  const double s = std::abs(p.leading());
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : out) a /= s;
  return Polynomial(std::move(out));
}

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::fejer: return "fejer";
    case FamilyName::poisson: return "poisson";
    case FamilyName::young: return "young";
  }
  return "unknown";
}

FamilyName family_from_string(const std::string& name) {
  if (name == "fejer") return FamilyName::fejer;
  if (name == "poisson") return FamilyName::poisson;
  if (name == "young") return FamilyName::young;
  throw ParameterError("unknown family '" + name + "' (expected fejer, poisson or young)");
}

Polynomial family_raw(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 1) throw ParameterError("family: n must be >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  switch (spec.name) {
    case FamilyName::fejer:
      c[0] = n + 1.0;
      for (int k = 1; k <= n; ++k) c[k] = 2.0 * (n + 1 - k);
      break;
    case FamilyName::poisson: {
      const double rho = spec.rho;
      if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("family: poisson rho must lie in (0, 1)");
      c[0] = std::pow(rho, -n);
      for (int k = 1; k <= n; ++k) c[k] = 2.0 * std::pow(rho, k - n);
      break;
    }
    case FamilyName::young:
      c[0] = n;
      for (int k = 1; k <= n; ++k) c[k] = static_cast<double>(n) / k;
      break;
  }
  return Polynomial(std::move(c));
}

FamilyPolynomial family(const FamilySpec& spec) {
  const Polynomial raw = family_raw(spec);
  FamilyPolynomial out;
  out.scale = std::abs(raw.leading());
  out.poly = normalize_leading(raw);

  const TrigView view{out.poly, 0.0};
  const int grid = 16 * spec.n;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  for (int j = 0; j < grid; ++j) {
    const double q = eval_trig(view, 2.0 * std::numbers::pi * j / grid);
    lo = std::min(lo, q);
    hi = std::max(hi, std::abs(q));
  }
  out.min_on_grid = lo;
  out.nonnegative = lo >= -1e-9 * std::max(1.0, hi);
  return out;
}

}  // namespace trigroots

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace trigroots {

using Complex = std::complex<double>;

/// Dense complex polynomial p(z) = sum_k a_k z^k, index k = power of z.
///
/// Trailing zero coefficients are dropped on construction, so the stored
/// leading coefficient is nonzero unless the polynomial is identically zero
/// (which is kept as the single coefficient 0, degree 0).
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial from_real(std::span<const double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  const Complex& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  // Largest coefficient modulus; the residual scale used by the root finder.
  double max_abs_coeff() const;

  Polynomial operator+(const Polynomial& other) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// Horner evaluation, highest degree first.
Complex eval(const Polynomial& p, Complex z);

// Value and first derivative in one Horner pass.
struct EvalDeriv {
  Complex value;
  Complex d1;
};
EvalDeriv eval_with_derivative(const Polynomial& p, Complex z);

// Value and the first three derivatives; used for endpoint corrections.
struct EvalDeriv3 {
  Complex value, d1, d2, d3;
};
EvalDeriv3 eval_with_derivatives3(const Polynomial& p, Complex z);

/// Real trigonometric polynomial q(theta) = Re(e^{i phase} p(e^{i theta})).
///
/// phase = 0 is the plain real part; phase = pi/2 gives -Im p, the
/// imaginary-part variant. Any unimodular rotation of p leaves its roots
/// unchanged, so every phase describes the same root set.
struct TrigView {
  Polynomial base;
  double phase = 0.0;
};

double eval_trig(const TrigView& v, double theta);

// d/dtheta of eval_trig.
double eval_trig_derivative(const TrigView& v, double theta);

// Multiplies every coefficient by e^{i phi}.
Polynomial rotate_coeffs(const Polynomial& p, double phi);

// Substitutes z -> e^{i psi} z, i.e. a_k -> a_k e^{i k psi}. Rotates the
// root set by -psi.
Polynomial rotate_argument(const Polynomial& p, double psi);

// p(z) + p(e^{i psi} z), coefficientwise a_k (1 + e^{i k psi}).
Polynomial add_rotated_copy(const Polynomial& p, double psi);

// Divides every coefficient by |a_n|; arg a_n is preserved.
// Throws DegenerateInputError for the zero polynomial.
Polynomial normalize_leading(const Polynomial& p);

enum class FamilyName { fejer, poisson, young };

std::string to_string(FamilyName name);
FamilyName family_from_string(const std::string& name);

struct FamilySpec {
  FamilyName name = FamilyName::fejer;
  int n = 1;
  double rho = 0.5;  // poisson only
};

struct FamilyPolynomial {
  Polynomial poly;    // leading-normalized
  double scale = 1;   // |a_n| of the raw coefficients that was divided out
  // false when the trigonometric view dips below zero on a 16n grid
  // (poisson with n too small for its rho).
  bool nonnegative = true;
  double min_on_grid = 0;
};

// Raw coefficients as displayed, before leading normalization.
Polynomial family_raw(const FamilySpec& spec);

// Leading-normalized family member. Throws ParameterError on n < 1 or a
// poisson rho outside (0, 1).
FamilyPolynomial family(const FamilySpec& spec);

}  // namespace trigroots

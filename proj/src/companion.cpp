#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "trigroots/errors.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class HessenbergMatrix {
 public:
  explicit HessenbergMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<Complex> a_;
};

double l1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett-Reinsch balancing with radix 2. Diagonal similarity, so the
// Hessenberg structure and the spectrum are preserved.
void balance(HessenbergMatrix& h) {
  const int n = h.size();
  const double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += l1(h(j, i));
        r += l1(h(i, j));
      }
      if (c == 0 || r == 0) continue;
      const double s = c + r;
      double f = 1;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        for (int j = 0; j < n; ++j) h(i, j) /= f;
        for (int j = 0; j < n; ++j) h(j, i) *= f;
      }
    }
  }
}

struct Givens {
  double c;
  Complex s;
};

// [c s; -conj(s) c] [a; b] = [*; 0]
Givens make_givens(Complex a, Complex b) {
  const double na = std::abs(a), nb = std::abs(b);
  if (nb == 0) return {1.0, Complex{}};
  if (na == 0) return {0.0, std::conj(b) / nb};
  const double norm = std::hypot(na, nb);
  return {na / norm, (a / na) * std::conj(b) / norm};
}

// Shifted QR on the unreduced Hessenberg matrix; eigenvalues only, so each
// step touches just the active diagonal block.
std::vector<Complex> hessenberg_eigenvalues(HessenbergMatrix& h, std::string& diagnostic) {
  const int n = h.size();
  std::vector<Complex> eig;
  eig.reserve(static_cast<std::size_t>(n));
  double norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm = std::max(norm, std::abs(h(i, j)));

  int hi = n - 1;
  int iter = 0;
  int total = 0;
  const int max_total = 60 * n + 100;
  std::vector<Givens> rot(static_cast<std::size_t>(n));
  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(h(0, 0));
      break;
    }
    int l = hi;
    for (; l > 0; --l) {
      double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (s == 0) s = norm;
      if (std::abs(h(l, l - 1)) <= kEps * s) {
        h(l, l - 1) = Complex{};
        break;
      }
    }
    if (l == hi) {
      eig.push_back(h(hi, hi));
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_total) {
      std::ostringstream msg;
      msg << "shifted QR did not converge; " << (hi + 1) << " eigenvalues unresolved";
      diagnostic = msg.str();
      for (int k = hi; k >= 0; --k) eig.push_back(h(k, k));
      break;
    }
    ++iter;

    Complex mu;
    if (iter % 10 == 0) {
      mu = h(hi, hi) + std::abs(h(hi, hi - 1).real()) +
           (hi >= 2 ? std::abs(h(hi - 1, hi - 2).real()) : 0.0);
    } else {
      const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
      const Complex c = h(hi, hi - 1), d = h(hi, hi);
      const Complex half_tr = 0.5 * (a + d);
      const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
      const Complex e1 = half_tr + disc, e2 = half_tr - disc;
      mu = std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2;
    }

    for (int k = l; k <= hi; ++k) h(k, k) -= mu;
    for (int k = l; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (int j = k; j <= hi; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (int k = l; k < hi; ++k) {
      const Givens& g = rot[k];
      for (int i = l; i <= std::min(k + 1, hi); ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (int k = l; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

}  // namespace

RootSet companion_oracle(const Polynomial& p) {
  if (p.degree() < 1) throw DegenerateInputError("companion_oracle: degree must be >= 1");
  if (p.degree() > 500) throw ParameterError("companion_oracle: degree > 500 is out of range for the oracle");
  const auto all = p.coeffs();

  RootSet out;
  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  out.roots.assign(zeros, Complex{});
  const std::span<const Complex> a = all.subspan(zeros);
  const int n = static_cast<int>(a.size()) - 1;

  if (n >= 1) {
    HessenbergMatrix h(n);
    for (int j = 0; j < n; ++j) h(0, j) = -a[n - 1 - j] / a[n];
    for (int i = 1; i < n; ++i) h(i, i - 1) = 1.0;
    balance(h);
    const auto eig = hessenberg_eigenvalues(h, out.diagnostic);
    out.roots.insert(out.roots.end(), eig.begin(), eig.end());
  }
  double worst = 0;
  for (const auto& r : out.roots) {
    out.residuals.push_back(scaled_residual(p, r));
    worst = std::max(worst, out.residuals.back());
  }
  out.certified = out.diagnostic.empty() && worst <= out.tolerance;
  return out;
}

}  // namespace trigroots

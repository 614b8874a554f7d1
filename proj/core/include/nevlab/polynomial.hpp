#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nevlab {

using Complex = std::complex<double>;

/// Dense polynomial with complex coefficients stored in ascending degree.
///
/// Exact zero leading coefficients are trimmed on construction, so the
/// leading coefficient is nonzero unless the polynomial is zero. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  /// The monic polynomial prod_j (z - r_j).
  static Polynomial from_roots(std::span<const Complex> roots);
  static Polynomial from_roots(std::span<const double> roots);

  [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Complex leading() const noexcept;
  [[nodiscard]] Complex coeff(int k) const noexcept;

  /// Horner evaluation.
  [[nodiscard]] Complex operator()(Complex z) const noexcept;
  /// sum_k |c_k| |z|^k; scales the rounding error of operator().
  [[nodiscard]] double abs_eval(double r) const noexcept;
  [[nodiscard]] double max_norm() const noexcept;
  [[nodiscard]] bool has_real_coefficients() const noexcept;

  [[nodiscard]] Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, Complex s) { return p *= s; }
  friend Polynomial operator*(Complex s, Polynomial p) { return p *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

enum class PolyOp { Add, Mul, Derivative };

/// Single entry point for the three coefficient operations; `q` is ignored
/// for Derivative.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

Complex poly_eval(const Polynomial& p, Complex z) noexcept;

struct RootOptions {
  double tolerance = 1e-12;   // relative update size that counts as converged
  int max_iterations = 500;
  double real_snap = 1e-9;    // |Im| below this (times max(1,|z|)) becomes 0
};

/// All roots, with multiplicity, by Aberth-Ehrlich simultaneous iteration.
///
/// Roots of real-coefficient polynomials come back conjugate-closed, with
/// near-real roots snapped onto the real axis. Output is sorted by real part,
/// then imaginary part. Throws ZeroPolynomial, DomainError (constant input)
/// or NoConvergence.
std::vector<Complex> poly_roots(const Polynomial& p, const RootOptions& options = {});

/// Roots that theory guarantees to be real. Throws NonRealRoot if any root
/// keeps an imaginary part above `options.real_snap`.
std::vector<double> real_roots(const Polynomial& p, const RootOptions& options = {});

}  // namespace nevlab

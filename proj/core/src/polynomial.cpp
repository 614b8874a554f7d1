#include "nevlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nevlab/error.hpp"

namespace nevlab {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (Complex r : roots) {
    c.push_back(Complex(0.0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  std::vector<Complex> r(roots.begin(), roots.end());
  return from_roots(std::span<const Complex>(r));
}

Complex Polynomial::leading() const noexcept {
  return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

Complex Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::abs_eval(double r) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double Polynomial::max_norm() const noexcept {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Polynomial::has_real_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Mul: return p * q;
    case PolyOp::Derivative: return p.derivative();
  }
  return {};
}

Complex poly_eval(const Polynomial& p, Complex z) noexcept { return p(z); }

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerPair {
  Complex value;
  Complex derivative;
};

HornerPair horner_with_derivative(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp(0.0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// A few Aberth sweeps in extended precision. Double-precision evaluation
// stalls once |p| reaches its rounding floor, which for clustered roots can
// leave an imaginary residue well above the real-snap threshold.
void polish_extended(std::span<const Complex> c, std::vector<Complex>& z) {
  using LComplex = std::complex<long double>;
  std::vector<LComplex> lc(c.begin(), c.end());
  std::vector<LComplex> lz(z.begin(), z.end());
  for (int sweep = 0; sweep < 8; ++sweep) {
    for (std::size_t k = 0; k < lz.size(); ++k) {
      LComplex p = lc.back();
      LComplex dp(0.0L);
      for (std::size_t i = lc.size() - 1; i-- > 0;) {
        dp = dp * lz[k] + p;
        p = p * lz[k] + lc[i];
      }
      if (p == LComplex(0.0L) || dp == LComplex(0.0L)) continue;
      LComplex repulsion(0.0L);
      for (std::size_t j = 0; j < lz.size(); ++j)
        if (j != k) repulsion += 1.0L / (lz[k] - lz[j]);
      const LComplex ratio = p / dp;
      const LComplex step = ratio / (1.0L - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      // Only accept steps on the scale of double rounding noise.
      if (std::abs(step) > 1e-6L * std::max(1.0L, std::abs(lz[k]))) continue;
      lz[k] -= step;
    }
  }
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = Complex(lz[k]);
}

// Forces exact conjugate pairs: each root above the axis adopts the mirror
// image of its nearest partner below, averaged.
void conjugate_close(std::vector<Complex>& roots) {
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].imag() > 0.0) upper.push_back(i);
    if (roots[i].imag() < 0.0) lower.push_back(i);
  }
  if (upper.size() != lower.size()) return;
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = lower.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(roots[u] - std::conj(roots[lower[j]]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == lower.size()) return;
    used[best] = true;
    const Complex avg = 0.5 * (roots[u] + std::conj(roots[lower[best]]));
    roots[u] = avg;
    roots[lower[best]] = std::conj(avg);
  }
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p, const RootOptions& options) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "poly_roots of the zero polynomial");
  if (p.degree() < 1) fail(ErrorCode::DomainError, "poly_roots needs degree >= 1");

  const int n = p.degree();
  std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
  const Complex lead = a.back();
  for (Complex& c : a) c /= lead;
  const Polynomial monic(a);

  std::vector<Complex> z(static_cast<std::size_t>(n));
  if (n == 1) {
    z[0] = -a[0];
  } else {
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(k)]));
    radius += 1.0;
    // The angular offset keeps starting points off the real axis and breaks
    // the mirror symmetry that real polynomials would otherwise preserve.
    constexpr double kOffset = 0.4;
    for (int k = 0; k < n; ++k)
      z[static_cast<std::size_t>(k)] =
          std::polar(radius, 2.0 * std::numbers::pi * k / n + kOffset);

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    bool converged = false;
    for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
      converged = true;
      for (std::size_t k = 0; k < z.size(); ++k) {
        const auto [val, der] = horner_with_derivative(a, z[k]);
        const double noise = 4.0 * kEps * n * monic.abs_eval(std::abs(z[k]));
        if (std::abs(val) <= noise) {
          done[k] = true;
          continue;
        }
        Complex repulsion(0.0);
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        Complex step;
        if (der == Complex(0.0)) {
          step = 1.0 / repulsion;  // stationary point; let the other roots push it
        } else {
          const Complex ratio = val / der;
          step = ratio / (1.0 - ratio * repulsion);
        }
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
          step = Complex(options.tolerance * std::max(1.0, std::abs(z[k])), 0.0);
        }
        z[k] -= step;
        done[k] = std::abs(step) <= options.tolerance * std::max(1.0, std::abs(z[k]));
        if (!done[k]) converged = false;
      }
    }
    if (!converged)
      fail(ErrorCode::NoConvergence,
           "Aberth iteration did not converge in " + std::to_string(options.max_iterations) +
               " iterations (degree " + std::to_string(n) + ")");
    polish_extended(a, z);
  }

  if (p.has_real_coefficients()) {
    for (Complex& r : z)
      if (std::abs(r.imag()) <= options.real_snap * std::max(1.0, std::abs(r))) r.imag(0.0);
    conjugate_close(z);
  }
  std::sort(z.begin(), z.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return z;
}

std::vector<double> real_roots(const Polynomial& p, const RootOptions& options) {
  const auto roots = poly_roots(p, options);
  std::vector<double> out;
  out.reserve(roots.size());
  for (Complex r : roots) {
    if (std::abs(r.imag()) > options.real_snap * std::max(1.0, std::abs(r)))
      fail(ErrorCode::NonRealRoot,
           "root " + std::to_string(r.real()) + (r.imag() < 0 ? "" : "+") + std::to_string(r.imag()) +
               "i is not real");
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nevlab

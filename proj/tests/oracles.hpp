#pragma once

// Reference values computed independently of the library code paths: closed
// forms, direct sums and brute-force expansions.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr Complex kI(0.0, 1.0);

// prod_j (z - r_j) evaluated directly.
inline Complex product_form(const std::vector<double>& roots, Complex z) {
  Complex p(1.0);
  for (double r : roots) p *= (z - r);
  return p;
}

// Cauchy transform by direct summation.
inline Complex cauchy(const std::vector<double>& atoms, const std::vector<double>& weights, Complex z) {
  Complex s(0.0);
  for (std::size_t j = 0; j < atoms.size(); ++j) s += weights[j] / (z - atoms[j]);
  return s;
}

// Arcsine law on [-2, 2] (Bernoulli (+) Bernoulli): F(it) = i sqrt(t^2 + 4).
inline Complex arcsine_f_on_axis(double t) { return kI * std::sqrt(t * t + 4.0); }

// Bernoulli 1/2(d_{-1} + d_1): F^{-1}(zeta) = (zeta + sqrt(zeta^2 + 4)) / 2.
// On zeta = it with t > 2 the upper branch is i (t + sqrt(t^2 - 4)) / 2.
inline Complex bernoulli_v_on_axis(double t) { return kI * (std::sqrt(t * t - 4.0) - t) / 2.0; }

// Laplace transform of cos: int_0^inf cos(r) e^{-wr} dr.
inline double laplace_cos(double w) { return w / (w * w + 1.0); }
inline double laplace_cosh(double w) { return w / (w * w - 1.0); }

// Composite Simpson on [0, R] for a complex integrand; slow but independent
// of the adaptive Gauss-Kronrod route.
template <typename F>
Complex simpson(F f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  Complex sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace oracle

#pragma once

#include <complex>
#include <vector>

namespace nevlab {

using Complex = std::complex<double>;

/// Transform values sampled at points t of the punctured imaginary axis.
struct ComplexGrid {
  std::vector<double> points;
  std::vector<Complex> values;

  /// Throws DomainError if any point is 0, LengthMismatch on unequal sizes.
  void validate() const;
};

/// `count` equispaced points from `start` to `stop` inclusive; count == 1
/// yields {start}.
std::vector<double> linspace(double start, double stop, int count);

/// Side-by-side comparison of two evaluations of the same identity.
struct CorollaryReport {
  std::vector<double> points;
  std::vector<Complex> lhs;
  std::vector<Complex> rhs;
  double max_abs_err = 0.0;

  void add(double point, Complex left, Complex right);
  [[nodiscard]] double max_rel_err() const;
};

}  // namespace nevlab

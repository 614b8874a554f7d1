#pragma once

#include <complex>
#include <functional>

namespace nevlab {

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Adaptive 7/15-point Gauss-Kronrod integration of a complex integrand on
/// [a, b]. A panel is accepted once |K15 - G7| <= panel_tolerance, otherwise
/// it is bisected; panels narrower than (b-a)*2^-max_depth are accepted as-is
/// and their estimate still lands in `error_estimate`.
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                           double panel_tolerance = 1e-9, int max_depth = 40);

}  // namespace nevlab

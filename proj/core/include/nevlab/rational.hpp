#pragma once

#include "nevlab/polynomial.hpp"

namespace nevlab {

/// num/den, deliberately kept unreduced: common factors of floating-point
/// polynomials are only detected at residue time.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  /// Throws ZeroPolynomial when den is zero.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  /// Throws PoleEvaluation when den(z) vanishes to rounding accuracy.
  [[nodiscard]] Complex operator()(Complex z) const;
};

Complex rational_eval(const RationalFunction& r, Complex z);

/// (n1 d2 + n2 d1) / (d1 d2), no cancellation.
RationalFunction rational_add(const RationalFunction& r1, const RationalFunction& r2);

struct ResidueOptions {
  double pole_tolerance = 1e-9;       // |den(pole)| relative to its scale
  double removable_tolerance = 1e-9;  // |num(pole)| relative to its scale
  double multiplicity_tolerance = 1e-9;
};

/// num(pole)/den'(pole) at a simple root of den.
///
/// A pole where num also vanishes (to `removable_tolerance`) is removable and
/// yields 0. Throws NotAPole or MultiplePole.
Complex residue_simple_pole(const RationalFunction& r, Complex pole, const ResidueOptions& options = {});

}  // namespace nevlab

#include "nevlab/rational.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nevlab/error.hpp"

namespace nevlab {

namespace {

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational function with zero denominator");
}

Complex RationalFunction::operator()(Complex z) const {
  const Complex d = den(z);
  const double noise = 4.0 * std::numeric_limits<double>::epsilon() * (den.degree() + 1) *
                       den.abs_eval(std::abs(z));
  if (std::abs(d) <= noise) fail(ErrorCode::PoleEvaluation, "denominator vanishes at " + describe(z));
  return num(z) / d;
}

Complex rational_eval(const RationalFunction& r, Complex z) { return r(z); }

RationalFunction rational_add(const RationalFunction& r1, const RationalFunction& r2) {
  return {r1.num * r2.den + r2.num * r1.den, r1.den * r2.den};
}

Complex residue_simple_pole(const RationalFunction& r, Complex pole, const ResidueOptions& options) {
  const double radius = std::abs(pole);
  const double den_scale = r.den.abs_eval(radius);
  if (std::abs(r.den(pole)) > options.pole_tolerance * den_scale)
    fail(ErrorCode::NotAPole, describe(pole) + " is not a root of the denominator");

  if (r.num.is_zero() ||
      std::abs(r.num(pole)) <= options.removable_tolerance * r.num.abs_eval(radius))
    return Complex(0.0);

  const Polynomial dden = r.den.derivative();
  const Complex slope = dden(pole);
  if (std::abs(slope) <= options.multiplicity_tolerance * std::max(dden.abs_eval(radius), 1e-300))
    fail(ErrorCode::MultiplePole, describe(pole) + " is a multiple root of the denominator");
  return r.num(pole) / slope;
}

}  // namespace nevlab

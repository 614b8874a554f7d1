#include "nevlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nevlab/error.hpp"

namespace nevlab::transforms {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_nonzero(double t, const char* who) {
  if (t == 0.0) fail(ErrorCode::DomainError, std::string(who) + " is undefined at t = 0");
  if (!std::isfinite(t)) fail(ErrorCode::NonFiniteValue, std::string(who) + ": t is not finite");
}

}  // namespace

std::string_view to_string(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::Cauchy: return "cauchy";
    case TransformKind::Nevanlinna: return "nevanlinna";
    case TransformKind::CharFn: return "charfn";
    case TransformKind::SelfEnergy: return "selfenergy";
    case TransformKind::FReciprocal: return "freciprocal";
  }
  return "unknown";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) noexcept {
  for (auto kind : {TransformKind::Cauchy, TransformKind::Nevanlinna, TransformKind::CharFn,
                    TransformKind::SelfEnergy, TransformKind::FReciprocal})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

Complex char_fn(const DiscreteMeasure& m, double t) {
  Complex sum(0.0);
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) sum += weights[j] * std::polar(1.0, t * atoms[j]);
  return sum;
}

Complex restricted_cauchy(const DiscreteMeasure& m, double t) {
  require_nonzero(t, "restricted Cauchy transform");
  return cauchy_transform(m, Complex(0.0, t));
}

Complex restricted_nevanlinna(const NevanlinnaData& d, double t) {
  require_nonzero(t, "restricted Nevanlinna transform");
  const Complex z(0.0, t);
  Complex sum(d.a);
  const auto atoms = d.rho.atoms();
  const auto weights = d.rho.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) sum += weights[j] * (1.0 + z * atoms[j]) / (z - atoms[j]);
  return sum;
}

Complex self_energy(const DiscreteMeasure& m, double t) {
  require_nonzero(t, "self-energy");
  require_probability(m, "self-energy");
  const Complex z(0.0, t);
  return z - 1.0 / cauchy_transform(m, z);
}

Complex cauchy_transform(const DiscreteMeasure& m, Complex z) {
  Complex sum(0.0);
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) sum += weights[j] / (z - atoms[j]);
  return sum;
}

Complex cauchy_derivative(const DiscreteMeasure& m, Complex z) {
  Complex sum(0.0);
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    const Complex d = z - atoms[j];
    sum -= weights[j] / (d * d);
  }
  return sum;
}

Complex f_transform(const DiscreteMeasure& m, Complex z) {
  if (z.imag() == 0.0) fail(ErrorCode::DomainError, "F-transform is evaluated off the real axis only");
  return 1.0 / cauchy_transform(m, z);
}

Complex laplace_charfn(const DiscreteMeasure& m, double w, LaplaceMethod method) {
  if (!(w > 0.0)) fail(ErrorCode::DomainError, "Laplace transform needs w > 0");
  if (method == LaplaceMethod::Quadrature) return laplace_charfn_quadrature(m, w).value;
  Complex sum(0.0);
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) sum += weights[j] / Complex(w, -atoms[j]);
  return sum;
}

QuadratureResult laplace_charfn_quadrature(const DiscreteMeasure& m, double w) {
  if (!(w > 0.0)) fail(ErrorCode::DomainError, "Laplace transform needs w > 0");
  const double cutoff = std::max(50.0 / w, 50.0);
  auto result = integrate([&](double r) { return char_fn(m, r) * std::exp(-w * r); }, 0.0, cutoff);
  result.error_estimate += m.total_mass() * std::exp(-w * cutoff) / w;
  return result;
}

QuadratureResult scaled_laplace_charfn(const DiscreteMeasure& m, double t) {
  constexpr double kCutoff = 60.0;
  auto result = integrate([&](double s) { return char_fn(m, t * s) * std::exp(-s); }, 0.0, kCutoff);
  result.error_estimate += m.total_mass() * std::exp(-kCutoff);
  return result;
}

Complex evaluate(TransformKind kind, const NevanlinnaData& d, double t) {
  switch (kind) {
    case TransformKind::Cauchy: return restricted_cauchy(d.rho, t);
    case TransformKind::Nevanlinna: return restricted_nevanlinna(d, t);
    case TransformKind::CharFn: return char_fn(d.rho, t);
    case TransformKind::SelfEnergy: return self_energy(d.rho, t);
    case TransformKind::FReciprocal:
      require_nonzero(t, "F-transform on the imaginary axis");
      return f_transform(d.rho, kI * t);
  }
  fail(ErrorCode::DomainError, "unknown transform kind");
}

ComplexGrid evaluate_grid(TransformKind kind, const NevanlinnaData& d, std::span<const double> ts) {
  ComplexGrid grid;
  grid.points.assign(ts.begin(), ts.end());
  grid.values.reserve(ts.size());
  for (double t : ts) grid.values.push_back(evaluate(kind, d, t));
  return grid;
}

}  // namespace nevlab::transforms

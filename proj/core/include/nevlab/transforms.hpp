#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "nevlab/grid.hpp"
#include "nevlab/measure.hpp"
#include "nevlab/polynomial.hpp"
#include "nevlab/quadrature.hpp"

// Imaginary-axis functionals of discrete measures. Every "restricted" function
// takes the real coordinate t of the point z = it and rejects t = 0.
namespace nevlab::transforms {

enum class TransformKind { Cauchy, Nevanlinna, CharFn, SelfEnergy, FReciprocal };

std::string_view to_string(TransformKind kind) noexcept;
std::optional<TransformKind> parse_transform_kind(std::string_view name) noexcept;

/// sum_j w_j exp(i t b_j), defined for every real t.
Complex char_fn(const DiscreteMeasure& m, double t);

/// g(it) = sum_j w_j / (it - b_j).
Complex restricted_cauchy(const DiscreteMeasure& m, double t);

/// k(it) = a + sum_j w_j (1 + i t b_j) / (it - b_j).
Complex restricted_nevanlinna(const NevanlinnaData& d, double t);

/// e(it) = it - 1/g(it); requires a probability measure.
Complex self_energy(const DiscreteMeasure& m, double t);

/// G(z) = sum_j w_j / (z - b_j) for z off the real axis.
Complex cauchy_transform(const DiscreteMeasure& m, Complex z);

/// G'(z) = -sum_j w_j / (z - b_j)^2.
Complex cauchy_derivative(const DiscreteMeasure& m, Complex z);

/// F(z) = 1/G(z). Throws DomainError for real z.
Complex f_transform(const DiscreteMeasure& m, Complex z);

enum class LaplaceMethod { Closed, Quadrature };

/// Laplace transform at w > 0 of the characteristic function,
/// int_0^inf char_fn(m, r) e^{-wr} dr.
///
/// Closed: sum_j w_j / (w - i b_j). Quadrature: adaptive Gauss-Kronrod on
/// [0, R], R = max(50/w, 50).
Complex laplace_charfn(const DiscreteMeasure& m, double w, LaplaceMethod method = LaplaceMethod::Closed);

/// Quadrature route with its error estimate; the truncation tail bound
/// mass * e^{-wR} / w is included in `error_estimate`.
QuadratureResult laplace_charfn_quadrature(const DiscreteMeasure& m, double w);

/// int_0^inf char_fn(m, t s) e^{-s} ds by quadrature, for any real t.
QuadratureResult scaled_laplace_charfn(const DiscreteMeasure& m, double t);

/// Evaluates one of the five functionals. `d.a` is used only by Nevanlinna;
/// FReciprocal is taken at z = it.
Complex evaluate(TransformKind kind, const NevanlinnaData& d, double t);

/// Grid evaluation in grid order.
ComplexGrid evaluate_grid(TransformKind kind, const NevanlinnaData& d, std::span<const double> ts);

}  // namespace nevlab::transforms

#pragma once

#include <span>
#include <vector>

#include "nevlab/grid.hpp"
#include "nevlab/measure.hpp"
#include "nevlab/polynomial.hpp"

// Self-energy of a discrete probability measure written as a Nevanlinna
// function: the atoms of rho are the critical points of the canonical
// polynomial (zeros of the Cauchy transform in general).
namespace nevlab::decomposition {

/// Minimum gap between atoms accepted as "distinct".
inline constexpr double kDistinctTolerance = 1e-9;

struct DecompositionResult {
  double a_b = 0.0;
  DiscreteMeasure rho_b;           // atoms xis, weights alpha / (1 + xi^2)
  std::vector<double> alphas;      // residues of the self-energy, all > 0
  std::vector<double> xis;         // sorted, interlacing the input atoms
  double mean = 0.0;               // first moment of the input measure
  std::vector<double> alphas_check;  // second, independent formula for alphas
  double alpha_agreement = 0.0;    // max relative gap between the two
};

/// prod_j (z - b_j). Throws DistinctnessViolated if two atoms are closer
/// than kDistinctTolerance.
Polynomial canonical_poly(std::span<const double> b);

/// Decomposition for the uniform measure on b (m >= 2 distinct reals).
///
/// alpha_k = -m P(xi_k) / P''(xi_k) with xi_k the roots of P'; the check
/// column uses m [sum 1/(xi_k-b_j)^2 - (sum 1/(xi_k-b_j))^2]^{-1}.
DecompositionResult decompose(std::span<const double> b);

/// Same decomposition for an arbitrary discrete probability measure with at
/// least two atoms: xis are the zeros of G, alpha_k = -D(xi_k)/N'(xi_k) for
/// G = N/D, checked against 1/sum_j w_j (xi_k - b_j)^-2.
DecompositionResult decompose_measure(const DiscreteMeasure& mu);

/// Compares it - 1/g(it) of the uniform measure on b against the Nevanlinna
/// transform of (a_b, rho_b) on the grid.
CorollaryReport verify_example_identity(std::span<const double> b, std::span<const double> t_grid);

/// Repeats `decompose`, feeding each step's xis back in as a uniform measure.
/// Throws SupportExhausted when fewer than two atoms remain.
std::vector<DecompositionResult> iterate_decomposition(std::span<const double> b, int steps);

/// True when exactly one xi lies strictly between each pair of consecutive
/// sorted atoms.
bool interlaces(std::span<const double> atoms, std::span<const double> xis);

}  // namespace nevlab::decomposition

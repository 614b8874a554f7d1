#pragma once

#include <span>

#include "nevlab/grid.hpp"
#include "nevlab/measure.hpp"

// Recovering (a, rho) from imaginary-axis values of the Nevanlinna and Cauchy
// transforms, and the Laplace-of-characteristic-function identities that make
// the recovery unique.
namespace nevlab::inversion {

struct RecoveredConstants {
  double a = 0.0;
  double total_mass = 0.0;
};

/// a = Re k(i), rho(R) = -Im k(i). Throws NotAPositiveMeasure when the
/// recovered mass is not positive.
RecoveredConstants recover_constants(Complex k_at_i);

/// Half-width of the excluded band around the removable singularity w = 1.
inline constexpr double kSingularityExclusion = 1e-3;

/// (i k(-iw) - i Re k(i) - w Im k(i)) / (w^2 - 1) for w > 0, |w - 1| > 1e-3.
/// Equals the Laplace transform of char_fn(rho, .) at w.
Complex theorem1_rhs(const NevanlinnaData& d, double w);

/// lhs: closed-form Laplace transform of char_fn(rho); rhs: theorem1_rhs.
CorollaryReport verify_theorem1(const NevanlinnaData& d, std::span<const double> w_grid);

/// For w > 1: quadrature of char_fn(rho) minus the closed-form transforms of
/// (1/2)(i k(i) e^{-r} + conj(i k(i)) e^{r}), against i k(-iw) / (w^2 - 1).
CorollaryReport verify_corollary1(const NevanlinnaData& d, std::span<const double> w_grid);

/// For w > 0: closed-form Laplace transform of char_fn(m) against
/// conj(i g(iw)).
CorollaryReport verify_corollary2(const DiscreteMeasure& m, std::span<const double> w_grid);

/// Quadrature of int_0^inf char_fn(m, ts) e^{-s} ds against (1/it) g(1/it),
/// t != 0.
CorollaryReport verify_scaled_laplace_identity(const DiscreteMeasure& m, std::span<const double> t_grid);

struct Corollary3Quantities {
  Complex z_mu;              // -g(i) = c + i d
  double a = 0.0;            // c / |z|^2
  double rho_mass = 0.0;     // d / |z|^2 - 1
  double cross_check_error = 0.0;  // vs (Re e(i), -Im e(i)) of the self-energy
};

/// Constants of the Nevanlinna form of the self-energy of a probability
/// measure, read off g(i). rho_mass is zero exactly for point masses.
Corollary3Quantities corollary3_quantities(const DiscreteMeasure& mu);

/// For w > 1, with z = -g(i) and rho the Nevanlinna measure of the
/// self-energy (from decompose_measure):
///   L[|z|^2 rho^ - (i/2)(conj(z) e^{-r} - z e^{r}); w]
///     = -i |z|^2 / ((w^2 - 1) g(-iw)).
CorollaryReport verify_corollary3(const DiscreteMeasure& mu, std::span<const double> w_grid);

struct RecoveryOptions {
  double residual_tolerance = 1e-6;       // relative to max |sample|
  double rank_tolerance = 1e-13;          // smallest/largest singular value
  double negative_weight_tolerance = 1e-8;
  double real_tolerance = 1e-2;           // |Im atom| accepted before snapping
};

/// Discrete measure with `degree_hint` atoms whose Cauchy transform matches
/// the samples g(it_j).
///
/// Fits g = N/D with monic D of degree n and N of degree n-1 by linear least
/// squares, takes the roots of D as atoms and refits the weights. Needs at
/// least 2n distinct nonzero sample points. Throws RankDeficient when the
/// hint exceeds the number of atoms in the data, ResidualTooLarge when the
/// fit does not reproduce the samples, NegativeWeight for weights below
/// -negative_weight_tolerance.
DiscreteMeasure recover_measure(const ComplexGrid& samples, int degree_hint,
                                const RecoveryOptions& options = {});

/// Same from samples of k(it): the sample at t = 1 gives (a, rho(R)), every
/// other sample is converted to g(it) = (k - a + it rho(R)) / (1 - t^2).
NevanlinnaData recover_nevanlinna(const ComplexGrid& samples, int degree_hint,
                                  const RecoveryOptions& options = {});

}  // namespace nevlab::inversion

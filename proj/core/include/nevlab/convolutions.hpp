#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nevlab/grid.hpp"
#include "nevlab/measure.hpp"
#include "nevlab/rational.hpp"

// Boolean convolution (self-energies add) is computed exactly in rational
// arithmetic and yields a discrete measure. Free convolution is only ever
// evaluated pointwise in the upper half-plane through subordination.
namespace nevlab::convolutions {

using FTransform = std::function<Complex(Complex)>;

/// G_m = N/D with D = prod_j (z - b_j) and N = sum_j w_j prod_{k != j} (z - b_k).
RationalFunction cauchy_rational(const DiscreteMeasure& m);

/// Reads a discrete measure off a rational Cauchy transform: atoms are the
/// real roots of the denominator, weights the residues. Removable poles are
/// dropped. Throws NonRealRoot, NegativeWeight, MultiplePole.
DiscreteMeasure measure_from_cauchy(const RationalFunction& g, double real_snap = 1e-8);

/// The probability measure whose self-energy is E_mu + E_nu.
DiscreteMeasure boolean_convolve(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// The probability measure whose self-energy is s * E_mu, s > 0.
DiscreteMeasure boolean_power(const DiscreteMeasure& mu, double s);

struct SubordinationOptions {
  double tolerance = 1e-13;   // relative Picard update
  int max_iterations = 10000;
};

struct SubordinationResult {
  Complex z;
  Complex omega1;
  Complex omega2;
  Complex f_value;  // F_{mu1 (+) mu2}(z) = F_mu1(omega1)
  int iterations = 0;
  // max(|F1(omega1) - F2(omega2)|, |omega1 + omega2 - f - z|) / max(1, |z|)
  double residual = 0.0;
};

FTransform f_transform_of(const DiscreteMeasure& m);

/// Solves F1(omega1) = F2(omega2) = f, omega1 + omega2 - f = z by Picard
/// iteration omega1 <- z + h2(z + h1(omega1)), h_j(w) = F_j(w) - w, started
/// at omega1 = z. Throws DomainError for Im z <= 0, NoConvergence after
/// max_iterations.
SubordinationResult subordinate(const FTransform& f1, const FTransform& f2, Complex z,
                                const SubordinationOptions& options = {});

SubordinationResult subordination(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, Complex z,
                                  const SubordinationOptions& options = {});

/// F of mu_1 (+) ... (+) mu_n at z, by left fold of binary subordination.
Complex free_f(std::span<const DiscreteMeasure> mus, Complex z, const SubordinationOptions& options = {});

/// F_{mu1 (+) mu2}(it) for each t > 0.
ComplexGrid free_f_grid(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, std::span<const double> t_grid,
                        const SubordinationOptions& options = {});

struct NewtonOptions {
  double tolerance = 1e-12;  // on |F(w) - target| / max(1, |target|)
  int max_iterations = 200;
};

/// Solves F_mu(w) = target by damped Newton from `start`, keeping Im w > 0.
Complex invert_f(const DiscreteMeasure& mu, Complex target, Complex start, const NewtonOptions& options = {});

/// V_mu(z) = F_mu^{-1}(z) - z with the inverse taken by Newton from w = z.
/// Reliable for z = it with t beyond about 2 max|atom|.
Complex v_transform(const DiscreteMeasure& mu, Complex z, const NewtonOptions& options = {});

/// V of mu1 (+) mu2 at z, inverting the subordination-based F by Newton with
/// a central-difference derivative.
Complex free_v_transform(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, Complex z,
                         const NewtonOptions& options = {.tolerance = 1e-11, .max_iterations = 200});

/// At z = it: (z - omega1) + (z - omega2) against z - F_mu2(omega2).
CorollaryReport verify_proposition1(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                                    std::span<const double> t_grid);

/// At z = it: (1/(n-1)) sum_j (z - omega_j) against z - F(z), with F from the
/// folded subordination and omega_j from Newton inversion of F_mu_j at F(z).
CorollaryReport verify_corollary4(std::span<const DiscreteMeasure> mus, std::span<const double> t_grid);

struct Remark2Report {
  CorollaryReport boolean_identity;  // part (a)
  CorollaryReport free_nu1;          // part (b), first equality
  CorollaryReport free_nu2;          // part (b), second equality
  [[nodiscard]] double max_abs_err() const;
};

Remark2Report verify_remark2(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, std::span<const double> t_grid);

/// V_{mu1 (+) mu2}(it) against V_mu1(it) + V_mu2(it).
CorollaryReport verify_v_additivity(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                                    std::span<const double> t_grid);

}  // namespace nevlab::convolutions

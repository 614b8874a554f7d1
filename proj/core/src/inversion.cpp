#include "nevlab/inversion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "nevlab/decomposition.hpp"
#include "nevlab/error.hpp"
#include "nevlab/polynomial.hpp"
#include "nevlab/transforms.hpp"

namespace nevlab::inversion {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_positive(double w, const char* who) {
  if (!(w > 0.0)) fail(ErrorCode::DomainError, std::string(who) + " needs w > 0");
}

void require_above_one(double w, const char* who) {
  if (!(w > 1.0)) fail(ErrorCode::DomainError, std::string(who) + " needs w > 1");
}

// Gauss-Newton on (atoms, weights) against the raw samples. The linear fit
// lands close to the minimiser; a few steps recover the digits it loses.
void gauss_newton_polish(const ComplexGrid& samples, std::vector<double>& atoms, Eigen::VectorXd& weights) {
  const auto rows = static_cast<Eigen::Index>(samples.points.size());
  const auto na = static_cast<Eigen::Index>(atoms.size());
  auto residual = [&](const std::vector<double>& b, const Eigen::VectorXd& w) {
    Eigen::VectorXd r(2 * rows);
    for (Eigen::Index j = 0; j < rows; ++j) {
      const Complex z(0.0, samples.points[static_cast<std::size_t>(j)]);
      Complex fit(0.0);
      for (Eigen::Index k = 0; k < na; ++k) fit += w(k) / (z - b[static_cast<std::size_t>(k)]);
      const Complex diff = fit - samples.values[static_cast<std::size_t>(j)];
      r(j) = diff.real();
      r(rows + j) = diff.imag();
    }
    return r;
  };
  Eigen::VectorXd r = residual(atoms, weights);
  for (int iter = 0; iter < 20; ++iter) {
    Eigen::MatrixXd J(2 * rows, 2 * na);
    for (Eigen::Index j = 0; j < rows; ++j) {
      const Complex z(0.0, samples.points[static_cast<std::size_t>(j)]);
      for (Eigen::Index k = 0; k < na; ++k) {
        const Complex inv = 1.0 / (z - atoms[static_cast<std::size_t>(k)]);
        const Complex d_atom = weights(k) * inv * inv;
        J(j, k) = d_atom.real();
        J(rows + j, k) = d_atom.imag();
        J(j, na + k) = inv.real();
        J(rows + j, na + k) = inv.imag();
      }
    }
    const Eigen::VectorXd step = J.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) return;
    std::vector<double> trial_atoms = atoms;
    for (Eigen::Index k = 0; k < na; ++k) trial_atoms[static_cast<std::size_t>(k)] += step(k);
    const Eigen::VectorXd trial_weights = weights + step.tail(na);
    const Eigen::VectorXd trial_r = residual(trial_atoms, trial_weights);
    if (!(trial_r.norm() < r.norm())) return;
    atoms = std::move(trial_atoms);
    weights = trial_weights;
    r = trial_r;
  }
}

}  // namespace

RecoveredConstants recover_constants(Complex k_at_i) {
  const double mass = -k_at_i.imag();
  if (!(mass > 0.0))
    fail(ErrorCode::NotAPositiveMeasure, "-Im k(i) = " + std::to_string(mass) + " is not positive");
  return {k_at_i.real(), mass};
}

Complex theorem1_rhs(const NevanlinnaData& d, double w) {
  require_positive(w, "theorem1_rhs");
  if (std::abs(w - 1.0) <= kSingularityExclusion)
    fail(ErrorCode::DomainError, "theorem1_rhs excludes |w - 1| <= 1e-3");
  const Complex k_i = transforms::restricted_nevanlinna(d, 1.0);
  const Complex k_w = transforms::restricted_nevanlinna(d, -w);
  return (kI * k_w - kI * k_i.real() - w * k_i.imag()) / (w * w - 1.0);
}

CorollaryReport verify_theorem1(const NevanlinnaData& d, std::span<const double> w_grid) {
  CorollaryReport report;
  for (double w : w_grid) {
    const Complex rhs = theorem1_rhs(d, w);
    report.add(w, transforms::laplace_charfn(d.rho, w), rhs);
  }
  return report;
}

CorollaryReport verify_corollary1(const NevanlinnaData& d, std::span<const double> w_grid) {
  const Complex c = kI * transforms::restricted_nevanlinna(d, 1.0);
  CorollaryReport report;
  for (double w : w_grid) {
    require_above_one(w, "corollary 1");
    const Complex subtracted = 0.5 * (c / (w + 1.0) + std::conj(c) / (w - 1.0));
    const Complex lhs = transforms::laplace_charfn(d.rho, w, transforms::LaplaceMethod::Quadrature) - subtracted;
    const Complex rhs = kI * transforms::restricted_nevanlinna(d, -w) / (w * w - 1.0);
    report.add(w, lhs, rhs);
  }
  return report;
}

CorollaryReport verify_corollary2(const DiscreteMeasure& m, std::span<const double> w_grid) {
  CorollaryReport report;
  for (double w : w_grid) {
    require_positive(w, "corollary 2");
    report.add(w, transforms::laplace_charfn(m, w), std::conj(kI * transforms::restricted_cauchy(m, w)));
  }
  return report;
}

CorollaryReport verify_scaled_laplace_identity(const DiscreteMeasure& m, std::span<const double> t_grid) {
  CorollaryReport report;
  for (double t : t_grid) {
    if (t == 0.0) fail(ErrorCode::DomainError, "scaled Laplace identity needs t != 0");
    const Complex z = 1.0 / (kI * t);
    report.add(t, transforms::scaled_laplace_charfn(m, t).value, z * transforms::cauchy_transform(m, z));
  }
  return report;
}

Corollary3Quantities corollary3_quantities(const DiscreteMeasure& mu) {
  require_probability(mu, "corollary 3");
  Corollary3Quantities q;
  q.z_mu = -transforms::restricted_cauchy(mu, 1.0);
  const double norm2 = std::norm(q.z_mu);
  q.a = q.z_mu.real() / norm2;
  q.rho_mass = q.z_mu.imag() / norm2 - 1.0;
  const Complex e = transforms::self_energy(mu, 1.0);
  q.cross_check_error = std::max(std::abs(q.a - e.real()), std::abs(q.rho_mass + e.imag()));
  return q;
}

CorollaryReport verify_corollary3(const DiscreteMeasure& mu, std::span<const double> w_grid) {
  const auto q = corollary3_quantities(mu);
  const double norm2 = std::norm(q.z_mu);
  std::optional<DiscreteMeasure> rho;
  if (mu.size() >= 2) rho = decomposition::decompose_measure(mu).rho_b;

  CorollaryReport report;
  for (double w : w_grid) {
    require_above_one(w, "corollary 3");
    const Complex laplace_rho = rho ? transforms::laplace_charfn(*rho, w) : Complex(0.0);
    const Complex lhs =
        norm2 * laplace_rho - 0.5 * kI * (std::conj(q.z_mu) / (w + 1.0) - q.z_mu / (w - 1.0));
    const Complex rhs = -kI * norm2 / ((w * w - 1.0) * transforms::restricted_cauchy(mu, -w));
    report.add(w, lhs, rhs);
  }
  return report;
}

DiscreteMeasure recover_measure(const ComplexGrid& samples, int degree_hint, const RecoveryOptions& options) {
  samples.validate();
  if (degree_hint < 1) fail(ErrorCode::DomainError, "degree_hint must be >= 1");
  const auto n = static_cast<Eigen::Index>(degree_hint);
  const auto rows = static_cast<Eigen::Index>(samples.points.size());
  if (rows < 2 * n)
    fail(ErrorCode::DomainError, "need at least " + std::to_string(2 * n) + " samples for degree " +
                                     std::to_string(degree_hint));
  {
    auto sorted = samples.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::DomainError, "sample points must be distinct");
  }

  // g_j D(u_j) - N(u_j) = 0 with D monic, in the variable u = (z - c) / s
  // that maps the sampled stretch of the axis onto [-i, i]. Monomials in z
  // itself make the system hopelessly ill-conditioned past three atoms.
  const auto [lo, hi] = std::minmax_element(samples.points.begin(), samples.points.end());
  const Complex center(0.0, 0.5 * (*lo + *hi));
  const double half_width = std::max(0.5 * (*hi - *lo), 1e-3 * std::max(1.0, std::abs(*hi)));
  Eigen::MatrixXcd A(rows, 2 * n);
  Eigen::VectorXcd rhs(rows);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const Complex u = (Complex(0.0, samples.points[static_cast<std::size_t>(j)]) - center) / half_width;
    const Complex g = samples.values[static_cast<std::size_t>(j)];
    Complex uk(1.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      A(j, k) = g * uk;
      A(j, n + k) = -uk;
      uk *= u;
    }
    rhs(j) = -g * uk;
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index k = 0; k < scale.size(); ++k) {
    if (scale(k) == 0.0) scale(k) = 1.0;
    A.col(k) /= scale(k);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= options.rank_tolerance * sv(0))
    fail(ErrorCode::RankDeficient, "rational fit of degree " + std::to_string(degree_hint) +
                                       " is rank deficient; the data has fewer atoms");
  Eigen::VectorXcd x = svd.solve(rhs);
  x.array() /= scale.array().cast<Complex>();

  std::vector<Complex> dcoeffs(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index k = 0; k < n; ++k) dcoeffs[static_cast<std::size_t>(k)] = x(k);
  dcoeffs.back() = Complex(1.0);
  auto roots = poly_roots(Polynomial(std::move(dcoeffs)));
  for (Complex& r : roots) r = center + half_width * r;

  std::vector<double> atoms;
  for (Complex r : roots) {
    if (std::abs(r.imag()) > options.real_tolerance * std::max(1.0, std::abs(r)))
      fail(ErrorCode::ResidualTooLarge, "fitted pole off the real axis; data is not a discrete measure of the hinted size");
    atoms.push_back(r.real());
  }

  // Weights: real least squares on stacked real and imaginary parts.
  const auto na = static_cast<Eigen::Index>(atoms.size());
  Eigen::MatrixXd B(2 * rows, na);
  Eigen::VectorXd y(2 * rows);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const Complex z(0.0, samples.points[static_cast<std::size_t>(j)]);
    for (Eigen::Index k = 0; k < na; ++k) {
      const Complex basis = 1.0 / (z - atoms[static_cast<std::size_t>(k)]);
      B(j, k) = basis.real();
      B(rows + j, k) = basis.imag();
    }
    y(j) = samples.values[static_cast<std::size_t>(j)].real();
    y(rows + j) = samples.values[static_cast<std::size_t>(j)].imag();
  }
  Eigen::VectorXd weights = B.colPivHouseholderQr().solve(y);
  gauss_newton_polish(samples, atoms, weights);
  std::vector<double> kept_atoms;
  std::vector<double> kept_weights;
  for (Eigen::Index k = 0; k < na; ++k) {
    const double w = weights(k);
    if (w < -options.negative_weight_tolerance)
      fail(ErrorCode::NegativeWeight, "recovered weight " + std::to_string(w) + " is negative");
    if (w <= 0.0) continue;
    kept_atoms.push_back(atoms[static_cast<std::size_t>(k)]);
    kept_weights.push_back(w);
  }
  if (kept_atoms.empty()) fail(ErrorCode::ResidualTooLarge, "no atom with positive weight recovered");
  auto measure = DiscreteMeasure::make(std::move(kept_atoms), std::move(kept_weights));

  double worst = 0.0;
  double largest = 0.0;
  for (std::size_t j = 0; j < samples.points.size(); ++j) {
    const Complex fitted = transforms::restricted_cauchy(measure, samples.points[j]);
    worst = std::max(worst, std::abs(fitted - samples.values[j]));
    largest = std::max(largest, std::abs(samples.values[j]));
  }
  if (worst > options.residual_tolerance * std::max(largest, 1e-300))
    fail(ErrorCode::ResidualTooLarge, "fit residual " + std::to_string(worst) + " exceeds tolerance");
  return measure;
}

NevanlinnaData recover_nevanlinna(const ComplexGrid& samples, int degree_hint, const RecoveryOptions& options) {
  samples.validate();
  std::optional<RecoveredConstants> constants;
  for (std::size_t j = 0; j < samples.points.size(); ++j)
    if (samples.points[j] == 1.0) constants = recover_constants(samples.values[j]);
  if (!constants) fail(ErrorCode::DomainError, "k samples must include t = 1");

  ComplexGrid cauchy;
  for (std::size_t j = 0; j < samples.points.size(); ++j) {
    const double t = samples.points[j];
    if (std::abs(std::abs(t) - 1.0) <= kSingularityExclusion) continue;
    cauchy.points.push_back(t);
    cauchy.values.push_back((samples.values[j] - constants->a + kI * t * constants->total_mass) / (1.0 - t * t));
  }
  auto rho = recover_measure(cauchy, degree_hint, options);
  if (std::abs(rho.total_mass() - constants->total_mass) >
      options.residual_tolerance * std::max(1.0, constants->total_mass))
    fail(ErrorCode::ResidualTooLarge, "recovered mass disagrees with -Im k(i)");
  return {constants->a, std::move(rho)};
}

}  // namespace nevlab::inversion

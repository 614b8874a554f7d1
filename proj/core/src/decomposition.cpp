#include "nevlab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nevlab/error.hpp"
#include "nevlab/transforms.hpp"

namespace nevlab::decomposition {

namespace {

std::vector<double> sorted_distinct(std::span<const double> b) {
  std::vector<double> s(b.begin(), b.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] - s[i - 1] <= kDistinctTolerance)
      fail(ErrorCode::DistinctnessViolated,
           "atoms " + std::to_string(s[i - 1]) + " and " + std::to_string(s[i]) + " are not distinct");
  return s;
}

// One Newton step on p from a root estimate that Aberth already put within
// rounding distance; cleans up the last couple of ulps.
double polish(const Polynomial& p, const Polynomial& dp, double x) {
  const double slope = dp(x).real();
  if (slope == 0.0) return x;
  const double next = x - p(x).real() / slope;
  return std::abs(p(next)) <= std::abs(p(x)) ? next : x;
}

// Newton on sum 1/(x - b_j), whose zeros are the critical points of the
// product polynomial. Unlike P'(x) in monomial form it does not lose digits
// when atoms cluster.
double polish_critical_point(std::span<const double> atoms, double x) {
  for (int iter = 0; iter < 4; ++iter) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (double bj : atoms) {
      const double r = 1.0 / (x - bj);
      s1 += r;
      s2 += r * r;
    }
    const double next = x + s1 / s2;
    if (!std::isfinite(next) || next == x) break;
    x = next;
  }
  return x;
}

// P(x) and P''(x) for P = prod (x - b_j), both from products of linear
// factors. P'' = 2 sum_{j<l} prod_{k != j,l} (x - b_k).
std::pair<double, double> product_and_second_derivative(std::span<const double> atoms, double x) {
  double value = 1.0;
  for (double bj : atoms) value *= x - bj;
  double second = 0.0;
  for (std::size_t j = 0; j < atoms.size(); ++j)
    for (std::size_t l = j + 1; l < atoms.size(); ++l) {
      double term = 2.0;
      for (std::size_t k = 0; k < atoms.size(); ++k)
        if (k != j && k != l) term *= x - atoms[k];
      second += term;
    }
  return {value, second};
}

DecompositionResult assemble(std::vector<double> xis, std::vector<double> alphas,
                             std::vector<double> check, double mean) {
  double shift = 0.0;
  double agreement = 0.0;
  std::vector<double> weights(xis.size());
  for (std::size_t k = 0; k < xis.size(); ++k) {
    if (!(alphas[k] > 0.0))
      fail(ErrorCode::NegativeWeight, "alpha_" + std::to_string(k + 1) + " = " +
                                          std::to_string(alphas[k]) + " is not positive");
    const double scale = 1.0 + xis[k] * xis[k];
    weights[k] = alphas[k] / scale;
    shift += alphas[k] * xis[k] / scale;
    agreement = std::max(agreement, std::abs(alphas[k] - check[k]) / alphas[k]);
  }
  auto rho = DiscreteMeasure::make(xis, std::move(weights));
  return DecompositionResult{
      .a_b = mean - shift,
      .rho_b = std::move(rho),
      .alphas = std::move(alphas),
      .xis = std::move(xis),
      .mean = mean,
      .alphas_check = std::move(check),
      .alpha_agreement = agreement,
  };
}

}  // namespace

Polynomial canonical_poly(std::span<const double> b) {
  const auto s = sorted_distinct(b);
  return Polynomial::from_roots(std::span<const double>(s));
}

DecompositionResult decompose(std::span<const double> b) {
  if (b.size() < 2) fail(ErrorCode::DomainError, "decomposition needs at least two atoms");
  const auto atoms = sorted_distinct(b);
  const double m = static_cast<double>(atoms.size());
  const Polynomial p = Polynomial::from_roots(std::span<const double>(atoms));

  auto xis = real_roots(p.derivative());
  std::vector<double> alphas(xis.size());
  std::vector<double> check(xis.size());
  for (std::size_t k = 0; k < xis.size(); ++k) {
    const double xi = xis[k] = polish_critical_point(atoms, xis[k]);
    const auto [pv, ddpv] = product_and_second_derivative(atoms, xi);
    alphas[k] = -m * pv / ddpv;
    double s1 = 0.0;
    double s2 = 0.0;
    for (double bj : atoms) {
      s1 += 1.0 / (xi - bj);
      s2 += 1.0 / ((xi - bj) * (xi - bj));
    }
    check[k] = m / (s2 - s1 * s1);
  }
  const double mean = std::accumulate(atoms.begin(), atoms.end(), 0.0) / m;
  return assemble(std::move(xis), std::move(alphas), std::move(check), mean);
}

DecompositionResult decompose_measure(const DiscreteMeasure& mu) {
  require_probability(mu, "decompose_measure");
  if (mu.size() < 2) fail(ErrorCode::DomainError, "decomposition needs at least two atoms");
  const auto atoms = mu.atoms();
  const auto weights = mu.weights();

  const Polynomial den = Polynomial::from_roots(atoms);
  Polynomial num;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::vector<double> others;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (k != j) others.push_back(atoms[k]);
    num += Polynomial::from_roots(std::span<const double>(others)) * Complex(weights[j]);
  }
  const Polynomial dnum = num.derivative();

  auto xis = real_roots(num);
  std::vector<double> alphas(xis.size());
  std::vector<double> check(xis.size());
  for (std::size_t k = 0; k < xis.size(); ++k) {
    const double xi = xis[k] = polish(num, dnum, xis[k]);
    alphas[k] = (-den(xi) / dnum(xi)).real();
    double s2 = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) s2 += weights[j] / ((xi - atoms[j]) * (xi - atoms[j]));
    check[k] = 1.0 / s2;
  }
  double mean = 0.0;
  for (std::size_t j = 0; j < atoms.size(); ++j) mean += weights[j] * atoms[j];
  return assemble(std::move(xis), std::move(alphas), std::move(check), mean);
}

CorollaryReport verify_example_identity(std::span<const double> b, std::span<const double> t_grid) {
  const auto result = decompose(b);
  const auto mu = DiscreteMeasure::uniform(std::vector<double>(b.begin(), b.end()));
  const NevanlinnaData data{result.a_b, result.rho_b};
  CorollaryReport report;
  for (double t : t_grid)
    report.add(t, transforms::self_energy(mu, t), transforms::restricted_nevanlinna(data, t));
  return report;
}

std::vector<DecompositionResult> iterate_decomposition(std::span<const double> b, int steps) {
  if (steps < 1) fail(ErrorCode::DomainError, "iteration needs at least one step");
  std::vector<DecompositionResult> out;
  std::vector<double> support(b.begin(), b.end());
  for (int step = 0; step < steps; ++step) {
    if (support.size() < 2)
      fail(ErrorCode::SupportExhausted,
           "step " + std::to_string(step + 1) + " starts from a single atom");
    out.push_back(decompose(support));
    support = out.back().xis;
  }
  return out;
}

bool interlaces(std::span<const double> atoms, std::span<const double> xis) {
  std::vector<double> a(atoms.begin(), atoms.end());
  std::vector<double> x(xis.begin(), xis.end());
  std::sort(a.begin(), a.end());
  std::sort(x.begin(), x.end());
  if (a.size() != x.size() + 1) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!(a[k] < x[k] && x[k] < a[k + 1])) return false;
  return true;
}

}  // namespace nevlab::decomposition

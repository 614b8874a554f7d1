#include "nevlab/convolutions.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "nevlab/error.hpp"
#include "nevlab/polynomial.hpp"
#include "nevlab/transforms.hpp"

namespace nevlab::convolutions {

namespace {

constexpr Complex kI(0.0, 1.0);

const Polynomial kIdentity{Complex(0.0), Complex(1.0)};

std::string describe(Complex z) {
  return std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i";
}

double scale_of(Complex z) { return std::max(1.0, std::abs(z)); }

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr double kNegligibleMass = 1e-10;

// F_mu(x) and F_mu'(x) on the real line from the atom sums directly.
struct RealF {
  double value;
  double slope;
  bool ok;
};

RealF real_f(const DiscreteMeasure& m, double x) {
  double g = 0.0;
  double dg = 0.0;
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    const double d = x - atoms[j];
    if (d == 0.0) return {0.0, 1.0 / weights[j], true};  // F vanishes at an atom with slope 1/w
    g += weights[j] / d;
    dg += weights[j] / (d * d);
  }
  if (g == 0.0) return {0.0, 0.0, false};
  return {1.0 / g, dg / (g * g), true};
}

// Root of f in [lo, hi] given f(lo) and f(hi) of opposite sign.
template <class F>
double bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi) {
  std::uintmax_t iterations = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi,
                                                   boost::math::tools::eps_tolerance<double>(), iterations);
  return 0.5 * (r.first + r.second);
}

// Zeros of G_mu. G decreases from +inf to -inf across each gap between
// consecutive atoms, so there is exactly one per gap.
std::vector<double> cauchy_zeros(const DiscreteMeasure& m) {
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  auto g = [&](double x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) sum += weights[j] / (x - atoms[j]);
    return sum;
  };
  std::vector<double> zeros;
  for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
    const double lo = std::nextafter(atoms[k], atoms[k + 1]);
    const double hi = std::nextafter(atoms[k + 1], atoms[k]);
    zeros.push_back(bracketed_root(g, lo, hi, g(lo), g(hi)));
  }
  return zeros;
}

// The measure whose F-transform is phi, for phi real on the line with
// phi' >= 1 away from its poles. phi then rises from -inf to +inf between
// consecutive poles (and beyond the outermost ones), so each of those
// intervals holds exactly one atom, with mass 1/phi'.
//
// Bracketing replaces root finding on the expanded numerator polynomial,
// whose removable roots sit on top of genuine ones whenever an input has a
// light atom or the inputs share poles.
template <class Phi>
DiscreteMeasure atoms_between_poles(std::vector<double> poles, Phi&& phi) {
  std::sort(poles.begin(), poles.end());
  std::vector<double> distinct;
  for (double p : poles)
    if (distinct.empty() || p - distinct.back() > 4.0 * kEps * std::max(1.0, std::abs(p))) distinct.push_back(p);

  auto value = [&](double x) { return phi(x).value; };
  // Step in from a pole until phi has the sign it takes just beside it. The
  // computed pole can sit a few ulps on the wrong side of the true one.
  auto inward = [&](double pole, double toward, double sign) {
    double delta = 4.0 * kEps * std::max(1.0, std::abs(pole));
    for (int k = 0; k < 60; ++k, delta *= 4.0) {
      const double x = pole + std::copysign(delta, toward - pole);
      if ((toward - x) * (toward - pole) <= 0.0) break;
      const RealF f = phi(x);
      if (f.ok && f.value * sign > 0.0) return std::pair{x, f.value};
    }
    fail(ErrorCode::NoConvergence, "no sign change beside pole " + std::to_string(pole));
  };
  // Walk outward from `from` until phi takes the sign it has at infinity.
  auto outward = [&](double from, double direction) {
    double step = std::max(1.0, std::abs(from));
    for (int k = 0; k < 200; ++k, step *= 2.0) {
      const double x = from + direction * step;
      const RealF f = phi(x);
      if (f.ok && f.value * direction > 0.0) return std::pair{x, f.value};
    }
    fail(ErrorCode::NoConvergence, "no sign change toward infinity");
  };

  std::vector<double> atoms;
  std::vector<double> weights;
  auto solve = [&](std::pair<double, double> lo, std::pair<double, double> hi) {
    const double x = bracketed_root(value, lo.first, hi.first, lo.second, hi.second);
    const RealF f = phi(x);
    if (!f.ok || !(f.slope > 0.0)) fail(ErrorCode::NoConvergence, "degenerate atom at " + std::to_string(x));
    atoms.push_back(x);
    weights.push_back(1.0 / f.slope);
  };

  if (distinct.empty()) {
    solve(outward(0.0, -1.0), outward(0.0, 1.0));
  } else {
    solve(outward(distinct.front(), -1.0), inward(distinct.front(), distinct.front() - 1.0, 1.0));
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
      solve(inward(distinct[i], distinct[i + 1], -1.0), inward(distinct[i + 1], distinct[i], 1.0));
    solve(inward(distinct.back(), distinct.back() + 1.0, -1.0), outward(distinct.back(), 1.0));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return DiscreteMeasure::make(std::move(atoms), std::move(weights));
}

}  // namespace

RationalFunction cauchy_rational(const DiscreteMeasure& m) {
  const auto atoms = m.atoms();
  const auto weights = m.weights();
  Polynomial num;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    Polynomial term = Polynomial::constant(weights[j]);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (k != j) term = term * Polynomial{Complex(-atoms[k]), Complex(1.0)};
    num += term;
  }
  return {std::move(num), Polynomial::from_roots(atoms)};
}

DiscreteMeasure measure_from_cauchy(const RationalFunction& g, double real_snap) {
  const auto poles = poly_roots(g.den, RootOptions{.real_snap = real_snap});
  // The residues of a probability Cauchy transform sum to one, so a residue
  // below kNegligibleMass is a pole shared with the numerator. A relative
  // threshold on |num(pole)| alone misreads a light atom next to a numerator
  // zero as removable.
  std::vector<double> atoms;
  std::vector<double> weights;
  for (Complex pole : poles) {
    const Complex residue = residue_simple_pole(g, pole, ResidueOptions{.removable_tolerance = 0.0});
    if (std::abs(residue) <= kNegligibleMass) continue;
    if (pole.imag() != 0.0) fail(ErrorCode::NonRealRoot, "pole " + describe(pole) + " is not real");
    if (!(residue.real() > 0.0))
      fail(ErrorCode::NegativeWeight, "residue at " + describe(pole) + " is " + describe(residue));
    atoms.push_back(pole.real());
    weights.push_back(residue.real());
  }
  return DiscreteMeasure::make(std::move(atoms), std::move(weights));
}

DiscreteMeasure boolean_convolve(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require_probability(mu, "boolean_convolve");
  require_probability(nu, "boolean_convolve");
  // F_{mu (+) nu} = F_mu + F_nu - z; its poles are the zeros of G_mu and G_nu.
  auto poles = cauchy_zeros(mu);
  const auto more = cauchy_zeros(nu);
  poles.insert(poles.end(), more.begin(), more.end());
  return atoms_between_poles(std::move(poles), [&](double x) {
    const RealF a = real_f(mu, x);
    const RealF b = real_f(nu, x);
    return RealF{a.value + b.value - x, a.slope + b.slope - 1.0, a.ok && b.ok};
  });
}

DiscreteMeasure boolean_power(const DiscreteMeasure& mu, double s) {
  require_probability(mu, "boolean_power");
  if (!(s > 0.0) || !std::isfinite(s)) fail(ErrorCode::DomainError, "boolean power needs s > 0");
  // z - s E_mu(z) = (1 - s) z + s F_mu(z).
  return atoms_between_poles(cauchy_zeros(mu), [&](double x) {
    const RealF a = real_f(mu, x);
    return RealF{(1.0 - s) * x + s * a.value, (1.0 - s) + s * a.slope, a.ok};
  });
}

FTransform f_transform_of(const DiscreteMeasure& m) {
  return [m](Complex z) { return transforms::f_transform(m, z); };
}

SubordinationResult subordinate(const FTransform& f1, const FTransform& f2, Complex z,
                                const SubordinationOptions& options) {
  if (!(z.imag() > 0.0)) fail(ErrorCode::DomainError, "subordination needs Im z > 0");
  SubordinationResult r;
  r.z = z;
  Complex omega1 = z;
  bool converged = false;
  double last_step = 0.0;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Complex omega2 = z + f1(omega1) - omega1;
    const Complex next = z + f2(omega2) - omega2;
    last_step = std::abs(next - omega1);
    omega1 = next;
    r.iterations = iter;
    if (last_step <= options.tolerance * scale_of(omega1)) {
      converged = true;
      break;
    }
  }
  r.omega1 = omega1;
  r.f_value = f1(omega1);
  r.omega2 = z + r.f_value - omega1;
  const Complex f2_value = f2(r.omega2);
  r.residual = std::max(std::abs(r.f_value - f2_value), std::abs(r.omega1 + r.omega2 - r.f_value - z)) / scale_of(z);
  if (!converged)
    fail(ErrorCode::NoConvergence, "subordination at " + describe(z) + " stopped after " +
                                       std::to_string(r.iterations) + " iterations, residual " +
                                       std::to_string(r.residual));
  return r;
}

SubordinationResult subordination(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, Complex z,
                                  const SubordinationOptions& options) {
  require_probability(mu1, "subordination");
  require_probability(mu2, "subordination");
  return subordinate(f_transform_of(mu1), f_transform_of(mu2), z, options);
}

Complex free_f(std::span<const DiscreteMeasure> mus, Complex z, const SubordinationOptions& options) {
  if (mus.empty()) fail(ErrorCode::EmptyInput, "free_f needs at least one measure");
  for (const auto& m : mus) require_probability(m, "free_f");
  if (mus.size() == 1) return transforms::f_transform(mus.front(), z);
  const auto head = mus.first(mus.size() - 1);
  const FTransform folded = [head, &options](Complex w) { return free_f(head, w, options); };
  return subordinate(folded, f_transform_of(mus.back()), z, options).f_value;
}

ComplexGrid free_f_grid(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, std::span<const double> t_grid,
                        const SubordinationOptions& options) {
  ComplexGrid grid;
  for (double t : t_grid) {
    if (!(t > 0.0)) fail(ErrorCode::DomainError, "free_f_grid needs t > 0");
    grid.points.push_back(t);
    grid.values.push_back(subordination(mu1, mu2, kI * t, options).f_value);
  }
  return grid;
}

Complex invert_f(const DiscreteMeasure& mu, Complex target, Complex start, const NewtonOptions& options) {
  Complex w = start;
  auto residual_at = [&](Complex x) { return transforms::f_transform(mu, x) - target; };
  Complex res = residual_at(w);
  const double goal = options.tolerance * scale_of(target);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (std::abs(res) <= goal) return w;
    const Complex g = transforms::cauchy_transform(mu, w);
    const Complex slope = -transforms::cauchy_derivative(mu, w) / (g * g);
    Complex step = res / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
      // Critical point of F; nudge off it and retry.
      w += Complex(1e-4, 1e-4) * scale_of(w);
      res = residual_at(w);
      continue;
    }
    // Halve until the residual drops and w stays in the upper half-plane.
    for (int halving = 0; halving < 40; ++halving) {
      const Complex trial = w - step;
      if (trial.imag() > 0.0) {
        const Complex trial_res = residual_at(trial);
        if (std::abs(trial_res) < std::abs(res)) {
          w = trial;
          res = trial_res;
          break;
        }
      }
      step *= 0.5;
      if (halving == 39) fail(ErrorCode::NoConvergence, "Newton inversion of F stalled at " + describe(w));
    }
  }
  if (std::abs(res) <= goal) return w;
  fail(ErrorCode::NoConvergence, "Newton inversion of F did not reach tolerance at target " + describe(target));
}

Complex v_transform(const DiscreteMeasure& mu, Complex z, const NewtonOptions& options) {
  require_probability(mu, "v_transform");
  if (!(z.imag() > 0.0)) fail(ErrorCode::DomainError, "v_transform needs Im z > 0");
  return invert_f(mu, z, z, options) - z;
}

Complex free_v_transform(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, Complex z,
                         const NewtonOptions& options) {
  require_probability(mu1, "free_v_transform");
  require_probability(mu2, "free_v_transform");
  if (!(z.imag() > 0.0)) fail(ErrorCode::DomainError, "free_v_transform needs Im z > 0");
  auto f = [&](Complex w) { return subordination(mu1, mu2, w).f_value; };
  auto f_slope = [](const DiscreteMeasure& m, Complex w) {
    const Complex g = transforms::cauchy_transform(m, w);
    return -transforms::cauchy_derivative(m, w) / (g * g);
  };
  // F'(z) = F1'(w1) w1'(z), and differentiating w1 = z + h2(z + h1(w1)) with
  // h = F - id gives w1' = (1 + h2') / (1 - h1' h2').
  auto slope_at = [&](Complex w) {
    const auto r = subordination(mu1, mu2, w);
    const Complex d1 = f_slope(mu1, r.omega1);
    const Complex h1 = d1 - 1.0;
    const Complex h2 = f_slope(mu2, r.omega2) - 1.0;
    return d1 * (1.0 + h2) / (1.0 - h1 * h2);
  };
  Complex w = z;
  Complex res = f(w) - z;
  const double goal = options.tolerance * scale_of(z);
  int polish = 2;  // extra steps once the goal is met, kept only if they help
  for (int iter = 0; iter < options.max_iterations && (std::abs(res) > goal || polish-- > 0); ++iter) {
    const bool polishing = std::abs(res) <= goal;
    Complex step = res / slope_at(w);
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
      if (polishing) break;
      fail(ErrorCode::NoConvergence, "free F has a critical point at " + describe(w));
    }
    for (int halving = 0;; ++halving) {
      const Complex trial = w - step;
      if (trial.imag() > 0.0) {
        const Complex trial_res = f(trial) - z;
        if (std::abs(trial_res) < std::abs(res)) {
          w = trial;
          res = trial_res;
          break;
        }
      }
      step *= 0.5;
      if (polishing && halving == 2) break;
      if (halving == 40) fail(ErrorCode::NoConvergence, "Newton inversion of free F stalled at " + describe(w));
    }
  }
  if (std::abs(res) > goal)
    fail(ErrorCode::NoConvergence, "Newton inversion of free F did not reach tolerance at " + describe(z));
  return w - z;
}

CorollaryReport verify_proposition1(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                                    std::span<const double> t_grid) {
  CorollaryReport report;
  for (double t : t_grid) {
    if (!(t > 0.0)) fail(ErrorCode::DomainError, "proposition 1 grid needs t > 0");
    const Complex z = kI * t;
    const auto r = subordination(mu1, mu2, z);
    const Complex boolean_side = (z - r.omega1) + (z - r.omega2);
    const Complex free_side = z - transforms::f_transform(mu2, r.omega2);
    report.add(t, boolean_side, free_side);
  }
  return report;
}

CorollaryReport verify_corollary4(std::span<const DiscreteMeasure> mus, std::span<const double> t_grid) {
  if (mus.size() < 2) fail(ErrorCode::DomainError, "corollary 4 needs n >= 2 measures");
  const double n = static_cast<double>(mus.size());
  double spread = 0.0;
  for (const auto& mu : mus) spread = std::max(spread, mu.max_abs_atom());
  // F_mu(w) = f has several solutions in the upper half-plane. The
  // subordination branch is the one with omega ~ z far up the axis, so each
  // Newton solve is continued down from there.
  const double top = 16.0 * (1.0 + spread) * n;
  CorollaryReport report;
  for (double t : t_grid) {
    if (!(t > 0.0)) fail(ErrorCode::DomainError, "corollary 4 grid needs t > 0");
    std::vector<double> path{t};
    while (path.back() < top) path.push_back(path.back() * 1.25);
    std::vector<Complex> omegas;
    Complex f;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Complex z = kI * *it;
      f = free_f(mus, z);
      if (omegas.empty()) {
        for (const auto& mu : mus) omegas.push_back(invert_f(mu, f, z));
      } else {
        for (std::size_t j = 0; j < mus.size(); ++j) omegas[j] = invert_f(mus[j], f, omegas[j] + (z - kI * *(it - 1)));
      }
    }
    const Complex z = kI * t;
    Complex sum(0.0);
    for (Complex omega : omegas) {
      if (omega.imag() < t * (1.0 - 1e-9))
        fail(ErrorCode::NoConvergence, "Newton inversion landed off the subordination branch at " + describe(z));
      sum += z - omega;
    }
    report.add(t, sum / (n - 1.0), z - f);
  }
  return report;
}

double Remark2Report::max_abs_err() const {
  return std::max({boolean_identity.max_abs_err, free_nu1.max_abs_err, free_nu2.max_abs_err});
}

Remark2Report verify_remark2(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, std::span<const double> t_grid) {
  // int 1/(1 - itx) m(dx)
  auto moment_series = [](const DiscreteMeasure& m, double t) {
    Complex sum(0.0);
    for (std::size_t j = 0; j < m.size(); ++j) sum += m.weights()[j] / (1.0 - kI * t * m.atoms()[j]);
    return sum;
  };
  // g * int 1/(1 - x g) m(dx)
  auto composed = [](const DiscreteMeasure& m, Complex g) {
    Complex sum(0.0);
    for (std::size_t j = 0; j < m.size(); ++j) sum += m.weights()[j] / (1.0 - m.atoms()[j] * g);
    return g * sum;
  };

  const auto boolean = boolean_convolve(mu1, mu2);
  Remark2Report report;
  for (double t : t_grid) {
    const Complex lhs = (1.0 / moment_series(mu1, t) - 1.0) + (1.0 / moment_series(mu2, t) - 1.0);
    report.boolean_identity.add(t, lhs, 1.0 / moment_series(boolean, t) - 1.0);
    if (!(t > 0.0)) continue;
    const auto r = subordination(mu1, mu2, kI * t);
    const Complex g_free = 1.0 / r.f_value;
    report.free_nu1.add(t, composed(mu1, 1.0 / r.omega1), g_free);
    report.free_nu2.add(t, composed(mu2, 1.0 / r.omega2), g_free);
  }
  return report;
}

CorollaryReport verify_v_additivity(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2,
                                    std::span<const double> t_grid) {
  CorollaryReport report;
  for (double t : t_grid) {
    const Complex z = kI * t;
    report.add(t, free_v_transform(mu1, mu2, z), v_transform(mu1, z) + v_transform(mu2, z));
  }
  return report;
}

}  // namespace nevlab::convolutions

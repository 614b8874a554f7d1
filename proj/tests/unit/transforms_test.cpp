#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nevlab/error.hpp"
#include "nevlab/sampling.hpp"
#include "nevlab/transforms.hpp"
#include "oracles.hpp"

namespace nevlab::transforms {
namespace {

constexpr Complex kI(0.0, 1.0);

const DiscreteMeasure kDirac0 = DiscreteMeasure::dirac(0.0);
const DiscreteMeasure kBernoulli = make_measure({-1.0, 1.0}, {0.5, 0.5});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected nevlab::Error";
  return ErrorCode::EmptyInput;
}

std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

TEST(CharFn, Examples) {
  for (double t : {-3.0, 0.0, 0.7, 12.0}) {
    EXPECT_EQ(char_fn(kDirac0, t), Complex(1.0));
    EXPECT_NEAR(std::abs(char_fn(kBernoulli, t) - std::cos(t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(char_fn(DiscreteMeasure::dirac(2.5), t) - std::exp(kI * 2.5 * t)), 0.0, 1e-15);
  }
}

TEST(CharFn, BoundedByMassAndExactAtZero) {
  sampling::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    EXPECT_EQ(char_fn(d.rho, 0.0).real(), d.rho.total_mass());
    for (double t : {-4.0, -0.3, 0.9, 7.0}) EXPECT_LE(std::abs(char_fn(d.rho, t)), d.rho.total_mass() * (1 + 1e-15));
  }
}

TEST(RestrictedCauchy, Examples) {
  EXPECT_NEAR(std::abs(restricted_cauchy(kDirac0, 1.0) + kI), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(restricted_cauchy(kBernoulli, 1.0) + 0.5 * kI), 0.0, 1e-16);
  EXPECT_EQ(code_of([] { restricted_cauchy(kDirac0, 0.0); }), ErrorCode::DomainError);
}

TEST(RestrictedNevanlinna, Examples) {
  for (double t : {0.5, 1.0, 3.0, -2.0})
    EXPECT_NEAR(std::abs(restricted_nevanlinna({0.0, kDirac0}, t) - (-kI / t)), 0.0, 1e-15);
  const NevanlinnaData d{2.0, DiscreteMeasure::dirac(0.0, 3.0)};
  EXPECT_NEAR(std::abs(restricted_nevanlinna(d, 1.0) - Complex(2.0, -3.0)), 0.0, 1e-15);
  EXPECT_EQ(code_of([&] { restricted_nevanlinna(d, 0.0); }), ErrorCode::DomainError);
}

TEST(RestrictedNevanlinna, ValueAtIGivesConstants) {
  sampling::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    const Complex k = restricted_nevanlinna(d, 1.0);
    EXPECT_NEAR(k.real(), d.a, 1e-12 * std::max(1.0, std::abs(d.a)));
    EXPECT_NEAR(-k.imag(), d.rho.total_mass(), 1e-12 * d.rho.total_mass());
  }
}

// k(it) = a + (1 - t^2) g(it) - it rho(R), pointwise.
TEST(RestrictedNevanlinna, RelationToCauchy) {
  sampling::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    for (double t : {-5.0, -1.0, -0.2, 0.3, 1.0, 2.0, 9.0}) {
      const Complex k = restricted_nevanlinna(d, t);
      const Complex rel = d.a + (1.0 - t * t) * restricted_cauchy(d.rho, t) - kI * t * d.rho.total_mass();
      EXPECT_LE(std::abs(k - rel), 1e-12 * std::max(1.0, std::abs(k)));
    }
  }
}

TEST(SelfEnergy, Examples) {
  for (double t : {0.3, 1.0, 4.0, -2.0}) {
    EXPECT_NEAR(std::abs(self_energy(DiscreteMeasure::dirac(1.7), t) - 1.7), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(self_energy(kBernoulli, t) - (-kI / t)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(self_energy(kDirac0, t)), 0.0, 1e-15);
  }
  EXPECT_EQ(code_of([] { self_energy(kDirac0, 0.0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { self_energy(DiscreteMeasure::dirac(0.0, 2.0), 1.0); }), ErrorCode::NotAProbabilityMeasure);
}

TEST(FTransform, Examples) {
  const Complex z(0.4, 1.3);
  EXPECT_NEAR(std::abs(f_transform(DiscreteMeasure::dirac(2.0), z) - (z - 2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f_transform(kBernoulli, z) - (z - 1.0 / z)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f_transform(kBernoulli, 2.0 * kI) - 2.5 * kI), 0.0, 1e-15);
  EXPECT_EQ(code_of([] { f_transform(kBernoulli, 1.0); }), ErrorCode::DomainError);
}

// Im F(z) >= Im z on the upper half-plane.
TEST(FTransform, NevanlinnaProperty) {
  sampling::Rng rng(31);
  std::uniform_real_distribution<double> re(-8.0, 8.0);
  std::uniform_real_distribution<double> im(1e-3, 5.0);
  for (int i = 0; i < 100; ++i) {
    const auto m = sampling::random_probability_measure(rng);
    for (int k = 0; k < 10; ++k) {
      const Complex z(re(rng), im(rng));
      EXPECT_GE(f_transform(m, z).imag(), z.imag() * (1.0 - 1e-12));
    }
  }
}

TEST(LaplaceCharFn, ClosedFormExamples) {
  for (double w : {0.2, 1.0, 3.0}) {
    EXPECT_NEAR(std::abs(laplace_charfn(kDirac0, w) - 1.0 / w), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(laplace_charfn(DiscreteMeasure::dirac(-2.0), w) - 1.0 / Complex(w, 2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(laplace_charfn(kBernoulli, w) - oracle::laplace_cos(w)), 0.0, 1e-15);
  }
  EXPECT_EQ(code_of([] { laplace_charfn(kDirac0, 0.0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { laplace_charfn(kDirac0, -1.0, LaplaceMethod::Quadrature); }), ErrorCode::DomainError);
}

TEST(LaplaceCharFn, QuadratureMatchesSimpsonOracle) {
  const auto m = make_measure({-2.0, 0.5, 3.0}, {0.2, 0.5, 0.3});
  const double w = 0.8;
  const Complex simpson = oracle::simpson(
      [&](double r) {
        Complex s(0.0);
        for (std::size_t j = 0; j < m.size(); ++j) s += m.weights()[j] * std::exp(kI * r * m.atoms()[j]);
        return s * std::exp(-w * r);
      },
      0.0, 62.5, 200000);
  EXPECT_NEAR(std::abs(laplace_charfn(m, w, LaplaceMethod::Quadrature) - simpson), 0.0, 1e-9);
}

TEST(LaplaceCharFn, ClosedAgreesWithQuadrature) {
  sampling::Rng rng(41);
  sampling::MeasureShape shape;
  shape.lo = -10.0;
  shape.hi = 10.0;
  for (int i = 0; i < 12; ++i) {
    const auto m = sampling::random_probability_measure(rng, shape);
    for (double w : {0.1, 0.5, 1.0, 2.5, 10.0}) {
      const auto q = laplace_charfn_quadrature(m, w);
      EXPECT_LE(std::abs(q.value - laplace_charfn(m, w)), 1e-6) << "w=" << w;
      EXPECT_LT(q.error_estimate, 1e-5);
    }
  }
}

TEST(Transforms, ConjugateSymmetry) {
  sampling::Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto mu = sampling::random_probability_measure(rng);
    const auto d = sampling::random_nevanlinna_data(rng);
    for (double t : {0.1, 0.9, 1.0, 3.3, 20.0}) {
      for (auto kind : {TransformKind::Cauchy, TransformKind::Nevanlinna, TransformKind::CharFn}) {
        EXPECT_LE(std::abs(evaluate(kind, d, -t) - std::conj(evaluate(kind, d, t))), 1e-14)
            << to_string(kind);
      }
      const NevanlinnaData pd{0.0, mu};
      for (auto kind : {TransformKind::SelfEnergy, TransformKind::FReciprocal}) {
        const Complex v = evaluate(kind, pd, t);
        EXPECT_LE(std::abs(evaluate(kind, pd, -t) - std::conj(v)), 1e-14 * std::max(1.0, std::abs(v)))
            << to_string(kind);
      }
    }
  }
}

// int_0^inf char_fn(ts) e^{-s} ds = (1/it) g(1/it), and -> rho(R) as t -> 0.
TEST(Transforms, ScaledLaplaceIdentity) {
  sampling::Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    const auto atoms = vec(d.rho.atoms());
    const auto weights = vec(d.rho.weights());
    for (double t : {-2.0, -0.5, 0.25, 1.0, 3.0}) {
      const Complex z = 1.0 / (kI * t);
      const Complex expected = z * oracle::cauchy(atoms, weights, z);
      EXPECT_LE(std::abs(scaled_laplace_charfn(d.rho, t).value - expected), 1e-6);
    }
    // z g(z) - rho(R) = sum w b / (z - b), so the gap is at most t sum w |b| / (1 - t max|b|).
    const double t = 1e-4;
    double first_moment = 0.0;
    for (std::size_t k = 0; k < atoms.size(); ++k) first_moment += weights[k] * std::abs(atoms[k]);
    const double bound = t * first_moment / (1.0 - t * d.rho.max_abs_atom());
    EXPECT_LE(std::abs(scaled_laplace_charfn(d.rho, t).value - d.rho.total_mass()), bound * (1 + 1e-6) + 1e-12);
  }
}

TEST(Transforms, KindNamesRoundTrip) {
  for (auto kind : {TransformKind::Cauchy, TransformKind::Nevanlinna, TransformKind::CharFn,
                    TransformKind::SelfEnergy, TransformKind::FReciprocal})
    EXPECT_EQ(parse_transform_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_transform_kind("laplace").has_value());
}

TEST(Transforms, GridKeepsOrder) {
  const std::vector<double> ts{3.0, -1.0, 0.5};
  const auto grid = evaluate_grid(TransformKind::Cauchy, {0.0, kBernoulli}, ts);
  ASSERT_EQ(grid.values.size(), 3u);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_EQ(grid.points[i], ts[i]);
    EXPECT_EQ(grid.values[i], restricted_cauchy(kBernoulli, ts[i]));
  }
  EXPECT_THROW(evaluate_grid(TransformKind::Cauchy, {0.0, kBernoulli}, std::vector<double>{1.0, 0.0}), Error);
}

}  // namespace
}  // namespace nevlab::transforms

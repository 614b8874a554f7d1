#include <gtest/gtest.h>

#include <cmath>

#include "nevlab/decomposition.hpp"
#include "nevlab/error.hpp"
#include "nevlab/sampling.hpp"
#include "nevlab/transforms.hpp"
#include "oracles.hpp"

namespace nevlab::decomposition {
namespace {

constexpr Complex kI(0.0, 1.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected nevlab::Error";
  return ErrorCode::EmptyInput;
}

std::vector<double> random_support(sampling::Rng& rng, int m, double lo = -10.0, double hi = 10.0) {
  sampling::MeasureShape shape;
  shape.lo = lo;
  shape.hi = hi;
  shape.min_gap = 0.05;
  return sampling::random_atoms(rng, m, shape);
}

TEST(CanonicalPoly, Examples) {
  EXPECT_EQ(canonical_poly(std::vector<double>{-1.0, 1.0}), (Polynomial{-1.0, 0.0, 1.0}));
  EXPECT_EQ(canonical_poly(std::vector<double>{0.0, 1.0, 2.0}), (Polynomial{0.0, 2.0, -3.0, 1.0}));
  EXPECT_EQ(code_of([] { canonical_poly(std::vector<double>{1.0, 1.0}); }), ErrorCode::DistinctnessViolated);
  EXPECT_EQ(code_of([] { canonical_poly(std::vector<double>{1.0, 1.0 + 1e-10}); }), ErrorCode::DistinctnessViolated);
}

TEST(Decompose, TwoPoint) {
  const auto r = decompose(std::vector<double>{-1.0, 1.0});
  EXPECT_NEAR(r.a_b, 0.0, 1e-15);
  ASSERT_EQ(r.xis.size(), 1u);
  EXPECT_NEAR(r.xis[0], 0.0, 1e-15);
  EXPECT_NEAR(r.alphas[0], 1.0, 1e-15);
  ASSERT_EQ(r.rho_b.size(), 1u);
  EXPECT_NEAR(r.rho_b.weights()[0], 1.0, 1e-15);
  EXPECT_EQ(r.mean, 0.0);
}

TEST(Decompose, ThreePoint) {
  const auto r = decompose(std::vector<double>{0.0, 1.0, 2.0});
  ASSERT_EQ(r.xis.size(), 2u);
  EXPECT_NEAR(r.xis[0], 1.0 - 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(r.xis[1], 1.0 + 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(r.alphas[0], 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(r.alphas[1], 1.0 / 3.0, 1e-10);
  EXPECT_LE(r.alpha_agreement, 1e-12);
}

TEST(Decompose, SingleAtomIsRejected) {
  EXPECT_EQ(code_of([] { decompose(std::vector<double>{3.0}); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { decompose(std::vector<double>{0.0, 0.0, 1.0}); }), ErrorCode::DistinctnessViolated);
}

TEST(VerifyExampleIdentity, Examples) {
  const std::vector<double> t{0.5, 1.0, 2.0};
  auto r = verify_example_identity(std::vector<double>{-1.0, 1.0}, t);
  EXPECT_LE(r.max_abs_err, 1e-12);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(std::abs(r.lhs[i] + kI / t[i]), 0.0, 1e-14);

  r = verify_example_identity(std::vector<double>{0.0, 1.0, 2.0}, std::vector<double>{0.5, 1.0, 3.0});
  EXPECT_LE(r.max_abs_err, 1e-9);
  r = verify_example_identity(std::vector<double>{1.0, 2.0, 3.0, 4.0}, std::vector<double>{1.0});
  EXPECT_LE(r.max_abs_err, 1e-9);
}

TEST(IterateDecomposition, Examples) {
  const auto steps = iterate_decomposition(std::vector<double>{0.0, 1.0, 2.0}, 2);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_NEAR(steps[0].xis[0], 1.0 - 1.0 / std::sqrt(3.0), 1e-14);
  ASSERT_EQ(steps[1].xis.size(), 1u);
  EXPECT_NEAR(steps[1].xis[0], 1.0, 1e-14);

  const auto one = iterate_decomposition(std::vector<double>{-1.0, 1.0}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0].a_b, 0.0, 1e-15);
  EXPECT_EQ(code_of([] { iterate_decomposition(std::vector<double>{-1.0, 1.0}, 2); }), ErrorCode::SupportExhausted);
}

TEST(IterateDecomposition, EveryStepSatisfiesTheIdentity) {
  sampling::Rng rng(8);
  const auto atoms = random_support(rng, 7, -5.0, 5.0);
  const auto steps = iterate_decomposition(atoms, 5);
  std::vector<double> support = atoms;
  for (const auto& s : steps) {
    EXPECT_TRUE(interlaces(support, s.xis));
    EXPECT_LE(verify_example_identity(support, linspace(0.25, 5.0, 20)).max_abs_err, 1e-9);
    support = s.xis;
  }
}

TEST(DecomposeProperties, AlphaFormulasAgreePositiveAndInterlace) {
  sampling::Rng rng(13);
  for (int m = 2; m <= 10; ++m) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto atoms = random_support(rng, m);
      const auto r = decompose(atoms);
      EXPECT_LE(r.alpha_agreement, 1e-8) << "m=" << m;
      for (double a : r.alphas) EXPECT_GT(a, 0.0);
      EXPECT_TRUE(interlaces(atoms, r.xis));
    }
  }
}

// P'/P = sum 1/(z - b_j); P''/P = (sum 1/(z - b_j))^2 - sum 1/(z - b_j)^2.
TEST(DecomposeProperties, LogarithmicDerivativeIdentities) {
  sampling::Rng rng(19);
  std::uniform_real_distribution<double> coord(-6.0, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto atoms = random_support(rng, 2 + trial % 7, -5.0, 5.0);
    const auto p = canonical_poly(atoms);
    const auto dp = p.derivative();
    const auto ddp = dp.derivative();
    for (int k = 0; k < 5; ++k) {
      const Complex z(coord(rng), coord(rng));
      Complex s1(0.0);
      Complex s2(0.0);
      for (double b : atoms) {
        s1 += 1.0 / (z - b);
        s2 += 1.0 / ((z - b) * (z - b));
      }
      EXPECT_LE(std::abs(dp(z) / p(z) - s1), 1e-10 * std::abs(s1));
      EXPECT_LE(std::abs(ddp(z) / p(z) - (s1 * s1 - s2)), 1e-10 * std::max(1.0, std::abs(s1 * s1 - s2)));
    }
  }
}

// W_m(z) = (z P' - m P) / P' = mean + sum alpha_j / (z - xi_j).
TEST(DecomposeProperties, PartialFractionIdentity) {
  sampling::Rng rng(29);
  std::uniform_real_distribution<double> coord(-6.0, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto atoms = random_support(rng, 2 + trial % 8, -5.0, 5.0);
    const double m = static_cast<double>(atoms.size());
    const auto r = decompose(atoms);
    for (int k = 0; k < 5; ++k) {
      const Complex z(coord(rng), coord(rng));
      Complex logd(0.0);
      for (double b : atoms) logd += 1.0 / (z - b);
      const Complex w = z - m / logd;  // (z P' - m P) / P' with P'/P = logd
      Complex fractions(r.mean);
      for (std::size_t j = 0; j < r.xis.size(); ++j) fractions += r.alphas[j] / (z - r.xis[j]);
      EXPECT_LE(std::abs(w - fractions), 1e-9 * std::max(1.0, std::abs(w)));
    }
  }
}

TEST(DecomposeProperties, ExampleIdentityOnTwentyPointGrid) {
  sampling::Rng rng(37);
  const auto grid = linspace(0.1, 10.0, 20);
  for (int m = 2; m <= 8; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto atoms = random_support(rng, m, -5.0, 5.0);
      EXPECT_LE(verify_example_identity(atoms, grid).max_abs_err, 1e-9) << "m=" << m;
    }
  }
}

TEST(DecomposeMeasure, UniformCaseMatchesDecompose) {
  const std::vector<double> atoms{-2.0, -0.5, 1.0, 4.0};
  const auto a = decompose(atoms);
  const auto b = decompose_measure(DiscreteMeasure::uniform(atoms));
  ASSERT_EQ(a.xis.size(), b.xis.size());
  for (std::size_t k = 0; k < a.xis.size(); ++k) {
    EXPECT_NEAR(a.xis[k], b.xis[k], 1e-13);
    EXPECT_NEAR(a.alphas[k], b.alphas[k], 1e-12);
  }
  EXPECT_NEAR(a.a_b, b.a_b, 1e-13);
}

TEST(DecomposeMeasure, WeightedSelfEnergyIsNevanlinna) {
  sampling::Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = sampling::random_probability_measure(rng);
    const auto r = decompose_measure(mu);
    EXPECT_LE(r.alpha_agreement, 1e-8);
    EXPECT_TRUE(interlaces(std::vector<double>(mu.atoms().begin(), mu.atoms().end()), r.xis));
    const NevanlinnaData d{r.a_b, r.rho_b};
    for (double t : {0.2, 1.0, 5.0}) {
      const Complex e = transforms::self_energy(mu, t);
      EXPECT_LE(std::abs(e - transforms::restricted_nevanlinna(d, t)), 1e-9 * std::max(1.0, std::abs(e)));
    }
  }
}

}  // namespace
}  // namespace nevlab::decomposition

#include <gtest/gtest.h>

#include <cmath>

#include "nevlab/error.hpp"
#include "nevlab/inversion.hpp"
#include "nevlab/sampling.hpp"
#include "nevlab/transforms.hpp"
#include "oracles.hpp"

namespace nevlab::inversion {
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

ComplexGrid cauchy_samples(const DiscreteMeasure& m, const std::vector<double>& ts) {
  ComplexGrid g;
  for (double t : ts) {
    g.points.push_back(t);
    g.values.push_back(oracle::cauchy({m.atoms().begin(), m.atoms().end()}, {m.weights().begin(), m.weights().end()},
                                      Complex(0.0, t)));
  }
  return g;
}

TEST(RecoverConstants, Examples) {
  auto c = recover_constants(Complex(2.0, -3.0));
  EXPECT_EQ(c.a, 2.0);
  EXPECT_EQ(c.total_mass, 3.0);
  c = recover_constants(-kI);
  EXPECT_EQ(c.a, 0.0);
  EXPECT_EQ(c.total_mass, 1.0);
  EXPECT_EQ(code_of([] { recover_constants(Complex(1.0, 1.0)); }), ErrorCode::NotAPositiveMeasure);
  EXPECT_EQ(code_of([] { recover_constants(Complex(1.0, 0.0)); }), ErrorCode::NotAPositiveMeasure);
}

TEST(RecoverConstants, InvertsNevanlinnaAtI) {
  sampling::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    const auto c = recover_constants(transforms::restricted_nevanlinna(d, 1.0));
    EXPECT_NEAR(c.a, d.a, 1e-12);
    EXPECT_NEAR(c.total_mass, d.rho.total_mass(), 1e-12);
  }
}

TEST(Theorem1Rhs, Examples) {
  for (double w : {0.3, 0.5, 2.0, 3.0, 7.0}) {
    EXPECT_NEAR(std::abs(theorem1_rhs({0.0, kDirac0}, w) - 1.0 / w), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(theorem1_rhs({5.0, kDirac0}, w) - 1.0 / w), 0.0, 1e-13);
  }
  EXPECT_EQ(code_of([] { theorem1_rhs({0.0, kDirac0}, 1.0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { theorem1_rhs({0.0, kDirac0}, 1.0005); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { theorem1_rhs({0.0, kDirac0}, 0.0); }), ErrorCode::DomainError);
  EXPECT_NO_THROW(theorem1_rhs({0.0, kDirac0}, 1.002));
}

TEST(VerifyTheorem1, Examples) {
  EXPECT_LE(verify_theorem1({0.0, kDirac0}, std::vector<double>{0.5, 2.0, 3.0}).max_abs_err, 1e-12);
  EXPECT_LE(verify_theorem1({1.0, kBernoulli}, std::vector<double>{0.5, 2.0, 5.0}).max_abs_err, 1e-10);
  const auto r = verify_theorem1({0.0, DiscreteMeasure::dirac(3.0)}, std::vector<double>{2.0});
  const Complex expected = 1.0 / Complex(2.0, -3.0);
  EXPECT_NEAR(std::abs(r.lhs[0] - expected), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.rhs[0] - expected), 0.0, 1e-14);
}

TEST(VerifyTheorem1, RandomCorpus) {
  sampling::Rng rng(67);
  const std::vector<double> grid{0.3, 0.7, 1.5, 2.0, 4.0, 8.0};
  for (int i = 0; i < 100; ++i)
    EXPECT_LE(verify_theorem1(sampling::random_nevanlinna_data(rng), grid).max_abs_err, 1e-9);
}

TEST(VerifyCorollary1, Examples) {
  auto r = verify_corollary1({0.0, kDirac0}, std::vector<double>{2.0});
  EXPECT_NEAR(r.rhs[0].real(), -1.0 / 6.0, 1e-15);
  EXPECT_NEAR(std::abs(r.lhs[0] - (-1.0 / 6.0)), 0.0, 1e-8);

  r = verify_corollary1({0.0, kBernoulli}, std::vector<double>{2.0});
  const double expected = oracle::laplace_cos(2.0) - oracle::laplace_cosh(2.0);
  EXPECT_NEAR(std::abs(r.lhs[0] - expected), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(r.rhs[0] - expected), 0.0, 1e-14);

  EXPECT_EQ(code_of([] { verify_corollary1({0.0, kDirac0}, std::vector<double>{0.5}); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { verify_corollary1({0.0, kDirac0}, std::vector<double>{1.0}); }), ErrorCode::DomainError);
}

TEST(VerifyCorollary1, RandomCorpus) {
  sampling::Rng rng(71);
  for (int i = 0; i < 10; ++i)
    EXPECT_LE(verify_corollary1(sampling::random_nevanlinna_data(rng), std::vector<double>{1.5, 2.0, 4.0}).max_abs_err,
              1e-6);
}

TEST(VerifyCorollary2, Examples) {
  for (double w : {0.5, 2.0, 6.0}) {
    auto r = verify_corollary2(DiscreteMeasure::dirac(1.5), std::vector<double>{w});
    EXPECT_NEAR(std::abs(r.rhs[0] - 1.0 / Complex(w, -1.5)), 0.0, 1e-15);
    EXPECT_LE(r.max_abs_err, 1e-15);
    r = verify_corollary2(kDirac0, std::vector<double>{w});
    EXPECT_NEAR(std::abs(r.rhs[0] - 1.0 / w), 0.0, 1e-15);
  }
  const auto r = verify_corollary2(kBernoulli, std::vector<double>{2.0});
  EXPECT_NEAR(std::abs(r.lhs[0] - 0.4), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.rhs[0] - 0.4), 0.0, 1e-15);
  EXPECT_EQ(code_of([] { verify_corollary2(kDirac0, std::vector<double>{-1.0}); }), ErrorCode::DomainError);
}

TEST(VerifyCorollary2, RandomCorpus) {
  sampling::Rng rng(73);
  for (int i = 0; i < 100; ++i)
    EXPECT_LE(verify_corollary2(sampling::random_nevanlinna_data(rng).rho, std::vector<double>{0.1, 0.5, 1.0, 3.0, 10.0})
                  .max_abs_err,
              1e-13);
}

TEST(ScaledLaplaceIdentity, RandomCorpus) {
  sampling::Rng rng(79);
  for (int i = 0; i < 10; ++i)
    EXPECT_LE(verify_scaled_laplace_identity(sampling::random_probability_measure(rng),
                                             std::vector<double>{-1.0, 0.5, 2.0})
                  .max_abs_err,
              1e-6);
}

TEST(Corollary3, Examples) {
  auto q = corollary3_quantities(kDirac0);
  EXPECT_NEAR(std::abs(q.z_mu - kI), 0.0, 1e-15);
  EXPECT_NEAR(q.a, 0.0, 1e-15);
  EXPECT_NEAR(q.rho_mass, 0.0, 1e-15);

  q = corollary3_quantities(kBernoulli);
  EXPECT_NEAR(std::abs(q.z_mu - 0.5 * kI), 0.0, 1e-15);
  EXPECT_NEAR(q.a, 0.0, 1e-15);
  EXPECT_NEAR(q.rho_mass, 1.0, 1e-15);  // e(it) = -i/t, i.e. rho = delta_0
  EXPECT_LE(q.cross_check_error, 1e-15);

  q = corollary3_quantities(DiscreteMeasure::dirac(1.0));
  EXPECT_NEAR(std::abs(q.z_mu - Complex(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(q.a, 1.0, 1e-15);
  EXPECT_NEAR(q.rho_mass, 0.0, 1e-15);
}

TEST(Corollary3, CrossCheckAndLaplaceIdentity) {
  sampling::Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    const auto mu = sampling::random_probability_measure(rng);
    const auto q = corollary3_quantities(mu);
    EXPECT_LE(q.cross_check_error, 1e-9);
    EXPECT_GT(q.rho_mass, 0.0);
    EXPECT_LE(verify_corollary3(mu, std::vector<double>{1.1, 1.5, 2.0, 4.0, 8.0}).max_rel_err(), 1e-10);
  }
  EXPECT_LE(verify_corollary3(DiscreteMeasure::dirac(-2.0), std::vector<double>{1.5, 3.0}).max_abs_err, 1e-14);
  EXPECT_EQ(code_of([] { verify_corollary3(kBernoulli, std::vector<double>{0.9}); }), ErrorCode::DomainError);
}

TEST(RecoverMeasure, Examples) {
  auto m = recover_measure(cauchy_samples(kBernoulli, {0.5, 1.0, 1.5, 2.0}), 2);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_NEAR(m.atoms()[0], -1.0, 1e-8);
  EXPECT_NEAR(m.atoms()[1], 1.0, 1e-8);
  EXPECT_NEAR(m.weights()[0], 0.5, 1e-8);
  EXPECT_NEAR(m.weights()[1], 0.5, 1e-8);

  const auto d3 = DiscreteMeasure::dirac(3.0);
  m = recover_measure(cauchy_samples(d3, {0.5, 1.0}), 1);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_NEAR(m.atoms()[0], 3.0, 1e-12);
  EXPECT_NEAR(m.weights()[0], 1.0, 1e-12);

  EXPECT_EQ(code_of([&] { recover_measure(cauchy_samples(d3, {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}), 3); }),
            ErrorCode::RankDeficient);
}

TEST(RecoverMeasure, Errors) {
  EXPECT_EQ(code_of([] { recover_measure(cauchy_samples(kBernoulli, {0.5, 1.0, 1.5}), 2); }), ErrorCode::DomainError);
  ComplexGrid bad = cauchy_samples(kBernoulli, {0.5, 1.0, 1.5, 2.0});
  bad.points[1] = 0.0;
  EXPECT_EQ(code_of([&] { recover_measure(bad, 2); }), ErrorCode::DomainError);
  // Three atoms cannot be squeezed into a degree-1 fit.
  const auto three = make_measure({-2.0, 0.0, 2.0}, {0.3, 0.3, 0.4});
  EXPECT_THROW(recover_measure(cauchy_samples(three, {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}), 1), Error);
}

TEST(RecoverMeasure, RoundTrip) {
  sampling::Rng rng(89);
  sampling::MeasureShape shape;
  shape.min_atoms = 1;
  shape.max_atoms = 5;
  shape.min_gap = 0.5;
  // A light atom wedged between heavy ones is only pinned to ~1e-4 by
  // double-precision samples on the axis, so every weight gets a floor.
  shape.min_weight = 0.05;
  for (int i = 0; i < 100; ++i) {
    const auto mu = sampling::random_probability_measure(rng, shape);
    const int n = static_cast<int>(mu.size());
    const auto back = recover_measure(transforms::evaluate_grid(transforms::TransformKind::Cauchy, {0.0, mu},
                                                                linspace(0.25, 8.0, 6 * n)),
                                      n);
    ASSERT_EQ(back.size(), mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) {
      EXPECT_NEAR(back.atoms()[k], mu.atoms()[k], 1e-7);
      EXPECT_NEAR(back.weights()[k], mu.weights()[k], 1e-7);
    }
  }
}

TEST(RecoverNevanlinna, RoundTrip) {
  sampling::Rng rng(97);
  for (int i = 0; i < 30; ++i) {
    const auto d = sampling::random_nevanlinna_data(rng);
    const int n = static_cast<int>(d.rho.size());
    auto ts = linspace(0.25, 8.0, 6 * n);
    ts.push_back(1.0);
    const auto back = recover_nevanlinna(
        transforms::evaluate_grid(transforms::TransformKind::Nevanlinna, d, ts), n);
    EXPECT_NEAR(back.a, d.a, 1e-10);
    ASSERT_EQ(back.rho.size(), d.rho.size());
    for (std::size_t k = 0; k < d.rho.size(); ++k) EXPECT_NEAR(back.rho.atoms()[k], d.rho.atoms()[k], 1e-6);
  }
  const auto grid = transforms::evaluate_grid(transforms::TransformKind::Nevanlinna, {0.0, kBernoulli},
                                              std::vector<double>{0.5, 2.0, 3.0, 4.0});
  EXPECT_EQ(code_of([&] { recover_nevanlinna(grid, 2); }), ErrorCode::DomainError);
}

}  // namespace
}  // namespace nevlab::inversion

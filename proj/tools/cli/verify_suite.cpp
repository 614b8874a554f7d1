#include "cli/verify_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include "nevlab/convolutions.hpp"
#include "nevlab/decomposition.hpp"
#include "nevlab/inversion.hpp"
#include "nevlab/sampling.hpp"
#include "nevlab/transforms.hpp"

namespace nevlab::cli {

namespace {

using sampling::Rng;
constexpr Complex kI(0.0, 1.0);

struct Check {
  Suite suite;
  const char* name;
  double tolerance;
  std::function<double(Rng&)> run;  // returns the worst error seen
};

const DiscreteMeasure& bernoulli() {
  static const DiscreteMeasure b = make_measure({-1.0, 1.0}, {0.5, 0.5});
  return b;
}

double measure_gap(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max({worst, std::abs(a.atoms()[k] - b.atoms()[k]), std::abs(a.weights()[k] - b.weights()[k])});
  return worst;
}

// FNV-1a, so check seeds are the same on every standard library.
std::uint32_t name_hash(std::string_view name) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : name) h = (h ^ c) * 16777619u;
  return h;
}

const std::vector<double> kTheoremGrid{0.3, 0.7, 1.5, 2.0, 4.0, 8.0};
const std::vector<double> kAboveOneGrid{1.5, 2.0, 4.0, 8.0};
const std::vector<double> kFreeGrid{0.5, 1.0, 2.0, 4.0, 8.0};

std::vector<Check> registry() {
  std::vector<Check> checks;
  auto add = [&](Suite s, const char* name, double tol, std::function<double(Rng&)> fn) {
    checks.push_back({s, name, tol, std::move(fn)});
  };

  // --- inversion formula and constants -------------------------------------
  add(Suite::Theorem1, "theorem1.random_data", 1e-9, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst, inversion::verify_theorem1(sampling::random_nevanlinna_data(rng), kTheoremGrid).max_abs_err);
    return worst;
  });
  add(Suite::Theorem1, "theorem1.dirac_at_zero", 1e-13, [](Rng&) {
    const NevanlinnaData d{0.0, DiscreteMeasure::dirac(0.0)};
    const auto r = inversion::verify_theorem1(d, std::vector<double>{0.5, 2.0, 3.0});
    double worst = 0.0;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const double expected = 1.0 / r.points[i];
      worst = std::max({worst, std::abs(r.lhs[i] - expected), std::abs(r.rhs[i] - expected)});
    }
    return worst;
  });
  add(Suite::Theorem1, "theorem1.constant_recovery", 1e-12, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto d = sampling::random_nevanlinna_data(rng);
      const auto c = inversion::recover_constants(transforms::restricted_nevanlinna(d, 1.0));
      worst = std::max({worst, std::abs(c.a - d.a), std::abs(c.total_mass - d.rho.total_mass())});
    }
    return worst;
  });

  // --- Laplace corollaries and measure recovery -----------------------------
  add(Suite::Corollaries, "corollary1.subtracted_laplace", 1e-6, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      NevanlinnaData d{0.0, sampling::random_probability_measure(rng)};
      worst = std::max(worst, inversion::verify_corollary1(d, kAboveOneGrid).max_abs_err);
    }
    return worst;
  });
  add(Suite::Corollaries, "corollary2.closed_form", 1e-13, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto m = sampling::random_probability_measure(rng);
      const auto r = inversion::verify_corollary2(m, kTheoremGrid);
      for (std::size_t k = 0; k < r.points.size(); ++k) {
        Complex direct(0.0);
        for (std::size_t j = 0; j < m.size(); ++j) direct += m.weights()[j] / (r.points[k] - kI * m.atoms()[j]);
        worst = std::max({worst, std::abs(r.lhs[k] - direct), std::abs(r.rhs[k] - direct)});
      }
    }
    return worst;
  });
  add(Suite::Corollaries, "corollary2.quadrature_vs_closed", 1e-6, [](Rng& rng) {
    sampling::MeasureShape shape;
    shape.lo = -10.0;
    shape.hi = 10.0;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto m = sampling::random_probability_measure(rng, shape);
      for (double w : linspace(0.5, 10.0, 8))
        worst = std::max(worst, std::abs(transforms::laplace_charfn(m, w, transforms::LaplaceMethod::Quadrature) -
                                         transforms::laplace_charfn(m, w)));
    }
    return worst;
  });
  add(Suite::Corollaries, "corollary2.scaled_laplace", 1e-6, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
      worst = std::max(worst, inversion::verify_scaled_laplace_identity(sampling::random_probability_measure(rng),
                                                                        std::vector<double>{-2.0, -0.5, 0.5, 1.0, 3.0})
                                  .max_abs_err);
    return worst;
  });
  add(Suite::Corollaries, "corollary3.cross_check", 1e-9, [](Rng& rng) {
    double worst = inversion::corollary3_quantities(bernoulli()).cross_check_error;
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst, inversion::corollary3_quantities(sampling::random_probability_measure(rng)).cross_check_error);
    return worst;
  });
  add(Suite::Corollaries, "corollary3.laplace_identity", 1e-9, [](Rng& rng) {
    double worst = inversion::verify_corollary3(bernoulli(), kAboveOneGrid).max_abs_err;
    for (int i = 0; i < 50; ++i)
      worst = std::max(worst, inversion::verify_corollary3(sampling::random_probability_measure(rng), kAboveOneGrid).max_abs_err);
    return worst;
  });
  add(Suite::Corollaries, "recovery.round_trip", 1e-7, [](Rng& rng) {
    sampling::MeasureShape shape;
    shape.min_atoms = 1;
    shape.max_atoms = 5;
    shape.min_gap = 0.5;
    shape.min_weight = 0.05;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto mu = sampling::random_probability_measure(rng, shape);
      const int n = static_cast<int>(mu.size());
      const auto samples = transforms::evaluate_grid(transforms::TransformKind::Cauchy, {0.0, mu}, linspace(0.25, 8.0, 6 * n));
      worst = std::max(worst, measure_gap(inversion::recover_measure(samples, n), mu));
    }
    return worst;
  });

  // --- decomposition of uniform measures ------------------------------------
  auto example_corpus = [](Rng& rng, const std::function<void(const std::vector<double>&)>& visit) {
    for (int m = 2; m <= 8; ++m)
      for (int trial = 0; trial < 5; ++trial) visit(sampling::random_atoms(rng, m));
  };
  add(Suite::Example, "example.identity", 1e-9, [example_corpus](Rng& rng) {
    double worst = 0.0;
    const auto grid = linspace(0.25, 5.0, 20);
    example_corpus(rng, [&](const std::vector<double>& b) {
      worst = std::max(worst, decomposition::verify_example_identity(b, grid).max_abs_err);
    });
    return worst;
  });
  add(Suite::Example, "example.alpha_agreement", 1e-8, [example_corpus](Rng& rng) {
    double worst = 0.0;
    example_corpus(rng, [&](const std::vector<double>& b) {
      worst = std::max(worst, decomposition::decompose(b).alpha_agreement);
    });
    return worst;
  });
  add(Suite::Example, "example.alpha_positive_and_interlacing", 0.0, [example_corpus](Rng& rng) {
    double violations = 0.0;
    example_corpus(rng, [&](const std::vector<double>& b) {
      const auto r = decomposition::decompose(b);
      for (double a : r.alphas) violations += a > 0.0 ? 0.0 : 1.0;
      violations += decomposition::interlaces(b, r.xis) ? 0.0 : 1.0;
    });
    return violations;
  });
  add(Suite::Example, "example.three_point_alphas", 1e-10, [](Rng&) {
    const auto r = decomposition::decompose(std::vector<double>{0.0, 1.0, 2.0});
    double worst = 0.0;
    for (double a : r.alphas) worst = std::max(worst, std::abs(a - 1.0 / 3.0));
    return r.alphas.size() == 2 ? worst : std::numeric_limits<double>::infinity();
  });

  // --- boolean convolution --------------------------------------------------
  add(Suite::Boolean, "boolean.bernoulli_square", 1e-10, [](Rng&) {
    const auto expected = make_measure({-std::sqrt(2.0), std::sqrt(2.0)}, {0.5, 0.5});
    return measure_gap(convolutions::boolean_convolve(bernoulli(), bernoulli()), expected);
  });
  add(Suite::Boolean, "boolean.commutative", 1e-8, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      worst = std::max(worst, measure_gap(convolutions::boolean_convolve(a, b), convolutions::boolean_convolve(b, a)));
    }
    return worst;
  });
  add(Suite::Boolean, "boolean.associative", 1e-8, [](Rng& rng) {
    using convolutions::boolean_convolve;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      const auto c = sampling::random_probability_measure(rng);
      worst = std::max(worst, measure_gap(boolean_convolve(boolean_convolve(a, b), c),
                                          boolean_convolve(a, boolean_convolve(b, c))));
    }
    return worst;
  });
  add(Suite::Boolean, "boolean.power_two_is_self_convolution", 1e-8, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      worst = std::max(worst, measure_gap(convolutions::boolean_power(a, 2.0), convolutions::boolean_convolve(a, a)));
    }
    return worst;
  });
  add(Suite::Boolean, "boolean.self_energy_additivity", 1e-9, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      const auto c = convolutions::boolean_convolve(a, b);
      for (double t : {0.5, 1.0, 4.0}) {
        const Complex sum = transforms::self_energy(a, t) + transforms::self_energy(b, t);
        worst = std::max(worst, std::abs(transforms::self_energy(c, t) - sum) / std::max(1.0, std::abs(sum)));
      }
    }
    return worst;
  });

  // --- free convolution -----------------------------------------------------
  add(Suite::Free, "free.proposition1", 1e-9, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      worst = std::max(worst, convolutions::verify_proposition1(a, b, kFreeGrid).max_abs_err);
    }
    return worst;
  });
  add(Suite::Free, "free.bernoulli_square_at_2i", 1e-10, [](Rng&) {
    const Complex f = convolutions::subordination(bernoulli(), bernoulli(), 2.0 * kI).f_value;
    return std::abs(f - 2.0 * std::sqrt(2.0) * kI);
  });
  add(Suite::Free, "free.corollary4_three_measures", 1e-8, [](Rng& rng) {
    const std::vector<DiscreteMeasure> fixed{bernoulli(), bernoulli(), DiscreteMeasure::dirac(1.0)};
    double worst = convolutions::verify_corollary4(fixed, std::vector<double>{2.0, 4.0}).max_abs_err;
    for (int i = 0; i < 10; ++i) {
      std::vector<DiscreteMeasure> mus;
      for (int k = 0; k < 3; ++k) mus.push_back(sampling::random_probability_measure(rng));
      worst = std::max(worst, convolutions::verify_corollary4(mus, std::vector<double>{1.0, 4.0}).max_abs_err);
    }
    return worst;
  });
  add(Suite::Free, "free.v_additivity", 1e-8, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      const double scale = 1.0 + std::max(a.max_abs_atom(), b.max_abs_atom());
      worst = std::max(worst, convolutions::verify_v_additivity(a, b, std::vector<double>{3 * scale, 5 * scale, 10 * scale})
                                  .max_abs_err);
    }
    return worst;
  });
  add(Suite::Free, "free.v_dirac", 1e-12, [](Rng&) {
    const auto r = convolutions::verify_v_additivity(DiscreteMeasure::dirac(1.0), DiscreteMeasure::dirac(-2.5),
                                                     std::vector<double>{0.5, 2.0, 10.0});
    double worst = r.max_abs_err;
    for (const Complex v : r.rhs) worst = std::max(worst, std::abs(v - (-1.5)));
    return worst;
  });

  // --- moment-series identities ---------------------------------------------
  add(Suite::Remark2, "remark2.boolean_series", 1e-9, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      worst = std::max(worst, convolutions::verify_remark2(a, b, std::vector<double>{0.0, 0.5, 1.0, 2.0, 4.0})
                                  .boolean_identity.max_abs_err);
    }
    return worst;
  });
  add(Suite::Remark2, "remark2.free_composition", 1e-9, [](Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = sampling::random_probability_measure(rng);
      const auto b = sampling::random_probability_measure(rng);
      const auto r = convolutions::verify_remark2(a, b, std::vector<double>{0.5, 1.0, 2.0, 4.0});
      worst = std::max({worst, r.free_nu1.max_abs_err, r.free_nu2.max_abs_err});
    }
    return worst;
  });
  return checks;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::All, Suite::Theorem1, Suite::Corollaries, Suite::Example, Suite::Boolean, Suite::Free,
                  Suite::Remark2})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Theorem1: return "theorem1";
    case Suite::Corollaries: return "corollaries";
    case Suite::Example: return "example";
    case Suite::Boolean: return "boolean";
    case Suite::Free: return "free";
    case Suite::Remark2: return "remark2";
  }
  return "?";
}

bool SuiteOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

SuiteOutcome run_suite(Suite suite, std::uint64_t seed) {
  SuiteOutcome outcome{suite, seed, {}};
  for (const auto& check : registry()) {
    if (suite != Suite::All && check.suite != suite) continue;
    const std::string name = check.name;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      name_hash(name)};
    Rng rng(seq);
    CheckOutcome c{name, false, 0.0, check.tolerance, 0.0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      c.max_error = check.run(rng);
      c.passed = std::isfinite(c.max_error) && c.max_error <= c.tolerance;
    } catch (const std::exception& e) {
      c.max_error = std::numeric_limits<double>::infinity();
      c.note = e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    outcome.checks.push_back(std::move(c));
  }
  return outcome;
}

void print_table(std::ostream& out, const SuiteOutcome& outcome) {
  std::size_t width = 5;
  for (const auto& c : outcome.checks) width = std::max(width, c.name.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %-4s  %-10s  %-10s  %s\n", static_cast<int>(width), "check", "ok",
                "max_error", "tolerance", "ms");
  out << line;
  for (const auto& c : outcome.checks) {
    std::snprintf(line, sizeof line, "%-*s  %-4s  %-10.3e  %-10.1e  %.1f\n", static_cast<int>(width), c.name.c_str(),
                  c.passed ? "PASS" : "FAIL", c.max_error, c.tolerance, c.elapsed_ms);
    out << line;
    if (!c.note.empty()) out << "    " << c.note << '\n';
  }
  const auto failed = std::count_if(outcome.checks.begin(), outcome.checks.end(), [](const auto& c) { return !c.passed; });
  out << "suite " << to_string(outcome.suite) << " seed " << outcome.seed << ": " << outcome.checks.size()
      << " checks, " << failed << " failed\n";
}

}  // namespace nevlab::cli

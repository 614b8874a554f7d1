#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nevlab {

/// Finite positive measure with finitely many atoms.
///
/// Canonical form: atoms strictly increasing, weights strictly positive, at
/// least one atom. Instances are immutable; build them with `make`.
class DiscreteMeasure {
 public:
  /// Sorts atoms, merges exact duplicates by summing their weights and checks
  /// the invariants. Throws `Error` with EmptyInput, LengthMismatch,
  /// NonFiniteValue or NonPositiveWeight.
  static DiscreteMeasure make(std::vector<double> atoms, std::vector<double> weights);

  /// Equal weights 1/m on the given atoms.
  static DiscreteMeasure uniform(std::vector<double> atoms);

  static DiscreteMeasure dirac(double atom, double mass = 1.0);

  [[nodiscard]] std::span<const double> atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
  [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
  [[nodiscard]] double total_mass() const noexcept;
  [[nodiscard]] bool is_probability() const noexcept;
  [[nodiscard]] double max_abs_atom() const noexcept;

  /// Image under x -> x + c.
  [[nodiscard]] DiscreteMeasure shifted(double c) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights)
      : atoms_(std::move(atoms)), weights_(std::move(weights)) {}

  std::vector<double> atoms_;
  std::vector<double> weights_;
};

inline constexpr double kProbabilityTolerance = 1e-12;

/// The pair (a, rho) parameterising a Nevanlinna function.
struct NevanlinnaData {
  double a = 0.0;
  DiscreteMeasure rho;
};

DiscreteMeasure make_measure(std::vector<double> atoms, std::vector<double> weights);

void require_probability(const DiscreteMeasure& m, const char* who);

}  // namespace nevlab

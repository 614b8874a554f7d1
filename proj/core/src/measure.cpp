#include "nevlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "nevlab/error.hpp"

namespace nevlab {

DiscreteMeasure DiscreteMeasure::make(std::vector<double> atoms, std::vector<double> weights) {
  if (atoms.empty() || weights.empty()) fail(ErrorCode::EmptyInput, "measure needs at least one atom");
  if (atoms.size() != weights.size())
    fail(ErrorCode::LengthMismatch, "atoms and weights differ in length");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i]) || !std::isfinite(weights[i]))
      fail(ErrorCode::NonFiniteValue, "atom/weight #" + std::to_string(i) + " is not finite");
    if (!(weights[i] > 0.0))
      fail(ErrorCode::NonPositiveWeight, "weight #" + std::to_string(i) + " is not positive");
  }

  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });

  std::vector<double> a;
  std::vector<double> w;
  a.reserve(atoms.size());
  w.reserve(atoms.size());
  for (std::size_t idx : order) {
    if (!a.empty() && a.back() == atoms[idx]) {
      w.back() += weights[idx];
    } else {
      a.push_back(atoms[idx]);
      w.push_back(weights[idx]);
    }
  }
  return DiscreteMeasure(std::move(a), std::move(w));
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<double> atoms) {
  const double w = atoms.empty() ? 0.0 : 1.0 / static_cast<double>(atoms.size());
  std::vector<double> weights(atoms.size(), w);
  return make(std::move(atoms), std::move(weights));
}

DiscreteMeasure DiscreteMeasure::dirac(double atom, double mass) { return make({atom}, {mass}); }

double DiscreteMeasure::total_mass() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

bool DiscreteMeasure::is_probability() const noexcept {
  return std::abs(total_mass() - 1.0) <= kProbabilityTolerance;
}

double DiscreteMeasure::max_abs_atom() const noexcept {
  return std::max(std::abs(atoms_.front()), std::abs(atoms_.back()));
}

DiscreteMeasure DiscreteMeasure::shifted(double c) const {
  std::vector<double> a(atoms_);
  for (double& x : a) x += c;
  return make(std::move(a), weights_);
}

DiscreteMeasure make_measure(std::vector<double> atoms, std::vector<double> weights) {
  return DiscreteMeasure::make(std::move(atoms), std::move(weights));
}

void require_probability(const DiscreteMeasure& m, const char* who) {
  if (!m.is_probability())
    fail(ErrorCode::NotAProbabilityMeasure,
         std::string(who) + ": total mass " + std::to_string(m.total_mass()) + " is not 1");
}

}  // namespace nevlab

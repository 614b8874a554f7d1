#include "nevlab/sampling.hpp"

#include <algorithm>

#include "nevlab/error.hpp"

namespace nevlab::sampling {

std::vector<double> random_atoms(Rng& rng, int count, const MeasureShape& shape) {
  if (count < 1) fail(ErrorCode::EmptyInput, "random_atoms needs count >= 1");
  if (shape.min_gap * (count - 1) >= shape.hi - shape.lo)
    fail(ErrorCode::DomainError, "atoms cannot fit in the interval with the requested gap");
  std::uniform_real_distribution<double> unif(shape.lo, shape.hi);
  std::vector<double> atoms(static_cast<std::size_t>(count));
  for (;;) {
    for (double& x : atoms) x = unif(rng);
    std::sort(atoms.begin(), atoms.end());
    bool ok = true;
    for (std::size_t i = 1; i < atoms.size(); ++i)
      if (atoms[i] - atoms[i - 1] < shape.min_gap) ok = false;
    if (ok) return atoms;
  }
}

DiscreteMeasure random_probability_measure(Rng& rng, const MeasureShape& shape) {
  std::uniform_int_distribution<int> count(shape.min_atoms, shape.max_atoms);
  auto atoms = random_atoms(rng, count(rng), shape);
  std::exponential_distribution<double> gamma1(1.0);
  std::vector<double> weights(atoms.size());
  double total = 0.0;
  for (double& w : weights) {
    w = gamma1(rng) + 1e-3;
    total += w;
  }
  const double floor = shape.min_weight;
  if (floor < 0.0 || floor * static_cast<double>(weights.size()) >= 1.0)
    fail(ErrorCode::DomainError, "min_weight leaves no room for random weights");
  const double free_mass = 1.0 - floor * static_cast<double>(weights.size());
  for (double& w : weights) w = floor + free_mass * w / total;
  // Renormalised weights can miss 1 by a few ulps; fold the slack into the
  // largest weight so is_probability holds.
  double sum = 0.0;
  for (double w : weights) sum += w;
  *std::max_element(weights.begin(), weights.end()) += 1.0 - sum;
  return DiscreteMeasure::make(std::move(atoms), std::move(weights));
}

NevanlinnaData random_nevanlinna_data(Rng& rng) {
  std::uniform_real_distribution<double> a(-3.0, 3.0);
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  MeasureShape shape;
  shape.min_atoms = 1;
  shape.max_atoms = 6;
  std::uniform_int_distribution<int> count(shape.min_atoms, shape.max_atoms);
  NevanlinnaData d{a(rng), DiscreteMeasure::dirac(0.0)};
  auto atoms = random_atoms(rng, count(rng), shape);
  std::vector<double> weights(atoms.size());
  for (double& w : weights) {
    do w = 2.0 - mass(rng); while (!(w > 0.0));  // (0, 2]
  }
  d.rho = DiscreteMeasure::make(std::move(atoms), std::move(weights));
  return d;
}

}  // namespace nevlab::sampling

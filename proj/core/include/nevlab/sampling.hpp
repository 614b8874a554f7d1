#pragma once

#include <cstdint>
#include <random>

#include "nevlab/measure.hpp"

// Seeded random measures for property tests and the verification suite.
namespace nevlab::sampling {

using Rng = std::mt19937_64;

struct MeasureShape {
  int min_atoms = 2;
  int max_atoms = 6;
  double lo = -5.0;
  double hi = 5.0;
  double min_gap = 0.1;  // candidate atom sets closer than this are redrawn
  double min_weight = 0.0;  // floor on every weight; needs max_atoms * min_weight < 1
};

/// Distinct atoms, sorted, drawn uniformly on [lo, hi] with min-gap rejection.
std::vector<double> random_atoms(Rng& rng, int count, const MeasureShape& shape = {});

/// Probability measure with Dirichlet(1,...,1) weights, mixed with the
/// uniform floor `min_weight` when that is set.
DiscreteMeasure random_probability_measure(Rng& rng, const MeasureShape& shape = {});

/// a uniform on [-3, 3]; 1-6 atoms on [-5, 5]; masses uniform on (0, 2].
NevanlinnaData random_nevanlinna_data(Rng& rng);

}  // namespace nevlab::sampling

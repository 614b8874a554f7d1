#include "nevlab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "nevlab/error.hpp"

namespace nevlab {

void ComplexGrid::validate() const {
  if (points.size() != values.size())
    fail(ErrorCode::LengthMismatch, "grid points and values differ in length");
  for (double t : points)
    if (t == 0.0) fail(ErrorCode::DomainError, "grid contains t = 0");
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) fail(ErrorCode::DomainError, "grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

void CorollaryReport::add(double point, Complex left, Complex right) {
  points.push_back(point);
  lhs.push_back(left);
  rhs.push_back(right);
  max_abs_err = std::max(max_abs_err, std::abs(left - right));
}

double CorollaryReport::max_rel_err() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    worst = std::max(worst, std::abs(lhs[i] - rhs[i]) / std::max(1.0, std::abs(rhs[i])));
  return worst;
}

}  // namespace nevlab

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nevlab/grid.hpp"

namespace nevlab::cli {

/// 17 significant digits, with negative zero printed as 0.
std::string format_number(double x);

/// Header `t,re,im`, then one row per point in grid order.
void write_csv(std::ostream& out, const ComplexGrid& grid);

/// Inverse of write_csv. Throws ParseError.
ComplexGrid read_csv(std::istream& in);

/// `start:stop:count` to the points of linspace(start, stop, count).
std::vector<double> parse_grid(std::string_view spec);

}  // namespace nevlab::cli

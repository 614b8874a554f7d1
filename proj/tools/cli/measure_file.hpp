#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nevlab/measure.hpp"

namespace nevlab::cli {

/// Malformed input supplied by the user: bad file, bad grid, bad CSV.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk form of a measure, optionally with the Nevanlinna constant `a`.
///
/// The text is a JSON object with keys "atoms", "weights" and optionally
/// "a". Atoms and weights are written in canonical order with the shortest
/// decimal that parses back to the same double, so write then read is exact.
struct MeasureFile {
  std::optional<double> a;
  std::vector<double> atoms;
  std::vector<double> weights;

  static MeasureFile from(const DiscreteMeasure& m, std::optional<double> a = std::nullopt);

  [[nodiscard]] DiscreteMeasure measure() const;
  /// Missing `a` reads as 0.
  [[nodiscard]] NevanlinnaData nevanlinna() const;

  friend bool operator==(const MeasureFile&, const MeasureFile&) = default;
};

MeasureFile parse_measure_file(std::string_view text);
std::string format_measure_file(const MeasureFile& file);

MeasureFile read_measure_file(const std::filesystem::path& path);
void write_measure_file(const std::filesystem::path& path, const MeasureFile& file);

}  // namespace nevlab::cli

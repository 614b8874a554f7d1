#include "cli/measure_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nevlab/error.hpp"

namespace nevlab::cli {

namespace {

std::string shortest(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buf.data(), end);
}

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

void append_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += shortest(xs[i]);
  }
  out += ']';
}

}  // namespace

MeasureFile MeasureFile::from(const DiscreteMeasure& m, std::optional<double> a) {
  return {a, {m.atoms().begin(), m.atoms().end()}, {m.weights().begin(), m.weights().end()}};
}

DiscreteMeasure MeasureFile::measure() const {
  try {
    return DiscreteMeasure::make(atoms, weights);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid measure: ") + e.what());
  }
}

NevanlinnaData MeasureFile::nevanlinna() const { return {a.value_or(0.0), measure()}; }

MeasureFile parse_measure_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("measure file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("measure file must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "a" && item.key() != "atoms" && item.key() != "weights")
      throw ParseError("unknown key \"" + item.key() + "\"");

  MeasureFile file;
  if (j.contains("a")) {
    if (!j.at("a").is_number()) throw ParseError("\"a\" must be a number");
    file.a = j.at("a").get<double>();
    if (!std::isfinite(*file.a)) throw ParseError("\"a\" must be finite");
  }
  file.atoms = number_array(j, "atoms");
  file.weights = number_array(j, "weights");
  // Canonicalise through the measure type so callers always see sorted,
  // merged, validated data.
  return MeasureFile::from(file.measure(), file.a);
}

std::string format_measure_file(const MeasureFile& file) {
  std::string out = "{\n";
  if (file.a) out += "  \"a\": " + shortest(*file.a) + ",\n";
  out += "  \"atoms\": ";
  append_array(out, file.atoms);
  out += ",\n  \"weights\": ";
  append_array(out, file.weights);
  out += "\n}\n";
  return out;
}

MeasureFile read_measure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open measure file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_file(buf.str());
}

void write_measure_file(const std::filesystem::path& path, const MeasureFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_measure_file(file);
}

}  // namespace nevlab::cli

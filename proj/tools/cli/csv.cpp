#include "cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "cli/measure_file.hpp"

namespace nevlab::cli {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
    throw ParseError("bad " + std::string(what) + " \"" + std::string(s) + "\"");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const ComplexGrid& grid) {
  out << "t,re,im\n";
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    out << format_number(grid.points[i]) << ',' << format_number(grid.values[i].real()) << ','
        << format_number(grid.values[i].imag()) << '\n';
}

ComplexGrid read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,re,im") throw ParseError("CSV header must be t,re,im");
  ComplexGrid grid;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 3) throw ParseError("CSV row needs three fields: " + line);
    grid.points.push_back(parse_double(cells[0], "t"));
    grid.values.emplace_back(parse_double(cells[1], "re"), parse_double(cells[2], "im"));
  }
  return grid;
}

std::vector<double> parse_grid(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ParseError("grid must look like start:stop:count, got \"" + std::string(spec) + "\"");
  const double start = parse_double(parts[0], "grid start");
  const double stop = parse_double(parts[1], "grid stop");
  int count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1)
    throw ParseError("grid count must be a positive integer, got \"" + std::string(parts[2]) + "\"");
  return linspace(start, stop, count);
}

}  // namespace nevlab::cli

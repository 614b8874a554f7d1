#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/csv.hpp"
#include "cli/measure_file.hpp"
#include "cli/verify_suite.hpp"
#include "nevlab/convolutions.hpp"
#include "nevlab/decomposition.hpp"
#include "nevlab/error.hpp"
#include "nevlab/inversion.hpp"
#include "nevlab/transforms.hpp"

namespace nevlab::cli {

namespace {

constexpr Complex kI(0.0, 1.0);

struct Options {
  std::vector<std::string> measures;
  std::string transform;
  std::string t_grid;
  std::string w_grid;
  std::string out;
  std::string samples;
  std::string kind = "cauchy";
  std::string laplace_method = "closed";
  std::string op;
  std::string suite;
  std::uint64_t seed = 7;
  int degree_hint = 0;
  int steps = 1;
  double power = 0.0;
};

// Sends text to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ParseError("cannot write " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

DiscreteMeasure single_measure(const Options& o) {
  if (o.measures.size() != 1) throw ParseError("exactly one --measure is required");
  return read_measure_file(o.measures.front()).measure();
}

std::vector<double> required_grid(const std::string& spec, const char* flag) {
  if (spec.empty()) throw ParseError(std::string(flag) + " is required");
  return parse_grid(spec);
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.measures.size() != 1) throw ParseError("exactly one --measure is required");
  const auto file = read_measure_file(o.measures.front());
  const auto data = file.nevanlinna();
  ComplexGrid grid;
  if (o.transform == "laplace" || o.transform == "theorem1") {
    grid.points = required_grid(o.w_grid, "--w-grid");
    for (double w : grid.points) {
      if (o.transform == "theorem1") {
        grid.values.push_back(inversion::theorem1_rhs(data, w));
      } else {
        if (o.laplace_method != "closed" && o.laplace_method != "quadrature")
          throw ParseError("--method must be closed or quadrature");
        const auto method =
            o.laplace_method == "closed" ? transforms::LaplaceMethod::Closed : transforms::LaplaceMethod::Quadrature;
        grid.values.push_back(transforms::laplace_charfn(data.rho, w, method));
      }
    }
  } else {
    const auto kind = transforms::parse_transform_kind(o.transform);
    if (!kind) throw ParseError("unknown transform \"" + o.transform + "\"");
    grid.points = required_grid(o.t_grid, "--t-grid");
    for (double t : grid.points) grid.values.push_back(transforms::evaluate(*kind, data, t));
  }
  Sink sink(o.out, out);
  write_csv(sink.stream(), grid);
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
  if (o.degree_hint < 1) throw ParseError("--degree-hint N (N >= 1) is required");
  if (o.kind != "cauchy" && o.kind != "nevanlinna") throw ParseError("--kind must be cauchy or nevanlinna");
  const auto transform = o.kind == "cauchy" ? transforms::TransformKind::Cauchy : transforms::TransformKind::Nevanlinna;
  ComplexGrid samples;
  if (!o.samples.empty()) {
    if (!o.measures.empty()) throw ParseError("give either --samples or --measure, not both");
    std::ifstream in(o.samples, std::ios::binary);
    if (!in) throw ParseError("cannot open samples file " + o.samples);
    samples = read_csv(in);
  } else {
    if (o.measures.size() != 1) throw ParseError("invert needs --samples or one --measure");
    const auto data = read_measure_file(o.measures.front()).nevanlinna();
    auto ts = required_grid(o.t_grid, "--t-grid");
    // Nevanlinna recovery reads (a, rho(R)) off the sample at t = 1.
    if (transform == transforms::TransformKind::Nevanlinna && std::find(ts.begin(), ts.end(), 1.0) == ts.end())
      ts.push_back(1.0);
    samples = transforms::evaluate_grid(transform, data, ts);
  }
  MeasureFile result;
  if (transform == transforms::TransformKind::Cauchy) {
    result = MeasureFile::from(inversion::recover_measure(samples, o.degree_hint));
  } else {
    const auto d = inversion::recover_nevanlinna(samples, o.degree_hint);
    result = MeasureFile::from(d.rho, d.a);
  }
  Sink sink(o.out, out);
  sink.stream() << format_measure_file(result);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  if (o.steps < 1) throw ParseError("--steps must be >= 1");
  const auto mu = single_measure(o);
  const auto w = mu.weights();
  const bool uniform = std::all_of(w.begin(), w.end(), [&](double x) { return std::abs(x - w.front()) <= 1e-12 * w.front(); });
  MeasureFile result;
  if (o.steps > 1) {
    if (!uniform) throw ParseError("--steps > 1 iterates on the support; the measure must be uniform");
    const auto steps = decomposition::iterate_decomposition(mu.atoms(), o.steps);
    result = MeasureFile::from(steps.back().rho_b, steps.back().a_b);
  } else {
    const auto r = uniform && mu.is_probability() ? decomposition::decompose(mu.atoms())
                                                  : decomposition::decompose_measure(mu);
    result = MeasureFile::from(r.rho_b, r.a_b);
  }
  Sink sink(o.out, out);
  sink.stream() << format_measure_file(result);
  return kExitOk;
}

int cmd_convolve(const Options& o, std::ostream& out) {
  std::vector<DiscreteMeasure> mus;
  for (const auto& path : o.measures) mus.push_back(read_measure_file(path).measure());
  Sink sink(o.out, out);
  if (o.op == "boolean") {
    if (mus.size() < 2) throw ParseError("boolean needs at least two --measure files");
    DiscreteMeasure acc = mus.front();
    for (std::size_t i = 1; i < mus.size(); ++i) acc = convolutions::boolean_convolve(acc, mus[i]);
    sink.stream() << format_measure_file(MeasureFile::from(acc));
  } else if (o.op == "booleanpow") {
    if (mus.size() != 1) throw ParseError("booleanpow needs exactly one --measure");
    sink.stream() << format_measure_file(MeasureFile::from(convolutions::boolean_power(mus.front(), o.power)));
  } else if (o.op == "free") {
    if (mus.size() < 2) throw ParseError("free needs at least two --measure files");
    ComplexGrid grid;
    grid.points = required_grid(o.t_grid, "--t-grid");
    for (double t : grid.points) {
      if (!(t > 0.0)) fail(ErrorCode::DomainError, "free convolution grid needs t > 0");
      grid.values.push_back(convolutions::free_f(mus, kI * t));
    }
    write_csv(sink.stream(), grid);
  } else {
    throw ParseError("convolve operation must be boolean, booleanpow or free");
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw ParseError("unknown suite \"" + o.suite + "\"");
  const auto outcome = run_suite(*suite, o.seed);
  Sink sink(o.out, out);
  print_table(sink.stream(), outcome);
  return outcome.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nevanlinna-transform toolkit for discrete measures", "nevlab"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate a transform on a grid (CSV t,re,im)");
  eval->add_option("--measure", o.measures, "Measure file")->required()->expected(1);
  eval->add_option("--transform", o.transform,
                   "cauchy | nevanlinna | charfn | selfenergy | freciprocal | laplace | theorem1")
      ->required();
  eval->add_option("--t-grid", o.t_grid, "start:stop:count on the imaginary axis");
  eval->add_option("--w-grid", o.w_grid, "start:stop:count for laplace and theorem1");
  eval->add_option("--method", o.laplace_method, "closed | quadrature (laplace only)");
  eval->add_option("--out", o.out, "Write here instead of stdout");

  auto* invert = app.add_subcommand("invert", "Recover a measure from transform samples");
  invert->add_option("--samples", o.samples, "CSV t,re,im of transform values");
  invert->add_option("--measure", o.measures, "Sample this measure instead")->expected(1);
  invert->add_option("--t-grid", o.t_grid, "Sampling grid when --measure is used");
  invert->add_option("--degree-hint", o.degree_hint, "Number of atoms to fit")->required();
  invert->add_option("--kind", o.kind, "cauchy | nevanlinna");
  invert->add_option("--out", o.out, "Write here instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "Self-energy decomposition into (a, rho)");
  decompose->add_option("--measure", o.measures, "Measure file")->required()->expected(1);
  decompose->add_option("--steps", o.steps, "Iterate on the support this many times");
  decompose->add_option("--out", o.out, "Write here instead of stdout");

  auto* convolve = app.add_subcommand("convolve", "Boolean or free convolution");
  convolve->add_option("op", o.op, "boolean | booleanpow | free")->required();
  convolve->add_option("--measure", o.measures, "Measure file (repeat for each input)")->required();
  convolve->add_option("--power", o.power, "Exponent for booleanpow");
  convolve->add_option("--t-grid", o.t_grid, "Grid for the free F-transform");
  convolve->add_option("--out", o.out, "Write here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("suite", o.suite, "all | theorem1 | corollaries | example | boolean | free | remark2")
      ->required();
  verify->add_option("--seed", o.seed, "Seed for the random corpus");
  verify->add_option("--out", o.out, "Write the table here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nevlab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (invert->parsed()) return cmd_invert(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (convolve->parsed()) return cmd_convolve(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "nevlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "nevlab: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace nevlab::cli

// sgconic: command-line front end.
//
// Exit codes: 0 ok, 2 bad input, 3 unsupported field, 4 internal invariant
// violation, 5 subset budget exceeded, 6 render failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sgconic/corpus.hpp"
#include "sgconic/finder.hpp"
#include "sgconic/io/config_file.hpp"
#include "sgconic/io/result_document.hpp"
#include "sgconic/io/svg.hpp"
#include "sgconic/oracle.hpp"

namespace {

using namespace sgconic;
using io::Json;

enum Exit { kOk = 0, kInput = 2, kField = 3, kInvariant = 4, kBudget = 5, kRender = 6 };

struct BudgetExceeded {
  std::string message;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DegenerateInput("cannot write " + path);
  out << text;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("SGCONIC_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    throw DegenerateInput(std::string("SGCONIC_JOBS must be an integer in [1, 1024], got '") + env + "'");
  }
  return 1;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  try {
    q = Rational(s);
  } catch (const std::invalid_argument&) {
    throw DegenerateInput("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw DegenerateInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void stamp(Json& doc) const {
    if (!on_) return;
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
    doc["timing"] = Json{{"elapsed_us", std::to_string(us)}};
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_stats(const std::string& input, const std::string& output, bool timing) {
  Timer timer(timing);
  const auto cfg = io::load_config(input);
  Json doc = std::visit([](const auto& c) { return io::stats_document(c); }, cfg);
  timer.stamp(doc);
  emit(io::dump(doc), output);
  return kOk;
}

int cmd_find_conic(const std::string& input, const std::string& output, bool timing) {
  Timer timer(timing);
  const auto any = io::load_config(input);
  const auto* cfg = std::get_if<PointConfig<Rational>>(&any);
  if (!cfg) throw UnsupportedField("the ordinary conic theorem fails over finite fields; find-conic needs rational input");
  Json doc = io::find_conic_document(*cfg, find_ordinary_conic(*cfg));
  timer.stamp(doc);
  emit(io::dump(doc), output);
  return kOk;
}

struct OracleArgs {
  std::string input, output;
  int degree = 2;
  bool check_finder = false;
  std::uint64_t budget = 5'000'000;
  unsigned jobs = 1;
  bool timing = false;
};

int cmd_oracle(const OracleArgs& args) {
  Timer timer(args.timing);
  const auto any = io::load_config(args.input);
  oracle::detail::monomials(args.degree);  // UnsupportedDegree before any work
  const std::size_t s = std::visit([](const auto& c) { return c.size(); }, any);
  const std::size_t k = oracle::monomial_count(args.degree) - 1;
  if (s >= k) {
    const std::uint64_t subsets = oracle::detail::binomial(s, k);
    if (subsets > args.budget)
      throw BudgetExceeded{"C(" + std::to_string(s) + "," + std::to_string(k) + ") = " + std::to_string(subsets) +
                           " subsets exceed the budget of " + std::to_string(args.budget)};
  }
  bool agrees = true;
  Json doc = std::visit(
      [&](const auto& cfg) {
        using K = std::decay_t<decltype(cfg.points()[0][0])>;
        const auto certs = oracle::find_ordinary_curves_deg_d(cfg.points(), args.degree, args.jobs);
        Json d = io::oracle_document(cfg, args.degree, certs);
        if (args.check_finder) {
          if constexpr (!field_traits<K>::is_rational) {
            throw UnsupportedField("--check-finder needs rational input");
          } else {
            const auto result = find_ordinary_conic(cfg);
            std::vector<oracle::CurveCertificate<K>> conics;
            if (args.degree == 2) {
              conics = certs;
            } else if (cfg.size() >= 5) {
              conics = oracle::find_ordinary_curves_deg_d(cfg.points(), 2, args.jobs);
            }
            agrees = io::finder_agrees(cfg, result, conics);
            d["finder_check"] = Json{{"result", io::result_json(result)}, {"agrees", agrees}};
          }
        }
        return d;
      },
      any);
  timer.stamp(doc);
  emit(io::dump(doc), args.output);
  if (!agrees) {
    std::cerr << "sgconic: finder and oracle disagree\n";
    return kInvariant;
  }
  return kOk;
}

struct GenArgs {
  std::string kind, output;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  std::int64_t bound = 10;
  std::int64_t p = 5;
  std::string t1 = "1", t2 = "2", t3 = "3";
};

int cmd_gen(const GenArgs& args) {
  corpus::GeneratorSpec spec;
  if (args.kind == "singular-only") {
    spec.kind = corpus::GeneratorKind::SingularOnly;
  } else if (args.kind == "general-position") {
    spec.kind = corpus::GeneratorKind::GeneralPosition;
  } else if (args.kind == "finite-plane") {
    spec.kind = corpus::GeneratorKind::FinitePlaneFull;
  } else if (args.kind == "triangle-midpoints-centroid") {
    spec.kind = corpus::GeneratorKind::TriangleMidpointsCentroid;
  } else if (args.kind == "random") {
    spec.kind = corpus::GeneratorKind::Random;
  } else {
    throw DegenerateInput("unknown generator kind '" + args.kind + "'");
  }
  if (spec.kind == corpus::GeneratorKind::GeneralPosition || spec.kind == corpus::GeneratorKind::Random) {
    if (!args.n) throw DegenerateInput("--kind " + args.kind + " needs --n");
    spec.n = *args.n;
  }
  spec.seed = args.seed;
  spec.bound = args.bound;
  spec.p = args.p;
  spec.chords = {parse_rational(args.t1), parse_rational(args.t2), parse_rational(args.t3)};
  std::ostringstream out;
  io::write_config(out, corpus::generate(spec));
  emit(out.str(), args.output);
  return kOk;
}

struct PlotArgs {
  std::string input, result, output;
  std::string chart;
  int resolution = 160;
};

int cmd_plot(const PlotArgs& args) {
  const auto any = io::load_config(args.input);
  const auto* cfg = std::get_if<PointConfig<Rational>>(&any);
  if (!cfg) throw UnsupportedField("plot needs rational input");
  io::PlotOptions opt;
  if (!args.chart.empty()) {
    if (args.chart.size() != 1 || std::string("xyz").find(args.chart[0]) == std::string::npos)
      throw DegenerateInput("--chart must be x, y or z");
    opt.chart = static_cast<int>(std::string("xyz").find(args.chart[0]));
  }
  if (args.resolution < 4 || args.resolution > 2000) throw DegenerateInput("--resolution must lie in [4, 2000]");
  opt.resolution = args.resolution;
  std::optional<Conic<Rational>> conic;
  std::vector<ProjPoint<Rational>> witness;
  if (!args.result.empty()) {
    std::ifstream in(args.result);
    if (!in) throw DegenerateInput("cannot open " + args.result);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw DegenerateInput(args.result + ": " + e.what());
    }
    conic = io::conic_from_document(doc);
    if (doc.contains("result") && doc["result"].contains("witness")) {
      for (const auto& w : doc["result"]["witness"]) {
        if (!w.is_array() || w.size() != 3) throw DegenerateInput("witness points need 3 coordinates");
        witness.emplace_back(std::array<Rational, 3>{parse_rational(w[0].get<std::string>()),
                                                     parse_rational(w[1].get<std::string>()),
                                                     parse_rational(w[2].get<std::string>())});
      }
    }
  }
  emit(io::render_svg(*cfg, conic, witness, opt), args.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ordinary-conic toolkit for finite planar point sets"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock timing to result documents (breaks byte-stability)");

  std::string input, output;
  auto* stats = app.add_subcommand("stats", "t_k spectrum, ordinary lines and incidence inequalities");
  stats->add_option("input", input, "Configuration file")->required();
  stats->add_option("-o,--output", output, "Write the document here instead of stdout");

  auto* find = app.add_subcommand("find-conic", "A conic through all points or an ordinary conic");
  find->add_option("input", input, "Configuration file")->required();
  find->add_option("-o,--output", output, "Write the document here instead of stdout");

  OracleArgs oa;
  std::optional<unsigned> jobs;
  auto* orc = app.add_subcommand("oracle", "Exhaustive search for ordinary curves of degree d");
  orc->add_option("input", oa.input, "Configuration file")->required();
  orc->add_option("-o,--output", oa.output, "Write the document here instead of stdout");
  orc->add_option("--degree", oa.degree, "Curve degree, 1 to 3")->capture_default_str();
  orc->add_flag("--check-finder", oa.check_finder, "Also run the finder and compare");
  orc->add_option("--budget", oa.budget, "Maximum number of subsets to examine")->capture_default_str();
  orc->add_option("--jobs", jobs, "Worker threads (default: $SGCONIC_JOBS or 1)")->check(CLI::Range(1u, 1024u));

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a generated configuration");
  gen->add_option("--kind", ga.kind,
                  "singular-only, general-position, finite-plane, triangle-midpoints-centroid or random")
      ->required();
  gen->add_option("--n", ga.n, "Number of points");
  gen->add_option("--seed", ga.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--bound", ga.bound, "Coordinate bound for random points")->capture_default_str();
  gen->add_option("--p", ga.p, "Prime for finite-plane")->capture_default_str();
  gen->add_option("--t1", ga.t1, "Chord parameter (rational)")->capture_default_str();
  gen->add_option("--t2", ga.t2, "Chord parameter (rational)")->capture_default_str();
  gen->add_option("--t3", ga.t3, "Chord parameter (rational)")->capture_default_str();
  gen->add_option("-o,--output", ga.output, "Write here instead of stdout");

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "Render an SVG figure");
  plot->add_option("input", pa.input, "Configuration file")->required();
  plot->add_option("--result", pa.result, "Result document whose conic and witnesses are drawn");
  plot->add_option("-o,--output", pa.output, "SVG path")->required();
  plot->add_option("--chart", pa.chart, "Affine chart: x, y or z != 0 (default: automatic)");
  plot->add_option("--resolution", pa.resolution, "Marching-squares cells per side")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*stats) return cmd_stats(input, output, timing);
    if (*find) return cmd_find_conic(input, output, timing);
    if (*orc) {
      oa.jobs = jobs ? *jobs : default_jobs();
      oa.timing = timing;
      return cmd_oracle(oa);
    }
    if (*gen) return cmd_gen(ga);
    if (*plot) return cmd_plot(pa);
  } catch (const BudgetExceeded& e) {
    std::cerr << "sgconic: " << e.message << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "sgconic: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnsupportedField: return kField;
      case ErrorKind::InternalInvariantViolation: return kInvariant;
      case ErrorKind::RenderFailed: return kRender;
      default: return kInput;
    }
  }
  return kInput;
}

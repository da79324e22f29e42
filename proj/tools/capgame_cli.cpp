// capgame: capacity-game rationality check for formal series on P^1 over Q.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capgame/error.hpp"
#include "capgame/pipeline.hpp"
#include "capgame/potential_arch.hpp"
#include "capgame/rational_oracle.hpp"
#include "capgame/report.hpp"
#include "capgame/slopes.hpp"

using namespace capgame;
using nlohmann::json;

namespace {

std::vector<PointId> point_ids(const ProblemSpec& spec) {
  std::vector<PointId> ids;
  for (const auto& p : spec.points) ids.push_back(p.id);
  return ids;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

int cmd_check(const std::string& file) {
  const ProblemSpec spec = load_problem(file);
  const Verdict v = run_check(spec);
  std::cout << render(verdict_json(v));
  std::cerr << "V_G = " << (v.game.value.is_infinite() ? std::string("+inf") : fmt(v.game.value_real()))
            << (v.game.margin() == MarginFlag::marginal ? " (marginal)" : "") << "; criterion "
            << (v.criterion_holds ? "holds" : "fails") << "; oracle "
            << (v.oracle.function ? "found a rational function" : "found nothing") << "; agreement "
            << to_string(v.agreement) << "\n";
  return 0;
}

int cmd_matrix(const std::string& file) {
  const GameMatrix g = global_matrix(load_problem(file));
  std::cout << render(game_matrix_json(g));
  std::cerr << g.size() << "x" << g.size() << " matrix from " << g.places.size() << " place(s)\n";
  for (const auto& w : g.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int cmd_value(const std::string& file) {
  const GameValueResult r = game_value(global_matrix(load_problem(file)));
  std::cout << render(game_value_json(r));
  std::cerr << "V_G = " << (r.value.is_infinite() ? std::string("+inf") : fmt(r.value_real())) << "\n";
  return 0;
}

int cmd_schedule(const std::string& file, std::size_t horizon, const std::string& a_text) {
  const ProblemSpec spec = load_problem(file);
  std::vector<Rational> a;
  if (!a_text.empty()) {
    a = parse_rational_list(a_text);
  } else {
    const RationalGameMatrix g = rationalize(global_matrix(spec));
    const GameValueResult r = game_value(g);
    if (!(r.value > ExtendedRational(Rational(0))))
      precondition_error("V_G <= 0: no default frequencies; pass --a");
    const Rational v_prime = r.value.is_finite() ? Rational(r.value.value() / 2) : Rational(1);
    a = rational_strategy(g, v_prime).weights();
  }
  const Schedule s = Schedule::build(a, horizon, point_ids(spec));
  const BoundsReport b = check_bounds(s);
  std::cout << render(schedule_json(s, b));
  std::cerr << "schedule of length " << horizon << "; bounds " << (b.verdict ? "hold" : "violated") << "\n";
  return 0;
}

int cmd_greens(const std::string& file, PointId pole, const std::string& at) {
  const ProblemSpec spec = load_problem(file);
  if (spec.arch_places.empty()) precondition_error("problem has no archimedean domain");
  const auto comma = at.find(',');
  double x = 0, y = 0;
  try {
    x = std::stod(at.substr(0, comma));
    y = comma == std::string::npos ? 0.0 : std::stod(at.substr(comma + 1));
  } catch (const std::exception&) {
    parse_error("--at expects x,y");
  }
  const auto& assignment = spec.arch_places.front();
  const Coordinate& c = spec.points[spec.index_of(pole)].coordinate;
  const double g = green(assignment.domain, c, std::complex<double>(x, y));
  std::cout << render(json{{"pole", pole}, {"at", {number_json(x), number_json(y)}}, {"green", number_json(g)},
                           {"robin_constant", number_json(robin_constant(assignment.domain, c))}});
  std::cerr << "g = " << fmt(g) << "\n";
  return 0;
}

int cmd_oracle(const std::string& file, int degree) {
  const ProblemSpec spec = load_problem(file);
  std::optional<std::size_t> cap;
  if (degree >= 0)
    cap = static_cast<std::size_t>(degree);
  else if (spec.degree_bound)
    cap = static_cast<std::size_t>(*spec.degree_bound);
  const OracleResult r = search_rational(spec.points, spec.series, cap);
  std::cout << render(oracle_json(r));
  std::cerr << (r.function ? "rational function found" : "no rational function within the search cap") << "\n";
  return 0;
}

int cmd_slopes(long max_degree) {
  json rows = json::array();
  for (const auto& row : growth_table(max_degree))
    rows.push_back({{"N", row.degree}, {"rank_sum", row.rank_sum}, {"triangular", row.triangular}, {"N_squared", row.degree_squared}});
  std::cout << render(json{{"growth", rows}});
  std::cerr << "rank sums for N = 0.." << max_degree << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity-game rationality criterion for formal series on P^1 over Q"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "full verdict: V_G, schedule diagnostics, rationality oracle");
  check->add_option("file", file, "problem document")->required();
  auto* matrix = app.add_subcommand("matrix", "global capacity matrix G");
  matrix->add_option("file", file, "problem document")->required();
  auto* value = app.add_subcommand("value", "game value V_G with optimal strategies");
  value->add_option("file", file, "problem document")->required();

  std::size_t horizon = 0;
  std::string a_text;
  auto* schedule = app.add_subcommand("schedule", "greedy derivation schedule and its bounds");
  schedule->add_option("file", file, "problem document")->required();
  schedule->add_option("--K", horizon, "horizon")->required();
  schedule->add_option("--a", a_text, "comma-separated frequencies p/q (default: from the game)");

  PointId pole = 0;
  std::string at;
  auto* greens = app.add_subcommand("greens", "archimedean Green function value");
  greens->add_option("file", file, "problem document")->required();
  greens->add_option("--pole", pole, "point id of the pole")->required();
  greens->add_option("--at", at, "evaluation point x,y")->required();

  int degree = -1;
  auto* oracle = app.add_subcommand("oracle", "multi-point rational reconstruction");
  oracle->add_option("file", file, "problem document")->required();
  oracle->add_option("--degree", degree, "degree bound (default: document or search cap)");

  long max_degree = 50;
  auto* slopes = app.add_subcommand("slopes", "rank-sum growth of the evaluation filtration");
  slopes->add_option("--max-n", max_degree, "largest degree N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(file);
    if (*matrix) return cmd_matrix(file);
    if (*value) return cmd_value(file);
    if (*schedule) return cmd_schedule(file, horizon, a_text);
    if (*greens) return cmd_greens(file, pole, at);
    if (*oracle) return cmd_oracle(file, degree);
    if (*slopes) return cmd_slopes(max_degree);
  } catch (const Error& e) {
    std::cout << render(error_json(e));
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    const Error wrapped(ErrorKind::computation, e.what());
    std::cout << render(error_json(wrapped));
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

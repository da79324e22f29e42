#include <doctest.h>

#include <chrono>
#include <cmath>

#include "capgame/error.hpp"
#include "capgame/pipeline.hpp"
#include "capgame/report.hpp"
#include "support.hpp"

using namespace capgame;
using capgame::testing::q;

namespace {

Verdict check_file(const char* name) { return run_check(load_problem(std::string(CAPGAME_DATA_DIR "/") + name)); }

}  // namespace

TEST_CASE("run_check: borel_dwork is confirmed") {
  const Verdict v = check_file("borel_dwork.json");
  CHECK(v.game.value_real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(v.criterion_holds);
  CHECK(v.agreement == Agreement::confirmed);
  REQUIRE(v.oracle.function);
  CHECK(*v.oracle.function == RationalFunction(Polynomial{q("1")}, Polynomial{q("1"), q("-2")}));
  REQUIRE(v.schedule);
  CHECK(v.schedule->bounds.verdict);
  CHECK(v.schedule->floor.c == 0);
  CHECK(v.schedule->v_prime == v.game.value.value() / 2);
}

TEST_CASE("run_check: boundary and negative cases") {
  const Verdict unit = check_file("borel_dwork_unit_disk.json");
  CHECK(std::abs(unit.game.value_real()) < 1e-12);
  CHECK_FALSE(unit.criterion_holds);
  CHECK(unit.game.margin() == MarginFlag::marginal);
  CHECK(unit.agreement == Agreement::oracle_only);
  CHECK_FALSE(unit.schedule);

  const Verdict e = check_file("truncated_exp.json");
  CHECK(e.game.value_real() == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(e.agreement == Agreement::both_negative);
  CHECK_FALSE(e.oracle.function);
}

TEST_CASE("run_check: infinite off-diagonal entries") {
  const Verdict v = check_file("infinite_off_diagonal.json");
  CHECK(v.game.value.is_infinite());
  CHECK(v.irreducible);
  CHECK_FALSE(v.schedule);
  CHECK(render(game_value_json(v.game)).find("\"value\": \"inf\"") != std::string::npos);
}

TEST_CASE("reports are deterministic and well formed") {
  const std::string a = render(verdict_json(check_file("borel_dwork.json")));
  const std::string b = render(verdict_json(check_file("borel_dwork.json")));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j.at("agreement") == "confirmed");
  CHECK(j.at("oracle").at("status") == "rational");
  CHECK(number_json(std::log(2.0)).dump() == "0.693147180559945");
  CHECK(extended_json(ExtendedReal::infinity()) == "inf");
  CHECK(to_string(Agreement::criterion_only) == "criterion_only");
}

TEST_CASE("load_problem: a missing file is a parse error") {
  try {
    load_problem("/nonexistent/missing.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(exit_code(e.kind()) == 2);
  }
  CHECK(exit_code(ErrorKind::computation) == 3);
  CHECK(exit_code(ErrorKind::precondition) == 4);
}

#include <doctest.h>

#include <cmath>

#include "capgame/error.hpp"
#include "capgame/formal_data.hpp"
#include "capgame/global_matrix.hpp"
#include "support.hpp"

using namespace capgame;
using capgame::testing::q;

namespace {

const ExtendedReal kInf = ExtendedReal::infinity();

std::vector<double> diagonal(const GameMatrix& g) {
  std::vector<double> d;
  for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g(i, i).value());
  return d;
}

ProblemSpec two_point_problem() {
  return parse_problem(R"({
    "points": [{"id": 0, "coordinate": "0"}, {"id": 1, "coordinate": "1"}],
    "series": [{"point": 0, "coefficients": ["1"]}, {"point": 1, "coefficients": ["1"]}],
    "arch_places": [{"domain": {"kind": "disk", "center": "0", "radius": "2"}, "placement": {"0": 0, "1": 0}}],
    "nonarch_places": [{"p": 3, "log_size_coeffs": {"0": "-1/2"}}, {"p": 5, "preset": {"1": "leaf"}}]
  })");
}

}  // namespace

TEST_CASE("assemble: basic cases") {
  const GameMatrix g = assemble({RealMatrix{{std::log(2.0)}}}, {});
  CHECK(g.size() == 1);
  CHECK(g(0, 0).value() == doctest::Approx(std::log(2.0)));

  const GameMatrix h = assemble({RealMatrix{{0, 0}, {0, 0}}}, {}, {ExtraMatrix{"cut", {{0.0, kInf}, {kInf, 0.0}}}});
  CHECK(h(0, 1).is_infinite());
  CHECK(h(1, 0).is_infinite());
  CHECK(h(0, 0).value() == 0);
  CHECK(h(1, 1).value() == 0);
  CHECK(h.warnings.empty());

  const ProblemSpec bd = load_problem(CAPGAME_DATA_DIR "/borel_dwork.json");
  const GameMatrix b = global_matrix(bd);
  CHECK(b.size() == 1);
  CHECK(b(0, 0).value() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("assemble: exact nonarch parts and failure modes") {
  const NonArchMatrix p2{2, {{q("-1"), q("0")}, {q("0"), q("1/2")}}};
  const NonArchMatrix p3{3, {{q("0"), q("1")}, {q("1"), q("0")}}};
  const GameMatrix g = assemble({RealMatrix{{1, 0.5}, {0.5, 1}}}, {p2, p3});
  CHECK(g(0, 0).value() == doctest::Approx(1 - std::log(2.0)));
  CHECK(g(1, 1).value() == doctest::Approx(1 + 0.5 * std::log(2.0)));
  CHECK(g(0, 1).value() == doctest::Approx(0.5 + std::log(3.0)));
  CHECK(g.places.size() == 3);

  CHECK_THROWS_AS(assemble({RealMatrix{{0, 1}, {0, 0}}}, {}), Error);
  CHECK_THROWS_AS(assemble({RealMatrix{{0, -1}, {-1, 0}}}, {}), Error);
  CHECK_THROWS_AS(assemble({RealMatrix{{0}}}, {}, {ExtraMatrix{"bad", {{kInf}}}}), Error);
  CHECK_THROWS_AS(assemble({RealMatrix{{0}}}, {p2}), Error);
  CHECK_THROWS_AS(make_game_matrix({{0.0, -0.5}, {0.0, 0.0}}), Error);

  const GameMatrix w = assemble({RealMatrix{{0, 0}, {0, 0}}}, {}, {ExtraMatrix{"lopsided", {{0.0, 1.0}, {2.0, 0.0}}}});
  CHECK(w.warnings.size() == 1);
}

TEST_CASE("gauge_shift: examples and product-formula invariance") {
  const std::vector<PlaceMatrix> base = place_matrices(two_point_problem());
  const std::vector<double> before = diagonal(assemble(base));

  CHECK(diagonal(assemble(gauge_shift(base, {q("1"), q("1")}))) == before);

  {
    const auto shifted = gauge_shift(base, {q("2"), q("1")});
    const auto& arch = std::get<RealMatrix>(shifted[0].data);
    CHECK(arch[0][0] == doctest::Approx(std::get<RealMatrix>(base[0].data)[0][0] - std::log(2.0)));
  }
  {
    // a = 3/2: -log(3/2) at the real place, v_2 = -1 at p = 2, v_3 = +1 at p = 3.
    const auto full = complete_support(base, {q("3/2"), q("1")});
    const auto shifted = gauge_shift(full, {q("3/2"), q("1")});
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (const auto* m = std::get_if<NonArchMatrix>(&shifted[k].data)) {
        const auto& orig = std::get<NonArchMatrix>(full[k].data);
        if (m->prime == 2) CHECK(m->coeffs[0][0] - orig.coeffs[0][0] == -1);
        if (m->prime == 3) CHECK(m->coeffs[0][0] - orig.coeffs[0][0] == 1);
        CHECK(m->coeffs[0][1] == orig.coeffs[0][1]);
      }
    }
  }
  for (const char* a : {"2", "3/2", "-5/6", "1001/768"}) {
    const std::vector<Rational> scalars{q(a), q("-7/9")};
    const auto full = complete_support(base, scalars);
    const GameMatrix after = assemble(gauge_shift(full, scalars));
    const GameMatrix ref = assemble(base);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::abs(after(i, i).value() - before[i]) < 1e-9);
      for (std::size_t j = 0; j < 2; ++j)
        if (i != j) CHECK(after(i, j).value() == ref(i, j).value());
    }
  }
  CHECK_THROWS_AS(gauge_shift(base, {q("0"), q("1")}), Error);
}

TEST_CASE("global_matrix applies scalings without changing the diagonal") {
  ProblemSpec spec = two_point_problem();
  const GameMatrix plain = global_matrix(spec);
  spec.scalings = {{0, q("-5/6")}, {1, q("12")}};
  const GameMatrix scaled = global_matrix(spec);
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(scaled(i, i).value() - plain(i, i).value()) < 1e-9);
}

TEST_CASE("assemble is permutation-equivariant") {
  const RealMatrix a{{1, 2, 0}, {2, 3, 0.5}, {0, 0.5, -1}};
  const NonArchMatrix n{3, {{q("-1"), q("0"), q("1")}, {q("0"), q("0"), q("0")}, {q("1"), q("0"), q("-1/2")}}};
  const std::vector<std::size_t> perm{2, 0, 1};
  RealMatrix ap(3, std::vector<double>(3));
  NonArchMatrix np{3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3))};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ap[i][j] = a[perm[i]][perm[j]];
      np.coeffs[i][j] = n.coeffs[perm[i]][perm[j]];
    }
  const GameMatrix g = assemble({a}, {n}), gp = assemble({ap}, {np});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(gp(i, j).value() == g(perm[i], perm[j]).value());
}

TEST_CASE("irreducibility: basic cases") {
  CHECK(irreducibility(make_game_matrix({{1.0}})));
  CHECK(irreducibility(make_game_matrix({{0.0, 1.0}, {1.0, 0.0}})));
  CHECK_FALSE(irreducibility(make_game_matrix({{0.0, 0.0}, {0.0, 0.0}})));
  CHECK(irreducibility(make_game_matrix({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}})));
  CHECK_FALSE(irreducibility(make_game_matrix({{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}})));
  CHECK(irreducibility(make_game_matrix({{0.0, kInf}, {kInf, 0.0}})));
}

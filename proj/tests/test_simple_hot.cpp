#include <random>

#include "crg/errors.hpp"
#include "crg/order.hpp"
#include "crg/simple_hot.hpp"
#include "crg/solver.hpp"
#include "doctest.h"

using namespace crg;

namespace {

SHGame random_game(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  int v[3] = {d(rng), d(rng), d(rng)};
  std::sort(v, v + 3);
  return SHGame(v[2], v[1], v[0]);
}

SHSum mixed_sum() { return SHSum{{SHGame(10, 8, -3), SHGame(5, -2, -4)}, 1}; }

}  // namespace

TEST_CASE("simple hot games") {
  CHECK_THROWS_AS(SHGame(1, 2, 0), PreconditionError);
  CHECK(SHGame(10, 8, -3).conjugate() == SHGame(3, -8, -10));
  CHECK(SHGame(10, 8, -3).spread() == 13);
  CHECK(to_position(SHGame(2, 0, -4)) == Position::triple(2, 0, -4));
  CHECK(as_simple_hot(Position::triple(2, 0, -4)) == SHGame(2, 0, -4));
  CHECK(as_simple_hot(star_bar()) == SHGame(0, 0, 0));
  CHECK_FALSE(as_simple_hot(mk_int(3)));
  CHECK_FALSE(as_simple_hot(Position::node({star_bar()}, {mk_int(0)}, {{mk_int(0)}})));
}

TEST_CASE("translation") {
  CHECK(translate(SHGame(10, 8, -3), 0) == SHGame(10, 8, -3));
  CHECK(translate(SHGame(10, 8, -3), -8) == SHGame(2, 0, -11));
  CHECK(translate(SHGame(5, -2, -4), 2) == SHGame(7, 0, -2));
}

TEST_CASE("integer translation law") {
  const ContextFamily& sh = ContextFamily::named("sh-only");
  std::mt19937 rng(5);
  for (int t = 0; t < 12; ++t) {
    const SHGame h = random_game(rng, -4, 4);
    const std::int64_t d = std::uniform_int_distribution<int>(-3, 3)(rng);
    CHECK(equiv_mod({to_position(h), mk_int(d)}, {to_position(translate(h, d))}, sh));
  }
}

TEST_CASE("normalization") {
  const Normalized n = normalize(mixed_sum());
  CHECK(n.base == 7);
  CHECK(n.games == std::vector<SHGame>{SHGame(2, 0, -11), SHGame(7, 0, -2)});
  CHECK(n.order == std::vector<std::size_t>{0, 1});

  const Normalized i = normalize(SHSum{{}, 5});
  CHECK(i.base == 5);
  CHECK(i.games.empty());

  const Normalized z = normalize(SHSum{{SHGame(1, 0, -2), SHGame(4, 0, -4)}, 3});
  CHECK(z.base == 3);
  CHECK(z.games == std::vector<SHGame>{SHGame(4, 0, -4), SHGame(1, 0, -2)});
  CHECK(z.order == std::vector<std::size_t>{1, 0});
}

TEST_CASE("standard indexing") {
  CHECK(standard_index({SHGame(6, 0, -55), SHGame(10, 0, -36)}) == std::vector<std::size_t>{0, 1});
  CHECK(standard_index({SHGame(10, 0, -36), SHGame(6, 0, -55)}) == std::vector<std::size_t>{1, 0});
  CHECK(standard_index({}).empty());
  CHECK(standard_index({SHGame(1, 0, -1), SHGame(2, 1, 0), SHGame(3, 0, -3)}) ==
        std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("solving") {
  const SHSolution two = solve_sh(SHSum{{SHGame(6, 0, -55), SHGame(10, 0, -36)}, 0});
  CHECK(two.score == -30);
  CHECK(two.outcome == Outcome::right_win);
  CHECK(two.right_plan.pairs == decltype(two.right_plan.pairs){{1, 2}});
  CHECK(two.left_order == std::vector<std::size_t>{0, 1});
  REQUIRE(two.trace.size() == 1);
  CHECK(two.trace[0].left_game == 1);
  CHECK(two.trace[0].right_game == 2);
  CHECK(two.trace[0].delta == -30);

  const SHSolution p = solve_sh(mixed_sum());
  CHECK(p.score == 7);
  CHECK(p.outcome == Outcome::left_win);
  CHECK(p.right_plan.pairs.empty());
  REQUIRE(p.trace.size() == 2);
  CHECK(p.trace[0].right_game == p.trace[0].left_game);

  CHECK(solve_sh(SHSum{{}, 0}).outcome == Outcome::draw);
  CHECK(alpha_response(two.right_plan, 1) == 2);
  CHECK(alpha_response(two.right_plan, 2) == 1);
  CHECK(alpha_response(p.right_plan, 2) == 2);
  CHECK(outcome_of_score(-1) == Outcome::right_win);
  CHECK(outcome_of_score(0) == Outcome::draw);
  CHECK(outcome_of_score(4) == Outcome::left_win);
}

TEST_CASE("value oracle") {
  CHECK(sh_value_oracle(SHSum{{SHGame(6, 0, -55), SHGame(10, 0, -36)}, 0}) == -30);
  CHECK(sh_value_oracle({}, 3, 2) == 1);
  CHECK(sh_value_oracle(SHSum{{SHGame(2, 0, -11)}, 0}) == 0);
  CHECK(sh_value_oracle(mixed_sum()) == 7);
  CHECK(sh_value_oracle({SHGame(10, 8, -3), SHGame(5, -2, -4)}, 2, 1) == 7);
  CHECK_THROWS_AS(sh_value_oracle(SHSum{std::vector<SHGame>(7, SHGame(1, 0, -1)), 0}),
                  ResourceLimitError);
  CHECK_THROWS_AS(sh_value_oracle(SHSum{{}, 31}), ResourceLimitError);
}

TEST_CASE("solver agrees with the value oracle") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 500; ++t) {
    SHSum s;
    const int n = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int k = 0; k < n; ++k) s.games.push_back(random_game(rng, -20, 20));
    s.base_int = std::uniform_int_distribution<int>(-5, 5)(rng);
    const SHSolution sol = solve_sh(s);
    CHECK(sol.score == sh_value_oracle(s));
    std::int64_t sum = sol.base + sol.right_plan.total_weight;
    CHECK(sol.score == sum);
    std::int64_t traced = sol.base;
    for (const auto& st : sol.trace) traced += st.delta;
    CHECK(traced == sol.score);
  }
}

TEST_CASE("integers add") {
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      CHECK(solve_sh(SHSum{{}, a + b}).score == a + b);
      CHECK(solve(SumArena({mk_int(a), mk_int(b)})).score == a + b);
    }
  }
}

TEST_CASE("both players answer inside H when an integer is present") {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    const SHGame h = random_game(rng, -6, 6);
    if (h.a == h.c) continue;
    const std::int64_t d = std::uniform_int_distribution<int>(1, 4)(rng) * (t % 2 ? 1 : -1);
    const SolveResult r = solve(SumArena({to_position(h), mk_int(d)}));
    REQUIRE(r.principal);
    CHECK(r.principal->left.component == 0);
    CHECK(r.principal->right.component == 0);
    CHECK(r.score == h.b + d);
  }
}

TEST_CASE("Left starts in the wider game when Right must cross") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 30; ++t) {
    SHGame g1 = random_game(rng, -15, 15), g2 = random_game(rng, -15, 15);
    g1 = translate(g1, -g1.b);
    g2 = translate(g2, -g2.b);
    if (g1.spread() < g2.spread()) std::swap(g1, g2);
    if (g1.spread() == g2.spread()) continue;
    if (!(g1.a + g2.c < 0 && g2.a + g1.c < 0)) continue;
    ++checked;
    // value of the sum once Left has opened in game k, Right replying anywhere
    auto opened = [&](const SHGame& mine, const SHGame& other) {
      const std::int64_t local = sh_value_oracle(SHSum{{other}, mine.b});
      const std::int64_t cross = mine.a + other.c;
      return std::min(local, cross);
    };
    CHECK(opened(g1, g2) > opened(g2, g1));
    CHECK(sh_value_oracle(SHSum{{g1, g2}, 0}) == opened(g1, g2));
  }
  CHECK(checked >= 10);
}

TEST_CASE("conjugate is not an inverse") {
  const Position g = Position::triple(2, 0, -4);
  const Position h = Position::triple(3, 0, -1);
  CHECK(outcome(g) == Outcome::draw);
  CHECK(outcome(SumArena({g, h, conjugate(h)})) == Outcome::right_win);
  CHECK(conjugate(h) == to_position(SHGame(3, 0, -1).conjugate()));
  CHECK(refute_geq({h, conjugate(h)}, {}, ContextFamily::named("sh-only")));
}

TEST_CASE("recognition and JSON") {
  const SumArena a({Position::triple(10, 8, -3), mk_int(2), Position::triple(5, -2, -4), mk_int(-1)});
  const auto r = recognize_sh_sum(a);
  REQUIRE(r);
  CHECK(r->sum.games == std::vector<SHGame>{SHGame(10, 8, -3), SHGame(5, -2, -4)});
  CHECK(r->sum.base_int == 1);
  CHECK(r->component_of == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(recognize_sh_sum(SumArena({star_bar(), Position::node({star_bar()}, {}, {})})));
  CHECK(to_arena(r->sum).size() == 3);

  const auto j = to_json(solve_sh(r->sum));
  CHECK(j["score"] == 7);
  CHECK(j["outcome"] == "L");
  CHECK(j["base"] == 7);
  CHECK(j["leftOrder"] == nlohmann::json::parse("[0,1]"));
  CHECK(j["auxGraph"]["edges"].empty());
  CHECK(j["trace"].size() == 2);
}

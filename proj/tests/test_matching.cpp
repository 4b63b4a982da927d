#include <map>
#include <random>

#include "crg/errors.hpp"
#include "crg/matching.hpp"
#include "crg/simple_hot.hpp"
#include "doctest.h"

using namespace crg;

namespace {

AuxGraph random_graph(std::mt19937& rng, std::size_t n, double density) {
  AuxGraph g{n, {}};
  std::uniform_int_distribution<int> w(-50, -1);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (keep(rng)) g.edges.push_back({i, j, w(rng)});
    }
  }
  return g;
}

std::int64_t weight_of(const AuxGraph& g, std::size_t i, std::size_t j) {
  for (const auto& e : g.edges) {
    if (e.i == std::min(i, j) && e.j == std::max(i, j)) return e.weight;
  }
  return 1;  // no edge
}

// No single edge can be added, possibly evicting the partners of its ends,
// to lower the total.
bool locally_optimal(const AuxGraph& g, const Matching& m) {
  for (const auto& e : g.edges) {
    std::int64_t loss = 0;
    const std::size_t pi = m.partner(e.i), pj = m.partner(e.j);
    if (pi == e.j) continue;
    if (pi) loss += weight_of(g, e.i, pi);
    if (pj) loss += weight_of(g, e.j, pj);
    if (e.weight < loss) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("auxiliary graph") {
  const AuxGraph g = build_aux_graph({SHGame(6, 0, -55), SHGame(10, 0, -36)});
  CHECK(g.n == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == WeightedEdge{1, 2, -30});

  CHECK(build_aux_graph({SHGame(2, 0, -11), SHGame(7, 0, -2)}).edges.empty());
  CHECK(build_aux_graph({}).n == 0);
  CHECK_THROWS_AS(build_aux_graph({SHGame(3, 1, -2)}), PreconditionError);
  CHECK_THROWS_AS(build_aux_graph({SHGame(1, 0, -1), SHGame(5, 0, -5)}), PreconditionError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(AuxGraph{2, {{1, 2, 0}}}), PreconditionError);
  CHECK_THROWS_AS(validate(AuxGraph{2, {{2, 1, -1}}}), PreconditionError);
  CHECK_THROWS_AS(validate(AuxGraph{2, {{1, 3, -1}}}), PreconditionError);
  CHECK_THROWS_AS(validate(AuxGraph{2, {{1, 2, -1}, {1, 2, -2}}}), PreconditionError);
}

TEST_CASE("matching examples") {
  Matching m = min_weight_matching(AuxGraph{2, {{1, 2, -30}}});
  CHECK(m.pairs == decltype(m.pairs){{1, 2}});
  CHECK(m.total_weight == -30);

  m = min_weight_matching(AuxGraph{0, {}});
  CHECK(m.pairs.empty());
  CHECK(m.total_weight == 0);

  const AuxGraph k3{3, {{1, 2, -5}, {1, 3, -4}, {2, 3, -4}}};
  m = min_weight_matching(k3);
  CHECK(m.pairs == decltype(m.pairs){{1, 2}});
  CHECK(m.total_weight == -5);
  CHECK(brute_force_matching(k3) == m);

  const AuxGraph star{3, {{1, 2, -3}, {1, 3, -7}}};
  m = min_weight_matching(star);
  CHECK(m.pairs == decltype(m.pairs){{1, 3}});
  CHECK(m.total_weight == -7);
  CHECK(m.partner(3) == 1);
  CHECK(m.partner(2) == 0);

  // ties go to the lexicographically smallest pair list
  const AuxGraph tie{4, {{1, 2, -2}, {3, 4, -2}, {1, 4, -2}, {2, 3, -2}}};
  CHECK(min_weight_matching(tie).pairs == decltype(m.pairs){{1, 2}, {3, 4}});
  CHECK(brute_force_matching(tie).pairs == decltype(m.pairs){{1, 2}, {3, 4}});
  CHECK(min_weight_matching(tie, MatchingMethod::blossom).pairs == decltype(m.pairs){{1, 2}, {3, 4}});
}

TEST_CASE("TD2 matching pairs") {
  // (56,7), (37,11), (24,15), (20,17) as normalized simple hot games
  const std::vector<SHGame> games = {SHGame(6, 0, -55), SHGame(10, 0, -36), SHGame(14, 0, -23),
                                     SHGame(16, 0, -19)};
  const AuxGraph g = build_aux_graph(games);
  const Matching m = min_weight_matching(g);
  CHECK(m.pairs == decltype(m.pairs){{1, 2}, {3, 4}});
  CHECK(m.total_weight == -35);
}

TEST_CASE("subset DP agrees with enumeration") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const AuxGraph g = random_graph(rng, 1 + t % 12, 0.5);
    const Matching a = min_weight_matching(g, MatchingMethod::subset_dp);
    const Matching b = brute_force_matching(g);
    CHECK(a == b);
    CHECK(a.total_weight <= 0);
    CHECK(locally_optimal(g, a));
  }
}

TEST_CASE("blossom agrees with subset DP") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const AuxGraph g = random_graph(rng, 1 + t % 16, t % 3 == 0 ? 0.9 : 0.4);
    const Matching a = min_weight_matching(g, MatchingMethod::subset_dp);
    const Matching b = min_weight_matching(g, MatchingMethod::blossom);
    CHECK(a.total_weight == b.total_weight);
    CHECK(a.pairs == b.pairs);
  }
}

TEST_CASE("large graphs") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const AuxGraph g = random_graph(rng, 21 + t * 4, 0.3);
    const Matching m = min_weight_matching(g);
    CHECK(locally_optimal(g, m));
    std::vector<int> used(g.n + 1);
    std::int64_t total = 0;
    for (auto [i, j] : m.pairs) {
      CHECK(++used[i] == 1);
      CHECK(++used[j] == 1);
      total += weight_of(g, i, j);
    }
    CHECK(total == m.total_weight);
  }
  CHECK_THROWS_AS(brute_force_matching(random_graph(rng, 13, 0.5)), ResourceLimitError);
}

TEST_CASE("general maximum weight matching") {
  // path 0-1-2-3: the two end edges beat the heavy middle one
  auto mate = max_weight_matching(4, {{0, 1, 5}, {1, 2, 8}, {2, 3, 5}});
  CHECK(mate == std::vector<long>{1, 0, 3, 2});
  // odd cycle with a pendant forces a blossom
  mate = max_weight_matching(6, {{0, 1, 6}, {1, 2, 6}, {2, 0, 6}, {2, 3, 5}, {3, 4, 6}, {4, 5, 6}});
  std::int64_t w = 0;
  const std::map<std::pair<long, long>, std::int64_t> ws = {
      {{0, 1}, 6}, {{1, 2}, 6}, {{0, 2}, 6}, {{2, 3}, 5}, {{3, 4}, 6}, {{4, 5}, 6}};
  for (long v = 0; v < 6; ++v) {
    if (mate[v] > v) w += ws.at({v, mate[v]});
  }
  CHECK(w == 17);
}

TEST_CASE("exports") {
  const AuxGraph g{3, {{1, 2, -3}, {1, 3, -7}}};
  const Matching m = min_weight_matching(g);
  const auto j = to_json(g, m);
  CHECK(j["n"] == 3);
  CHECK(j["edges"] == nlohmann::json::parse("[[1,2,-3],[1,3,-7]]"));
  CHECK(j["matching"] == nlohmann::json::parse("[[1,3]]"));
  CHECK(j["weight"] == -7);

  const std::string dot = to_dot(g, m, {"a", "b", "c"});
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("1: a") != std::string::npos);
}

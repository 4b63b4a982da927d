#include "crg/simple_hot.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "crg/errors.hpp"

namespace crg {

SHGame translate(const SHGame& h, std::int64_t d) {
  return SHGame(h.a + d, h.b + d, h.c + d);
}

Position to_position(const SHGame& h) { return Position::triple(h.a, h.b, h.c); }

std::optional<SHGame> as_simple_hot(Position p) {
  if (p.is_integer() || p.left_count() != 1 || p.right_count() != 1) {
    return std::nullopt;
  }
  const auto a = p.left(0).as_integer();
  const auto b = p.same_round(0, 0).as_integer();
  const auto c = p.right(0).as_integer();
  if (!a || !b || !c || !(*a >= *b && *b >= *c)) return std::nullopt;
  return SHGame(*a, *b, *c);
}

std::optional<RecognizedSum> recognize_sh_sum(const SumArena& arena) {
  RecognizedSum r;
  for (std::size_t k = 0; k < arena.size(); ++k) {
    const Position p = arena.components()[k];
    if (p.is_integer()) {
      r.sum.base_int += p.int_value();
    } else if (auto h = as_simple_hot(p)) {
      r.sum.games.push_back(*h);
      r.component_of.push_back(k);
    } else {
      return std::nullopt;
    }
  }
  return r;
}

SumArena to_arena(const SHSum& s) {
  std::vector<Position> parts;
  for (const auto& g : s.games) parts.push_back(to_position(g));
  if (s.base_int != 0) parts.push_back(mk_int(s.base_int));
  return SumArena(std::move(parts));
}

std::vector<std::size_t> standard_index(const std::vector<SHGame>& games) {
  std::vector<std::size_t> perm(games.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return games[x].spread() > games[y].spread();
  });
  return perm;
}

Normalized normalize(const SHSum& s) {
  Normalized out;
  out.base = s.base_int;
  for (const auto& g : s.games) out.base += g.b;
  out.order = standard_index(s.games);
  for (std::size_t k : out.order) out.games.push_back(translate(s.games[k], -s.games[k].b));
  return out;
}

Outcome outcome_of_score(std::int64_t score) {
  if (score > 0) return Outcome::left_win;
  if (score < 0) return Outcome::right_win;
  return Outcome::draw;
}

std::size_t alpha_response(const Matching& m, std::size_t left_game) {
  const std::size_t partner = m.partner(left_game);
  return partner == 0 ? left_game : partner;
}

SHSolution solve_sh(const SHSum& s) {
  SHSolution sol;
  const Normalized norm = normalize(s);
  sol.base = norm.base;
  sol.normalized = norm.games;
  sol.left_order = norm.order;
  sol.graph = build_aux_graph(norm.games);
  sol.right_plan = min_weight_matching(sol.graph);
  sol.score = sol.base + sol.right_plan.total_weight;
  sol.outcome = outcome_of_score(sol.score);

  std::vector<bool> gone(norm.games.size() + 1, false);
  for (std::size_t i = 1; i <= norm.games.size(); ++i) {
    if (gone[i]) continue;
    const std::size_t j = alpha_response(sol.right_plan, i);
    const std::int64_t delta =
        (j == i) ? 0 : norm.games[i - 1].a + norm.games[j - 1].c;
    gone[i] = gone[j] = true;
    sol.trace.push_back({i, j, delta});
  }
  return sol;
}

namespace {

class ValueOracle {
 public:
  std::int64_t value(std::vector<SHGame> games, std::int64_t pos, std::int64_t neg) {
    std::sort(games.begin(), games.end(), [](const SHGame& x, const SHGame& y) {
      return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    if (games.empty()) return pos - neg;
    auto key = std::make_tuple(games, pos, neg);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto add_int = [](std::int64_t& p, std::int64_t& n, std::int64_t v) {
      if (v > 0) p += v;
      if (v < 0) n -= v;
    };
    const std::size_t k = games.size();
    // Left move index: 0..k-1 hot games, k = integer (if pos > 0).
    // Right move index: 0..k-1 hot games, k = integer (if neg > 0).
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i <= k; ++i) {
      if (i == k && pos == 0) continue;
      std::int64_t worst = std::numeric_limits<std::int64_t>::max();
      for (std::size_t j = 0; j <= k; ++j) {
        if (j == k && neg == 0) continue;
        std::vector<SHGame> rest;
        std::int64_t p = pos, n = neg;
        for (std::size_t t = 0; t < k; ++t) {
          if (t == i && t == j) {
            add_int(p, n, games[t].b);
          } else if (t == i) {
            add_int(p, n, games[t].a);
          } else if (t == j) {
            add_int(p, n, games[t].c);
          } else {
            rest.push_back(games[t]);
          }
        }
        if (i == k) --p;
        if (j == k) --n;
        worst = std::min(worst, value(std::move(rest), p, n));
        if (worst <= best) break;
      }
      best = std::max(best, worst);
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  struct Less {
    bool operator()(const std::tuple<std::vector<SHGame>, std::int64_t, std::int64_t>& x,
                    const std::tuple<std::vector<SHGame>, std::int64_t, std::int64_t>& y) const {
      auto proj = [](const SHGame& g) { return std::tie(g.a, g.b, g.c); };
      const auto& gx = std::get<0>(x);
      const auto& gy = std::get<0>(y);
      if (gx.size() != gy.size()) return gx.size() < gy.size();
      for (std::size_t t = 0; t < gx.size(); ++t) {
        if (proj(gx[t]) != proj(gy[t])) return proj(gx[t]) < proj(gy[t]);
      }
      return std::tie(std::get<1>(x), std::get<2>(x)) <
             std::tie(std::get<1>(y), std::get<2>(y));
    }
  };
  std::map<std::tuple<std::vector<SHGame>, std::int64_t, std::int64_t>, std::int64_t,
           Less>
      memo_;
};

}  // namespace

std::int64_t sh_value_oracle(const std::vector<SHGame>& games, std::int64_t positive,
                             std::int64_t negative) {
  if (games.size() > kOracleMaxGames) {
    throw ResourceLimitError("value oracle supports at most 6 games");
  }
  if (positive < 0 || negative < 0 || positive > kOracleMaxBase ||
      negative > kOracleMaxBase) {
    throw ResourceLimitError("value oracle supports integer parts up to 30");
  }
  return ValueOracle().value(games, positive, negative);
}

std::int64_t sh_value_oracle(const SHSum& s) {
  if (s.base_int > kOracleMaxBase || s.base_int < -kOracleMaxBase) {
    throw ResourceLimitError("value oracle supports |base| <= 30");
  }
  return sh_value_oracle(s.games, std::max<std::int64_t>(s.base_int, 0),
                         std::max<std::int64_t>(-s.base_int, 0));
}

nlohmann::json to_json(const SHGame& g) { return nlohmann::json::array({g.a, g.b, g.c}); }

nlohmann::json to_json(const SHSolution& s) {
  nlohmann::json games = nlohmann::json::array();
  for (const auto& g : s.normalized) games.push_back(to_json(g));
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : s.trace) {
    trace.push_back({{"leftGame", t.left_game}, {"rightGame", t.right_game},
                     {"delta", t.delta}});
  }
  nlohmann::json plan = nlohmann::json::array();
  for (const auto& [i, j] : s.right_plan.pairs) plan.push_back({i, j});
  return {{"score", s.score},
          {"outcome", outcome_letter(s.outcome)},
          {"base", s.base},
          {"normalized", games},
          {"leftOrder", s.left_order},
          {"rightPlan", plan},
          {"auxGraph", to_json(s.graph, s.right_plan)},
          {"trace", trace}};
}

}  // namespace crg

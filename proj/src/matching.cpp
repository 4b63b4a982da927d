#include "crg/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "crg/errors.hpp"

namespace crg {

namespace {

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

Matching finish(PairList pairs, const AuxGraph& g) {
  std::sort(pairs.begin(), pairs.end());
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> weight;
  for (const auto& e : g.edges) weight[{e.i, e.j}] = e.weight;
  Matching m;
  for (const auto& p : pairs) m.total_weight += weight.at(p);
  m.pairs = std::move(pairs);
  return m;
}

// Subset DP: state = set of vertices already decided, always a prefix-closed
// choice of the lowest undecided vertex.
Matching subset_dp(const AuxGraph& g) {
  const std::size_t n = g.n;
  if (n == 0) return {};
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, kNone));
  for (const auto& e : g.edges) {
    w[e.i - 1][e.j - 1] = e.weight;
    w[e.j - 1][e.i - 1] = e.weight;
  }
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::vector<std::int64_t> best(std::size_t(full) + 1, 0);
  // choice[mask] = partner index of the lowest free vertex, or n for "skip"
  std::vector<std::uint8_t> choice(std::size_t(full) + 1, 0);

  auto reconstruct = [&](std::uint32_t mask) {
    PairList out;
    while (mask != full) {
      const auto v = static_cast<std::size_t>(std::countr_one(mask));
      const std::size_t u = choice[mask];
      if (u == n) {
        mask |= 1u << v;
      } else {
        out.emplace_back(v + 1, u + 1);
        mask |= (1u << v) | (1u << u);
      }
    }
    return out;
  };

  for (std::int64_t m = std::int64_t(full) - 1; m >= 0; --m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const auto v = static_cast<std::size_t>(std::countr_one(mask));
    const std::uint32_t skip_mask = mask | (1u << v);
    std::int64_t b = best[skip_mask];
    std::size_t c = n;
    for (std::size_t u = v + 1; u < n; ++u) {
      if ((mask >> u) & 1u || w[v][u] == kNone) continue;
      const std::uint32_t next = skip_mask | (1u << u);
      const std::int64_t cand = w[v][u] + best[next];
      if (cand < b) {
        b = cand;
        c = u;
      } else if (cand == b) {
        // Tie: compare the full pair lists produced by each choice.
        PairList current;
        if (c == n) {
          current = reconstruct(skip_mask);
        } else {
          current = reconstruct(skip_mask | (1u << c));
          current.insert(current.begin(), {v + 1, c + 1});
        }
        PairList other = reconstruct(next);
        other.insert(other.begin(), {v + 1, u + 1});
        if (other < current) c = u;
      }
    }
    best[mask] = b;
    choice[mask] = static_cast<std::uint8_t>(c);
  }
  return finish(reconstruct(0), g);
}

std::int64_t optimum_weight(std::size_t n,
                            const std::vector<WeightedEdge>& edges) {
  std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> pos;
  for (const auto& e : edges) pos.emplace_back(e.i - 1, e.j - 1, -e.weight);
  const auto mate = max_weight_matching(n, pos);
  std::int64_t total = 0;
  for (const auto& e : edges) {
    if (mate[e.i - 1] == long(e.j - 1)) total += e.weight;
  }
  return total;
}

// Lexicographically smallest optimal matching: scan candidate pairs in
// sorted order and commit to one whenever it can be completed to an
// optimum of the remaining graph.
Matching blossom_lexmin(const AuxGraph& g) {
  const std::int64_t target = optimum_weight(g.n, g.edges);
  std::vector<WeightedEdge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return std::pair(x.i, x.j) < std::pair(y.i, y.j);
  });
  std::vector<bool> used(g.n + 1, false);
  std::vector<bool> decided(g.n + 1, false);
  PairList chosen;
  std::int64_t committed = 0;

  auto remaining_edges = [&] {
    std::vector<WeightedEdge> out;
    for (const auto& e : sorted) {
      if (used[e.i] || used[e.j] || decided[e.i] || decided[e.j]) continue;
      out.push_back(e);
    }
    return out;
  };

  for (std::size_t v = 1; v <= g.n; ++v) {
    if (used[v]) continue;
    bool matched = false;
    for (const auto& e : sorted) {
      if (e.i != v || used[e.j]) continue;
      used[v] = used[e.j] = true;
      decided[v] = true;
      const auto rest = remaining_edges();
      if (committed + e.weight + optimum_weight(g.n, rest) == target) {
        chosen.emplace_back(v, e.j);
        committed += e.weight;
        matched = true;
        break;
      }
      used[v] = used[e.j] = false;
      decided[v] = false;
    }
    if (!matched) decided[v] = true;
  }
  return finish(std::move(chosen), g);
}

void brute(const AuxGraph& g,
           const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& adj,
           std::vector<bool>& used, std::size_t v, PairList& cur,
           std::int64_t w, std::int64_t& best_w, PairList& best) {
  while (v <= g.n && used[v]) ++v;
  if (v > g.n) {
    PairList sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    if (w < best_w || (w == best_w && sorted < best)) {
      best_w = w;
      best = std::move(sorted);
    }
    return;
  }
  used[v] = true;
  brute(g, adj, used, v + 1, cur, w, best_w, best);
  for (const auto& [u, wu] : adj[v]) {
    if (used[u]) continue;
    used[u] = true;
    cur.emplace_back(v, u);
    brute(g, adj, used, v + 1, cur, w + wu, best_w, best);
    cur.pop_back();
    used[u] = false;
  }
  used[v] = false;
}

}  // namespace

std::size_t Matching::partner(std::size_t v) const {
  for (const auto& [i, j] : pairs) {
    if (i == v) return j;
    if (j == v) return i;
  }
  return 0;
}

void validate(const AuxGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    if (!(1 <= e.i && e.i < e.j && e.j <= g.n)) {
      throw PreconditionError("edge endpoints out of order or range");
    }
    if (e.weight >= 0) throw PreconditionError("edge weights must be negative");
    if (!seen.insert({e.i, e.j}).second) {
      throw PreconditionError("duplicate edge");
    }
  }
}

AuxGraph build_aux_graph(const std::vector<SHGame>& games) {
  AuxGraph g;
  g.n = games.size();
  for (std::size_t k = 0; k < games.size(); ++k) {
    if (!games[k].normalized()) {
      throw PreconditionError("game " + std::to_string(k + 1) +
                              " is not normalized");
    }
    if (k > 0 && games[k - 1].spread() < games[k].spread()) {
      throw PreconditionError("games are not in standard order");
    }
  }
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (std::size_t j = i + 1; j < games.size(); ++j) {
      const std::int64_t w = games[i].a + games[j].c;
      if (w < 0) g.edges.push_back({i + 1, j + 1, w});
    }
  }
  return g;
}

Matching min_weight_matching(const AuxGraph& g, MatchingMethod method) {
  validate(g);
  if (method == MatchingMethod::automatic) {
    method = g.n <= kSubsetDpLimit ? MatchingMethod::subset_dp
                                   : MatchingMethod::blossom;
  }
  if (method == MatchingMethod::subset_dp) {
    if (g.n > kSubsetDpLimit) {
      throw ResourceLimitError("subset DP supports at most 20 vertices");
    }
    return subset_dp(g);
  }
  return blossom_lexmin(g);
}

Matching brute_force_matching(const AuxGraph& g) {
  validate(g);
  if (g.n > 12) {
    throw ResourceLimitError("brute-force matching supports at most 12 vertices");
  }
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(g.n + 1);
  for (const auto& e : g.edges) adj[e.i].emplace_back(e.j, e.weight);
  std::vector<bool> used(g.n + 1, false);
  PairList cur, best;
  std::int64_t best_w = std::numeric_limits<std::int64_t>::max();
  brute(g, adj, used, 1, cur, 0, best_w, best);
  return finish(std::move(best), g);
}

nlohmann::json to_json(const AuxGraph& g, const Matching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.i, e.j, e.weight});
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : m.pairs) pairs.push_back({i, j});
  return {{"n", g.n}, {"edges", edges}, {"matching", pairs},
          {"weight", m.total_weight}};
}

std::string to_dot(const AuxGraph& g, const Matching& m,
                   const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph D_G {\n  node [shape=circle];\n";
  for (std::size_t v = 1; v <= g.n; ++v) {
    out << "  " << v;
    if (v <= labels.size()) out << " [label=\"" << v << ": " << labels[v - 1] << "\"]";
    out << ";\n";
  }
  const std::set<std::pair<std::size_t, std::size_t>> matched(m.pairs.begin(),
                                                               m.pairs.end());
  for (const auto& e : g.edges) {
    out << "  " << e.i << " -- " << e.j << " [label=\"" << e.weight << "\"";
    if (matched.count({e.i, e.j})) out << ", color=red, penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace crg

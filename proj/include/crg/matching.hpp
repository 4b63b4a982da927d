#pragma once

// Minimum-weight matching on the auxiliary graph of a sum of normalized
// simple hot games. Vertices are 1..n in standard index order; every edge
// has a strictly negative weight and every vertex carries an implicit
// zero-weight loop, so a vertex left unmatched costs nothing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crg/sh_game.hpp"
#include "json.hpp"

namespace crg {

struct WeightedEdge {
  std::size_t i = 0;  // 1-based, i < j
  std::size_t j = 0;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct AuxGraph {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;
};

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted, 1-based
  std::int64_t total_weight = 0;

  /// Partner of vertex v (1-based), or 0 when v is unmatched.
  std::size_t partner(std::size_t v) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Throws PreconditionError unless 1 <= i < j <= n, weights are negative and
/// no pair repeats.
void validate(const AuxGraph& g);

/// Edge (i, j), i < j, iff a_i + c_j < 0, weighted a_i + c_j. The games must
/// be normalized (b = 0) and in standard order (a - c non-increasing).
AuxGraph build_aux_graph(const std::vector<SHGame>& games);

enum class MatchingMethod { automatic, subset_dp, blossom };

inline constexpr std::size_t kSubsetDpLimit = 20;

/// Exact minimum-weight matching. Among optimal matchings the
/// lexicographically smallest sorted pair list is returned.
Matching min_weight_matching(const AuxGraph& g,
                             MatchingMethod method = MatchingMethod::automatic);

/// Exhaustive enumeration; n <= 12 or ResourceLimitError.
Matching brute_force_matching(const AuxGraph& g);

/// Maximum-weight matching of a general graph with positive integer weights
/// (Edmonds' blossom algorithm with dual variables). Vertices are 0-based;
/// returns mate[v] or -1.
std::vector<long> max_weight_matching(
    std::size_t n,
    const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>&
        edges);

nlohmann::json to_json(const AuxGraph& g, const Matching& m);

/// Graphviz rendering; matched edges are drawn bold and red. `labels`, when
/// given, names vertex v by labels[v - 1].
std::string to_dot(const AuxGraph& g, const Matching& m,
                   const std::vector<std::string>& labels = {});

}  // namespace crg

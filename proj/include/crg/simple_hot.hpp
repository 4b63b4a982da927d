#pragma once

// Sums of simple hot games and integers: normalization, standard indexing,
// the matching-based optimal strategies and a brute-force value oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crg/arena.hpp"
#include "crg/matching.hpp"
#include "crg/position.hpp"
#include "crg/sh_game.hpp"
#include "json.hpp"

namespace crg {

struct SHSum {
  std::vector<SHGame> games;
  std::int64_t base_int = 0;
};

/// {a+d | b+d | c+d}
SHGame translate(const SHGame& h, std::int64_t d);

Position to_position(const SHGame& h);

/// {a|b|c} with integer options and a >= b >= c.
std::optional<SHGame> as_simple_hot(Position p);

/// Recognizes an arena made only of integers and simple hot games. Game
/// order follows the components; `component_of[k]` is the arena index of
/// game k.
struct RecognizedSum {
  SHSum sum;
  std::vector<std::size_t> component_of;
};
std::optional<RecognizedSum> recognize_sh_sum(const SumArena& arena);

/// Builds the arena: games in order, then base_int when nonzero.
SumArena to_arena(const SHSum& s);

/// Stable permutation sorting by a - c descending: result[k] is the input
/// index of the game at standard position k.
std::vector<std::size_t> standard_index(const std::vector<SHGame>& games);

struct Normalized {
  std::int64_t base = 0;
  std::vector<SHGame> games;        // b = 0, standard order
  std::vector<std::size_t> order;   // input index of each standard game
};

Normalized normalize(const SHSum& s);

struct TraceStep {
  std::size_t left_game = 0;   // 1-based standard index
  std::size_t right_game = 0;  // 1-based standard index
  std::int64_t delta = 0;      // change of the running score
};

struct SHSolution {
  std::int64_t score = 0;
  Outcome outcome = Outcome::draw;
  std::int64_t base = 0;
  std::vector<SHGame> normalized;
  std::vector<std::size_t> left_order;  // input indices, standard order
  AuxGraph graph;
  Matching right_plan;
  std::vector<TraceStep> trace;
};

Outcome outcome_of_score(std::int64_t score);

SHSolution solve_sh(const SHSum& s);

/// Right's reply under the plan: the matched partner, else the same game.
std::size_t alpha_response(const Matching& m, std::size_t left_game);

inline constexpr std::size_t kOracleMaxGames = 6;
inline constexpr std::int64_t kOracleMaxBase = 30;

/// Exact value by max-min over the whole state space, integer moves
/// included. At most 6 games and |base_int| <= 30.
std::int64_t sh_value_oracle(const SHSum& s);

/// Same, with the positive and negative integer summands kept apart
/// (`positive` Left moves and `negative` Right moves of integer type).
std::int64_t sh_value_oracle(const std::vector<SHGame>& games,
                             std::int64_t positive, std::int64_t negative);

nlohmann::json to_json(const SHGame& g);
nlohmann::json to_json(const SHSolution& s);

}  // namespace crg

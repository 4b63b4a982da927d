#pragma once

// Toppling Dominoes on rows of p black dominoes followed by q white ones.
// Blacks are numbered 1..p and whites 1..q, both left to right.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crg/errors.hpp"
#include "crg/position.hpp"
#include "crg/simple_hot.hpp"
#include "json.hpp"

namespace crg {

struct TD2Row {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool hot() const { return p > 0 && q > 0; }
  friend auto operator<=>(const TD2Row&, const TD2Row&) = default;
};

struct TD2Position {
  std::vector<TD2Row> rows;  // never contains (0, 0)

  std::int64_t dominoes() const;
  friend bool operator==(const TD2Position&, const TD2Position&) = default;
};

enum class Direction { left, right };

struct TD2Move {
  std::size_t row = 0;
  Side player = Side::left;  // Left topples black, Right topples white
  std::int64_t domino = 1;   // 1-based within the player's color
  Direction direction = Direction::left;

  friend bool operator==(const TD2Move&, const TD2Move&) = default;
};

/// "(p,q)+(p,q)+..."; (0,0) terms are dropped. Throws ParseError.
TD2Position parse_td2(std::string_view text);
/// {"td2": [[p, q], ...]}. Throws ParseError.
TD2Position td2_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TD2Position& pos);
nlohmann::json to_json(const TD2Move& m);
/// {"row", "color": "black"|"white", "domino", "direction": "left"|"right"}
TD2Move td2_move_from_json(const nlohmann::json& j, Side player);
std::string to_text(const TD2Position& pos);
std::string to_text(const TD2Move& m);

/// {p-1 | p-q | 1-q}; precondition p, q >= 1.
SHGame to_simple_hot(const TD2Row& r);
/// p for (p, 0), -q for (0, q); precondition: not hot.
std::int64_t to_integer(const TD2Row& r);

/// Hot rows become games in row order, cold rows the integer part.
SHSum to_sh_sum(const TD2Position& pos);

std::vector<TD2Move> legal_moves(const TD2Position& pos, Side player);

/// Applies one move alone to its row, which may split or vanish.
std::vector<TD2Row> topple(const TD2Row& row, const TD2Move& m);

/// Resolves one round. Rows produced by a row stay at its place, in
/// left-to-right order. Throws IllegalMoveError.
TD2Position apply_round(const TD2Position& pos, const TD2Move& left,
                        const TD2Move& right);

inline constexpr std::int64_t kTd2OracleMaxDominoes = 16;

/// Exhaustive minimax over rounds; at most 16 dominoes.
Outcome td2_outcome_oracle(const TD2Position& pos);

struct TD2Plan {
  std::size_t left_row = 0;
  std::size_t right_row = 0;
  TD2Move left;
  TD2Move right;
};

struct TD2Solution {
  SHSolution sh;
  std::vector<std::size_t> game_rows;  // row of each simple hot game
  std::vector<TD2Plan> strategy;       // one entry per trace step
};

/// Inward move: Left topples black p to the right, Right white 1 to the left.
TD2Move inward_move(const TD2Position& pos, std::size_t row, Side player);

TD2Solution solve_td2(const TD2Position& pos);

nlohmann::json to_json(const TD2Solution& s);

}  // namespace crg

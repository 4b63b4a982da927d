#pragma once

// Shared test fixtures: a deterministic position corpus and brute-force
// reference implementations that bypass the library's memo and shortcuts.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "crg/arena.hpp"
#include "crg/position.hpp"

namespace crg::testing {

/// Outcome straight from the definition, recursing on options.
inline Outcome naive_outcome(Position g) {
  if (!g.has_left_move() || !g.has_right_move()) {
    if (g.has_left_move()) return Outcome::left_win;
    if (g.has_right_move()) return Outcome::right_win;
    return Outcome::draw;
  }
  Outcome best = Outcome::right_win;
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    Outcome worst = Outcome::left_win;
    for (std::size_t j = 0; j < g.right_count(); ++j) {
      worst = std::min(worst, naive_outcome(g.same_round(i, j)));
    }
    best = std::max(best, worst);
  }
  return best;
}

/// Outcome of a sum by recursion over rounds, without canonicalization.
inline Outcome naive_sum_outcome(const std::vector<Position>& parts) {
  bool left = false, right = false;
  for (auto p : parts) {
    left = left || p.has_left_move();
    right = right || p.has_right_move();
  }
  if (!left || !right) {
    if (left) return Outcome::left_win;
    if (right) return Outcome::right_win;
    return Outcome::draw;
  }
  Outcome best = Outcome::right_win;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t i = 0; i < parts[a].left_count(); ++i) {
      Outcome worst = Outcome::left_win;
      for (std::size_t b = 0; b < parts.size(); ++b) {
        for (std::size_t j = 0; j < parts[b].right_count(); ++j) {
          std::vector<Position> next = parts;
          if (a == b) {
            next[a] = parts[a].same_round(i, j);
          } else {
            next[a] = parts[a].left(i);
            next[b] = parts[b].right(j);
          }
          worst = std::min(worst, naive_sum_outcome(next));
        }
      }
      best = std::max(best, worst);
    }
  }
  return best;
}

/// 200 distinct positions: named examples, then random nodes of birthday at
/// most 3 whose entries come from small integers, *bar and earlier members.
inline const std::vector<Position>& corpus() {
  static const std::vector<Position> c = [] {
    std::vector<Position> out;
    std::set<std::uint64_t> seen;
    auto push = [&](Position p) {
      if (seen.insert(p.key()).second) out.push_back(p);
    };
    const Position sb = star_bar();
    for (int n = -2; n <= 2; ++n) push(mk_int(n));
    push(sb);
    push(Position::triple(1, 2, -2));
    push(Position::node({mk_int(1)}, {mk_int(5)}, {{Position::triple(-2, -1, 3)}}));
    push(Position::triple(2, 3, 5));
    push(Position::triple(0, 1, 3));
    push(Position::triple(-5, -3, -2));
    push(Position::triple(3, 0, -1));
    push(Position::triple(2, 0, -4));
    push(Position::triple(2, 0, -2));
    push(Position::triple(1, 0, -1));
    push(Position::node({mk_int(2), mk_int(1)}, {mk_int(-1)}, {{mk_int(0)}, {mk_int(0)}}));
    push(Position::node({mk_int(0)}, {mk_int(-1), mk_int(0)}, {{mk_int(1), mk_int(0)}}));
    push(Position::node({sb}, {sb}, {{sb}}));
    push(Position::node({sb}, {}, {}));
    push(Position::node({}, {sb}, {}));

    std::mt19937 rng(20240611u);
    std::vector<Position> pool = {mk_int(-2), mk_int(-1), mk_int(0), mk_int(1), mk_int(2), sb};
    auto pick = [&](const std::vector<Position>& from) {
      return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };
    while (out.size() < 200) {
      const std::size_t m = std::uniform_int_distribution<int>(0, 2)(rng);
      const std::size_t n = std::uniform_int_distribution<int>(0, 2)(rng);
      std::vector<Position> l, r;
      std::vector<std::vector<Position>> s(m && n ? m : 0);
      for (std::size_t i = 0; i < m; ++i) l.push_back(pick(pool));
      for (std::size_t j = 0; j < n; ++j) r.push_back(pick(pool));
      for (auto& row : s) {
        for (std::size_t j = 0; j < n; ++j) row.push_back(pick(pool));
      }
      const Position p = Position::node(l, r, s);
      if (p.birthday() > 3) continue;
      push(p);
      if (p.birthday() <= 2 && pool.size() < 40) pool.push_back(p);
    }
    return out;
  }();
  return c;
}

}  // namespace crg::testing

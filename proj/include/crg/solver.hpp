#pragma once

// Outcome classes by backward induction over rounds, and the robot's
// best-response engine.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "crg/arena.hpp"
#include "crg/position.hpp"

namespace crg {

struct RoundMove {
  ComponentMove left;
  ComponentMove right;

  friend bool operator==(const RoundMove&, const RoundMove&) = default;
};

struct SolveResult {
  Outcome outcome = Outcome::draw;
  std::optional<RoundMove> principal;
  /// Final integer under optimal play; only for sums of integers and
  /// simple hot games.
  std::optional<std::int64_t> score;
};

inline constexpr std::size_t kDefaultMemoLimit = 2'000'000;

class Solver {
 public:
  /// `memo_limit` bounds the number of cached states; the cache is dropped
  /// when it fills up. 0 means unbounded.
  explicit Solver(bool memoize = true, std::size_t memo_limit = kDefaultMemoLimit);

  Outcome outcome(const SumArena& arena);
  Outcome outcome(Position g) { return outcome(SumArena({g})); }

  SolveResult solve(const SumArena& arena);
  SolveResult solve(Position g) { return solve(SumArena({g})); }

  /// Right move minimizing the outcome after Left's `left`; ties go to the
  /// lower score (integer/simple hot arenas only), then the lowest index.
  ComponentMove best_right_response(const SumArena& arena, ComponentMove left);

  /// Left move with the best guaranteed (outcome, score); ties go to the
  /// lowest standard index for simple hot arenas, else the lowest index.
  /// Throws NoMoveError when Left cannot move.
  ComponentMove best_left_move(const SumArena& arena);

  void clear();
  std::size_t memo_size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept;
  };

  std::optional<Outcome> lookup(const std::vector<std::uint64_t>& key) const;
  void store(std::vector<std::uint64_t> key, Outcome o);
  Outcome search(std::vector<Position> state);

  bool memoize_;
  std::size_t memo_limit_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<std::uint64_t>, Outcome, KeyHash> memo_;
};

/// Process-wide solver shared by the CLI and the service.
Solver& default_solver();

/// Canonical component list: positive integers merged into one summand,
/// negative ones into another, zeros dropped, sorted by structural key.
std::vector<Position> canonical_components(const std::vector<Position>& parts);

Outcome outcome(const SumArena& arena);
Outcome outcome(Position g);
SolveResult solve(const SumArena& arena);
SolveResult solve(Position g);

}  // namespace crg

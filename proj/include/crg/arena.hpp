#pragma once

// Disjunctive sums: an eager expansion into a single position and a lazy
// multi-component arena used by the solvers.

#include <compare>
#include <cstddef>
#include <vector>

#include "crg/position.hpp"

namespace crg {

/// A player's move inside one summand.
struct ComponentMove {
  std::size_t component = 0;
  std::size_t move = 0;

  friend auto operator<=>(const ComponentMove&, const ComponentMove&) = default;
};

/// components[0] + components[1] + ...; the empty arena is 0.
class SumArena {
 public:
  SumArena() = default;
  explicit SumArena(std::vector<Position> components)
      : components_(std::move(components)) {}

  const std::vector<Position>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  bool has_left_move() const;
  bool has_right_move() const;

  friend bool operator==(const SumArena&, const SumArena&) = default;

 private:
  std::vector<Position> components_;
};

struct ArenaMoves {
  std::vector<ComponentMove> left;
  std::vector<ComponentMove> right;
};

/// Left and Right moves in component order, matching the row and column
/// order of the eager sum.
ArenaMoves arena_moves(const SumArena& arena);

/// Plays one round. Same component: that summand becomes its same-round
/// option; otherwise each targeted summand takes its unilateral option.
/// Zero summands are dropped. Throws IllegalMoveError.
SumArena arena_round(const SumArena& arena, ComponentMove left,
                     ComponentMove right);

inline constexpr std::size_t kDefaultAddBudget = 2'000'000;

/// Eager disjunctive sum. Throws ResourceLimitError when more than
/// `node_budget` intermediate sums would be built.
Position add(Position g, Position h,
             std::size_t node_budget = kDefaultAddBudget);

/// Left-folds add over the list; 0 for an empty list.
Position add_all(const std::vector<Position>& terms,
                 std::size_t node_budget = kDefaultAddBudget);

}  // namespace crg

#pragma once

// Positions of Cheating Robot games.
//
// A position is either an integer game (n unilateral moves for Left when
// n > 0, for Right when n < 0) or a node holding an ordered list of Left
// options, an ordered list of Right options and the same-round matrix whose
// rows are indexed by the Left moves and columns by the Right moves.
//
// Positions are hash-consed: every structurally distinct position is stored
// exactly once in a process-wide table, so structural identity is pointer
// identity and the structural key is the node id. Nodes are immutable and
// never freed, which makes Position a cheap, thread-safe value type.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crg {

enum class Outcome : std::int8_t { right_win = -1, draw = 0, left_win = 1 };

/// "L", "D" or "R".
const char* outcome_letter(Outcome o);
const char* to_string(Outcome o);

namespace detail {
struct Node;
}

class Position {
 public:
  /// The empty game 0.
  Position();

  static Position integer(std::int64_t n);

  /// Builds a node. `same_round` must be |left| x |right| when both lists
  /// are nonempty and empty otherwise; throws PreconditionError on a shape
  /// mismatch. Nodes that spell out an integer are canonicalized to it.
  static Position node(std::vector<Position> left, std::vector<Position> right,
                       std::vector<std::vector<Position>> same_round);

  /// {a | b | c}: one Left option a, one Right option c, same-round option b.
  static Position triple(std::int64_t a, std::int64_t b, std::int64_t c);

  bool is_integer() const;
  bool is_zero() const;
  /// Value of an integer game; throws PreconditionError otherwise.
  std::int64_t int_value() const;
  std::optional<std::int64_t> as_integer() const;

  std::size_t left_count() const;
  std::size_t right_count() const;
  bool has_left_move() const { return left_count() != 0; }
  bool has_right_move() const { return right_count() != 0; }

  Position left(std::size_t i) const;
  Position right(std::size_t j) const;
  Position same_round(std::size_t i, std::size_t j) const;

  std::vector<Position> left_options() const;
  std::vector<Position> right_options() const;
  std::vector<std::vector<Position>> same_round_matrix() const;

  std::uint64_t birthday() const;
  bool is_dicot() const;
  /// Outcome under optimal play, computed bottom-up at construction.
  Outcome outcome() const;
  std::uint64_t key() const;

  friend bool operator==(Position a, Position b) { return a.node_ == b.node_; }
  friend bool operator!=(Position a, Position b) { return a.node_ != b.node_; }

 private:
  explicit Position(const detail::Node* n) : node_(n) {}
  friend struct detail::Node;
  friend class Registry;

  const detail::Node* node_;
};

Position mk_int(std::int64_t n);

/// {0 | 0 | 0}
Position star_bar();

/// Swaps and conjugates the option lists; same-round entry (i, j) of the
/// result is the conjugate of entry (j, i). Right remains the robot.
Position conjugate(Position g);

std::uint64_t birthday(Position g);
bool is_dicot(Position g);
std::uint64_t structural_key(Position g);

/// Number of distinct positions reachable from g, g included; an integer
/// game n contributes its whole chain n, n-1, ..., 0.
std::uint64_t dag_size(Position g);

/// Rebuilds a position bottom-up without recursion. `on_integer` maps an
/// integer game; `on_node` receives the already-mapped options of a node.
/// Results are memoized per distinct subterm.
Position transform(
    Position root, const std::function<Position(std::int64_t)>& on_integer,
    const std::function<Position(Position original, std::vector<Position> left,
                                 std::vector<Position> right,
                                 std::vector<std::vector<Position>> same_round)>&
        on_node);

/// Number of positions interned so far (diagnostics).
std::size_t interned_count();

}  // namespace crg

template <>
struct std::hash<crg::Position> {
  std::size_t operator()(crg::Position p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key());
  }
};

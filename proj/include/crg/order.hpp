#pragma once

// Sound partial decisions of the order on positions, and bounded searches
// for distinguishing contexts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crg/position.hpp"
#include "crg/solver.hpp"

namespace crg {

enum class Verdict { proven_ge, proven_le, proven_eq, proven_incomparable, unknown };

/// cr: holds against every context; sh: only against sums of integers and
/// simple hot games.
enum class Scope { cr, sh };

struct OrderVerdict {
  Verdict kind = Verdict::unknown;
  bool strict = false;
  std::string evidence;
  Scope scope = Scope::cr;
  std::optional<std::vector<Position>> witness_not_ge;  // refutes G >= H
  std::optional<std::vector<Position>> witness_not_le;  // refutes H >= G

  bool proves_ge() const {
    return kind == Verdict::proven_ge || kind == Verdict::proven_eq;
  }
  bool proves_le() const {
    return kind == Verdict::proven_le || kind == Verdict::proven_eq;
  }
};

const char* to_string(Verdict v);
const char* to_string(Scope s);

/// Value k when g is an integer or an integer bracket {k-1|k|k+t} with
/// t >= 1, or {-k-t|-k|-k+1} with t >= 0 (k >= 1). {k-1|k|k} is not k.
std::optional<std::int64_t> integer_equal(Position g);

/// Rule-based comparison; every verdict holds over all contexts.
OrderVerdict cmp_sound(Position g, Position h);

/// Comparison of sums. Adds the commutativity rule and, with scope sh,
/// equalities and inequalities that follow from integer translation.
OrderVerdict cmp_sound(const std::vector<Position>& g, const std::vector<Position>& h);

class ContextFamily {
 public:
  ContextFamily(std::string name, std::vector<std::vector<Position>> members,
                std::size_t budget);

  /// Integers and simple hot games over [-3, 3], Day-2 nodes with options
  /// drawn from {-1, 0, 1, *bar}, then their pairwise sums; deduplicated,
  /// at most `budget` members.
  static ContextFamily day2_mixed(std::size_t budget = 20'000);
  /// Integers and simple hot games over [-3, 3] and their pairwise sums.
  static ContextFamily sh_only(std::size_t budget = 20'000);
  /// "day2-mixed" or "sh-only"; cached. Throws PreconditionError.
  static const ContextFamily& named(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t budget() const { return budget_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::vector<Position>>& members() const { return members_; }

 private:
  std::string name_;
  std::vector<std::vector<Position>> members_;
  std::size_t budget_;
};

/// First X in the family with o(G+X) < o(H+X).
std::optional<std::vector<Position>> refute_geq(const std::vector<Position>& g,
                                                const std::vector<Position>& h,
                                                const ContextFamily& family,
                                                Solver& solver = default_solver());
std::optional<std::vector<Position>> refute_geq(Position g, Position h,
                                                const ContextFamily& family,
                                                Solver& solver = default_solver());

/// o(G+X) = o(H+X) for every X in the family.
bool equiv_mod(const std::vector<Position>& g, const std::vector<Position>& h,
               const ContextFamily& family, Solver& solver = default_solver());
bool equiv_mod(Position g, Position h, const ContextFamily& family,
               Solver& solver = default_solver());

/// cmp_sound first; on Unknown, searches the family in both directions and
/// reports ProvenIncomparable only with two one-sided witnesses.
OrderVerdict compare(const std::vector<Position>& g, const std::vector<Position>& h,
                     const ContextFamily& family, Solver& solver = default_solver());

}  // namespace crg

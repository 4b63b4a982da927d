#pragma once

// Equality-preserving rewrites: dominated Left and Right moves, same-round
// option replacement and integer bracket collapse.

#include <cstddef>
#include <functional>
#include <vector>

#include "crg/order.hpp"
#include "crg/position.hpp"

namespace crg {

enum class ScanOrder { ascending, descending };

using OrderOracle = std::function<OrderVerdict(Position, Position)>;

struct ReduceOptions {
  OrderOracle oracle = [](Position g, Position h) { return cmp_sound(g, h); };
  ScanOrder order = ScanOrder::ascending;
  std::size_t iteration_limit = 1000;
};

/// Deletes row j when another row i has G^{i,.} >= G^{j,.} and every
/// G^{i,r} dominates some G^{j,s}. Root only, repeated to a fixpoint.
Position remove_dominated_left(Position g, const ReduceOptions& opts = {});

/// Deletes column n when every row i has some j != n with
/// G^{i,n} >= G^{i,j}, and some j != n has G^{.,n} >= G^{.,j}. Root only.
Position remove_dominated_right(Position g, const ReduceOptions& opts = {});

/// Within a row, replaces entry (i,p) by (i,q) when G^{i,p} >= G^{i,q}
/// strictly, or when they are equal and (i,q) is born earlier. Root only.
Position replace_sr_option(Position g, const ReduceOptions& opts = {});

/// Rewrites {k-1|k|k+t} (t >= 1) to k and {-k-t|-k|-k+1} (t >= 0) to -k
/// everywhere, bottom-up (k >= 1).
Position collapse_integer_bracket(Position g);

/// All rewrites, bottom-up, to a global fixpoint. Throws ResourceLimitError
/// when the fixpoint is not reached within the iteration limit.
Position simplify(Position g, const ReduceOptions& opts = {});

/// Simplifies each summand, then drops zeros and merges integers of the
/// same sign.
std::vector<Position> simplify_sum(const std::vector<Position>& parts,
                                   const ReduceOptions& opts = {});

}  // namespace crg

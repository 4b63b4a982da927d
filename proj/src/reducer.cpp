#include "crg/reducer.hpp"

#include <numeric>

#include "crg/errors.hpp"
#include "crg/solver.hpp"

namespace crg {

namespace {

struct Parts {
  std::vector<Position> left, right;
  std::vector<std::vector<Position>> rows;

  explicit Parts(Position g)
      : left(g.left_options()), right(g.right_options()), rows(g.same_round_matrix()) {}

  Position build() const { return Position::node(left, right, rows); }
};

std::vector<std::size_t> scan(std::size_t n, ScanOrder order) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (order == ScanOrder::descending) std::reverse(idx.begin(), idx.end());
  return idx;
}

bool geq(const ReduceOptions& opts, Position a, Position b) {
  return a == b || opts.oracle(a, b).proves_ge();
}

// One deletion; false when none applies.
bool drop_left_once(Parts& p, const ReduceOptions& opts) {
  const std::size_t m = p.left.size();
  const std::size_t n = p.right.size();
  if (m < 2) return false;
  for (std::size_t j : scan(m, opts.order)) {
    for (std::size_t i : scan(m, opts.order)) {
      if (i == j || !geq(opts, p.left[i], p.left[j])) continue;
      bool covered = true;
      for (std::size_t r = 0; r < n && covered; ++r) {
        bool some = false;
        for (std::size_t s = 0; s < n && !some; ++s) some = geq(opts, p.rows[i][r], p.rows[j][s]);
        covered = some;
      }
      if (!covered) continue;
      p.left.erase(p.left.begin() + static_cast<long>(j));
      if (!p.rows.empty()) p.rows.erase(p.rows.begin() + static_cast<long>(j));
      return true;
    }
  }
  return false;
}

bool drop_right_once(Parts& p, const ReduceOptions& opts) {
  const std::size_t m = p.left.size();
  const std::size_t n = p.right.size();
  if (n < 2) return false;
  for (std::size_t c : scan(n, opts.order)) {
    bool unilateral = false;
    for (std::size_t j = 0; j < n && !unilateral; ++j) {
      unilateral = j != c && geq(opts, p.right[c], p.right[j]);
    }
    if (!unilateral) continue;
    bool every_row = true;
    for (std::size_t i = 0; i < m && every_row; ++i) {
      bool some = false;
      for (std::size_t j = 0; j < n && !some; ++j) {
        some = j != c && geq(opts, p.rows[i][c], p.rows[i][j]);
      }
      every_row = some;
    }
    if (!every_row) continue;
    p.right.erase(p.right.begin() + static_cast<long>(c));
    for (auto& row : p.rows) row.erase(row.begin() + static_cast<long>(c));
    if (p.right.empty()) p.rows.clear();
    return true;
  }
  return false;
}

bool replace_once(Parts& p, const ReduceOptions& opts) {
  const std::size_t n = p.right.size();
  for (std::size_t i : scan(p.rows.size(), opts.order)) {
    for (std::size_t a : scan(n, opts.order)) {
      for (std::size_t b : scan(n, opts.order)) {
        const Position x = p.rows[i][a];
        const Position y = p.rows[i][b];
        if (a == b || x == y) continue;
        const OrderVerdict v = opts.oracle(x, y);
        const bool strictly_better = v.kind == Verdict::proven_ge;
        const bool simpler_equal =
            v.kind == Verdict::proven_eq && y.birthday() < x.birthday();
        if (strictly_better || simpler_equal) {
          p.rows[i][a] = y;
          return true;
        }
      }
    }
  }
  return false;
}

Position bracket(Position g) {
  if (auto k = integer_equal(g)) return mk_int(*k);
  return g;
}

// Local fixpoint at one node whose options are already reduced.
Position reduce_node(Position g, const ReduceOptions& opts) {
  for (std::size_t round = 0; round < opts.iteration_limit; ++round) {
    g = bracket(g);
    if (g.is_integer()) return g;
    Parts p(g);
    const bool changed =
        drop_left_once(p, opts) || drop_right_once(p, opts) || replace_once(p, opts);
    if (!changed) return g;
    g = p.build();
  }
  throw ResourceLimitError("simplify: local iteration limit reached");
}

template <typename Step>
Position root_fixpoint(Position g, const ReduceOptions& opts, Step step) {
  for (std::size_t round = 0; round < opts.iteration_limit; ++round) {
    if (g.is_integer()) return g;
    Parts p(g);
    if (!step(p, opts)) return g;
    g = p.build();
  }
  throw ResourceLimitError("rewrite iteration limit reached");
}

}  // namespace

Position remove_dominated_left(Position g, const ReduceOptions& opts) {
  return root_fixpoint(g, opts, drop_left_once);
}

Position remove_dominated_right(Position g, const ReduceOptions& opts) {
  return root_fixpoint(g, opts, drop_right_once);
}

Position replace_sr_option(Position g, const ReduceOptions& opts) {
  return root_fixpoint(g, opts, replace_once);
}

Position collapse_integer_bracket(Position g) {
  return transform(
      g, [](std::int64_t n) { return mk_int(n); },
      [](Position, std::vector<Position> l, std::vector<Position> r,
         std::vector<std::vector<Position>> s) {
        return bracket(Position::node(std::move(l), std::move(r), std::move(s)));
      });
}

Position simplify(Position g, const ReduceOptions& opts) {
  for (std::size_t round = 0; round < opts.iteration_limit; ++round) {
    const Position next = transform(
        g, [](std::int64_t n) { return mk_int(n); },
        [&opts](Position, std::vector<Position> l, std::vector<Position> r,
                std::vector<std::vector<Position>> s) {
          return reduce_node(Position::node(std::move(l), std::move(r), std::move(s)),
                             opts);
        });
    if (next == g) return g;
    g = next;
  }
  throw ResourceLimitError("simplify: global iteration limit reached");
}

std::vector<Position> simplify_sum(const std::vector<Position>& parts,
                                   const ReduceOptions& opts) {
  std::vector<Position> out;
  std::int64_t pos = 0, neg = 0;
  for (auto p : parts) {
    const Position s = simplify(p, opts);
    if (s.is_integer()) {
      (s.int_value() > 0 ? pos : neg) += s.int_value();
    } else {
      out.push_back(s);
    }
  }
  if (pos) out.push_back(mk_int(pos));
  if (neg) out.push_back(mk_int(neg));
  return out;
}

}  // namespace crg

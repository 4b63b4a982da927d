#include "crg/arena.hpp"

#include <optional>
#include <string>
#include <unordered_map>

#include "crg/errors.hpp"

namespace crg {

bool SumArena::has_left_move() const {
  for (auto c : components_) {
    if (c.has_left_move()) return true;
  }
  return false;
}

bool SumArena::has_right_move() const {
  for (auto c : components_) {
    if (c.has_right_move()) return true;
  }
  return false;
}

ArenaMoves arena_moves(const SumArena& arena) {
  ArenaMoves moves;
  const auto& comps = arena.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t i = 0; i < comps[c].left_count(); ++i) {
      moves.left.push_back({c, i});
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t j = 0; j < comps[c].right_count(); ++j) {
      moves.right.push_back({c, j});
    }
  }
  return moves;
}

SumArena arena_round(const SumArena& arena, ComponentMove left,
                     ComponentMove right) {
  const auto& comps = arena.components();
  auto describe = [](ComponentMove m) {
    return "(" + std::to_string(m.component) + "," + std::to_string(m.move) +
           ")";
  };
  if (left.component >= comps.size() ||
      left.move >= comps[left.component].left_count()) {
    throw IllegalMoveError(Side::left, describe(left));
  }
  if (right.component >= comps.size() ||
      right.move >= comps[right.component].right_count()) {
    throw IllegalMoveError(Side::right, describe(right));
  }
  std::vector<Position> next = comps;
  if (left.component == right.component) {
    next[left.component] =
        comps[left.component].same_round(left.move, right.move);
  } else {
    next[left.component] = comps[left.component].left(left.move);
    next[right.component] = comps[right.component].right(right.move);
  }
  std::erase_if(next, [](Position p) { return p.is_zero(); });
  return SumArena(std::move(next));
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k)
      const noexcept {
    return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ull ^
                                      (k.second + 0x632be59bd9b4e019ull));
  }
};

class Adder {
 public:
  explicit Adder(std::size_t budget) : budget_(budget) {}

  Position run(Position g, Position h) {
    if (auto r = shortcut(g, h)) return *r;
    stack_.push_back({g, h, false});
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const auto key = std::make_pair(f.g.key(), f.h.key());
      if (memo_.count(key)) {
        stack_.pop_back();
        continue;
      }
      if (!f.expanded) {
        f.expanded = true;
        const Position g0 = f.g, h0 = f.h;
        for_each_child(g0, h0, [&](Position x, Position y) {
          if (!known(x, y)) stack_.push_back({x, y, false});
        });
        continue;
      }
      const Position g0 = f.g, h0 = f.h;
      stack_.pop_back();
      memo_.emplace(key, build(g0, h0));
      if (memo_.size() > budget_) {
        throw ResourceLimitError("eager sum exceeds node budget of " +
                                 std::to_string(budget_));
      }
    }
    return memo_.at({g.key(), h.key()});
  }

 private:
  struct Frame {
    Position g, h;
    bool expanded;
  };

  static std::optional<Position> shortcut(Position g, Position h) {
    if (g.is_zero()) return h;
    if (h.is_zero()) return g;
    return std::nullopt;
  }

  bool known(Position x, Position y) const {
    return shortcut(x, y) || memo_.count({x.key(), y.key()});
  }

  Position sum(Position x, Position y) const {
    if (auto r = shortcut(x, y)) return *r;
    return memo_.at({x.key(), y.key()});
  }

  template <typename F>
  static void for_each_child(Position g, Position h, F&& visit) {
    const std::size_t m = g.left_count(), n = g.right_count();
    const std::size_t p = h.left_count(), q = h.right_count();
    for (std::size_t i = 0; i < m; ++i) visit(g.left(i), h);
    for (std::size_t k = 0; k < p; ++k) visit(g, h.left(k));
    for (std::size_t j = 0; j < n; ++j) visit(g.right(j), h);
    for (std::size_t l = 0; l < q; ++l) visit(g, h.right(l));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) visit(g.same_round(i, j), h);
      for (std::size_t l = 0; l < q; ++l) visit(g.left(i), h.right(l));
    }
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t j = 0; j < n; ++j) visit(g.right(j), h.left(k));
      for (std::size_t l = 0; l < q; ++l) visit(g, h.same_round(k, l));
    }
  }

  Position build(Position g, Position h) const {
    const std::size_t m = g.left_count(), n = g.right_count();
    const std::size_t p = h.left_count(), q = h.right_count();
    std::vector<Position> left, right;
    for (std::size_t i = 0; i < m; ++i) left.push_back(sum(g.left(i), h));
    for (std::size_t k = 0; k < p; ++k) left.push_back(sum(g, h.left(k)));
    for (std::size_t j = 0; j < n; ++j) right.push_back(sum(g.right(j), h));
    for (std::size_t l = 0; l < q; ++l) right.push_back(sum(g, h.right(l)));
    std::vector<std::vector<Position>> rows;
    if (!left.empty() && !right.empty()) {
      for (std::size_t i = 0; i < m; ++i) {
        auto& row = rows.emplace_back();
        for (std::size_t j = 0; j < n; ++j) {
          row.push_back(sum(g.same_round(i, j), h));
        }
        for (std::size_t l = 0; l < q; ++l) {
          row.push_back(sum(g.left(i), h.right(l)));
        }
      }
      for (std::size_t k = 0; k < p; ++k) {
        auto& row = rows.emplace_back();
        for (std::size_t j = 0; j < n; ++j) {
          row.push_back(sum(g.right(j), h.left(k)));
        }
        for (std::size_t l = 0; l < q; ++l) {
          row.push_back(sum(g, h.same_round(k, l)));
        }
      }
    }
    return Position::node(std::move(left), std::move(right), std::move(rows));
  }

  std::size_t budget_;
  std::vector<Frame> stack_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Position,
                     PairHash>
      memo_;
};

}  // namespace

Position add(Position g, Position h, std::size_t node_budget) {
  return Adder(node_budget).run(g, h);
}

Position add_all(const std::vector<Position>& terms, std::size_t node_budget) {
  Position total;
  for (auto t : terms) total = add(total, t, node_budget);
  return total;
}

}  // namespace crg

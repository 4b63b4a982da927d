#include "crg/solver.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "crg/errors.hpp"
#include "crg/simple_hot.hpp"

namespace crg {

namespace {

using State = std::vector<Position>;

std::vector<std::uint64_t> key_of(const State& s) {
  std::vector<std::uint64_t> k;
  k.reserve(s.size());
  for (auto p : s) k.push_back(p.key());
  return k;
}

std::optional<Outcome> terminal(const State& s) {
  if (s.empty()) return Outcome::draw;
  if (s.size() == 1) return s[0].outcome();
  bool left = false, right = false, all_int = true;
  std::int64_t total = 0;
  for (auto p : s) {
    left = left || p.has_left_move();
    right = right || p.has_right_move();
    if (p.is_integer()) {
      total += p.int_value();
    } else {
      all_int = false;
    }
  }
  if (!left && !right) return Outcome::draw;
  if (!right) return Outcome::left_win;
  if (!left) return Outcome::right_win;
  if (all_int) return outcome_of_score(total);
  return std::nullopt;
}

State child(const State& s, ComponentMove l, ComponentMove r) {
  State next;
  next.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    Position p = s[k];
    if (k == l.component && k == r.component) {
      p = p.same_round(l.move, r.move);
    } else if (k == l.component) {
      p = p.left(l.move);
    } else if (k == r.component) {
      p = p.right(r.move);
    }
    next.push_back(p);
  }
  return canonical_components(next);
}

struct Frame {
  State state;
  std::vector<std::uint64_t> key;
  std::vector<ComponentMove> left, right;
  std::size_t i = 0, j = 0;
  Outcome best = Outcome::right_win;
  Outcome row_min = Outcome::left_win;
};

Frame make_frame(State s) {
  Frame f;
  const ArenaMoves moves = arena_moves(SumArena(s));
  f.left = moves.left;
  f.right = moves.right;
  f.key = key_of(s);
  f.state = std::move(s);
  return f;
}

std::optional<std::int64_t> sh_score(const SumArena& arena) {
  auto rec = recognize_sh_sum(arena);
  if (!rec) return std::nullopt;
  return solve_sh(rec->sum).score;
}

}  // namespace

std::vector<Position> canonical_components(const std::vector<Position>& parts) {
  State out;
  std::int64_t pos = 0, neg = 0;
  for (auto p : parts) {
    if (p.is_integer()) {
      const auto v = p.int_value();
      if (v > 0) pos += v;
      if (v < 0) neg += v;
    } else {
      out.push_back(p);
    }
  }
  if (pos) out.push_back(mk_int(pos));
  if (neg) out.push_back(mk_int(neg));
  std::sort(out.begin(), out.end(),
            [](Position a, Position b) { return a.key() < b.key(); });
  return out;
}

std::size_t Solver::KeyHash::operator()(
    const std::vector<std::uint64_t>& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : k) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Solver::Solver(bool memoize, std::size_t memo_limit)
    : memoize_(memoize), memo_limit_(memo_limit) {}

std::optional<Outcome> Solver::lookup(const std::vector<std::uint64_t>& key) const {
  if (!memoize_) return std::nullopt;
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void Solver::store(std::vector<std::uint64_t> key, Outcome o) {
  if (!memoize_) return;
  std::unique_lock lock(mutex_);
  if (memo_limit_ != 0 && memo_.size() >= memo_limit_) memo_.clear();
  memo_.emplace(std::move(key), o);
}

void Solver::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::size_t Solver::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Outcome Solver::search(State root) {
  if (auto t = terminal(root)) return *t;
  if (auto m = lookup(key_of(root))) return *m;

  std::vector<Frame> stack;
  stack.push_back(make_frame(std::move(root)));
  bool has_incoming = false;
  Outcome incoming = Outcome::draw;

  while (true) {
    Frame& f = stack.back();
    if (has_incoming) {
      f.row_min = std::min(f.row_min, incoming);
      has_incoming = false;
      ++f.j;
      if (f.j == f.right.size() || f.row_min <= f.best) {
        f.best = std::max(f.best, f.row_min);
        ++f.i;
        f.j = 0;
        f.row_min = Outcome::left_win;
      }
    }
    if (f.i == f.left.size() || f.best == Outcome::left_win) {
      const Outcome result = f.best;
      store(std::move(f.key), result);
      stack.pop_back();
      if (stack.empty()) return result;
      incoming = result;
      has_incoming = true;
      continue;
    }
    State next = child(f.state, f.left[f.i], f.right[f.j]);
    if (auto t = terminal(next)) {
      incoming = *t;
      has_incoming = true;
    } else if (auto m = lookup(key_of(next))) {
      incoming = *m;
      has_incoming = true;
    } else {
      stack.push_back(make_frame(std::move(next)));
    }
  }
}

Outcome Solver::outcome(const SumArena& arena) {
  return search(canonical_components(arena.components()));
}

ComponentMove Solver::best_right_response(const SumArena& arena, ComponentMove left) {
  const ArenaMoves moves = arena_moves(arena);
  if (std::find(moves.left.begin(), moves.left.end(), left) == moves.left.end()) {
    throw IllegalMoveError(Side::left, "no move " + std::to_string(left.move) +
                                           " in component " +
                                           std::to_string(left.component));
  }
  if (moves.right.empty()) throw NoMoveError("Right has no move");
  const bool scored = recognize_sh_sum(arena).has_value();
  std::optional<std::tuple<Outcome, std::int64_t, std::size_t>> best;
  ComponentMove choice{};
  for (std::size_t j = 0; j < moves.right.size(); ++j) {
    const SumArena next = arena_round(arena, left, moves.right[j]);
    const Outcome o = outcome(next);
    const std::int64_t score = scored ? *sh_score(next) : 0;
    const auto cand = std::make_tuple(o, score, j);
    if (!best || cand < *best) {
      best = cand;
      choice = moves.right[j];
    }
  }
  return choice;
}

ComponentMove Solver::best_left_move(const SumArena& arena) {
  const ArenaMoves moves = arena_moves(arena);
  if (moves.left.empty()) throw NoMoveError("Left has no move");
  if (moves.right.empty()) return moves.left.front();

  const auto rec = recognize_sh_sum(arena);
  std::vector<std::size_t> rank(arena.size());
  for (std::size_t k = 0; k < arena.size(); ++k) rank[k] = arena.size() + k;
  if (rec) {
    const auto order = standard_index(rec->sum.games);
    for (std::size_t s = 0; s < order.size(); ++s) rank[rec->component_of[order[s]]] = s;
  }

  // maximize (outcome, score); minimize (rank, index) on ties
  std::optional<std::tuple<Outcome, std::int64_t, std::size_t, std::size_t>> best;
  ComponentMove choice{};
  for (std::size_t i = 0; i < moves.left.size(); ++i) {
    const ComponentMove l = moves.left[i];
    const ComponentMove r = best_right_response(arena, l);
    const SumArena next = arena_round(arena, l, r);
    const Outcome o = outcome(next);
    const std::int64_t score = rec ? *sh_score(next) : 0;
    const auto cand = std::make_tuple(o, score, rank[l.component], i);
    const bool better =
        !best || std::tie(std::get<0>(cand), std::get<1>(cand)) >
                     std::tie(std::get<0>(*best), std::get<1>(*best)) ||
        (std::tie(std::get<0>(cand), std::get<1>(cand)) ==
             std::tie(std::get<0>(*best), std::get<1>(*best)) &&
         std::tie(std::get<2>(cand), std::get<3>(cand)) <
             std::tie(std::get<2>(*best), std::get<3>(*best)));
    if (better) {
      best = cand;
      choice = l;
    }
  }
  return choice;
}

SolveResult Solver::solve(const SumArena& arena) {
  SolveResult r;
  r.outcome = outcome(arena);
  r.score = sh_score(arena);
  if (arena.has_left_move() && arena.has_right_move()) {
    const ComponentMove l = best_left_move(arena);
    r.principal = RoundMove{l, best_right_response(arena, l)};
  }
  return r;
}

Solver& default_solver() {
  static Solver solver;
  return solver;
}

Outcome outcome(const SumArena& arena) { return default_solver().outcome(arena); }
Outcome outcome(Position g) { return default_solver().outcome(g); }
SolveResult solve(const SumArena& arena) { return default_solver().solve(arena); }
SolveResult solve(Position g) { return default_solver().solve(g); }

}  // namespace crg

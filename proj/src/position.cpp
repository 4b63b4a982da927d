#include "crg/position.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "crg/errors.hpp"

namespace crg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::resource_limit: return "resource_limit";
    case ErrorCode::illegal_move: return "illegal_move";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::no_move: return "no_move";
  }
  return "error";
}

const char* outcome_letter(Outcome o) {
  switch (o) {
    case Outcome::left_win: return "L";
    case Outcome::draw: return "D";
    case Outcome::right_win: return "R";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::left_win: return "LeftWin";
    case Outcome::draw: return "Draw";
    case Outcome::right_win: return "RightWin";
  }
  return "?";
}

namespace detail {

struct Node {
  std::uint64_t id = 0;
  bool is_int = false;
  std::int64_t value = 0;
  std::vector<Position> left;
  std::vector<Position> right;
  std::vector<Position> same_round;  // row-major, |left| x |right|
  std::uint64_t birthday = 0;
  bool dicot = false;
  Outcome outcome = Outcome::draw;
  // Integer games point at their unique option, filled on first use.
  mutable std::atomic<const Node*> toward_zero{nullptr};

  static Position wrap(const Node* n) { return Position(n); }
};

}  // namespace detail

using detail::Node;

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

class Registry {
 public:
  static Registry& instance() {
    static Registry r;
    return r;
  }

  const Node* integer(std::int64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ints_.find(n);
    if (it != ints_.end()) return it->second;
    auto node = std::make_unique<Node>();
    node->id = next_id_++;
    node->is_int = true;
    node->value = n;
    node->birthday = static_cast<std::uint64_t>(n < 0 ? -n : n);
    node->dicot = (n == 0);
    node->outcome = n > 0 ? Outcome::left_win
                          : (n < 0 ? Outcome::right_win : Outcome::draw);
    const Node* raw = node.get();
    storage_.push_back(std::move(node));
    ints_.emplace(n, raw);
    return raw;
  }

  const Node* node(std::vector<Position> left, std::vector<Position> right,
                   std::vector<Position> same_round) {
    std::vector<std::uint64_t> key;
    key.reserve(2 + left.size() + right.size() + same_round.size());
    key.push_back(left.size());
    key.push_back(right.size());
    for (auto p : left) key.push_back(p.key());
    for (auto p : right) key.push_back(p.key());
    for (auto p : same_round) key.push_back(p.key());

    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = nodes_.find(key);
      if (it != nodes_.end()) return it->second;
    }

    auto node = std::make_unique<Node>();
    std::uint64_t born = 0;
    bool dicot = left.empty() == right.empty();
    for (const auto* list : {&left, &right, &same_round}) {
      for (auto p : *list) {
        born = std::max(born, p.birthday());
        dicot = dicot && p.is_dicot();
      }
    }
    node->birthday = born + 1;
    node->dicot = dicot;
    if (same_round.empty()) {
      node->outcome = !left.empty() ? Outcome::left_win : Outcome::right_win;
    } else {
      Outcome best = Outcome::right_win;
      const std::size_t cols = right.size();
      for (std::size_t i = 0; i < left.size() && best != Outcome::left_win;
           ++i) {
        Outcome worst = Outcome::left_win;
        for (std::size_t j = 0; j < cols; ++j) {
          worst = std::min(worst, same_round[i * cols + j].outcome());
          if (worst == Outcome::right_win) break;
        }
        best = std::max(best, worst);
      }
      node->outcome = best;
    }
    node->left = std::move(left);
    node->right = std::move(right);
    node->same_round = std::move(same_round);

    std::lock_guard<std::mutex> lock(mu_);
    auto it = nodes_.find(key);
    if (it != nodes_.end()) return it->second;  // lost a race
    node->id = next_id_++;
    const Node* raw = node.get();
    storage_.push_back(std::move(node));
    nodes_.emplace(std::move(key), raw);
    return raw;
  }

  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu_);
    return storage_.size();
  }

 private:
  Registry() = default;

  std::mutex mu_;
  std::uint64_t next_id_ = 0;
  std::unordered_map<std::int64_t, const Node*> ints_;
  std::unordered_map<std::vector<std::uint64_t>, const Node*, KeyHash> nodes_;
  std::vector<std::unique_ptr<Node>> storage_;
};

namespace {

const Node* zero_node() {
  static const Node* zero = Registry::instance().integer(0);
  return zero;
}

const Node* int_option(const Node* n) {
  const Node* cached = n->toward_zero.load(std::memory_order_acquire);
  if (cached != nullptr) return cached;
  const Node* next =
      Registry::instance().integer(n->value > 0 ? n->value - 1 : n->value + 1);
  n->toward_zero.store(next, std::memory_order_release);
  return next;
}

}  // namespace

Position::Position() : node_(zero_node()) {}

Position Position::integer(std::int64_t n) {
  return Position(Registry::instance().integer(n));
}

Position Position::node(std::vector<Position> left, std::vector<Position> right,
                        std::vector<std::vector<Position>> same_round) {
  const bool both = !left.empty() && !right.empty();
  if (!both && !same_round.empty()) {
    throw PreconditionError(
        "same-round matrix must be empty when a player has no move");
  }
  if (both && same_round.size() != left.size()) {
    throw PreconditionError("same-round matrix has " +
                            std::to_string(same_round.size()) +
                            " rows, expected " + std::to_string(left.size()));
  }
  std::vector<Position> flat;
  flat.reserve(left.size() * right.size());
  for (const auto& row : same_round) {
    if (row.size() != right.size()) {
      throw PreconditionError("same-round matrix row has " +
                              std::to_string(row.size()) +
                              " columns, expected " +
                              std::to_string(right.size()));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }

  if (left.empty() && right.empty()) return Position();
  if (right.empty() && left.size() == 1 && left[0].is_integer() &&
      left[0].int_value() >= 0) {
    return integer(left[0].int_value() + 1);
  }
  if (left.empty() && right.size() == 1 && right[0].is_integer() &&
      right[0].int_value() <= 0) {
    return integer(right[0].int_value() - 1);
  }
  return Position(Registry::instance().node(std::move(left), std::move(right),
                                            std::move(flat)));
}

Position Position::triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  return node({integer(a)}, {integer(c)}, {{integer(b)}});
}

bool Position::is_integer() const { return node_->is_int; }
bool Position::is_zero() const { return node_ == zero_node(); }

std::int64_t Position::int_value() const {
  if (!node_->is_int) throw PreconditionError("position is not an integer");
  return node_->value;
}

std::optional<std::int64_t> Position::as_integer() const {
  if (!node_->is_int) return std::nullopt;
  return node_->value;
}

std::size_t Position::left_count() const {
  if (node_->is_int) return node_->value > 0 ? 1 : 0;
  return node_->left.size();
}

std::size_t Position::right_count() const {
  if (node_->is_int) return node_->value < 0 ? 1 : 0;
  return node_->right.size();
}

Position Position::left(std::size_t i) const {
  if (i >= left_count()) throw PreconditionError("Left option out of range");
  if (node_->is_int) return Position(int_option(node_));
  return node_->left[i];
}

Position Position::right(std::size_t j) const {
  if (j >= right_count()) throw PreconditionError("Right option out of range");
  if (node_->is_int) return Position(int_option(node_));
  return node_->right[j];
}

Position Position::same_round(std::size_t i, std::size_t j) const {
  if (node_->is_int || i >= node_->left.size() || j >= node_->right.size()) {
    throw PreconditionError("same-round option out of range");
  }
  return node_->same_round[i * node_->right.size() + j];
}

std::vector<Position> Position::left_options() const {
  if (node_->is_int) {
    return left_count() ? std::vector<Position>{left(0)}
                        : std::vector<Position>{};
  }
  return node_->left;
}

std::vector<Position> Position::right_options() const {
  if (node_->is_int) {
    return right_count() ? std::vector<Position>{right(0)}
                         : std::vector<Position>{};
  }
  return node_->right;
}

std::vector<std::vector<Position>> Position::same_round_matrix() const {
  std::vector<std::vector<Position>> rows;
  if (node_->is_int) return rows;
  const std::size_t cols = node_->right.size();
  for (std::size_t i = 0; i < node_->left.size() && cols != 0; ++i) {
    rows.emplace_back(node_->same_round.begin() + i * cols,
                      node_->same_round.begin() + (i + 1) * cols);
  }
  return rows;
}

std::uint64_t Position::birthday() const { return node_->birthday; }
bool Position::is_dicot() const { return node_->dicot; }
Outcome Position::outcome() const { return node_->outcome; }
std::uint64_t Position::key() const { return node_->id; }

Position mk_int(std::int64_t n) { return Position::integer(n); }

Position star_bar() { return Position::triple(0, 0, 0); }

Position transform(
    Position root, const std::function<Position(std::int64_t)>& on_integer,
    const std::function<Position(Position, std::vector<Position>,
                                 std::vector<Position>,
                                 std::vector<std::vector<Position>>)>& on_node) {
  std::unordered_map<Position, Position> done;
  std::vector<std::pair<Position, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto& [p, expanded] = stack.back();
    if (done.count(p)) {
      stack.pop_back();
      continue;
    }
    if (p.is_integer()) {
      done.emplace(p, on_integer(p.int_value()));
      stack.pop_back();
      continue;
    }
    if (!expanded) {
      expanded = true;
      const Position cur = p;
      auto push = [&](Position c) {
        if (!done.count(c)) stack.emplace_back(c, false);
      };
      for (std::size_t i = 0; i < cur.left_count(); ++i) push(cur.left(i));
      for (std::size_t j = 0; j < cur.right_count(); ++j) push(cur.right(j));
      for (std::size_t i = 0; i < cur.left_count(); ++i) {
        for (std::size_t j = 0; j < cur.right_count(); ++j) {
          push(cur.same_round(i, j));
        }
      }
      continue;
    }
    const Position cur = p;
    stack.pop_back();
    std::vector<Position> left, right;
    std::vector<std::vector<Position>> rows;
    for (std::size_t i = 0; i < cur.left_count(); ++i) {
      left.push_back(done.at(cur.left(i)));
    }
    for (std::size_t j = 0; j < cur.right_count(); ++j) {
      right.push_back(done.at(cur.right(j)));
    }
    if (!left.empty() && !right.empty()) {
      for (std::size_t i = 0; i < cur.left_count(); ++i) {
        auto& row = rows.emplace_back();
        for (std::size_t j = 0; j < cur.right_count(); ++j) {
          row.push_back(done.at(cur.same_round(i, j)));
        }
      }
    }
    done.emplace(cur, on_node(cur, std::move(left), std::move(right),
                              std::move(rows)));
  }
  return done.at(root);
}

Position conjugate(Position g) {
  return transform(
      g, [](std::int64_t n) { return Position::integer(-n); },
      [](Position, std::vector<Position> left, std::vector<Position> right,
         std::vector<std::vector<Position>> rows) {
        std::vector<std::vector<Position>> transposed(
            rows.empty() ? 0 : right.size(),
            std::vector<Position>(left.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (std::size_t j = 0; j < rows[i].size(); ++j) {
            transposed[j][i] = rows[i][j];
          }
        }
        return Position::node(std::move(right), std::move(left),
                              std::move(transposed));
      });
}

std::uint64_t birthday(Position g) { return g.birthday(); }
bool is_dicot(Position g) { return g.is_dicot(); }
std::uint64_t structural_key(Position g) { return g.key(); }

std::uint64_t dag_size(Position g) {
  std::unordered_set<Position> seen;
  std::vector<Position> stack{g};
  std::int64_t max_int = 0, min_int = 0;
  bool any_int = false;
  std::uint64_t nodes = 0;
  while (!stack.empty()) {
    Position p = stack.back();
    stack.pop_back();
    if (!seen.insert(p).second) continue;
    if (p.is_integer()) {
      any_int = true;
      max_int = std::max(max_int, p.int_value());
      min_int = std::min(min_int, p.int_value());
      continue;
    }
    ++nodes;
    for (std::size_t i = 0; i < p.left_count(); ++i) stack.push_back(p.left(i));
    for (std::size_t j = 0; j < p.right_count(); ++j) {
      stack.push_back(p.right(j));
    }
    for (std::size_t i = 0; i < p.left_count(); ++i) {
      for (std::size_t j = 0; j < p.right_count(); ++j) {
        stack.push_back(p.same_round(i, j));
      }
    }
  }
  if (any_int) {
    nodes += static_cast<std::uint64_t>(max_int) +
             static_cast<std::uint64_t>(-min_int) + 1;
  }
  return nodes;
}

std::size_t interned_count() { return Registry::instance().size(); }

}  // namespace crg

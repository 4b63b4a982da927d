#include "crg/td2.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

namespace crg {

namespace {

class RowParser {
 public:
  explicit RowParser(std::string_view text) : text_(text) {}

  TD2Position parse() {
    TD2Position pos;
    add(pos, row());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      add(pos, row());
      skip_ws();
    }
    return pos;
  }

 private:
  static void add(TD2Position& pos, TD2Row r) {
    if (r.p != 0 || r.q != 0) pos.rows.push_back(r);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::int64_t count() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(start, "domino count too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a domino count");
    return v;
  }

  TD2Row row() {
    expect('(');
    TD2Row r;
    r.p = count();
    expect(',');
    r.q = count();
    expect(')');
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* dir_name(Direction d) { return d == Direction::left ? "left" : "right"; }

void check_move(const TD2Position& pos, const TD2Move& m, Side player) {
  auto fail = [&](const std::string& why) { throw IllegalMoveError(player, why); };
  if (m.player != player) fail("wrong color for this player");
  if (m.row >= pos.rows.size()) fail("row " + std::to_string(m.row) + " does not exist");
  const TD2Row& r = pos.rows[m.row];
  const std::int64_t count = player == Side::left ? r.p : r.q;
  if (m.domino < 1 || m.domino > count) {
    fail("no " + std::string(player == Side::left ? "black" : "white") + " domino " +
         std::to_string(m.domino) + " in row " + std::to_string(m.row));
  }
}

void push_row(std::vector<TD2Row>& out, TD2Row r) {
  if (r.p != 0 || r.q != 0) out.push_back(r);
}

std::vector<TD2Row> resolve_same_row(const TD2Row& r, const TD2Move& l, const TD2Move& m) {
  const std::int64_t k = l.domino, w = m.domino;
  std::vector<TD2Row> out;
  if (l.direction == Direction::right && m.direction == Direction::left) {
    push_row(out, {k - 1, 0});
    push_row(out, {0, r.q - w});
  } else if (l.direction == Direction::right) {
    push_row(out, {k - 1, 0});
  } else if (m.direction == Direction::left) {
    push_row(out, {0, r.q - w});
  } else {
    push_row(out, {r.p - k, w - 1});
  }
  return out;
}

// Oracle over rows encoded as p * 64 + q, sorted.
using Code = std::uint16_t;
using Key = std::vector<Code>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : k) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

TD2Position decode(const Key& k) {
  TD2Position p;
  for (auto c : k) p.rows.push_back({c / 64, c % 64});
  return p;
}

Key encode(const TD2Position& p) {
  Key k;
  for (const auto& r : p.rows) k.push_back(static_cast<Code>(r.p * 64 + r.q));
  std::sort(k.begin(), k.end());
  return k;
}

class TD2Oracle {
 public:
  Outcome value(const Key& key) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const TD2Position pos = decode(key);
    const auto lm = legal_moves(pos, Side::left);
    const auto rm = legal_moves(pos, Side::right);
    Outcome result;
    if (lm.empty() && rm.empty()) {
      result = Outcome::draw;
    } else if (rm.empty()) {
      result = Outcome::left_win;
    } else if (lm.empty()) {
      result = Outcome::right_win;
    } else {
      result = Outcome::right_win;
      for (const auto& l : lm) {
        Outcome row_min = Outcome::left_win;
        for (const auto& r : rm) {
          row_min = std::min(row_min, value(encode(apply_round(pos, l, r))));
          if (row_min <= result) break;
        }
        result = std::max(result, row_min);
        if (result == Outcome::left_win) break;
      }
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<Key, Outcome, KeyHash> memo_;
};

}  // namespace

std::int64_t TD2Position::dominoes() const {
  std::int64_t n = 0;
  for (const auto& r : rows) n += r.p + r.q;
  return n;
}

TD2Position parse_td2(std::string_view text) { return RowParser(text).parse(); }

TD2Position td2_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) { throw ParseError(0, "invalid TD2 position: " + why); };
  if (!j.is_object() || !j.contains("td2") || !j.at("td2").is_array()) {
    fail("expected {\"td2\": [[p, q], ...]}");
  }
  TD2Position pos;
  for (const auto& r : j.at("td2")) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
        !r[1].is_number_integer()) {
      fail("rows must be [p, q]");
    }
    const TD2Row row{r[0].get<std::int64_t>(), r[1].get<std::int64_t>()};
    if (row.p < 0 || row.q < 0) fail("negative domino count");
    if (row.p != 0 || row.q != 0) pos.rows.push_back(row);
  }
  return pos;
}

nlohmann::json to_json(const TD2Position& pos) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : pos.rows) rows.push_back({r.p, r.q});
  return {{"td2", rows}};
}

nlohmann::json to_json(const TD2Move& m) {
  return {{"row", m.row},
          {"color", m.player == Side::left ? "black" : "white"},
          {"domino", m.domino},
          {"direction", dir_name(m.direction)}};
}

TD2Move td2_move_from_json(const nlohmann::json& j, Side player) {
  auto fail = [](const std::string& why) { throw ParseError(0, "invalid TD2 move: " + why); };
  if (!j.is_object()) fail("expected an object");
  TD2Move m;
  m.player = player;
  if (!j.contains("row") || !j.at("row").is_number_unsigned()) fail("missing \"row\"");
  if (!j.contains("domino") || !j.at("domino").is_number_integer()) fail("missing \"domino\"");
  m.row = j.at("row").get<std::size_t>();
  m.domino = j.at("domino").get<std::int64_t>();
  const std::string dir = j.value("direction", "");
  if (dir == "left") {
    m.direction = Direction::left;
  } else if (dir == "right") {
    m.direction = Direction::right;
  } else {
    fail("\"direction\" must be \"left\" or \"right\"");
  }
  if (j.contains("color")) {
    const std::string color = j.at("color").is_string() ? j.at("color").get<std::string>() : "";
    const std::string expected = player == Side::left ? "black" : "white";
    if (color != expected) {
      throw IllegalMoveError(player, "this player topples " + expected + " dominoes");
    }
  }
  return m;
}

std::string to_text(const TD2Position& pos) {
  if (pos.rows.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < pos.rows.size(); ++i) {
    if (i) s += "+";
    s += "(" + std::to_string(pos.rows[i].p) + "," + std::to_string(pos.rows[i].q) + ")";
  }
  return s;
}

std::string to_text(const TD2Move& m) {
  return std::string("row ") + std::to_string(m.row) + ", " +
         (m.player == Side::left ? "black " : "white ") + std::to_string(m.domino) + " " +
         dir_name(m.direction);
}

SHGame to_simple_hot(const TD2Row& r) {
  if (!r.hot()) throw PreconditionError("row is not hot; use to_integer");
  return SHGame(r.p - 1, r.p - r.q, 1 - r.q);
}

std::int64_t to_integer(const TD2Row& r) {
  if (r.hot()) throw PreconditionError("row is hot; use to_simple_hot");
  return r.p > 0 ? r.p : -r.q;
}

SHSum to_sh_sum(const TD2Position& pos) {
  SHSum s;
  for (const auto& r : pos.rows) {
    if (r.hot()) {
      s.games.push_back(to_simple_hot(r));
    } else {
      s.base_int += to_integer(r);
    }
  }
  return s;
}

std::vector<TD2Move> legal_moves(const TD2Position& pos, Side player) {
  std::vector<TD2Move> out;
  for (std::size_t i = 0; i < pos.rows.size(); ++i) {
    const std::int64_t count = player == Side::left ? pos.rows[i].p : pos.rows[i].q;
    for (std::int64_t d = 1; d <= count; ++d) {
      out.push_back({i, player, d, Direction::left});
      out.push_back({i, player, d, Direction::right});
    }
  }
  return out;
}

std::vector<TD2Row> topple(const TD2Row& r, const TD2Move& m) {
  std::vector<TD2Row> out;
  if (m.player == Side::left) {
    if (m.direction == Direction::right) {
      push_row(out, {m.domino - 1, 0});
    } else {
      push_row(out, {r.p - m.domino, r.q});
    }
  } else {
    if (m.direction == Direction::left) {
      push_row(out, {0, r.q - m.domino});
    } else {
      push_row(out, {r.p, m.domino - 1});
    }
  }
  return out;
}

TD2Position apply_round(const TD2Position& pos, const TD2Move& left, const TD2Move& right) {
  check_move(pos, left, Side::left);
  check_move(pos, right, Side::right);
  TD2Position next;
  for (std::size_t i = 0; i < pos.rows.size(); ++i) {
    std::vector<TD2Row> parts;
    if (i == left.row && i == right.row) {
      parts = resolve_same_row(pos.rows[i], left, right);
    } else if (i == left.row) {
      parts = topple(pos.rows[i], left);
    } else if (i == right.row) {
      parts = topple(pos.rows[i], right);
    } else {
      parts = {pos.rows[i]};
    }
    next.rows.insert(next.rows.end(), parts.begin(), parts.end());
  }
  return next;
}

Outcome td2_outcome_oracle(const TD2Position& pos) {
  if (pos.dominoes() > kTd2OracleMaxDominoes) {
    throw ResourceLimitError("TD2 oracle supports at most 16 dominoes");
  }
  static TD2Oracle oracle;
  return oracle.value(encode(pos));
}

TD2Move inward_move(const TD2Position& pos, std::size_t row, Side player) {
  if (row >= pos.rows.size()) throw PreconditionError("row out of range");
  const TD2Row& r = pos.rows[row];
  if (player == Side::left) {
    if (r.p == 0) throw PreconditionError("row has no black domino");
    return {row, Side::left, r.p, Direction::right};
  }
  if (r.q == 0) throw PreconditionError("row has no white domino");
  return {row, Side::right, 1, Direction::left};
}

TD2Solution solve_td2(const TD2Position& pos) {
  TD2Solution sol;
  for (std::size_t i = 0; i < pos.rows.size(); ++i) {
    if (pos.rows[i].hot()) sol.game_rows.push_back(i);
  }
  sol.sh = solve_sh(to_sh_sum(pos));
  for (const auto& step : sol.sh.trace) {
    TD2Plan plan;
    plan.left_row = sol.game_rows[sol.sh.left_order[step.left_game - 1]];
    plan.right_row = sol.game_rows[sol.sh.left_order[step.right_game - 1]];
    plan.left = inward_move(pos, plan.left_row, Side::left);
    plan.right = inward_move(pos, plan.right_row, Side::right);
    sol.strategy.push_back(plan);
  }
  return sol;
}

nlohmann::json to_json(const TD2Solution& s) {
  nlohmann::json out = to_json(s.sh);
  out["gameRows"] = s.game_rows;
  nlohmann::json strategy = nlohmann::json::array();
  for (const auto& p : s.strategy) {
    strategy.push_back({{"leftRow", p.left_row},
                        {"rightRow", p.right_row},
                        {"left", to_json(p.left)},
                        {"right", to_json(p.right)}});
  }
  out["strategy"] = strategy;
  return out;
}

}  // namespace crg

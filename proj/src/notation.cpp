#include "crg/notation.hpp"

#include <cctype>
#include <limits>
#include <unordered_map>

#include "crg/errors.hpp"

namespace crg {

namespace {

class SumParser {
 public:
  explicit SumParser(std::string_view text) : text_(text) {}

  std::vector<Position> parse() {
    std::vector<Position> terms;
    terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      terms.push_back(term());
      skip_ws();
    }
    return terms;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
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

  bool minus_sign() {
    if (text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected integer");
    const bool negative = minus_sign();
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(start, "expected integer");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw ParseError(start, "integer out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  Position term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected term");
    if (text_[pos_] == '{') {
      ++pos_;
      const auto a = integer();
      expect('|');
      const auto b = integer();
      expect('|');
      const auto c = integer();
      expect('}');
      return Position::triple(a, b, c);
    }
    if (text_[pos_] == '(') {
      ++pos_;
      const auto n = integer();
      expect(')');
      return mk_int(n);
    }
    return mk_int(integer());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void json_error(const std::string& what) {
  throw ParseError(0, "invalid JSON position: " + what);
}

std::vector<Position> position_list(const nlohmann::json& j, const char* key) {
  std::vector<Position> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) json_error(std::string("\"") + key + "\" must be a list");
  for (const auto& item : arr) out.push_back(position_from_json(item));
  return out;
}

std::int64_t json_int(const nlohmann::json& j) {
  if (!j.is_number_integer()) json_error("expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

std::vector<Position> parse_sum(std::string_view text) {
  return SumParser(text).parse();
}

Position position_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mk_int(j.get<std::int64_t>());
  if (!j.is_object()) json_error("expected an object");
  if (j.contains("int")) return mk_int(json_int(j.at("int")));
  if (j.contains("sh")) {
    const auto& t = j.at("sh");
    if (!t.is_array() || t.size() != 3) json_error("\"sh\" needs [a, b, c]");
    const auto a = json_int(t[0]), b = json_int(t[1]), c = json_int(t[2]);
    if (!(a >= b && b >= c)) json_error("\"sh\" requires a >= b >= c");
    return Position::triple(a, b, c);
  }
  if (j.contains("sum")) json_error("a sum is not a single position");
  if (!j.contains("L") && !j.contains("R")) {
    json_error("expected \"int\", \"sh\" or \"L\"/\"R\"/\"S\"");
  }
  auto left = position_list(j, "L");
  auto right = position_list(j, "R");
  std::vector<std::vector<Position>> rows;
  if (j.contains("S")) {
    const auto& s = j.at("S");
    if (!s.is_array()) json_error("\"S\" must be a matrix");
    for (const auto& row : s) {
      if (!row.is_array()) json_error("\"S\" rows must be lists");
      auto& r = rows.emplace_back();
      for (const auto& item : row) r.push_back(position_from_json(item));
    }
  }
  try {
    return Position::node(std::move(left), std::move(right), std::move(rows));
  } catch (const PreconditionError& e) {
    json_error(e.what());
  }
}

std::vector<Position> components_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("sum")) {
    const auto& arr = j.at("sum");
    if (!arr.is_array()) json_error("\"sum\" must be a list");
    std::vector<Position> out;
    for (const auto& item : arr) out.push_back(position_from_json(item));
    return out;
  }
  return {position_from_json(j)};
}

nlohmann::json to_json(Position p) {
  if (p.is_integer()) return nlohmann::json{{"int", p.int_value()}};
  nlohmann::json left = nlohmann::json::array();
  nlohmann::json right = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < p.left_count(); ++i) left.push_back(to_json(p.left(i)));
  for (std::size_t j = 0; j < p.right_count(); ++j) {
    right.push_back(to_json(p.right(j)));
  }
  for (const auto& row : p.same_round_matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (auto e : row) r.push_back(to_json(e));
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"L", left}, {"R", right}, {"S", rows}};
}

nlohmann::json to_json(const std::vector<Position>& components) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto p : components) arr.push_back(to_json(p));
  return nlohmann::json{{"sum", arr}};
}

std::string to_text(Position p) {
  if (p.is_integer()) return std::to_string(p.int_value());
  if (p.left_count() == 1 && p.right_count() == 1 && p.left(0).is_integer() &&
      p.right(0).is_integer() && p.same_round(0, 0).is_integer()) {
    return "{" + std::to_string(p.left(0).int_value()) + "|" +
           std::to_string(p.same_round(0, 0).int_value()) + "|" +
           std::to_string(p.right(0).int_value()) + "}";
  }
  auto list = [](const std::vector<Position>& items) {
    if (items.empty()) return std::string(".");
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += to_text(items[i]);
    }
    return s;
  };
  std::string matrix;
  const auto rows = p.same_round_matrix();
  if (rows.empty()) {
    matrix = ".";
  } else if (rows.size() == 1 && rows[0].size() == 1) {
    matrix = to_text(rows[0][0]);
  } else {
    matrix = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) matrix += ", ";
      matrix += "[" + list(rows[i]) + "]";
    }
    matrix += "]";
  }
  return "{" + list(p.left_options()) + " | " + matrix + " | " +
         list(p.right_options()) + "}";
}

std::string to_text(const std::vector<Position>& components) {
  if (components.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " + ";
    s += to_text(components[i]);
  }
  return s;
}

}  // namespace crg

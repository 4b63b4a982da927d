#include <algorithm>
#include <numeric>

#include "crg/errors.hpp"
#include "crg/notation.hpp"
#include "crg/position.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crg;
using crg::testing::corpus;
using crg::testing::naive_outcome;

namespace {

Position unfolded_int(std::int64_t n) {
  Position g = Position::node({}, {}, {});
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) {
    g = n > 0 ? Position::node({g}, {}, {}) : Position::node({}, {g}, {});
  }
  return g;
}

Position permuted(Position g, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  std::vector<Position> l, r;
  std::vector<std::vector<Position>> s;
  for (auto i : rows) l.push_back(g.left(i));
  for (auto j : cols) r.push_back(g.right(j));
  if (!rows.empty() && !cols.empty()) {
    for (auto i : rows) {
      auto& row = s.emplace_back();
      for (auto j : cols) row.push_back(g.same_round(i, j));
    }
  }
  return Position::node(l, r, s);
}

}  // namespace

TEST_CASE("integers unfold to their recursive definition") {
  CHECK(mk_int(0).left_count() == 0);
  CHECK(mk_int(0).right_count() == 0);
  CHECK(mk_int(1).left_count() == 1);
  CHECK(mk_int(1).left(0) == mk_int(0));
  CHECK(mk_int(1).right_count() == 0);
  CHECK(mk_int(-1).right(0) == mk_int(0));
  CHECK(mk_int(-1).left_count() == 0);
  for (std::int64_t n = -6; n <= 6; ++n) {
    CHECK(unfolded_int(n) == mk_int(n));
    CHECK(birthday(mk_int(n)) == static_cast<std::uint64_t>(n < 0 ? -n : n));
  }
}

TEST_CASE("conjugate swaps, negates and transposes") {
  CHECK(conjugate(Position::triple(1, 2, -2)) == Position::triple(2, -2, -1));
  const Position h = Position::node({mk_int(1)}, {mk_int(5)}, {{Position::triple(-2, -1, 3)}});
  const Position expected =
      Position::node({mk_int(-5)}, {mk_int(-1)}, {{Position::triple(-3, 1, 2)}});
  CHECK(conjugate(h) == expected);
  CHECK(conjugate(mk_int(0)) == mk_int(0));
  CHECK(conjugate(mk_int(4)) == mk_int(-4));

  const Position g = Position::node({mk_int(1), mk_int(2)}, {mk_int(-1), star_bar(), mk_int(0)},
                                    {{mk_int(0), mk_int(1), mk_int(2)},
                                     {mk_int(-1), mk_int(-2), star_bar()}});
  const Position c = conjugate(g);
  REQUIRE(c.left_count() == 3);
  REQUIRE(c.right_count() == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(c.same_round(i, j) == conjugate(g.same_round(j, i)));
  }
}

TEST_CASE("conjugate is an involution on the corpus") {
  for (auto g : corpus()) CHECK(conjugate(conjugate(g)) == g);
}

TEST_CASE("birthday, dicot and keys") {
  CHECK(birthday(mk_int(0)) == 0);
  CHECK(birthday(star_bar()) == 1);
  CHECK(birthday(Position::triple(1, 2, -2)) == 3);
  CHECK(is_dicot(star_bar()));
  CHECK_FALSE(is_dicot(mk_int(1)));
  CHECK(is_dicot(mk_int(0)));
  CHECK_FALSE(is_dicot(Position::triple(1, 0, 0)));
  CHECK(structural_key(mk_int(3)) == structural_key(mk_int(3)));
  CHECK(structural_key(mk_int(0)) != structural_key(star_bar()));
  const Position g = Position::triple(1, 2, -2);
  CHECK(structural_key(g) == structural_key(conjugate(conjugate(g))));
}

TEST_CASE("matrix shape is enforced") {
  CHECK_THROWS_AS(Position::node({mk_int(0)}, {mk_int(0)}, {}), PreconditionError);
  CHECK_THROWS_AS(Position::node({mk_int(0)}, {}, {{mk_int(0)}}), PreconditionError);
  CHECK_THROWS_AS(Position::node({mk_int(0), mk_int(1)}, {mk_int(0)}, {{mk_int(0)}}),
                  PreconditionError);
  CHECK_THROWS_AS(
      Position::node({mk_int(0)}, {mk_int(0), mk_int(1)}, {{mk_int(0)}}), PreconditionError);
}

TEST_CASE("option lists keep duplicates and order") {
  const Position g = Position::node({mk_int(1), mk_int(1)}, {mk_int(-1)},
                                    {{mk_int(0)}, {mk_int(2)}});
  CHECK(g.left_count() == 2);
  CHECK(g.same_round(1, 0) == mk_int(2));
  const Position swapped = Position::node({mk_int(1), mk_int(1)}, {mk_int(-1)},
                                          {{mk_int(2)}, {mk_int(0)}});
  CHECK(g != swapped);
}

TEST_CASE("relabeling moves preserves outcome and metadata") {
  for (auto g : corpus()) {
    if (g.is_integer()) continue;
    std::vector<std::size_t> rows(g.left_count()), cols(g.right_count());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::reverse(rows.begin(), rows.end());
    std::rotate(cols.begin(), cols.begin() + (cols.empty() ? 0 : 1), cols.end());
    const Position p = permuted(g, rows, cols);
    CHECK(p.outcome() == g.outcome());
    CHECK(naive_outcome(p) == naive_outcome(g));
    CHECK(p.birthday() == g.birthday());
    CHECK(p.is_dicot() == g.is_dicot());
    CHECK(dag_size(p) == dag_size(g));
  }
}

TEST_CASE("construction-time outcome matches the definition") {
  for (auto g : corpus()) CHECK(g.outcome() == naive_outcome(g));
}

TEST_CASE("deep positions do not exhaust the stack") {
  Position g = star_bar();
  for (int k = 0; k < 20000; ++k) g = Position::node({g}, {g}, {{g}});
  CHECK(g.birthday() == 20001);
  CHECK(g.is_dicot());
  CHECK(g.outcome() == Outcome::draw);
  const Position c = conjugate(g);
  CHECK(c.birthday() == 20001);
  CHECK(conjugate(c) == g);
  CHECK(dag_size(g) == 20002);
  CHECK(birthday(mk_int(1'000'000)) == 1'000'000);
}

TEST_CASE("dag size counts distinct followers") {
  CHECK(dag_size(mk_int(0)) == 1);
  CHECK(dag_size(mk_int(3)) == 4);
  CHECK(dag_size(star_bar()) == 2);
  CHECK(dag_size(Position::triple(1, 2, -2)) == 6);
}

TEST_CASE("text grammar") {
  const auto parts = parse_sum("{10|8|-3} + {5|−2|−4} + 2 + (-1)");
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == Position::triple(10, 8, -3));
  CHECK(parts[1] == Position::triple(5, -2, -4));
  CHECK(parts[2] == mk_int(2));
  CHECK(parts[3] == mk_int(-1));
  CHECK(to_text(parts) == "{10|8|-3} + {5|-2|-4} + 2 + -1");
  CHECK_THROWS_AS(parse_sum("{1|2}"), ParseError);
  CHECK_THROWS_AS(parse_sum(""), ParseError);
  CHECK_THROWS_AS(parse_sum("1 +"), ParseError);
  try {
    parse_sum("3 + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("JSON positions round-trip") {
  for (auto g : corpus()) CHECK(position_from_json(to_json(g)) == g);
  CHECK(position_from_json(nlohmann::json::parse(R"({"sh":[2,0,-4]})")) ==
        Position::triple(2, 0, -4));
  CHECK(position_from_json(nlohmann::json::parse(R"({"int":-3})")) == mk_int(-3));
  CHECK_THROWS_AS(position_from_json(nlohmann::json::parse(R"({"sh":[0,1,2]})")), ParseError);
  CHECK_THROWS_AS(position_from_json(nlohmann::json::parse(R"({"L":[0],"R":[0],"S":[]})")),
                  ParseError);
  CHECK_THROWS_AS(position_from_json(nlohmann::json::parse(R"("x")")), ParseError);
  const auto sum = components_from_json(nlohmann::json::parse(R"({"sum":[1,{"sh":[1,0,-1]}]})"));
  CHECK(sum.size() == 2);
  CHECK(to_json(star_bar()).dump() ==
        R"({"L":[{"int":0}],"R":[{"int":0}],"S":[[{"int":0}]]})");
}

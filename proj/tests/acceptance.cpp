// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "crg/matching.hpp"
#include "crg/notation.hpp"
#include "crg/order.hpp"
#include "crg/reducer.hpp"
#include "crg/simple_hot.hpp"
#include "crg/solver.hpp"
#include "crg/td2.hpp"
#include "support.hpp"

using namespace crg;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < limit_seconds, "took longer than " + std::to_string(limit_seconds) + " s");
  if (!c.ok) ++failures;
  std::printf("%s  %-34s %8.2f s  (limit %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(),
              secs, limit_seconds, c.ok ? "" : "  ", c.why.str().c_str());
  std::fflush(stdout);
}

void two_game_example(Check& c) {
  const SHSum s{{SHGame(6, 0, -55), SHGame(10, 0, -36)}, 0};
  const SHSolution sol = solve_sh(s);
  c.expect(sol.score == -30, "score " + std::to_string(sol.score));
  c.expect(sol.outcome == Outcome::right_win, "outcome");
  c.expect(sh_value_oracle(s) == -30, "oracle disagrees");
  c.expect(outcome(to_arena(s)) == Outcome::right_win, "outcome solver disagrees");
}

void normalized_example(Check& c) {
  const std::vector<Position> parts = parse_sum("{10|8|-3}+{5|-2|-4}+2+-1");
  const auto rec = recognize_sh_sum(SumArena(parts));
  c.expect(rec.has_value(), "not recognized");
  if (!rec) return;
  const Normalized n = normalize(rec->sum);
  c.expect(n.base == 7, "base");
  c.expect(n.games == std::vector<SHGame>{SHGame(2, 0, -11), SHGame(7, 0, -2)}, "games");
  c.expect(build_aux_graph(n.games).edges.empty(), "graph has edges");
  const SHSolution sol = solve_sh(rec->sum);
  c.expect(sol.score == 7, "score");
  c.expect(sh_value_oracle(rec->sum) == 7, "oracle");
  const SolveResult r = solve(SumArena(parts));
  c.expect(r.score == 7, "solver score");
  c.expect(r.principal.has_value(), "no principal");
  if (r.principal) {
    c.expect(!parts[r.principal->left.component].is_integer(), "Left opens in an integer");
    c.expect(!parts[r.principal->right.component].is_integer(), "Right answers in an integer");
  }
}

void td2_worked_example(Check& c) {
  const TD2Position pos = parse_td2(
      "(56,7)+(37,11)+(24,15)+(20,17)+(1,1)+(1,5)+(1,4)+(0,15)+(0,15)+(0,16)");
  const TD2Solution sol = solve_td2(pos);
  c.expect(sol.sh.base == 34, "local score " + std::to_string(sol.sh.base));
  c.expect(sol.sh.score == -1, "score " + std::to_string(sol.sh.score));
  c.expect(sol.sh.outcome == Outcome::right_win, "outcome");
  c.expect(sol.sh.right_plan.pairs.size() == 2, "pair count");
  std::vector<std::pair<TD2Row, TD2Row>> rows;
  std::vector<std::int64_t> weights;
  for (auto [i, j] : sol.sh.right_plan.pairs) {
    rows.push_back({pos.rows[sol.game_rows[sol.sh.left_order[i - 1]]],
                    pos.rows[sol.game_rows[sol.sh.left_order[j - 1]]]});
    for (const auto& e : sol.sh.graph.edges) {
      if (e.i == i && e.j == j) weights.push_back(e.weight);
    }
  }
  const std::vector<std::pair<TD2Row, TD2Row>> expected = {{{56, 7}, {37, 11}},
                                                           {{24, 15}, {20, 17}}};
  c.expect(rows == expected, "matched rows");
  c.expect(weights == std::vector<std::int64_t>{-30, -5}, "pair weights");
}

void matching_exactness(Check& c) {
  std::mt19937 rng(1000);
  std::uniform_int_distribution<int> size(1, 12), w(-50, -1);
  std::bernoulli_distribution edge(0.5);
  for (int t = 0; t < 1000 && c.ok; ++t) {
    AuxGraph g{static_cast<std::size_t>(size(rng)), {}};
    for (std::size_t i = 1; i <= g.n; ++i) {
      for (std::size_t j = i + 1; j <= g.n; ++j) {
        if (edge(rng)) g.edges.push_back({i, j, w(rng)});
      }
    }
    const Matching a = min_weight_matching(g), b = brute_force_matching(g);
    c.expect(a == b, "graph " + std::to_string(t));
  }
}

void td2_equivalence(Check& c) {
  std::vector<TD2Row> kinds;
  for (std::int64_t p = 0; p <= 14; ++p) {
    for (std::int64_t q = 0; p + q <= 14; ++q) {
      if (p + q > 0) kinds.push_back({p, q});
    }
  }
  std::size_t checked = 0;
  std::vector<TD2Row> rows;
  std::function<void(std::size_t, std::int64_t)> grow = [&](std::size_t from, std::int64_t left) {
    if (!c.ok) return;
    if (!rows.empty()) {
      const TD2Position pos{rows};
      const Outcome o = td2_outcome_oracle(pos);
      const Outcome t = outcome_of_score(solve_td2(pos).sh.score);
      c.expect(o == t, "mismatch at " + to_text(pos));
      ++checked;
    }
    if (rows.size() == 4) return;
    for (std::size_t k = from; k < kinds.size(); ++k) {
      if (kinds[k].p + kinds[k].q > left) continue;
      rows.push_back(kinds[k]);
      grow(k, left - kinds[k].p - kinds[k].q);
      rows.pop_back();
    }
  };
  grow(0, 14);
  std::printf("      %zu TD2 positions checked\n", checked);
}

void outcome_axioms(Check& c) {
  for (int n = -6; n <= 6; ++n) {
    const Outcome want = n > 0 ? Outcome::left_win : n < 0 ? Outcome::right_win : Outcome::draw;
    c.expect(outcome(mk_int(n)) == want, "integer " + std::to_string(n));
  }
  c.expect(outcome(star_bar()) == Outcome::draw, "star bar");
  const ContextFamily& f = ContextFamily::named("day2-mixed");
  c.expect(f.size() == 20000, "family size");
  const std::vector<Position> chain = {mk_int(1), mk_int(0), star_bar(), mk_int(-1)};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      c.expect(!refute_geq(chain[i], chain[j], f), "counter-witness found");
      c.expect(refute_geq(chain[j], chain[i], f).has_value(), "no strictness witness");
    }
  }
}

void algebraic_laws(Check& c) {
  const auto& corpus = crg::testing::corpus();
  const ContextFamily& f = ContextFamily::named("day2-mixed");
  const std::size_t n = corpus.size();
  c.expect(n == 200, "corpus size");
  for (std::size_t k = 0; k < n && c.ok; ++k) {
    const Position g = corpus[k], h = corpus[(k + 1) % n], x = corpus[(k + 2) % n];
    const std::string at = " at corpus " + std::to_string(k);
    c.expect(add(g, mk_int(0)) == g, "G+0" + at);
    c.expect(equiv_mod(add(g, h), add(h, g), f), "commutativity" + at);
    c.expect(equiv_mod(std::vector<Position>{add(g, h), x},
                       std::vector<Position>{g, add(h, x)}, f),
             "associativity" + at);
    c.expect(equiv_mod(simplify(g), g, f), "simplify" + at);
    const Position rewrites[] = {remove_dominated_left(g), remove_dominated_right(g),
                                 replace_sr_option(g), collapse_integer_bracket(g)};
    for (const Position r : rewrites) {
      if (r != g) c.expect(equiv_mod(r, g, f), "rewrite" + at);
    }
  }
}

void counterexample(Check& c) {
  const Position g = Position::triple(2, 0, -4);
  const Position h = Position::triple(3, 0, -1);
  c.expect(outcome(g) == Outcome::draw, "o(G)");
  c.expect(outcome(SumArena({g, h, conjugate(h)})) == Outcome::right_win, "o(G+H-H)");
  const auto w = refute_geq({h, conjugate(h)}, {}, ContextFamily::named("sh-only"));
  c.expect(w.has_value(), "no witness");
  if (w) {
    std::vector<Position> with = {h, conjugate(h)};
    with.insert(with.end(), w->begin(), w->end());
    c.expect(outcome(SumArena(with)) < outcome(SumArena(*w)), "witness does not separate");
  }
}

}  // namespace

int main() {
  criterion("two-game example", 1, two_game_example);
  criterion("normalized mixed sum", 1, normalized_example);
  criterion("TD2 worked example", 1, td2_worked_example);
  criterion("matching exactness", 30, matching_exactness);
  criterion("TD2 oracle equivalence", 300, td2_equivalence);
  criterion("outcome axioms", 120, outcome_axioms);
  criterion("algebraic laws", 600, algebraic_laws);
  criterion("conjugate counterexample", 1, counterexample);
  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

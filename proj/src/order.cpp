#include "crg/order.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "crg/errors.hpp"
#include "crg/notation.hpp"
#include "crg/simple_hot.hpp"

namespace crg {

namespace {

enum class Sign { zero, positive, negative };

struct SignFact {
  Sign sign;
  std::string rule;
};

std::optional<SignFact> sign_vs_zero(Position g) {
  if (g.is_zero()) return SignFact{Sign::zero, "structural identity"};
  if (auto k = integer_equal(g)) {
    return SignFact{*k > 0 ? Sign::positive : Sign::negative,
                    g.is_integer() ? "integer order" : "integer bracket"};
  }
  if (g.has_left_move() && !g.has_right_move()) {
    return SignFact{Sign::positive, "Left-only game"};
  }
  if (g.has_right_move() && !g.has_left_move()) {
    return SignFact{Sign::negative, "Right-only game"};
  }
  if (g.is_dicot()) return SignFact{Sign::negative, "dicot lemma"};
  return std::nullopt;
}

OrderVerdict make(Verdict kind, bool strict, std::string evidence,
                  Scope scope = Scope::cr) {
  OrderVerdict v;
  v.kind = kind;
  v.strict = strict;
  v.evidence = std::move(evidence);
  v.scope = scope;
  return v;
}

OrderVerdict flip(OrderVerdict v) {
  if (v.kind == Verdict::proven_ge) {
    v.kind = Verdict::proven_le;
  } else if (v.kind == Verdict::proven_le) {
    v.kind = Verdict::proven_ge;
  }
  std::swap(v.witness_not_ge, v.witness_not_le);
  return v;
}

OrderVerdict against_zero(Position g) {
  const auto s = sign_vs_zero(g);
  if (!s) return make(Verdict::unknown, false, "no rule applies");
  switch (s->sign) {
    case Sign::zero:
      return make(Verdict::proven_eq, false, s->rule);
    case Sign::positive:
      return make(Verdict::proven_ge, true, s->rule);
    case Sign::negative:
      return make(Verdict::proven_le, true, s->rule);
  }
  return make(Verdict::unknown, false, "no rule applies");
}

struct ShShape {
  std::int64_t base;
  std::vector<std::tuple<std::int64_t, std::int64_t>> games;  // normalized (a, c)
};

std::optional<ShShape> sh_shape(const std::vector<Position>& parts) {
  auto rec = recognize_sh_sum(SumArena(parts));
  if (!rec) return std::nullopt;
  const Normalized n = normalize(rec->sum);
  ShShape s{n.base, {}};
  for (const auto& g : n.games) s.games.emplace_back(g.a, g.c);
  std::sort(s.games.begin(), s.games.end());
  return s;
}

std::vector<Position> as_parts(Position p) {
  if (p.is_zero()) return {};
  return {p};
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::proven_ge:
      return "ProvenGE";
    case Verdict::proven_le:
      return "ProvenLE";
    case Verdict::proven_eq:
      return "ProvenEQ";
    case Verdict::proven_incomparable:
      return "ProvenIncomparable";
    case Verdict::unknown:
      return "Unknown";
  }
  return "Unknown";
}

const char* to_string(Scope s) { return s == Scope::cr ? "CR" : "CR_SH"; }

std::optional<std::int64_t> integer_equal(Position g) {
  if (g.is_integer()) return g.int_value();
  if (g.left_count() != 1 || g.right_count() != 1) return std::nullopt;
  const auto a = g.left(0).as_integer();
  const auto b = g.same_round(0, 0).as_integer();
  const auto c = g.right(0).as_integer();
  if (!a || !b || !c) return std::nullopt;
  if (*b >= 1 && *a == *b - 1 && *c > *b) return *b;
  if (*b <= -1 && *c == *b + 1 && *a <= *b) return *b;
  return std::nullopt;
}

OrderVerdict cmp_sound(Position g, Position h) {
  if (g == h) return make(Verdict::proven_eq, false, "structural identity");
  const auto ig = integer_equal(g);
  const auto ih = integer_equal(h);
  if (ig && ih) {
    const std::string rule = (g.is_integer() && h.is_integer())
                                 ? "integer order"
                                 : "integer bracket";
    if (*ig == *ih) return make(Verdict::proven_eq, false, rule);
    return make(*ig > *ih ? Verdict::proven_ge : Verdict::proven_le, true, rule);
  }
  if (h.is_zero()) return against_zero(g);
  if (g.is_zero()) return flip(against_zero(h));
  const auto sg = sign_vs_zero(g);
  const auto sh = sign_vs_zero(h);
  if (sg && sh) {
    const std::string rule = "transitivity through 0 (" + sg->rule + ", " + sh->rule + ")";
    if (sg->sign == Sign::positive && sh->sign == Sign::negative) {
      return make(Verdict::proven_ge, true, rule);
    }
    if (sg->sign == Sign::negative && sh->sign == Sign::positive) {
      return make(Verdict::proven_le, true, rule);
    }
  }
  return make(Verdict::unknown, false, "no rule applies");
}

OrderVerdict cmp_sound(const std::vector<Position>& g, const std::vector<Position>& h) {
  const auto cg = canonical_components(g);
  const auto ch = canonical_components(h);
  if (cg == ch) {
    return make(Verdict::proven_eq, false,
                g == h ? "structural identity" : "commutativity and integer sums");
  }
  if (cg.size() <= 1 && ch.size() <= 1) {
    return cmp_sound(cg.empty() ? Position() : cg[0], ch.empty() ? Position() : ch[0]);
  }
  const auto sg = sh_shape(g);
  const auto sh = sh_shape(h);
  if (sg && sh && sg->games == sh->games) {
    const std::string rule = "integer translation";
    if (sg->base == sh->base) return make(Verdict::proven_eq, false, rule, Scope::sh);
    return make(sg->base > sh->base ? Verdict::proven_ge : Verdict::proven_le, false,
                rule, Scope::sh);
  }
  return make(Verdict::unknown, false, "no rule applies");
}

ContextFamily::ContextFamily(std::string name, std::vector<std::vector<Position>> members,
                             std::size_t budget)
    : name_(std::move(name)), members_(std::move(members)), budget_(budget) {
  if (members_.size() > budget_) members_.resize(budget_);
}

namespace {

std::vector<Position> int_and_sh_bases() {
  std::vector<Position> out;
  for (int n = -3; n <= 3; ++n) out.push_back(mk_int(n));
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= a; ++b) {
      for (int c = -3; c <= b; ++c) out.push_back(Position::triple(a, b, c));
    }
  }
  return out;
}

std::vector<Position> day2_nodes() {
  const std::vector<Position> e = {mk_int(-1), mk_int(0), mk_int(1), star_bar()};
  std::vector<Position> out;
  for (auto x : e) out.push_back(Position::node({x}, {}, {}));
  for (auto x : e) out.push_back(Position::node({}, {x}, {}));
  for (auto l : e) {
    for (auto s : e) {
      for (auto r : e) out.push_back(Position::node({l}, {r}, {{s}}));
    }
  }
  // rows (left option, same-round entry); two distinct rows, one column
  std::vector<std::pair<Position, Position>> rows;
  for (auto l : e) {
    for (auto s : e) rows.emplace_back(l, s);
  }
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = x + 1; y < rows.size(); ++y) {
      for (auto r : e) {
        out.push_back(Position::node({rows[x].first, rows[y].first}, {r},
                                     {{rows[x].second}, {rows[y].second}}));
        out.push_back(conjugate(Position::node(
            {rows[x].first, rows[y].first}, {r}, {{rows[x].second}, {rows[y].second}})));
      }
    }
  }
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = x; y < e.size(); ++y) {
      out.push_back(Position::node({e[x], e[y]}, {}, {}));
      out.push_back(Position::node({}, {e[x], e[y]}, {}));
    }
  }
  return out;
}

ContextFamily build(std::string name, const std::vector<Position>& base,
                    std::size_t budget) {
  std::vector<std::vector<Position>> members;
  std::set<std::vector<std::uint64_t>> seen;
  auto push = [&](std::vector<Position> parts) {
    if (members.size() >= budget) return;
    auto canon = canonical_components(parts);
    std::vector<std::uint64_t> key;
    for (auto p : canon) key.push_back(p.key());
    if (!seen.insert(key).second) return;
    std::vector<Position> kept;
    for (auto p : parts) {
      if (!p.is_zero()) kept.push_back(p);
    }
    members.push_back(std::move(kept));
  };
  for (auto p : base) push({p});
  for (std::size_t i = 0; i < base.size() && members.size() < budget; ++i) {
    for (std::size_t j = i; j < base.size() && members.size() < budget; ++j) {
      push({base[i], base[j]});
    }
  }
  return ContextFamily(std::move(name), std::move(members), budget);
}

}  // namespace

ContextFamily ContextFamily::day2_mixed(std::size_t budget) {
  auto base = int_and_sh_bases();
  for (auto p : day2_nodes()) base.push_back(p);
  return build("day2-mixed", base, budget);
}

ContextFamily ContextFamily::sh_only(std::size_t budget) {
  return build("sh-only", int_and_sh_bases(), budget);
}

const ContextFamily& ContextFamily::named(const std::string& name) {
  if (name == "day2-mixed" || name == "default") {
    static const ContextFamily f = day2_mixed();
    return f;
  }
  if (name == "sh-only") {
    static const ContextFamily f = sh_only();
    return f;
  }
  throw PreconditionError("unknown context family '" + name + "'");
}

std::optional<std::vector<Position>> refute_geq(const std::vector<Position>& g,
                                                const std::vector<Position>& h,
                                                const ContextFamily& family,
                                                Solver& solver) {
  for (const auto& x : family.members()) {
    std::vector<Position> gx = g, hx = h;
    gx.insert(gx.end(), x.begin(), x.end());
    hx.insert(hx.end(), x.begin(), x.end());
    const Outcome og = solver.outcome(SumArena(gx));
    if (og == Outcome::left_win) continue;
    if (og < solver.outcome(SumArena(hx))) return x;
  }
  return std::nullopt;
}

std::optional<std::vector<Position>> refute_geq(Position g, Position h,
                                                const ContextFamily& family,
                                                Solver& solver) {
  return refute_geq(as_parts(g), as_parts(h), family, solver);
}

bool equiv_mod(const std::vector<Position>& g, const std::vector<Position>& h,
               const ContextFamily& family, Solver& solver) {
  for (const auto& x : family.members()) {
    std::vector<Position> gx = g, hx = h;
    gx.insert(gx.end(), x.begin(), x.end());
    hx.insert(hx.end(), x.begin(), x.end());
    if (solver.outcome(SumArena(gx)) != solver.outcome(SumArena(hx))) return false;
  }
  return true;
}

bool equiv_mod(Position g, Position h, const ContextFamily& family, Solver& solver) {
  return equiv_mod(as_parts(g), as_parts(h), family, solver);
}

OrderVerdict compare(const std::vector<Position>& g, const std::vector<Position>& h,
                     const ContextFamily& family, Solver& solver) {
  OrderVerdict v = cmp_sound(g, h);
  if (v.kind != Verdict::unknown) return v;
  v.witness_not_ge = refute_geq(g, h, family, solver);
  v.witness_not_le = refute_geq(h, g, family, solver);
  if (v.witness_not_ge && v.witness_not_le) {
    v.kind = Verdict::proven_incomparable;
    v.evidence = "witnesses " + to_text(*v.witness_not_ge) + " and " +
                 to_text(*v.witness_not_le);
  } else if (!v.witness_not_ge && !v.witness_not_le) {
    v.evidence = "equivalent modulo " + family.name();
  } else if (v.witness_not_ge) {
    v.evidence = "not >=: witness " + to_text(*v.witness_not_ge);
  } else {
    v.evidence = "not <=: witness " + to_text(*v.witness_not_le);
  }
  return v;
}

}  // namespace crg

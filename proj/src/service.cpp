#include "crg/service.hpp"

#include <algorithm>
#include <fstream>

#include "crg/notation.hpp"
#include "crg/simple_hot.hpp"
#include "crg/solver.hpp"
#include "httplib.h"

namespace crg {

namespace {

using nlohmann::json;

json error_body(const std::string& message, const std::string& code) {
  return {{"error", message}, {"code", code}};
}

HttpResponse reply(int status, const json& body) { return {status, body.dump()}; }

ComponentMove component_move_from_json(const json& j) {
  if (!j.is_object() || !j.contains("component") || !j.contains("move") ||
      !j.at("component").is_number_unsigned() || !j.at("move").is_number_unsigned()) {
    throw ParseError(0, "invalid move: expected {\"component\": c, \"move\": m}");
  }
  return {j.at("component").get<std::size_t>(), j.at("move").get<std::size_t>()};
}

json to_json(const ComponentMove& m) { return {{"component", m.component}, {"move", m.move}}; }

std::optional<std::int64_t> score_of(const GameState& s) {
  if (const auto* td = std::get_if<TD2Position>(&s)) return solve_sh(to_sh_sum(*td)).score;
  const auto rec = recognize_sh_sum(std::get<SumArena>(s));
  if (!rec) return std::nullopt;
  return solve_sh(rec->sum).score;
}

// Standard position (1-based) of game k, and the game at standard position s.
std::size_t standard_position(const SHSolution& sol, std::size_t game) {
  const auto it = std::find(sol.left_order.begin(), sol.left_order.end(), game);
  return static_cast<std::size_t>(it - sol.left_order.begin()) + 1;
}

// Picks the planned reply when it is score-optimal, else the first
// score-minimizing candidate.
template <typename Move>
std::size_t pick(const std::vector<std::int64_t>& scores, const std::vector<Move>& moves,
                 const std::optional<Move>& planned) {
  const std::int64_t best = *std::min_element(scores.begin(), scores.end());
  if (planned) {
    for (std::size_t k = 0; k < moves.size(); ++k) {
      if (moves[k] == *planned && scores[k] == best) return k;
    }
  }
  return static_cast<std::size_t>(std::find(scores.begin(), scores.end(), best) -
                                   scores.begin());
}

RobotReply reply_arena(const SumArena& arena, const json& left_json) {
  const ComponentMove l = component_move_from_json(left_json);
  const ArenaMoves moves = arena_moves(arena);
  if (std::find(moves.left.begin(), moves.left.end(), l) == moves.left.end()) {
    throw IllegalMoveError(Side::left, "move " + std::to_string(l.move) +
                                           " in component " + std::to_string(l.component) +
                                           " does not exist");
  }
  if (moves.right.empty()) throw NoMoveError("Right has no move");

  const auto rec = recognize_sh_sum(arena);
  if (!rec) {
    const ComponentMove r = default_solver().best_right_response(arena, l);
    return {to_json(r), arena_round(arena, l, r), std::nullopt};
  }
  const SHSolution sol = solve_sh(rec->sum);
  std::optional<ComponentMove> planned;
  const auto game = std::find(rec->component_of.begin(), rec->component_of.end(), l.component);
  if (game != rec->component_of.end()) {
    const auto k = static_cast<std::size_t>(game - rec->component_of.begin());
    const std::size_t partner = alpha_response(sol.right_plan, standard_position(sol, k));
    planned = ComponentMove{rec->component_of[sol.left_order[partner - 1]], 0};
  }
  std::vector<std::int64_t> scores;
  for (const auto& r : moves.right) {
    scores.push_back(*score_of(GameState(arena_round(arena, l, r))));
  }
  const std::size_t k = pick(scores, moves.right, planned);
  return {to_json(moves.right[k]), arena_round(arena, l, moves.right[k]),
          scores[k] - sol.score};
}

RobotReply reply_td2(const TD2Position& pos, const json& left_json) {
  const TD2Move l = td2_move_from_json(left_json, Side::left);
  const auto lefts = legal_moves(pos, Side::left);
  if (std::find(lefts.begin(), lefts.end(), l) == lefts.end()) {
    throw IllegalMoveError(Side::left, to_text(l) + " is not available");
  }
  const auto rights = legal_moves(pos, Side::right);
  if (rights.empty()) throw NoMoveError("Right has no move");

  const TD2Solution sol = solve_td2(pos);
  std::optional<TD2Move> planned;
  const auto game = std::find(sol.game_rows.begin(), sol.game_rows.end(), l.row);
  if (game != sol.game_rows.end()) {
    const auto k = static_cast<std::size_t>(game - sol.game_rows.begin());
    const std::size_t partner = alpha_response(sol.sh.right_plan, standard_position(sol.sh, k));
    planned = inward_move(pos, sol.game_rows[sol.sh.left_order[partner - 1]], Side::right);
  }
  std::vector<std::int64_t> scores;
  for (const auto& r : rights) {
    scores.push_back(solve_sh(to_sh_sum(apply_round(pos, l, r))).score);
  }
  const std::size_t k = pick(scores, rights, planned);
  return {to_json(rights[k]), apply_round(pos, l, rights[k]), scores[k] - sol.sh.score};
}

bool ongoing(const GameState& s) { return status_of(s) == "ongoing"; }

}  // namespace

GameState state_from_text(const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_td2(text);
  return SumArena(parse_sum(text));
}

GameState state_from_json(const json& j) {
  if (j.is_object() && j.contains("position")) return state_from_json(j.at("position"));
  if (j.is_string()) return state_from_text(j.get<std::string>());
  if (j.is_object() && j.contains("text")) {
    if (!j.at("text").is_string()) throw ParseError(0, "\"text\" must be a string");
    return state_from_text(j.at("text").get<std::string>());
  }
  if (j.is_object() && j.contains("td2")) return td2_from_json(j);
  std::vector<Position> parts;
  for (auto p : components_from_json(j)) {
    if (!p.is_zero()) parts.push_back(p);
  }
  return SumArena(std::move(parts));
}

json to_json(const GameState& s) {
  if (const auto* td = std::get_if<TD2Position>(&s)) {
    json j = crg::to_json(*td);
    j["text"] = to_text(*td);
    return j;
  }
  const auto& arena = std::get<SumArena>(s);
  json j = crg::to_json(arena.components());
  j["text"] = to_text(arena.components());
  return j;
}

std::string status_of(const GameState& s) {
  bool left = false, right = false;
  if (const auto* td = std::get_if<TD2Position>(&s)) {
    left = !legal_moves(*td, Side::left).empty();
    right = !legal_moves(*td, Side::right).empty();
  } else {
    left = std::get<SumArena>(s).has_left_move();
    right = std::get<SumArena>(s).has_right_move();
  }
  if (left && right) return "ongoing";
  if (left) return outcome_letter(Outcome::left_win);
  if (right) return outcome_letter(Outcome::right_win);
  return outcome_letter(Outcome::draw);
}

RobotReply robot_reply(const GameState& s, const json& left_move) {
  if (const auto* td = std::get_if<TD2Position>(&s)) return reply_td2(*td, left_move);
  return reply_arena(std::get<SumArena>(s), left_move);
}

json legal_left_moves(const GameState& s) {
  json out = json::array();
  if (const auto* td = std::get_if<TD2Position>(&s)) {
    for (const auto& m : legal_moves(*td, Side::left)) out.push_back(to_json(m));
  } else {
    for (const auto& m : arena_moves(std::get<SumArena>(s)).left) out.push_back(to_json(m));
  }
  return out;
}

Service::Service(std::optional<std::string> log_path) : log_path_(std::move(log_path)) {}

void Service::log(const std::string& id, const std::string& event, const json& payload) {
  if (!log_path_) return;
  std::lock_guard lock(log_mutex_);
  std::ofstream out(*log_path_, std::ios::app);
  out << json{{"id", id}, {"event", event}, {"payload", payload}}.dump() << '\n';
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpResponse Service::create(const json& body) {
  auto session = std::make_shared<Session>();
  session->initial = state_from_json(body);
  session->state = session->initial;
  {
    std::unique_lock lock(sessions_mutex_);
    session->id = "g" + std::to_string(next_id_++);
    sessions_.emplace(session->id, session);
  }
  const json out = {{"id", session->id},
                    {"state", to_json(session->state)},
                    {"status", status_of(session->state)},
                    {"legalLeftMoves", legal_left_moves(session->state)}};
  log(session->id, "create", out);
  return reply(201, out);
}

HttpResponse Service::get(const std::string& id) {
  auto session = find(id);
  if (!session) return reply(404, error_body("unknown game " + id, "not_found"));
  std::lock_guard lock(session->mutex);
  json history = json::array();
  for (const auto& r : session->history) {
    history.push_back({{"leftMove", r.left},
                       {"rightMove", r.right},
                       {"state", r.state},
                       {"delta", r.delta ? json(*r.delta) : json(nullptr)}});
  }
  return reply(200, {{"id", id},
                     {"initial", to_json(session->initial)},
                     {"state", to_json(session->state)},
                     {"status", status_of(session->state)},
                     {"legalLeftMoves", legal_left_moves(session->state)},
                     {"history", history}});
}

HttpResponse Service::move(const std::string& id, const json& body) {
  auto session = find(id);
  if (!session) return reply(404, error_body("unknown game " + id, "not_found"));
  std::lock_guard lock(session->mutex);
  if (!ongoing(session->state)) {
    return reply(409, error_body("game is over: " + status_of(session->state), "finished"));
  }
  if (!body.is_object() || !body.contains("leftMove")) {
    return reply(400, error_body("expected {\"leftMove\": ...}", "parse_error"));
  }
  RobotReply r;
  try {
    r = robot_reply(session->state, body.at("leftMove"));
  } catch (const IllegalMoveError& e) {
    json err = error_body(e.what(), to_string(e.code()));
    err["legalLeftMoves"] = legal_left_moves(session->state);
    return reply(422, err);
  }
  session->state = r.next;
  const json state = to_json(r.next);
  session->history.push_back({body.at("leftMove"), r.move, state, r.delta});
  const json out = {{"rightResponse", r.move},
                    {"newState", state},
                    {"status", status_of(r.next)},
                    {"delta", r.delta ? json(*r.delta) : json(nullptr)},
                    {"legalLeftMoves", legal_left_moves(r.next)}};
  log(id, "move", {{"leftMove", body.at("leftMove")}, {"result", out}});
  return reply(200, out);
}

HttpResponse Service::eval(const json& body) {
  if (body.is_object() && body.contains("id")) {
    // what-if: the robot's reply to a hypothetical Left move, not committed
    if (!body.at("id").is_string()) return reply(400, error_body("\"id\" must be a string", "parse_error"));
    auto session = find(body.at("id").get<std::string>());
    if (!session) return reply(404, error_body("unknown game", "not_found"));
    std::lock_guard lock(session->mutex);
    if (!ongoing(session->state)) return reply(409, error_body("game is over", "finished"));
    if (!body.contains("leftMove")) return reply(400, error_body("missing \"leftMove\"", "parse_error"));
    RobotReply r;
    try {
      r = robot_reply(session->state, body.at("leftMove"));
    } catch (const IllegalMoveError& e) {
      json err = error_body(e.what(), to_string(e.code()));
      err["legalLeftMoves"] = legal_left_moves(session->state);
      return reply(422, err);
    }
    const auto score = score_of(r.next);
    json out = {{"rightResponse", r.move},
                {"newState", to_json(r.next)},
                {"status", status_of(r.next)},
                {"delta", r.delta ? json(*r.delta) : json(nullptr)}};
    if (std::holds_alternative<TD2Position>(r.next)) {
      out["outcome"] = outcome_letter(outcome_of_score(*score));
    } else {
      out["outcome"] = outcome_letter(outcome(std::get<SumArena>(r.next)));
    }
    if (score) out["score"] = *score;
    return reply(200, out);
  }

  const GameState s = state_from_json(body);
  json out;
  if (const auto* td = std::get_if<TD2Position>(&s)) {
    const TD2Solution sol = solve_td2(*td);
    out["outcome"] = outcome_letter(sol.sh.outcome);
    out["score"] = sol.sh.score;
    out["principal"] = nullptr;
    if (ongoing(s) && !sol.strategy.empty()) {
      const TD2Move l = sol.strategy.front().left;
      const RobotReply r = robot_reply(s, crg::to_json(l));
      out["principal"] = {{"left", crg::to_json(l)}, {"right", r.move}};
    }
  } else {
    const SolveResult res = solve(std::get<SumArena>(s));
    out["outcome"] = outcome_letter(res.outcome);
    if (res.score) out["score"] = *res.score;
    out["principal"] = nullptr;
    if (res.principal) {
      const RobotReply r = robot_reply(s, to_json(res.principal->left));
      out["principal"] = {{"left", to_json(res.principal->left)}, {"right", r.move}};
    }
  }
  return reply(200, out);
}

HttpResponse Service::plan(const std::string& id) {
  auto session = find(id);
  if (!session) return reply(404, error_body("unknown game " + id, "not_found"));
  std::lock_guard lock(session->mutex);
  json out;
  if (const auto* td = std::get_if<TD2Position>(&session->state)) {
    const TD2Solution sol = solve_td2(*td);
    json order = json::array();
    for (auto k : sol.sh.left_order) order.push_back(sol.game_rows[k]);
    out = {{"auxGraph", to_json(sol.sh.graph, sol.sh.right_plan)},
           {"matching", to_json(sol.sh.graph, sol.sh.right_plan)["matching"]},
           {"leftOrder", order},
           {"score", sol.sh.score},
           {"strategy", crg::to_json(sol)["strategy"]}};
  } else {
    const auto rec = recognize_sh_sum(std::get<SumArena>(session->state));
    if (!rec) {
      return reply(409, error_body("state is not a sum of integers and simple hot games",
                                   "wrong_shape"));
    }
    const SHSolution sol = solve_sh(rec->sum);
    json order = json::array();
    for (auto k : sol.left_order) order.push_back(rec->component_of[k]);
    out = {{"auxGraph", to_json(sol.graph, sol.right_plan)},
           {"matching", to_json(sol.graph, sol.right_plan)["matching"]},
           {"leftOrder", order},
           {"score", sol.score}};
  }
  return reply(200, out);
}

HttpResponse Service::remove(const std::string& id) {
  std::unique_lock lock(sessions_mutex_);
  if (sessions_.erase(id) == 0) return reply(404, error_body("unknown game " + id, "not_found"));
  lock.unlock();
  log(id, "delete", nullptr);
  return {204, ""};
}

HttpResponse Service::handle(const std::string& method, const std::string& path,
                             const std::string& body) {
  std::vector<std::string> seg;
  for (std::size_t start = 0; start < path.size();) {
    const std::size_t slash = path.find('/', start);
    const std::size_t end = slash == std::string::npos ? path.size() : slash;
    if (end > start) seg.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  try {
    json parsed = nullptr;
    if (method == "POST") {
      parsed = json::parse(body.empty() ? "{}" : body, nullptr, false);
      if (parsed.is_discarded()) return reply(400, error_body("malformed JSON body", "parse_error"));
    }
    if (seg.size() == 1 && seg[0] == "games" && method == "POST") return create(parsed);
    if (seg.size() == 1 && seg[0] == "eval" && method == "POST") return eval(parsed);
    if (seg.size() == 2 && seg[0] == "games") {
      if (method == "GET") return get(seg[1]);
      if (method == "DELETE") return remove(seg[1]);
    }
    if (seg.size() == 3 && seg[0] == "games") {
      if (seg[2] == "move" && method == "POST") return move(seg[1], parsed);
      if (seg[2] == "plan" && method == "GET") return plan(seg[1]);
    }
    return reply(404, error_body("no route " + method + " " + path, "not_found"));
  } catch (const ParseError& e) {
    return reply(400, error_body(e.what(), to_string(e.code())));
  } catch (const PreconditionError& e) {
    return reply(400, error_body(e.what(), to_string(e.code())));
  } catch (const ResourceLimitError& e) {
    return reply(422, error_body(e.what(), to_string(e.code())));
  } catch (const IllegalMoveError& e) {
    return reply(422, error_body(e.what(), to_string(e.code())));
  } catch (const NoMoveError& e) {
    return reply(409, error_body(e.what(), to_string(e.code())));
  } catch (const nlohmann::json::exception& e) {
    return reply(400, error_body(e.what(), "parse_error"));
  }
}

void Service::listen(const std::string& host, int port) {
  httplib::Server server;
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    if (!r.body.empty()) res.set_content(r.body, "application/json");
  };
  server.Get(".*", route);
  server.Post(".*", route);
  server.Delete(".*", route);
  if (!server.listen(host, port)) {
    throw PreconditionError("cannot listen on " + host + ":" + std::to_string(port));
  }
}

}  // namespace crg

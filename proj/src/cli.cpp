#include "crg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crg/notation.hpp"
#include "crg/order.hpp"
#include "crg/reducer.hpp"
#include "crg/service.hpp"
#include "crg/simple_hot.hpp"
#include "crg/solver.hpp"
#include "crg/td2.hpp"

namespace crg {

namespace {

using nlohmann::json;

// An argument naming an existing file is replaced by the file's contents.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

GameState read_state(const std::string& arg) {
  const std::string text = load(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[') &&
      text.find('"') != std::string::npos) {
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(0, "malformed JSON");
    return state_from_json(j);
  }
  return state_from_text(text);
}

std::vector<Position> read_sum(const std::string& arg) {
  const GameState s = read_state(arg);
  if (!std::holds_alternative<SumArena>(s)) {
    throw PreconditionError("expected a sum of positions, not TD2 rows");
  }
  return std::get<SumArena>(s).components();
}

std::string witness_text(const std::optional<std::vector<Position>>& w) {
  return w ? to_text(*w) : "none";
}

int cmd_outcome(const std::string& arg, std::ostream& out) {
  const GameState s = read_state(arg);
  if (const auto* td = std::get_if<TD2Position>(&s)) {
    out << outcome_letter(solve_td2(*td).sh.outcome) << '\n';
  } else {
    out << outcome_letter(outcome(std::get<SumArena>(s))) << '\n';
  }
  return 0;
}

int cmd_simplify(const std::string& arg, std::ostream& out) {
  out << to_text(simplify_sum(read_sum(arg))) << '\n';
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& family,
                std::ostream& out) {
  const ContextFamily& f = ContextFamily::named(family);
  const OrderVerdict v = compare(read_sum(a), read_sum(b), f);
  out << "verdict: " << to_string(v.kind) << '\n'
      << "strict: " << (v.strict ? "yes" : "no") << '\n'
      << "scope: " << to_string(v.scope) << '\n'
      << "evidence: " << v.evidence << '\n';
  if (v.kind == Verdict::unknown || v.kind == Verdict::proven_incomparable) {
    out << "family: " << f.name() << " (" << f.size() << " contexts)\n"
        << "witness against A >= B: " << witness_text(v.witness_not_ge) << '\n'
        << "witness against B >= A: " << witness_text(v.witness_not_le) << '\n';
  }
  return 0;
}

int cmd_sh_solve(const std::string& arg, const std::string& dot, bool oracle,
                 std::ostream& out) {
  const auto rec = recognize_sh_sum(SumArena(read_sum(arg)));
  if (!rec) throw PreconditionError("not a sum of integers and simple hot games");
  const SHSolution sol = solve_sh(rec->sum);
  json j = to_json(sol);
  if (oracle) {
    const std::int64_t v = sh_value_oracle(rec->sum);
    j["oracle"] = v;
    j["oracleAgrees"] = v == sol.score;
  }
  if (!dot.empty()) {
    std::vector<std::string> labels;
    for (const auto& g : sol.normalized) labels.push_back(g.to_string());
    std::ofstream(dot) << to_dot(sol.graph, sol.right_plan, labels);
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_td2_solve(const std::string& arg, bool oracle, std::ostream& out) {
  const GameState s = read_state(arg);
  const auto* pos = std::get_if<TD2Position>(&s);
  if (!pos) throw PreconditionError("expected TD2 rows such as (2,2)+(3,1)");
  const TD2Solution sol = solve_td2(*pos);
  json j = to_json(sol);
  if (oracle) {
    const Outcome o = td2_outcome_oracle(*pos);
    j["oracle"] = outcome_letter(o);
    j["oracleAgrees"] = o == sol.sh.outcome;
  }
  out << j.dump(2) << '\n';
  return 0;
}

json parse_play_move(const GameState& s, const std::string& line) {
  std::istringstream in(line);
  if (std::holds_alternative<TD2Position>(s)) {
    std::size_t row;
    std::int64_t domino;
    std::string dir;
    if (!(in >> row >> domino >> dir)) throw ParseError(0, "expected: ROW DOMINO left|right");
    return {{"row", row}, {"domino", domino}, {"direction", dir}};
  }
  std::size_t component, move;
  if (!(in >> component >> move)) throw ParseError(0, "expected: COMPONENT MOVE");
  return {{"component", component}, {"move", move}};
}

int cmd_play(const std::string& arg, std::istream& in, std::ostream& out, std::ostream& err) {
  GameState s = read_state(arg);
  out << "state: " << to_json(s)["text"].get<std::string>() << '\n';
  while (status_of(s) == "ongoing") {
    out << "legal moves: " << legal_left_moves(s).dump() << '\n' << "Left move> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) return 0;
    if (line == "quit" || line == "q") return 0;
    try {
      const RobotReply r = robot_reply(s, parse_play_move(s, line));
      out << "robot: " << r.move.dump() << '\n';
      s = r.next;
      out << "state: " << to_json(s)["text"].get<std::string>() << '\n';
    } catch (const Error& e) {
      err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    }
  }
  out << "result: " << status_of(s) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cheating Robot game solver"};
  app.require_subcommand(1);

  std::string a, b, family = "day2-mixed", dot, log_file, host = "127.0.0.1";
  bool oracle = false;
  int port = 8080;

  auto* c_outcome = app.add_subcommand("outcome", "Outcome class L, D or R");
  c_outcome->add_option("position", a, "expression, rows or file")->required();

  auto* c_simplify = app.add_subcommand("simplify", "Reduce a position");
  c_simplify->add_option("position", a)->required();

  auto* c_compare = app.add_subcommand("compare", "Compare two positions");
  c_compare->add_option("a", a)->required();
  c_compare->add_option("b", b)->required();
  c_compare->add_option("--family", family, "day2-mixed or sh-only");

  auto* c_sh = app.add_subcommand("sh", "Simple hot sums");
  auto* c_sh_solve = c_sh->add_subcommand("solve", "Optimal strategies and score");
  c_sh->require_subcommand(1);
  c_sh_solve->add_option("sum", a)->required();
  c_sh_solve->add_option("--dot", dot, "write the auxiliary graph as DOT");
  c_sh_solve->add_flag("--oracle", oracle, "cross-check with brute force");

  auto* c_td2 = app.add_subcommand("td2", "Toppling Dominoes rows");
  auto* c_td2_solve = c_td2->add_subcommand("solve", "Optimal strategies and score");
  c_td2->require_subcommand(1);
  c_td2_solve->add_option("rows", a)->required();
  c_td2_solve->add_flag("--oracle", oracle, "cross-check with brute force");

  auto* c_play = app.add_subcommand("play", "Play Left against the robot");
  c_play->add_option("position", a)->required();

  auto* c_serve = app.add_subcommand("serve", "HTTP service");
  c_serve->add_option("--port", port);
  c_serve->add_option("--host", host);
  c_serve->add_option("--log", log_file, "append-only JSON-lines event log");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return 2;
  }

  try {
    if (c_outcome->parsed()) return cmd_outcome(a, out);
    if (c_simplify->parsed()) return cmd_simplify(a, out);
    if (c_compare->parsed()) return cmd_compare(a, b, family, out);
    if (c_sh_solve->parsed()) return cmd_sh_solve(a, dot, oracle, out);
    if (c_td2_solve->parsed()) return cmd_td2_solve(a, oracle, out);
    if (c_play->parsed()) return cmd_play(a, in, out, err);
    if (c_serve->parsed()) {
      Service service(log_file.empty() ? std::nullopt : std::optional(log_file));
      out << "listening on " << host << ":" << port << std::endl;
      service.listen(host, port);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace crg

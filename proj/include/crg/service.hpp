#pragma once

// Human-vs-robot play sessions over JSON. The human is Left; the robot
// answers every move as Right.

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "crg/arena.hpp"
#include "crg/td2.hpp"
#include "json.hpp"

namespace crg {

/// A game state: a sum of positions or a TD2 row multiset.
using GameState = std::variant<SumArena, TD2Position>;

/// Accepts {"text": "..."} (sum grammar, or rows when it contains ','),
/// {"td2": [...]}, {"sum": [...]}, a single JSON position, or any of these
/// under "position". Throws ParseError.
GameState state_from_json(const nlohmann::json& j);
GameState state_from_text(const std::string& text);
nlohmann::json to_json(const GameState& s);

/// "ongoing" while both players can move, else the final outcome.
std::string status_of(const GameState& s);

/// Right's reply chosen by the robot. For integer/simple hot sums and TD2
/// states the matching plan's reply is used when it reaches the best
/// attainable score, otherwise the score-minimizing reply; general sums use
/// the solver's best response.
struct RobotReply {
  nlohmann::json move;
  GameState next;
  std::optional<std::int64_t> delta;  // change of the optimal score
};
RobotReply robot_reply(const GameState& s, const nlohmann::json& left_move);

nlohmann::json legal_left_moves(const GameState& s);

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON text, empty for 204
};

class Service {
 public:
  /// `log_path`: append-only JSON-lines event log.
  explicit Service(std::optional<std::string> log_path = std::nullopt);

  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::string& body);

  /// Blocks serving HTTP on host:port.
  void listen(const std::string& host, int port);

 private:
  struct Round {
    nlohmann::json left, right, state;
    std::optional<std::int64_t> delta;
  };
  struct Session {
    std::mutex mutex;
    std::string id;
    GameState initial;
    GameState state;
    std::vector<Round> history;
  };

  HttpResponse create(const nlohmann::json& body);
  HttpResponse get(const std::string& id);
  HttpResponse move(const std::string& id, const nlohmann::json& body);
  HttpResponse eval(const nlohmann::json& body);
  HttpResponse plan(const std::string& id);
  HttpResponse remove(const std::string& id);

  std::shared_ptr<Session> find(const std::string& id);
  void log(const std::string& id, const std::string& event, const nlohmann::json& payload);

  std::shared_mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
  std::optional<std::string> log_path_;
  std::mutex log_mutex_;
};

}  // namespace crg

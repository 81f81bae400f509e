#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burn/liminal.hpp"
#include "burn/report.hpp"

namespace httplib {
class Server;
}

namespace burn::service {

inline constexpr int kServiceVertexLimit = 64;

enum class Role { Arsonist, Saboteur, Spectator };
enum class EngineMode { Exact, Heuristic };
enum class Actor { Human, Engine };

std::string to_string(Role r);
std::string to_string(EngineMode m);
Role parse_role(const std::string& text);

/// Failure with the HTTP status it maps to.
class ServiceError : public std::runtime_error {
public:
    ServiceError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

struct LoggedMove {
    Move move;
    Actor actor = Actor::Human;
};

struct Hint {
    Move move;
    std::optional<int> value;  // only when certified
    bool certified = false;
};

/// Greedy engine used beyond the exact limit. The arsonist burns the revealed
/// vertex that newly burns the most vertices next round; the saboteur reveals
/// the vertices that would do so the least.
Move heuristic_move(const LiminalRules& rules, const GameState& s);

/// Re-derives a position from its move log.
GameState replay_history(const LiminalRules& rules, const std::vector<LoggedMove>& history);

class Session {
public:
    /// Validates the instance; a fresh session writes the log header.
    Session(std::string id, std::string spec, int k, Role role, std::optional<std::filesystem::path> log_path,
            bool fresh = true);

    const std::string& id() const { return id_; }
    const std::string& spec() const { return spec_; }
    int k() const { return k_; }
    Role role() const { return role_; }
    EngineMode engine_mode() const { return mode_; }
    const Graph& graph() const { return graph_; }
    const LiminalRules& rules() const { return rules_; }

    /// Snapshot taken under the session lock.
    Json snapshot() const;
    GameState state() const;
    std::vector<LoggedMove> history() const;

    /// Applies a human move and then engine replies until the human is to
    /// act or the game is over. Illegal moves leave the session unchanged.
    Json submit(const Move& m);
    Hint hint();

    /// Engine opening moves (engine saboteur, or both sides when spectating).
    void start();
    /// Rebuilds the position from a log without touching the file.
    void restore(const std::vector<LoggedMove>& history);

private:
    bool engine_to_act() const;
    Move engine_move();
    void record(const Move& m, Actor actor);
    void run_engine();
    Json snapshot_locked() const;

    std::string id_;
    std::string spec_;
    int k_;
    Role role_;
    Graph graph_;
    LiminalRules rules_;
    EngineMode mode_;
    std::unique_ptr<LiminalSolver> solver_;
    std::optional<std::filesystem::path> log_path_;

    mutable std::mutex mutex_;
    GameState state_;
    std::vector<LoggedMove> history_;
};

/// Owns sessions; with a directory, every session is an append-only JSON
/// lines log `<dir>/<id>.jsonl` that is replayed on load.
class SessionStore {
public:
    explicit SessionStore(std::optional<std::filesystem::path> dir = std::nullopt);

    std::shared_ptr<Session> create(const std::string& spec, int k, Role role);
    std::shared_ptr<Session> get(const std::string& id);

private:
    std::shared_ptr<Session> load(const std::string& id);
    std::string fresh_id();

    std::optional<std::filesystem::path> dir_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t counter_ = 0;
};

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

/// Registers the HTTP+JSON routes on a server.
void register_routes(httplib::Server& server, SessionStore& store);

}  // namespace burn::service

#include "burn/service.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>

namespace burn::service {

namespace {

const char* actor_name(Actor a) { return a == Actor::Human ? "human" : "engine"; }

Graph build_graph(const std::string& spec) {
    try {
        return parse_graph_spec(spec, kServiceVertexLimit);
    } catch (const SizeError& e) {
        throw ServiceError(400, std::string("graph too large for the service (limit 64 vertices): ") + e.what());
    } catch (const GraphError& e) {
        throw ServiceError(400, std::string("bad graph spec: ") + e.what());
    }
}

int checked_k(int k, const Graph& g) {
    if (k < 1 || k > g.order())
        throw ServiceError(400, "k must be in [1, " + std::to_string(g.order()) + "]");
    return k;
}

}  // namespace

std::string to_string(Role r) {
    switch (r) {
        case Role::Arsonist: return "arsonist";
        case Role::Saboteur: return "saboteur";
        case Role::Spectator: return "spectator";
    }
    return "?";
}

std::string to_string(EngineMode m) { return m == EngineMode::Exact ? "exact" : "heuristic"; }

Role parse_role(const std::string& text) {
    if (text == "arsonist") return Role::Arsonist;
    if (text == "saboteur") return Role::Saboteur;
    if (text == "spectator") return Role::Spectator;
    throw ServiceError(400, "role must be arsonist, saboteur or spectator");
}

Json move_to_json(const Move& m) { return to_json(m); }

Move move_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ServiceError(400, "move needs a string 'type'");
    const auto type = j["type"].get<std::string>();
    Move m;
    if (type == "reveal") m.kind = MoveKind::Reveal;
    else if (type == "burn") m.kind = MoveKind::Burn;
    else if (type == "pass") m.kind = MoveKind::Pass;
    else throw ServiceError(400, "unknown move type '" + type + "'");
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array()) throw ServiceError(400, "'vertices' must be an array");
        for (const auto& v : j["vertices"]) {
            if (!v.is_number_integer()) throw ServiceError(400, "vertices must be integers");
            m.vertices.push_back(v.get<int>());
        }
    }
    if (j.contains("vertex")) {
        if (!j["vertex"].is_number_integer()) throw ServiceError(400, "'vertex' must be an integer");
        m.vertices.push_back(j["vertex"].get<int>());
    }
    return m;
}

Move heuristic_move(const LiminalRules& rules, const GameState& s) {
    const Mask reach = rules.spread(s.burned);
    auto gain = [&](Vertex v) {
        if ((s.burned >> v) & 1u) return -1;
        return std::popcount(rules.closed_neighborhood(v) & ~reach);
    };
    if (s.phase == Phase::ArsonistBurn) {
        const Mask options = rules.burnable(s);
        if (!options) return Move{MoveKind::Pass, {}};
        Vertex best = -1;
        int best_gain = -2;
        for (Vertex v : from_mask(options))
            if (gain(v) > best_gain) {
                best_gain = gain(v);
                best = v;
            }
        return Move{MoveKind::Burn, {best}};
    }
    auto pool = from_mask(rules.reveal_pool(s));
    std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) { return gain(a) < gain(b); });
    pool.resize(static_cast<std::size_t>(rules.required_reveal_size(s)));
    std::sort(pool.begin(), pool.end());
    return Move{MoveKind::Reveal, pool};
}

GameState replay_history(const LiminalRules& rules, const std::vector<LoggedMove>& history) {
    GameState s = rules.initial();
    for (const auto& m : history) s = rules.apply(s, m.move);
    return s;
}

Session::Session(std::string id, std::string spec, int k, Role role, std::optional<std::filesystem::path> log_path,
                 bool fresh)
    : id_(std::move(id)),
      spec_(std::move(spec)),
      k_(k),
      role_(role),
      graph_(build_graph(spec_)),
      rules_(graph_, checked_k(k, graph_)),
      mode_(graph_.order() <= kLiminalVertexLimit ? EngineMode::Exact : EngineMode::Heuristic),
      log_path_(std::move(log_path)),
      state_(rules_.initial()) {
    if (mode_ == EngineMode::Exact) {
        LiminalOptions opt;
        opt.k = k_;
        solver_ = std::make_unique<LiminalSolver>(graph_, opt);
    }
    if (fresh && log_path_) {
        std::ofstream out(*log_path_, std::ios::trunc);
        if (!out) throw ServiceError(500, "cannot create session log");
        out << Json{{"event", "create"}, {"id", id_}, {"spec", spec_}, {"k", k_}, {"role", to_string(role_)}}.dump()
            << '\n';
    }
}

bool Session::engine_to_act() const {
    if (state_.terminal) return false;
    switch (role_) {
        case Role::Spectator: return true;
        case Role::Arsonist: return state_.phase == Phase::SaboteurReveal;
        case Role::Saboteur: return state_.phase == Phase::ArsonistBurn;
    }
    return false;
}

Move Session::engine_move() {
    if (solver_) {
        try {
            return solver_->best_move(state_);
        } catch (const BudgetExceeded&) {
            mode_ = EngineMode::Heuristic;
            solver_.reset();
        }
    }
    return heuristic_move(rules_, state_);
}

void Session::record(const Move& m, Actor actor) {
    state_ = rules_.apply(state_, m);
    history_.push_back({m, actor});
    if (log_path_) {
        std::ofstream out(*log_path_, std::ios::app);
        Json line = move_to_json(m);
        line["event"] = "move";
        line["actor"] = actor_name(actor);
        out << line.dump() << '\n';
    }
}

void Session::run_engine() {
    while (engine_to_act()) record(engine_move(), Actor::Engine);
}

void Session::start() {
    std::lock_guard lock(mutex_);
    run_engine();
}

void Session::restore(const std::vector<LoggedMove>& history) {
    std::lock_guard lock(mutex_);
    state_ = replay_history(rules_, history);
    history_ = history;
}

Json Session::submit(const Move& m) {
    std::lock_guard lock(mutex_);
    if (state_.terminal) throw ServiceError(409, "game over");
    if (engine_to_act()) throw ServiceError(409, "not your turn");
    if (auto why = rules_.check(state_, m)) throw ServiceError(400, "illegal move: " + *why);
    record(m, Actor::Human);
    run_engine();
    return snapshot_locked();
}

Hint Session::hint() {
    std::lock_guard lock(mutex_);
    if (state_.terminal) throw ServiceError(409, "game over");
    if (solver_) {
        try {
            Hint h;
            h.move = solver_->best_move(state_);
            h.value = solver_->value(state_);
            h.certified = true;
            return h;
        } catch (const BudgetExceeded&) {
            mode_ = EngineMode::Heuristic;
            solver_.reset();
        }
    }
    return Hint{heuristic_move(rules_, state_), std::nullopt, false};
}

GameState Session::state() const {
    std::lock_guard lock(mutex_);
    return state_;
}

std::vector<LoggedMove> Session::history() const {
    std::lock_guard lock(mutex_);
    return history_;
}

Json Session::snapshot() const {
    std::lock_guard lock(mutex_);
    return snapshot_locked();
}

Json Session::snapshot_locked() const {
    Json j;
    j["id"] = id_;
    j["spec"] = spec_;
    j["k"] = k_;
    j["role"] = to_string(role_);
    j["engine"] = to_string(mode_);
    j["vertices"] = graph_.order();
    j["round"] = state_.round;
    j["phase"] = to_string(state_.phase);
    j["burned"] = from_mask(state_.burned);
    j["revealed"] = from_mask(state_.revealed);
    j["terminal"] = state_.terminal;
    if (state_.terminal) {
        j["rounds_total"] = state_.rounds_total;
    } else {
        j["to_act"] = state_.phase == Phase::SaboteurReveal ? "saboteur" : "arsonist";
        if (state_.phase == Phase::SaboteurReveal) j["required_reveal"] = rules_.required_reveal_size(state_);
    }
    Json history = Json::array();
    for (const auto& m : history_) {
        Json h = move_to_json(m.move);
        h["actor"] = actor_name(m.actor);
        history.push_back(std::move(h));
    }
    j["history"] = std::move(history);
    if (graph_.grid()) {
        Json coords = Json::array();
        for (Vertex v = 0; v < graph_.order(); ++v) coords.push_back(graph_.coord_of(v));
        j["coords"] = std::move(coords);
    }
    return j;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
    if (dir_) std::filesystem::create_directories(*dir_);
}

std::string SessionStore::fresh_id() {
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::ostringstream out;
    out << std::hex << rng() << std::hex << ++counter_;
    return out.str();
}

std::shared_ptr<Session> SessionStore::create(const std::string& spec, int k, Role role) {
    std::string id;
    std::optional<std::filesystem::path> log;
    {
        std::lock_guard lock(mutex_);
        id = fresh_id();
        if (dir_) log = *dir_ / (id + ".jsonl");
    }
    auto session = std::make_shared<Session>(id, spec, k, role, log);
    session->start();
    std::lock_guard lock(mutex_);
    sessions_.emplace(id, session);
    return session;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = sessions_.find(id); it != sessions_.end()) return it->second;
    }
    auto session = load(id);
    std::lock_guard lock(mutex_);
    return sessions_.emplace(id, session).first->second;
}

std::shared_ptr<Session> SessionStore::load(const std::string& id) {
    const bool plausible = !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c));
    });
    if (!dir_ || !plausible) throw ServiceError(404, "no such session");
    const auto path = *dir_ / (id + ".jsonl");
    std::ifstream in(path);
    if (!in) throw ServiceError(404, "no such session");

    std::string line;
    std::shared_ptr<Session> session;
    std::vector<LoggedMove> history;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const Json j = Json::parse(line);
        if (j.at("event") == "create") {
            session = std::make_shared<Session>(id, j.at("spec").get<std::string>(), j.at("k").get<int>(),
                                                parse_role(j.at("role").get<std::string>()), path, false);
        } else if (j.at("event") == "move") {
            history.push_back({move_from_json(j), j.at("actor") == "engine" ? Actor::Engine : Actor::Human});
        }
    }
    if (!session) throw ServiceError(500, "session log has no header");
    session->restore(history);
    return session;
}

void register_routes(httplib::Server& server, SessionStore& store) {
    auto reply = [](httplib::Response& res, int status, const Json& body) {
        res.status = status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(body.dump(), "application/json");
    };
    auto guarded = [reply](auto&& handler) {
        return [reply, handler](const httplib::Request& req, httplib::Response& res) {
            try {
                handler(req, res);
            } catch (const ServiceError& e) {
                reply(res, e.status(), Json{{"error", e.what()}});
            } catch (const Json::exception& e) {
                reply(res, 400, Json{{"error", std::string("bad JSON: ") + e.what()}});
            } catch (const std::exception& e) {
                reply(res, 500, Json{{"error", e.what()}});
            }
        };
    };

    server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    server.Post("/sessions", guarded([&store, reply](const httplib::Request& req, httplib::Response& res) {
        const Json body = Json::parse(req.body);
        if (!body.contains("spec") || !body["spec"].is_string()) throw ServiceError(400, "missing 'spec'");
        if (!body.contains("k") || !body["k"].is_number_integer()) throw ServiceError(400, "missing integer 'k'");
        if (!body.contains("role") || !body["role"].is_string()) throw ServiceError(400, "missing 'role'");
        auto session = store.create(body["spec"].get<std::string>(), body["k"].get<int>(),
                                    parse_role(body["role"].get<std::string>()));
        reply(res, 201, Json{{"id", session->id()}, {"state", session->snapshot()}});
    }));

    server.Get(R"(/sessions/([A-Za-z0-9]+))",
               guarded([&store, reply](const httplib::Request& req, httplib::Response& res) {
                   reply(res, 200, store.get(req.matches[1])->snapshot());
               }));

    server.Post(R"(/sessions/([A-Za-z0-9]+)/move)",
                guarded([&store, reply](const httplib::Request& req, httplib::Response& res) {
                    auto session = store.get(req.matches[1]);
                    reply(res, 200, session->submit(move_from_json(Json::parse(req.body))));
                }));

    server.Get(R"(/sessions/([A-Za-z0-9]+)/hint)",
               guarded([&store, reply](const httplib::Request& req, httplib::Response& res) {
                   const Hint h = store.get(req.matches[1])->hint();
                   Json body{{"move", move_to_json(h.move)}, {"certified", h.certified}};
                   if (h.value) body["value"] = *h.value;
                   reply(res, 200, body);
               }));
}

}  // namespace burn::service

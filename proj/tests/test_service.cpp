#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "burn/service.hpp"
#include "burn/solvers.hpp"

using namespace burn;
using namespace burn::service;

namespace {

Move reveal(std::vector<Vertex> v) { return Move{MoveKind::Reveal, std::move(v)}; }
Move burn_at(Vertex v) { return Move{MoveKind::Burn, {v}}; }

int lim(const std::string& spec, int k) {
    LiminalOptions opt;
    opt.k = k;
    return liminal_value(parse_graph_spec(spec), opt).value;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("burn_service_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

Move lowest_reveal(const Session& s) {
    const auto st = s.state();
    auto pool = from_mask(s.rules().reveal_pool(st));
    pool.resize(static_cast<std::size_t>(s.rules().required_reveal_size(st)));
    return reveal(pool);
}

int status_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ServiceError& e) {
        return e.status();
    }
    return 0;
}

}  // namespace

TEST_CASE("session creation") {
    SessionStore store;
    auto s = store.create("path:n=6", 2, Role::Saboteur);
    auto j = s->snapshot();
    CHECK(j["round"] == 1);
    CHECK(j["phase"] == "SaboteurReveal");
    CHECK(j["required_reveal"] == 2);
    CHECK(j["terminal"] == false);
    CHECK(j["engine"] == "exact");

    // Engine saboteur moves at once.
    auto a = store.create("path:n=3", 3, Role::Arsonist);
    j = a->snapshot();
    CHECK(j["phase"] == "ArsonistBurn");
    CHECK(j["revealed"] == Json::array({0, 1, 2}));

    auto one = store.create("path:n=1", 1, Role::Spectator);
    CHECK(one->snapshot()["terminal"] == true);
    CHECK(one->snapshot()["rounds_total"] == 1);

    CHECK(status_of([&] { store.create("path:n=65", 1, Role::Saboteur); }) == 400);
    CHECK(status_of([&] { store.create("path:n=4", 0, Role::Saboteur); }) == 400);
    CHECK(status_of([&] { store.create("path:n=4", 5, Role::Saboteur); }) == 400);
    CHECK(status_of([&] { store.create("nonsense", 1, Role::Saboteur); }) == 400);
    CHECK(status_of([&] { store.get("missing"); }) == 404);
    CHECK(store.create("path:n=20", 2, Role::Saboteur)->engine_mode() == EngineMode::Heuristic);
}

TEST_CASE("human saboteur on P_6") {
    SessionStore store;
    auto s = store.create("path:n=6", 2, Role::Saboteur);
    const auto j = s->submit(reveal({0, 5}));
    CHECK(j["round"] == 2);
    CHECK(j["phase"] == "SaboteurReveal");
    REQUIRE(j["history"].size() == 2);
    CHECK(j["history"][1]["actor"] == "engine");
    CHECK(j["history"][1]["type"] == "burn");
    CHECK(s->history().size() == 2);
}

TEST_CASE("illegal moves leave the session unchanged") {
    SessionStore store;
    auto s = store.create("path:n=6", 2, Role::Saboteur);
    const auto before = s->snapshot();
    CHECK(status_of([&] { s->submit(reveal({0})); }) == 400);
    CHECK(status_of([&] { s->submit(burn_at(0)); }) == 400);
    CHECK(status_of([&] { s->submit(reveal({0, 9})); }) == 400);
    CHECK(s->snapshot() == before);

    auto a = store.create("path:n=6", 2, Role::Arsonist);
    const auto revealed = a->snapshot()["revealed"];
    Vertex hidden = 0;
    while (std::find(revealed.begin(), revealed.end(), hidden) != revealed.end()) ++hidden;
    CHECK(status_of([&] { a->submit(burn_at(hidden)); }) == 400);
    CHECK(status_of([&] { a->submit(reveal({hidden})); }) == 400);
}

TEST_CASE("hints") {
    SessionStore store;
    auto s = store.create("path:n=3", 1, Role::Saboteur);
    auto h = s->hint();
    CHECK(h.certified);
    CHECK(h.value == 2);
    CHECK(h.move.kind == MoveKind::Reveal);

    auto t = store.create("path:n=3", 3, Role::Saboteur);
    CHECK(t->hint().value == 2);

    auto big = store.create("path:n=20", 2, Role::Saboteur);
    const auto hb = big->hint();
    CHECK_FALSE(hb.certified);
    CHECK_FALSE(hb.value);

    auto done = store.create("path:n=1", 1, Role::Spectator);
    CHECK(status_of([&] { done->hint(); }) == 409);
}

TEST_CASE("spectator games realise the minimax value") {
    SessionStore store;
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto spec = "path:n=" + std::to_string(n);
            auto s = store.create(spec, std::min(k, n), Role::Spectator);
            const auto j = s->snapshot();
            REQUIRE(j["terminal"] == true);
            CHECK(j["rounds_total"] == lim(spec, std::min(k, n)));
        }
    auto king = store.create("strongpath:n=3,d=2", 2, Role::Spectator);
    CHECK(king->snapshot()["rounds_total"] == lim("strongpath:n=3,d=2", 2));
    CHECK(king->snapshot()["coords"].size() == 9);
}

TEST_CASE("the engine side guarantees its bound") {
    const int b = burning_number(path(7)).value;
    const int cl = cooling_number(path(7)).value;
    SessionStore store;
    // Human saboteur always reveals the lowest vertices; human arsonist burns the lowest option.
    auto sab = store.create("path:n=7", 2, Role::Saboteur);
    while (!sab->state().terminal) sab->submit(lowest_reveal(*sab));
    CHECK(sab->state().rounds_total >= b);

    auto ars = store.create("path:n=7", 2, Role::Arsonist);
    while (!ars->state().terminal) {
        const auto options = from_mask(ars->rules().burnable(ars->state()));
        ars->submit(options.empty() ? Move{MoveKind::Pass, {}} : burn_at(options.back()));
    }
    CHECK(ars->state().rounds_total <= cl);
    CHECK(status_of([&] { ars->submit(burn_at(0)); }) == 409);
}

TEST_CASE("heuristic engine finishes large games legally") {
    SessionStore store;
    auto s = store.create("strongpath:n=5,d=2", 3, Role::Spectator);
    const auto j = s->snapshot();
    CHECK(j["engine"] == "heuristic");
    CHECK(j["terminal"] == true);
    CHECK(replay_history(s->rules(), s->history()) == s->state());
}

TEST_CASE("logs replay to the same state") {
    const auto dir = scratch_dir("replay");
    std::string id;
    Json before;
    {
        SessionStore store(dir);
        auto s = store.create("path:n=6", 2, Role::Saboteur);
        id = s->id();
        s->submit(reveal({0, 5}));
        s->submit(lowest_reveal(*s));
        before = s->snapshot();
        CHECK(replay_history(s->rules(), s->history()) == s->state());
    }
    REQUIRE(std::filesystem::exists(dir / (id + ".jsonl")));
    SessionStore fresh(dir);
    auto loaded = fresh.get(id);
    CHECK(loaded->snapshot() == before);
    // A further move appends to the same log.
    if (!loaded->state().terminal) {
        loaded->submit(lowest_reveal(*loaded));
        SessionStore again(dir);
        CHECK(again.get(id)->snapshot() == loaded->snapshot());
    }
    CHECK(status_of([&] { fresh.get("../etc"); }) == 404);
    std::filesystem::remove_all(dir);
}

TEST_CASE("concurrent submissions to one session are serialized") {
    SessionStore store;
    auto s = store.create("path:n=10", 1, Role::Saboteur);
    std::vector<std::thread> threads;
    std::atomic<int> accepted{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&] {
            for (int i = 0; i < 20; ++i) {
                try {
                    const auto st = s->state();
                    if (st.terminal) return;
                    const auto pool = from_mask(s->rules().reveal_pool(st));
                    if (pool.empty()) continue;
                    s->submit(reveal({pool.front()}));
                    ++accepted;
                } catch (const ServiceError&) {
                }
            }
        });
    for (auto& t : threads) t.join();
    CHECK(accepted > 0);
    CHECK(replay_history(s->rules(), s->history()) == s->state());
    CHECK(s->state().terminal);
}

TEST_CASE("move JSON") {
    CHECK(move_from_json(Json{{"type", "reveal"}, {"vertices", {1, 2}}}) == reveal({1, 2}));
    CHECK(move_from_json(Json{{"type", "burn"}, {"vertex", 3}}) == burn_at(3));
    CHECK(move_from_json(Json{{"type", "pass"}}).kind == MoveKind::Pass);
    CHECK(status_of([] { move_from_json(Json{{"type", "jump"}}); }) == 400);
    CHECK(status_of([] { move_from_json(Json{{"type", "burn"}, {"vertices", {"a"}}}); }) == 400);
    CHECK(move_to_json(burn_at(4))["vertices"] == Json::array({4}));
}

TEST_CASE("HTTP interface") {
    SessionStore store;
    httplib::Server server;
    register_routes(server, store);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/sessions", R"({"spec":"path:n=6","k":2,"role":"saboteur"})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
    const auto body = Json::parse(created->body);
    const std::string id = body["id"];
    CHECK(body["state"]["phase"] == "SaboteurReveal");

    auto got = client.Get("/sessions/" + id);
    REQUIRE(got);
    CHECK(got->status == 200);
    CHECK(Json::parse(got->body)["id"] == id);

    auto hint = client.Get("/sessions/" + id + "/hint");
    REQUIRE(hint);
    CHECK(hint->status == 200);
    CHECK(Json::parse(hint->body)["certified"] == true);
    CHECK(Json::parse(hint->body)["value"] == lim("path:n=6", 2));

    auto bad = client.Post("/sessions/" + id + "/move", R"({"type":"reveal","vertices":[0]})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    CHECK(Json::parse(bad->body).contains("error"));

    auto wrong_phase = client.Post("/sessions/" + id + "/move", R"({"type":"burn","vertices":[0]})", "application/json");
    REQUIRE(wrong_phase);
    CHECK(wrong_phase->status == 400);

    auto ok = client.Post("/sessions/" + id + "/move", R"({"type":"reveal","vertices":[0,5]})", "application/json");
    REQUIRE(ok);
    CHECK(ok->status == 200);
    CHECK(Json::parse(ok->body)["round"] == 2);

    auto garbage = client.Post("/sessions/" + id + "/move", "{not json", "application/json");
    REQUIRE(garbage);
    CHECK(garbage->status == 400);

    auto missing = client.Get("/sessions/nosuchsession");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto no_spec = client.Post("/sessions", R"({"k":2,"role":"saboteur"})", "application/json");
    REQUIRE(no_spec);
    CHECK(no_spec->status == 400);

    auto bad_role = client.Post("/sessions", R"({"spec":"path:n=3","k":1,"role":"judge"})", "application/json");
    REQUIRE(bad_role);
    CHECK(bad_role->status == 400);

    auto pre = client.Options("/sessions");
    REQUIRE(pre);
    CHECK(pre->status == 204);

    // Play the saboteur to the end over HTTP.
    Json state = Json::parse(ok->body);
    while (!state["terminal"].get<bool>()) {
        std::vector<int> pick;
        for (int v = 0; v < 6 && static_cast<int>(pick.size()) < state["required_reveal"].get<int>(); ++v) {
            const auto& burned = state["burned"];
            const auto& rev = state["revealed"];
            if (std::find(burned.begin(), burned.end(), v) == burned.end() &&
                std::find(rev.begin(), rev.end(), v) == rev.end())
                pick.push_back(v);
        }
        auto r = client.Post("/sessions/" + id + "/move", Json{{"type", "reveal"}, {"vertices", pick}}.dump(),
                             "application/json");
        REQUIRE(r);
        REQUIRE(r->status == 200);
        state = Json::parse(r->body);
    }
    CHECK(state["rounds_total"].get<int>() >= burning_number(path(6)).value);
    auto over = client.Get("/sessions/" + id + "/hint");
    REQUIRE(over);
    CHECK(over->status == 409);

    server.stop();
    worker.join();
}

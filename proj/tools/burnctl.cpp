// burnctl: batch front end for the burning / cooling / liminal engine.
//
// Exit codes: 0 success, 1 runtime error, 2 usage or parse error,
// 3 search budget exhausted before an exact answer was found.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "burn/bounds.hpp"
#include "burn/engine.hpp"
#include "burn/graph.hpp"
#include "burn/liminal.hpp"
#include "burn/report.hpp"
#include "burn/service.hpp"
#include "burn/solvers.hpp"
#include "burn/tiling.hpp"

namespace {

using burn::Json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsolved = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetOptions {
    std::uint64_t node_limit = 0;
    long time_limit_ms = 0;

    burn::SearchBudget resolve() const {
        auto b = burn::SearchBudget::from_env();
        if (node_limit > 0) b.node_limit = node_limit;
        if (time_limit_ms > 0) b.time_limit = std::chrono::milliseconds(time_limit_ms);
        return b;
    }
};

void add_budget(CLI::App* cmd, BudgetOptions& b) {
    cmd->add_option("--node-limit", b.node_limit, "Search node budget (default BURN_NODE_LIMIT or 2e8)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit-ms", b.time_limit_ms, "Search time budget in ms (default BURN_TIME_LIMIT_MS)")
        ->check(CLI::PositiveNumber);
}

burn::Graph load_graph(const std::string& spec) {
    try {
        return burn::parse_graph_spec(spec);
    } catch (const burn::GraphError& e) {
        throw UsageError(std::string("bad --graph: ") + e.what());
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int emit_solve(const burn::SolveResult& r, const std::string& format) {
    if (format == "table") {
        std::cout << r.kind << ": " << (r.solved ? std::to_string(r.value) : "unsolved within budget") << "  (nodes "
                  << r.nodes_expanded << ")\n";
    } else {
        print_json(burn::to_json(r));
    }
    return r.solved ? 0 : kExitUnsolved;
}

void emit_table(const burn::Table& t, const std::string& format) {
    if (format == "json") print_json(t.to_json());
    else if (format == "table") std::cout << t.to_text();
    else std::cout << t.to_csv();
}

std::vector<int> odd_sides(int m) {
    std::vector<int> sides;
    for (int s = 2 * m - 1; s >= 1; s -= 2) sides.push_back(s);
    return sides;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers and bounds for graph burning, cooling and k-liminal burning"};
    app.require_subcommand(1);

    BudgetOptions budget;
    std::string graph_spec;
    std::string game = "burn";
    std::string format = "json";
    int k = 1;
    int k_max = 0;
    int max_vertices = 0;
    bool reveal_burned = false;

    auto* solve = app.add_subcommand("solve", "Exact game value for a graph");
    solve->add_option("--graph", graph_spec, "Graph spec, e.g. path:n=9")->required();
    solve->add_option("--game", game, "burn | cool | liminal")->check(CLI::IsMember({"burn", "cool", "liminal"}));
    solve->add_option("--k", k, "Liminal number (liminal game only)")->check(CLI::PositiveNumber);
    solve->add_option("--max-vertices", max_vertices, "Override the exact-search vertex limit")->check(CLI::PositiveNumber);
    solve->add_flag("--reveal-burned", reveal_burned, "Let the saboteur reveal burned vertices");
    solve->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    add_budget(solve, budget);

    auto* cool = app.add_subcommand("cool", "Exact cooling number");
    cool->add_option("--graph", graph_spec, "Graph spec")->required();
    cool->add_option("--max-vertices", max_vertices, "Override the exact-search vertex limit")->check(CLI::PositiveNumber);
    cool->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    add_budget(cool, budget);

    auto* liminal = app.add_subcommand("liminal", "Exact k-liminal burning number");
    liminal->add_option("--graph", graph_spec, "Graph spec")->required();
    liminal->add_option("--k", k, "Liminal number")->required()->check(CLI::PositiveNumber);
    liminal->add_option("--max-vertices", max_vertices, "Override the exact-search vertex limit")->check(CLI::PositiveNumber);
    liminal->add_flag("--reveal-burned", reveal_burned, "Let the saboteur reveal burned vertices");
    liminal->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    add_budget(liminal, budget);

    std::string sweep_format = "csv";
    auto* sweep = app.add_subcommand("sweep", "b_k(G) for k = 1..k_max as CSV k,value");
    sweep->add_option("--graph", graph_spec, "Graph spec")->required();
    sweep->add_option("--k-max", k_max, "Largest k (default |V|)")->check(CLI::PositiveNumber);
    sweep->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_flag("--reveal-burned", reveal_burned, "Let the saboteur reveal burned vertices");
    add_budget(sweep, budget);

    unsigned n = 0;
    unsigned d = 0;
    std::string tol = "1e-12";
    auto* bound = app.add_subcommand("bound", "Largest-root tiling bound for the d-fold strong product of P_n");
    bound->add_option("--n", n, "Path length")->required()->check(CLI::PositiveNumber);
    bound->add_option("--d", d, "Dimension")->required()->check(CLI::Range(1u, burn::kMaxDimension));
    bound->add_option("--tol", tol, "Bisection tolerance, decimal or p/q");

    int pack_n = 0;
    int pack_d = 1;
    int pack_m = 0;
    auto* pack = app.add_subcommand("pack", "Pack odd tiles 2m-1, ..., 3, 1 into [n]^d (d = 1 or 2)");
    pack->add_option("--n", pack_n, "Box side")->required()->check(CLI::PositiveNumber);
    pack->add_option("--d", pack_d, "Dimension")->check(CLI::Range(1, 2));
    pack->add_option("--m", pack_m, "Number of tiles")->required()->check(CLI::PositiveNumber);
    add_budget(pack, budget);

    int kstar_n = 0;
    auto* kstar = app.add_subcommand("kstar", "Lower bound on k* for P_{n^2} from the tile generating function");
    kstar->add_option("--n", kstar_n, "n >= 2")->required()->check(CLI::Range(2, burn::kMaxGenFun));

    std::string suite;
    int n_max = 7;
    int d_max = 10;
    int m_max = 1000;
    int compare_k_max = 3;
    std::string compare_format = "csv";
    auto* compare = app.add_subcommand("compare", "Cross-check the theorem-level claims against the exact engine");
    compare->add_option("--suite", suite, "paths | b2 | kings | cube | cooling | kstar | euler")
        ->required()
        ->check(CLI::IsMember({"paths", "b2", "kings", "cube", "cooling", "kstar", "euler"}));
    compare->add_option("--n-max", n_max, "Largest instance size")->check(CLI::PositiveNumber);
    compare->add_option("--k-max", compare_k_max, "Largest liminal number (paths suite)")->check(CLI::PositiveNumber);
    compare->add_option("--d-max", d_max, "Largest dimension (euler suite)")->check(CLI::Range(1, 50));
    compare->add_option("--m-max", m_max, "Largest partial sum (euler suite)")->check(CLI::PositiveNumber);
    compare->add_option("--format", compare_format, "csv | json | table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    add_budget(compare, budget);

    std::string sequence_file;
    std::vector<int> sources;
    auto* replay = app.add_subcommand("replay", "Replay a source sequence and print burned counts per round");
    replay->add_option("--file", sequence_file, R"(JSON file {"graph": spec, "sources": [...]})");
    replay->add_option("--graph", graph_spec, "Graph spec (with --sources)");
    replay->add_option("--sources", sources, "Source vertices in order");

    std::string host = "127.0.0.1";
    int port = 8080;
    std::string session_dir;
    auto* serve = app.add_subcommand("serve", "Run the interactive liminal game service");
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
    serve->add_option("--dir", session_dir, "Directory for session logs (in-memory if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const auto b = budget.resolve();

        if (*solve || *cool || *liminal) {
            const auto g = load_graph(graph_spec);
            if (*cool) game = "cool";
            if (*liminal) game = "liminal";
            if (game == "burn") return emit_solve(burn::burning_number(g, b, max_vertices ? max_vertices : burn::kBurnVertexLimit), format);
            if (game == "cool") return emit_solve(burn::cooling_number(g, b, max_vertices ? max_vertices : burn::kCoolVertexLimit), format);
            burn::LiminalOptions opt;
            opt.k = k;
            opt.budget = b;
            opt.reveal_burned = reveal_burned;
            if (max_vertices) opt.vertex_limit = max_vertices;
            return emit_solve(burn::liminal_value(g, opt), format);
        }

        if (*sweep) {
            const auto g = load_graph(graph_spec);
            burn::LiminalOptions opt;
            opt.budget = b;
            opt.reveal_burned = reveal_burned;
            const auto report = burn::liminal_sweep(g, k_max ? k_max : g.order(), opt);
            bool all_solved = true;
            for (const auto& row : report.rows) all_solved = all_solved && row.result.solved;
            if (sweep_format == "json") {
                Json j;
                Json rows = Json::array();
                for (const auto& row : report.rows)
                    rows.push_back(Json{{"k", row.k}, {"value", row.result.solved ? Json(row.result.value) : Json(nullptr)}});
                j["rows"] = std::move(rows);
                j["burning_number"] = report.burning.solved ? Json(report.burning.value) : Json(nullptr);
                j["cooling_number"] = report.cooling.solved ? Json(report.cooling.value) : Json(nullptr);
                j["k_star"] = report.k_star ? Json(*report.k_star) : Json(nullptr);
                j["k_prime"] = report.k_prime ? Json(*report.k_prime) : Json(nullptr);
                print_json(j);
            } else {
                std::cout << "k,value\n";
                for (const auto& row : report.rows)
                    std::cout << row.k << ',' << (row.result.solved ? std::to_string(row.result.value) : "") << '\n';
            }
            return all_solved ? 0 : kExitUnsolved;
        }

        if (*bound) {
            burn::Rational tolerance;
            try {
                tolerance = burn::parse_rational(tol);
            } catch (const std::exception& e) {
                throw UsageError(std::string("bad --tol: ") + e.what());
            }
            if (tolerance <= 0 || tolerance >= 1) throw UsageError("--tol must lie in (0, 1)");
            const auto root = burn::strong_path_bound(n, d, tolerance);
            Json j = burn::to_json(root);
            j["n"] = n;
            j["d"] = d;
            j["closed_form_agrees"] = nullptr;
            if (d == 2 && n >= 2) {
                const auto kings = burn::kings_bound(n, tolerance);
                j["closed_form"] = kings.closed_form;
                j["closed_form_printed"] = kings.closed_form_printed;
                j["closed_form_agrees"] = kings.closed_form_agrees;
                j["kings_bound"] = burn::to_string(kings.bound);
            } else if (d == 3) {
                const auto cube = burn::cube3_bound(n, tolerance);
                j["closed_form"] = cube.closed_form;
                j["closed_form_agrees"] = cube.closed_form_agrees;
            }
            print_json(j);
            return 0;
        }

        if (*pack) {
            if (pack_d == 1) {
                const auto p = burn::pack_1d(pack_n, odd_sides(pack_m));
                print_json(p ? burn::to_json(*p) : Json(nullptr));
                return 0;
            }
            const auto result = burn::pack_small_2d(pack_n, pack_m, b);
            if (!result.solved) {
                std::cerr << "pack: search budget exhausted\n";
                print_json(Json(nullptr));
                return kExitUnsolved;
            }
            print_json(result.packing ? burn::to_json(*result.packing) : Json(nullptr));
            return 0;
        }

        if (*kstar) {
            print_json(burn::to_json(burn::k_star_lower_bound(kstar_n)));
            return 0;
        }

        if (*compare) {
            burn::Table t;
            if (suite == "paths") t = burn::compare_paths(n_max, compare_k_max, b);
            else if (suite == "b2") t = burn::compare_b2(n_max, b);
            else if (suite == "kings") t = burn::compare_kings(n_max, b);
            else if (suite == "cube") t = burn::compare_cube(n_max, b);
            else if (suite == "cooling") t = burn::compare_cooling(n_max, b);
            else if (suite == "kstar") t = burn::compare_kstar(n_max, b);
            else t = burn::compare_euler(d_max, m_max);
            emit_table(t, compare_format);
            return 0;
        }

        if (*replay) {
            if (!sequence_file.empty()) {
                std::ifstream in(sequence_file);
                if (!in) throw UsageError("cannot read " + sequence_file);
                Json j;
                try {
                    j = Json::parse(in);
                    graph_spec = j.at("graph").get<std::string>();
                    sources = j.at("sources").get<std::vector<int>>();
                } catch (const Json::exception& e) {
                    throw UsageError(std::string("bad sequence file: ") + e.what());
                }
            }
            if (graph_spec.empty()) throw UsageError("replay needs --file or --graph with --sources");
            const auto g = load_graph(graph_spec);
            const auto trace = burn::replay(g, sources);
            std::cout << "round,burned\n";
            for (std::size_t t = 0; t < trace.burned_counts.size(); ++t)
                std::cout << t + 1 << ',' << trace.burned_counts[t] << '\n';
            std::cout << "# rounds " << trace.rounds << ", sources used " << trace.sources_used << '\n';
            return 0;
        }

        if (*serve) {
            std::optional<std::filesystem::path> dir;
            if (!session_dir.empty()) dir = session_dir;
            burn::service::SessionStore store(dir);
            httplib::Server server;
            burn::service::register_routes(server, store);
            std::cerr << "listening on " << host << ':' << port << '\n';
            if (!server.listen(host, port)) {
                std::cerr << "cannot bind " << host << ':' << port << '\n';
                return kExitError;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const burn::InvalidSequence& e) {
        std::cerr << "invalid sequence: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}

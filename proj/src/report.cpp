#include "burn/report.hpp"

#include <algorithm>
#include <sstream>

#include "burn/engine.hpp"
#include "burn/graph.hpp"
#include "burn/liminal.hpp"
#include "search_support.hpp"

namespace burn {

namespace {

const char* kMatch = "match";
const char* kDiffers = "paper_differs";
const char* kUnsolved = "unsolved";

std::string value_or_dash(const SolveResult& r) { return r.solved ? std::to_string(r.value) : "-"; }

}  // namespace

Json to_json(const Move& m) {
    Json j;
    j["type"] = to_string(m.kind);
    j["vertices"] = m.vertices;
    return j;
}

Json to_json(const SolveResult& r) {
    Json j;
    j["value"] = r.solved ? Json(r.value) : Json(nullptr);
    j["kind"] = r.kind;
    j["solved"] = r.solved;
    j["nodes"] = r.nodes_expanded;
    Json line = Json::array();
    for (const auto& m : r.principal_line) line.push_back(to_json(m));
    j["principal_line"] = std::move(line);
    return j;
}

Json to_json(const BoundResult& r) {
    Json j;
    j["x_star_interval"] = Json::array({to_string(r.lower), to_string(r.upper)});
    j["x_star_approx"] = r.approx();
    j["floor_x_star"] = to_string(r.floor_x_star);
    j["is_integral"] = r.is_integral;
    j["bound"] = to_string(r.bound);
    return j;
}

Json to_json(const Packing& p) {
    Json j;
    Json tiles = Json::array();
    for (const auto& t : p.tiles) tiles.push_back(Json{{"side", t.side}, {"corner", t.corner}});
    j["tiles"] = std::move(tiles);
    j["is_tiling"] = p.is_tiling;
    return j;
}

Json to_json(const KStarBound& k) {
    Json j;
    j["n"] = k.n;
    j["lower_bound"] = k.lower_bound;
    j["good_offsets"] = k.good_offsets;
    Json f = Json::object();
    for (std::size_t l = 0; l < k.f_values.size(); ++l) f[std::to_string(l)] = to_string(k.f_values[l]);
    j["f_values"] = std::move(f);
    j["statement_range_bound"] = k.statement_range_bound;
    return j;
}

std::string Table::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

std::string Table::to_text() const {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    };
    line(columns);
    for (const auto& row : rows) line(row);
    return out.str();
}

Json Table::to_json() const {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json obj;
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) obj[columns[i]] = row[i];
        out.push_back(std::move(obj));
    }
    return out;
}

int path_lower_bound(int n, int k) {
    // floor((-1 + sqrt(5 + 4k)) / 2) is the largest t with 2t + 1 <= sqrt(5 + 4k).
    const auto s = static_cast<int>(isqrt(static_cast<std::uint64_t>(5 + 4 * k)));
    return n / (k + 1) + (s - 1) / 2;
}

int path_upper_bound(int n, int k) { return (n + k - 1) / k + k - 1; }

int b2_formula(int n) { return (n + 2 + 2) / 3; }

Table compare_paths(int n_max, int k_max, const SearchBudget& budget) {
    Table t{{"n", "k", "minimax", "formula", "lower", "upper", "status"}, {}};
    std::vector<std::pair<int, int>> cases;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) cases.emplace_back(n, k);
    std::vector<SolveResult> results(cases.size());
    detail::parallel_for(cases.size(), [&](std::size_t i) {
        LiminalOptions opt;
        opt.k = cases[i].second;
        opt.budget = budget;
        results[i] = liminal_value(path(cases[i].first), opt);
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto [n, k] = cases[i];
        const int lower = path_lower_bound(n, k);
        const int upper = path_upper_bound(n, k);
        std::string formula;
        std::string status = kUnsolved;
        if (results[i].solved) {
            const int v = results[i].value;
            bool ok = lower <= v && v <= upper;
            if (k == 2) ok = ok && v == b2_formula(n);
            status = ok ? kMatch : kDiffers;
        }
        if (k == 2) formula = std::to_string(b2_formula(n));
        t.rows.push_back({std::to_string(n), std::to_string(k), value_or_dash(results[i]), formula,
                          std::to_string(lower), std::to_string(upper), status});
    }
    return t;
}

Table compare_b2(int n_max, const SearchBudget& budget) {
    Table t{{"n", "minimax", "formula", "status"}, {}};
    std::vector<SolveResult> results(static_cast<std::size_t>(std::max(n_max, 0)));
    detail::parallel_for(results.size(), [&](std::size_t i) {
        LiminalOptions opt;
        opt.k = 2;
        opt.budget = budget;
        results[i] = liminal_value(path(static_cast<int>(i) + 1), opt);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const int formula = b2_formula(n);
        std::string status = kUnsolved;
        if (results[i].solved) status = results[i].value == formula ? kMatch : kDiffers;
        t.rows.push_back({std::to_string(n), value_or_dash(results[i]), std::to_string(formula), status});
    }
    return t;
}

Table compare_kings(int n_max, const SearchBudget& budget) {
    Table t{{"n", "x_star", "corollary_floor", "kings_bound", "closed_form_agrees", "burning_number", "status"}, {}};
    const std::size_t count = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
    std::vector<SolveResult> exact(count);
    std::vector<KingsBound> bounds(count);
    detail::parallel_for(count, [&](std::size_t i) {
        const int n = static_cast<int>(i) + 2;
        bounds[i] = kings_bound(static_cast<unsigned>(n));
        if (n * n <= kBurnVertexLimit) exact[i] = burning_number(strong_path(n, 2), budget);
    });
    for (std::size_t i = 0; i < count; ++i) {
        const int n = static_cast<int>(i) + 2;
        std::string status = kUnsolved;
        if (exact[i].solved) status = BigInt(exact[i].value) >= bounds[i].bound ? kMatch : kDiffers;
        std::ostringstream x;
        x.precision(12);
        x << bounds[i].root.approx();
        t.rows.push_back({std::to_string(n), x.str(), to_string(bounds[i].root.floor_x_star), to_string(bounds[i].bound),
                          bounds[i].closed_form_agrees ? "true" : "false", value_or_dash(exact[i]), status});
    }
    return t;
}

Table compare_cube(int n_max, const SearchBudget& budget) {
    Table t{{"n", "m_star", "bound", "is_integral", "closed_form_agrees", "burning_number", "status"}, {}};
    const std::size_t count = static_cast<std::size_t>(std::max(n_max, 0));
    std::vector<SolveResult> exact(count);
    std::vector<Cube3Bound> bounds(count);
    detail::parallel_for(count, [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        bounds[i] = cube3_bound(static_cast<unsigned>(n));
        if (n * n * n <= kBurnVertexLimit) exact[i] = burning_number(strong_path(n, 3), budget);
    });
    for (std::size_t i = 0; i < count; ++i) {
        const int n = static_cast<int>(i) + 1;
        std::string status = kUnsolved;
        if (exact[i].solved) {
            // Lower bound must hold; equality is claimed exactly when m* is an integer.
            const BigInt b(exact[i].value);
            bool ok = b >= bounds[i].root.bound;
            if (bounds[i].root.is_integral) ok = ok && b == bounds[i].root.bound;
            status = ok ? kMatch : kDiffers;
        }
        std::ostringstream x;
        x.precision(12);
        x << bounds[i].closed_form;
        t.rows.push_back({std::to_string(n), x.str(), to_string(bounds[i].root.bound),
                          bounds[i].root.is_integral ? "true" : "false",
                          bounds[i].closed_form_agrees ? "true" : "false", value_or_dash(exact[i]), status});
    }
    return t;
}

Table compare_cooling(int n_max, const SearchBudget& budget) {
    Table t{{"n", "sequence_length", "replay_rounds", "cooling_number", "status"}, {}};
    const std::size_t count = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
    std::vector<int> rounds(count);
    std::vector<std::size_t> lengths(count);
    std::vector<SolveResult> exact(count);
    detail::parallel_for(count, [&](std::size_t i) {
        const int n = static_cast<int>(i) + 2;
        const auto seq = cooling_sequence_strong(n, 2);
        lengths[i] = seq.size();
        rounds[i] = play_sequence(strong_path(n, 2), seq);
        if (n * n <= kCoolVertexLimit) exact[i] = cooling_number(strong_path(n, 2), budget);
    });
    for (std::size_t i = 0; i < count; ++i) {
        const int n = static_cast<int>(i) + 2;
        bool ok = rounds[i] == n;
        if (exact[i].solved) ok = ok && exact[i].value == n;
        t.rows.push_back({std::to_string(n), std::to_string(lengths[i]), std::to_string(rounds[i]),
                          value_or_dash(exact[i]), ok ? kMatch : kDiffers});
    }
    return t;
}

Table compare_kstar(int n_max, const SearchBudget& budget) {
    Table t{{"n", "lower_bound", "statement_range_bound", "b2_formula_equals_b", "exact_k_star", "status"}, {}};
    const std::size_t count = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
    std::vector<KStarBound> bounds(count);
    std::vector<std::optional<int>> exact(count);
    std::vector<bool> attempted(count, false);
    detail::parallel_for(count, [&](std::size_t i) {
        const int n = static_cast<int>(i) + 2;
        bounds[i] = k_star_lower_bound(n);
        if (n * n <= kLiminalVertexLimit) {
            attempted[i] = true;
            LiminalOptions opt;
            opt.budget = budget;
            exact[i] = liminal_sweep(path(n * n), n * n, opt).k_star;
        }
    });
    for (std::size_t i = 0; i < count; ++i) {
        const int n = static_cast<int>(i) + 2;
        // b(P_{n^2}) = n, so the b_2 formula alone would force k* <= 2.
        const bool formula_tight = b2_formula(n * n) == n;
        std::string status = kUnsolved;
        if (exact[i]) status = *exact[i] > bounds[i].lower_bound ? kMatch : kDiffers;
        t.rows.push_back({std::to_string(n), std::to_string(bounds[i].lower_bound),
                          std::to_string(bounds[i].statement_range_bound), formula_tight ? "true" : "false",
                          exact[i] ? std::to_string(*exact[i]) : "-", status});
    }
    return t;
}

Table compare_euler(int d_max, int m_max) {
    Table t{{"d", "m_max", "mismatches", "status"}, {}};
    const std::size_t count = static_cast<std::size_t>(std::max(d_max, 0));
    std::vector<int> mismatches(count, 0);
    detail::parallel_for(count, [&](std::size_t i) {
        const unsigned d = static_cast<unsigned>(i) + 1;
        const Polynomial g = g_bar(d);
        BigInt sum = 0;
        for (int m = 1; m <= m_max; ++m) {
            sum += boost::multiprecision::pow(BigInt(2 * m - 1), d);
            if (g(Rational(m)) != Rational(sum)) ++mismatches[i];
        }
    });
    for (std::size_t i = 0; i < count; ++i)
        t.rows.push_back({std::to_string(i + 1), std::to_string(m_max), std::to_string(mismatches[i]),
                          mismatches[i] == 0 ? kMatch : kDiffers});
    return t;
}

}  // namespace burn

#include <doctest.h>

#include <algorithm>

#include "burn/report.hpp"

using namespace burn;

namespace {

std::size_t column(const Table& t, const std::string& name) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), name);
    REQUIRE(it != t.columns.end());
    return static_cast<std::size_t>(it - t.columns.begin());
}

void statuses_are_known(const Table& t) {
    REQUIRE(t.columns.back() == "status");
    for (const auto& row : t.rows) {
        REQUIRE(row.size() == t.columns.size());
        const auto& s = row.back();
        CHECK((s == "match" || s == "paper_differs" || s == "unsolved"));
    }
}

}  // namespace

TEST_CASE("path bound helpers") {
    CHECK(path_lower_bound(10, 1) == 5 + 1);
    CHECK(path_lower_bound(10, 2) == 3 + 1);
    CHECK(path_lower_bound(10, 3) == 2 + 1);
    CHECK(path_lower_bound(7, 5) == 1 + 2);
    CHECK(path_upper_bound(10, 1) == 10);
    CHECK(path_upper_bound(10, 3) == 4 + 2);
    CHECK(b2_formula(1) == 1);
    CHECK(b2_formula(4) == 2);
    CHECK(b2_formula(7) == 3);
}

TEST_CASE("paths suite") {
    const auto t = compare_paths(7, 3, SearchBudget{});
    statuses_are_known(t);
    CHECK(t.columns == std::vector<std::string>{"n", "k", "minimax", "formula", "lower", "upper", "status"});
    CHECK(t.rows.size() == 21);
    const auto mm = column(t, "minimax"), lo = column(t, "lower"), hi = column(t, "upper");
    for (const auto& row : t.rows) {
        CHECK(std::stoi(row[lo]) <= std::stoi(row[mm]));
        CHECK(std::stoi(row[mm]) <= std::stoi(row[hi]));
    }
}

TEST_CASE("b2 suite") {
    const auto t = compare_b2(7, SearchBudget{});
    statuses_are_known(t);
    REQUIRE(t.rows.size() == 7);
    int previous = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const int v = std::stoi(t.rows[i][1]);
        CHECK(path_lower_bound(n, 2) <= v);
        CHECK(v <= path_upper_bound(n, 2));
        CHECK(v >= previous);
        previous = v;
        CHECK(std::stoi(t.rows[i][2]) == b2_formula(n));
        CHECK((t.rows[i].back() == "match") == (v == b2_formula(n)));
    }
    // On P_4 the leftmost-reveal formula is beaten by an endpoints reveal.
    CHECK(t.rows[3][1] == "3");
    CHECK(t.rows[3].back() == "paper_differs");
}

TEST_CASE("kings, cube and cooling suites") {
    const auto kings = compare_kings(6, SearchBudget{});
    statuses_are_known(kings);
    for (const auto& row : kings.rows) CHECK(row.back() == "match");

    const auto cube = compare_cube(3, SearchBudget{});
    statuses_are_known(cube);
    for (const auto& row : cube.rows) CHECK(row.back() == "match");

    const auto cool = compare_cooling(8, SearchBudget{});
    statuses_are_known(cool);
    for (const auto& row : cool.rows) CHECK(row.back() == "match");
}

TEST_CASE("kstar suite") {
    const auto t = compare_kstar(3, SearchBudget{});
    statuses_are_known(t);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][column(t, "lower_bound")] == "2");
    CHECK(t.rows[0][column(t, "exact_k_star")] == "3");
}

TEST_CASE("euler suite") {
    const auto t = compare_euler(4, 50);
    statuses_are_known(t);
    for (const auto& row : t.rows) CHECK(row[column(t, "mismatches")] == "0");
}

TEST_CASE("table rendering") {
    const Table t{{"a", "b", "status"}, {{"1", "x", "match"}, {"22", "", "unsolved"}}};
    CHECK(t.to_csv() == "a,b,status\n1,x,match\n22,,unsolved\n");
    const auto j = t.to_json();
    CHECK(j.size() == 2);
    CHECK(j[0]["a"] == "1");
    CHECK(t.to_text().find("22") != std::string::npos);
}

TEST_CASE("JSON output is stable") {
    const auto a = to_json(strong_path_bound(8, 2)).dump(2);
    const auto b = to_json(strong_path_bound(8, 2)).dump(2);
    CHECK(a == b);
    const auto j = to_json(strong_path_bound(2, 2));
    CHECK(j["x_star_interval"][0].is_string());
    CHECK(j["bound"] == "1");
    CHECK(j["is_integral"] == false);

    const auto r = to_json(burning_number(path(9)));
    CHECK(r["value"] == 3);
    CHECK(r["kind"] == "burn");
    CHECK(r["principal_line"].size() == 3);
    CHECK(r.begin().key() == "value");
}

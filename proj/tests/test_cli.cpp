#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run burnctl(const std::string& args) {
    const std::string cmd = std::string(BURNCTL_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli: solve") {
    const auto r = burnctl("solve --graph path:n=9 --game burn");
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["value"] == 3);
    CHECK(j["kind"] == "burn");
    CHECK(j.contains("nodes"));
    CHECK(j["principal_line"].size() == 3);

    CHECK(json_of(burnctl("solve --graph path:n=3 --game cool"))["value"] == 2);
    CHECK(json_of(burnctl("liminal --graph path:n=3 --k 1"))["value"] == 2);
    CHECK(json_of(burnctl("liminal --graph path:n=3 --k 1 --reveal-burned"))["value"] == 3);
    CHECK(json_of(burnctl("cool --graph strongpath:n=3,d=2"))["value"] == 3);
}

TEST_CASE("cli: output is byte-stable") {
    CHECK(burnctl("solve --graph strongpath:n=4,d=2").out == burnctl("solve --graph strongpath:n=4,d=2").out);
    CHECK(burnctl("bound --n 8 --d 2").out == burnctl("bound --n 8 --d 2").out);
}

TEST_CASE("cli: exit codes") {
    CHECK(burnctl("").code == 2);
    CHECK(burnctl("solve").code == 2);
    CHECK(burnctl("solve --graph path:n=x").code == 2);
    CHECK(burnctl("solve --graph path:n=4 --game chess").code == 2);
    CHECK(burnctl("bound --n 3 --d 3 --tol 2").code == 2);
    CHECK(burnctl("bogus").code == 2);
    CHECK(burnctl("--help").code == 0);

    const auto unsolved = burnctl("solve --graph strongpath:n=8,d=2 --node-limit 3");
    CHECK(unsolved.code == 3);
    CHECK(json_of(unsolved)["value"].is_null());
    CHECK(burnctl("liminal --graph path:n=20 --k 2").code == 3);
}

TEST_CASE("cli: budget from the environment") {
    const std::string cmd = "env BURN_NODE_LIMIT=3 " + std::string(BURNCTL_PATH) +
                            " solve --graph strongpath:n=8,d=2 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("cli: bound") {
    const auto j = json_of(burnctl("bound --n 3 --d 3"));
    CHECK(j["bound"] == "1");
    CHECK(j["is_integral"] == false);
    CHECK(j["x_star_interval"].size() == 2);

    const auto k = json_of(burnctl("bound --n 8 --d 2 --tol 1e-12"));
    CHECK(k["closed_form_agrees"] == true);
    CHECK(k["kings_bound"] == "4");

    const auto sharp = json_of(burnctl("bound --n 9 --d 1 --tol 1/1000"));
    CHECK(sharp["is_integral"] == true);
    CHECK(sharp["bound"] == "3");
}

TEST_CASE("cli: pack and kstar") {
    const auto p = json_of(burnctl("pack --n 9 --d 1 --m 3"));
    CHECK(p["is_tiling"] == true);
    CHECK(p["tiles"].size() == 3);
    CHECK(json_of(burnctl("pack --n 8 --d 1 --m 3")).is_null());
    CHECK(json_of(burnctl("pack --n 4 --d 2 --m 2"))["tiles"].size() == 2);

    const auto k = json_of(burnctl("kstar --n 3"));
    CHECK(k["lower_bound"] == 5);
    CHECK(k["good_offsets"] == nlohmann::json::array({0, 1, 3, 4}));
    CHECK(k["f_values"]["2"] == "0");
}

TEST_CASE("cli: sweep and compare") {
    const auto s = burnctl("sweep --graph path:n=4");
    CHECK(s.code == 0);
    CHECK(s.out == "k,value\n1,3\n2,3\n3,2\n4,2\n");

    const auto c = burnctl("compare --suite paths --n-max 7 --k-max 3");
    CHECK(c.code == 0);
    CHECK(c.out.rfind("n,k,minimax,formula,lower,upper,status\n", 0) == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 22);

    const auto b2 = json_of(burnctl("compare --suite b2 --n-max 7 --format json"));
    CHECK(b2.size() == 7);
    CHECK(b2[3]["status"] == "paper_differs");
}

TEST_CASE("cli: replay") {
    const auto file = std::filesystem::temp_directory_path() / "burnctl_replay.json";
    {
        std::ofstream out(file);
        out << R"({"graph": "path:n=9", "sources": [2, 6, 8]})";
    }
    const auto r = burnctl("replay --file " + file.string());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("round,burned\n1,1\n2,4\n3,9\n", 0) == 0);
    CHECK(burnctl("replay --graph path:n=5 --sources 0 1").code == 2);
    std::filesystem::remove(file);
}

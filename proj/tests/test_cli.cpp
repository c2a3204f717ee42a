#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(COXKIT_CLI_BIN) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> chunk{};
    while (fgets(chunk.data(), chunk.size(), pipe)) result.output += chunk.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kP2 =
    R"({"name": "P2", "rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]})";

}  // namespace

TEST_CASE("fan-info on a valid fan") {
    const auto path = write_temp("coxkit_p2.json", kP2);
    const auto result = run_cli("fan-info " + path.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("1,3,3") != std::string::npos);
    CHECK(result.output.find("betti: 1,1,1") != std::string::npos);
}

TEST_CASE("exit 2 on malformed JSON, with a position") {
    const auto path = write_temp("coxkit_broken.json", "{\"rank\": 2, ");
    const auto result = run_cli("fan-info " + path.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("error") != std::string::npos);
}

TEST_CASE("exit 2 on a missing file and on bad arguments") {
    CHECK(run_cli("fan-info /nonexistent/fan.json").exit_code == 2);
    CHECK(run_cli("surface --base P5").exit_code == 2);
    CHECK(run_cli("surface --base P2 --a 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("reproduce no-such-table").exit_code == 2);
}

TEST_CASE("exit 3 on an invalid fan, listing violations") {
    const std::string bad =
        R"({"rank": 2, "rays": [[1,0],[0,1],[-2,-2]], "max_cones": [[0,1],[1,2],[0,2]]})";
    const auto path = write_temp("coxkit_bad.json", bad);
    const auto result = run_cli("fan-info " + path.string());
    CHECK(result.exit_code == 3);
    CHECK(result.output.find("not primitive") != std::string::npos);
}

TEST_CASE("coxeter report round-trips through JSON output") {
    const auto path = write_temp("coxkit_p2.json", kP2);
    const auto result = run_cli("coxeter " + path.string() + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"coxeter_polynomial\": \"(x+1)^3\"") != std::string::npos);
    CHECK(result.output.find("\"cross_check\": \"MATCH\"") != std::string::npos);
}

TEST_CASE("tensor closed form, oracle, and the zero-zero note") {
    auto result = run_cli("tensor \"J(1,2) J(1,3)\" --oracle");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("J(1,4) + J(1,2)") != std::string::npos);
    CHECK(result.output.find("match") != std::string::npos);

    result = run_cli("tensor \"J(0,2) J(0,3)\" --oracle");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("J(0,2)^2 + J(0,1)^2") != std::string::npos);
    CHECK(result.output.find("ceiling bracket reading") != std::string::npos);

    result = run_cli("tensor \"J(2,2) J(3,3)\"");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("J(6,4) + J(6,2)") != std::string::npos);

    CHECK(run_cli("tensor \"J(1,2) J(bad)\"").exit_code == 2);
}

TEST_CASE("the oracle dimension cap is settable via flag and environment") {
    CHECK(run_cli("tensor \"J(1,12) J(1,12)\" --oracle --cap 100").exit_code == 3);
    CHECK(run_cli("tensor \"J(1,12) J(1,12)\" --oracle").exit_code == 0);

    const std::string env_cmd = std::string("COXKIT_DIM_CAP=100 ") + COXKIT_CLI_BIN +
                                " tensor \"J(1,12) J(1,12)\" --oracle >/dev/null 2>&1; echo $?";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[16] = {};
    REQUIRE(fgets(buffer, sizeof(buffer), pipe) != nullptr);
    pclose(pipe);
    CHECK(std::string(buffer).find("3") == 0);
}

TEST_CASE("product and blowup emit loadable fan files") {
    const auto p2 = write_temp("coxkit_p2.json", kP2);
    const std::string p1 = R"({"name": "P1", "rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]]})";
    const auto p1_path = write_temp("coxkit_p1.json", p1);
    const auto out = std::filesystem::temp_directory_path() / "coxkit_prod.json";

    auto result = run_cli("product " + p2.string() + " " + p1_path.string() + " -o " + out.string());
    CHECK(result.exit_code == 0);
    result = run_cli("fan-info " + out.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("betti: 1,2,2,1") != std::string::npos);

    result = run_cli("blowup " + p2.string() + " 0 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("[1, 1]") != std::string::npos);

    CHECK(run_cli("blowup " + p2.string() + " 0").exit_code == 3);
}

TEST_CASE("cartan subcommand certifies the polynomial") {
    const auto path = write_temp("coxkit_cartan.txt", "1 3 6\n0 1 3\n0 0 1\n");
    const auto result = run_cli("cartan " + path.string() + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("(x+1)^3") != std::string::npos);

    const auto ragged = write_temp("coxkit_cartan_bad.txt", "1 2\n3\n");
    CHECK(run_cli("cartan " + ragged.string()).exit_code == 2);

    const auto singular = write_temp("coxkit_cartan_sing.txt", "1 1\n1 1\n");
    CHECK(run_cli("cartan " + singular.string()).exit_code == 3);
}

TEST_CASE("reproduce runs offline and reports per-row status") {
    const auto result = run_cli("reproduce thm31 --format tsv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("MISMATCH") == std::string::npos);
    CHECK(result.output.find("P3.bl-2points") != std::string::npos);
}

TEST_CASE("surface accepts a spec file") {
    const auto spec = write_temp("coxkit_surface.json",
                                 R"({"base": {"type": "Hirzebruch", "a": 3}, "blowups": 8})");
    const auto result = run_cli("surface --spec " + spec.string() + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"m\": 12") != std::string::npos);

    CHECK(run_cli("surface --spec " + spec.string() + " --base P2").exit_code == 2);
    const auto bad = write_temp("coxkit_surface_bad.json", R"({"base": {"type": "P5"}})");
    CHECK(run_cli("surface --spec " + bad.string()).exit_code == 2);
}

TEST_CASE("coxeter JSON carries the graded basis and exact class coordinates") {
    const std::string path = std::string(COXKIT_SOURCE_DIR) + "/data/fixtures/p3bl2.json";
    const auto result = run_cli("coxeter " + path + " --format json");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.output);
    CHECK(j["basis"][0] == nlohmann::json::array({"1"}));
    CHECK(j["basis"][1] == nlohmann::json::array({"D3", "D4", "D5"}));
    // K = -(4 D3 + 2 D4 + 2 D5)
    CHECK(j["canonical_class"][1] == nlohmann::json::array({"-4", "-2", "-2"}));
    CHECK(j["chern_canonical"][0] == nlohmann::json::array({"1"}));
}

TEST_CASE("jordan subcommand on a bundled product fan") {
    const std::string path = std::string(COXKIT_SOURCE_DIR) + "/data/fixtures/p1xp1xp1.json";
    const auto result = run_cli("jordan " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("J(1,4) + J(1,2)^2") != std::string::npos);
}

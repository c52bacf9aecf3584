// End-to-end checks of the command-line surface: subcommands, format
// options, exit codes, and pipeline composition through files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#ifndef ZAGREB_LAB_BIN
#error "ZAGREB_LAB_BIN must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

fs::path tmp_dir() {
    fs::path dir = fs::temp_directory_path() / "zagreb-cli-tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string &args, const std::string &stdin_text = "") {
    fs::path out = tmp_dir() / "stdout.txt";
    std::string cmd = std::string("\"") + ZAGREB_LAB_BIN + "\" " + args;
    if (!stdin_text.empty()) {
        fs::path in = tmp_dir() / "stdin.txt";
        std::ofstream(in, std::ios::binary) << stdin_text;
        cmd += " < " + in.string();
    }
    cmd += " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    std::ostringstream buffer;
    buffer << std::ifstream(out, std::ios::binary).rdbuf();
    return {WEXITSTATUS(status), buffer.str()};
}

} // namespace

TEST_CASE("gen cycle-star emits a deterministic edge list") {
    CliResult result = run_cli("gen cycle-star --k 3 --leaves 1");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text == "c0 c1\nc0 c2\nc0 l1\nc1 c2\n");
}

TEST_CASE("gen validates parameters") {
    CHECK(run_cli("gen cycle-star --k 2 --leaves 1").exit_code == 1);
    CHECK(run_cli("gen cycle-star --k 3 --leaves 0").exit_code == 1);
}

TEST_CASE("apply and indices compose over a pipe") {
    CliResult graph = run_cli("gen cycle-star --k 3 --leaves 1");
    CliResult applied = run_cli("apply --ops subdivision,line", graph.stdout_text);
    CHECK(applied.exit_code == 0);

    CliResult report = run_cli("indices", applied.stdout_text);
    CHECK(report.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(report.stdout_text);
    CHECK(doc["order"] == 8);
    CHECK(doc["size"] == 9);
    CHECK(doc["m1"] == 44);
    CHECK(doc["m2"] == 54);
}

TEST_CASE("apply accepts the identity pipeline") {
    CliResult result = run_cli("apply --ops \"\"", "a b\n");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text == "a b\n");
}

TEST_CASE("apply rejects unknown operators") {
    CHECK(run_cli("apply --ops total", "a b\n").exit_code == 1);
}

TEST_CASE("malformed input exits 1") {
    CHECK(run_cli("indices", "a a\n").exit_code == 1);
    CHECK(run_cli("apply --ops line", "a b\nb a\n").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("export", "a b\n").exit_code == 1); // neither --dot nor --graph6
}

TEST_CASE("export dot and graph6") {
    CliResult dot = run_cli("export --dot", "a b\n");
    CHECK(dot.exit_code == 0);
    CHECK(dot.stdout_text == "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");

    CliResult g6 = run_cli("export --graph6", "a b\nb c\nc a\n");
    CHECK(g6.exit_code == 0);
    CHECK(g6.stdout_text == "Bw\n");
}

TEST_CASE("graph6 input round trips through the CLI") {
    CliResult back = run_cli("export --graph6 --input-format graph6", "Bw\n");
    CHECK(back.exit_code == 0);
    CHECK(back.stdout_text == "Bw\n");

    CliResult indices = run_cli("indices --input-format graph6", "Bw\n");
    nlohmann::json doc = nlohmann::json::parse(indices.stdout_text);
    CHECK(doc["order"] == 3);
    CHECK(doc["m1"] == 12);
}

TEST_CASE("verify exits 2 when discrepancies exist and writes the report") {
    fs::path out = tmp_dir() / "point.csv";
    CliResult result = run_cli("verify --k 3 --leaves 1 --format csv -o " + out.string());
    CHECK(result.exit_code == 2);
    std::ostringstream buffer;
    buffer << std::ifstream(out).rdbuf();
    CHECK(buffer.str().find("3,4,T21_M1,44,44,Match") != std::string::npos);
    CHECK(buffer.str().find("3,4,T25_M2CO,58,86,Mismatch") != std::string::npos);
}

TEST_CASE("verify validates ranges") {
    CHECK(run_cli("verify --k 2..3 --leaves 1..2").exit_code == 1);
    CHECK(run_cli("verify --k abc --leaves 1").exit_code == 1);
}

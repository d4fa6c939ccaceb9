// End-to-end tests for the command-line tool. Each test talks to the real
// binary through a pipe; the path comes from the TFOLD_BIN environment
// variable, falling back to the build-time location.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

std::string tool() {
    if (const char* env = std::getenv("TFOLD_BIN")) return env;
#ifdef TFOLD_DEFAULT_BIN
    return TFOLD_DEFAULT_BIN;
#else
    return "tfold";
#endif
}

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr passes through unless the
// command redirects it.
CliResult run(const std::string& args) {
    std::string command = "'" + tool() + "' " + args;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("tfold-cli-" + std::to_string(getpid()));
    fs::create_directories(dir);
    return dir;
}

fs::path write_doc(const std::string& name, const std::string& content) {
    fs::path path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* kChenDoc =
    "chi = 2\n"
    "q = 0\n"
    "pg = 0\n"
    "basket = 4*(1,2) 3*(1,3) 2*(1,4) (2,5) (4,9) (5,13)\n"
    "k3 = 1/1170\n"
    "P2 = 0\n";

}  // namespace

TEST_CASE("scalar subcommands print bare values") {
    CHECK(run("k3").out == "1/1170\n");
    CHECK(run("cartier-index").out == "2340\n");
    CHECK(run("delta").out == "18\n");
    CHECK(run("k3").exit_code == 0);

    auto doc = write_doc("chen.txt", kChenDoc);
    CHECK(run("k3 '" + doc.string() + "'").out == "1/1170\n");
    CHECK(run("delta '" + doc.string() + "'").out == "18\n");
}

TEST_CASE("plurigenera prints P_m lines and optionally a csv") {
    CliResult table = run("plurigenera --max-m 10");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("P2 = 0\n") != std::string::npos);
    CHECK(table.out.find("P8 = 1\n") != std::string::npos);
    CHECK(table.out.find("P10 = 0\n") != std::string::npos);

    fs::path csv = scratch_dir() / "table.csv";
    CHECK(run("plurigenera --max-m 10 --csv '" + csv.string() + "'").exit_code == 0);
    std::string rows = read_file(csv);
    CHECK(rows.find("m,P_m\n") == 0);
    CHECK(rows.find("8,1\n") != std::string::npos);
}

TEST_CASE("bound and xi-optimize evaluate their closed forms") {
    CHECK(run("bound --l2 1/195 --beta-tilde 1/19").out == "59\n");
    CHECK(run("bound --l2 1/100 --beta-tilde 1/10").out == "48\n");
    CHECK(run("xi-optimize --deg 6 --m0-over-a 12 --beta 2/13 --even").out == "2/5\n");
    CHECK(run("xi-optimize --deg 2 --m0-over-a 18 --beta 1/24").out == "2/29\n");
}

TEST_CASE("verify passes on the built-in dataset") {
    CliResult verify = run("verify --paper");
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("PASS k3-reconstruction") != std::string::npos);
    CHECK(verify.out.find("18/18 checks passed\n") != std::string::npos);
    CHECK(verify.out.find("RESULT r3 <= 57\n") != std::string::npos);
    CHECK(verify.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify emits one certificate per case") {
    fs::path dir = scratch_dir() / "certs";
    CHECK(run("verify --paper --emit-certificates '" + dir.string() + "'").exit_code == 0);
    const char* names[] = {"SAME_PENCIL",      "DISTINCT_V5_CASE1", "DISTINCT_V5_CASE2",
                           "DISTINCT_V4_I1",   "DISTINCT_V4_I2",    "DISTINCT_V4_II"};
    for (const char* name : names) {
        fs::path cert = dir / (std::string(name) + ".cert");
        REQUIRE(fs::exists(cert));
        std::string text = read_file(cert);
        CHECK(text.find(std::string("SCENARIO ") + name) == 0);
        CHECK(text.find("BOUND ") != std::string::npos);
    }
}

TEST_CASE("color is opt-in and NO_COLOR always wins") {
    // Piped output: no escape codes by default.
    CHECK(run("verify --paper").out.find('\x1b') == std::string::npos);

    std::string cmd = "env -u NO_COLOR '" + tool() + "' verify --paper --color-always";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string colored;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) colored.append(buffer, n);
    pclose(pipe);
    CHECK(colored.find("\x1b[32m") != std::string::npos);

    cmd = "env NO_COLOR=1 '" + tool() + "' verify --paper --color-always";
    pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string plain;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) plain.append(buffer, n);
    pclose(pipe);
    CHECK(plain.find('\x1b') == std::string::npos);
    CHECK(plain.find("18/18 checks passed") != std::string::npos);
}

TEST_CASE("exit codes separate usage, parse, data, and verification failures") {
    CHECK(run("2>/dev/null").exit_code == 1);          // missing subcommand
    CHECK(run("--help").exit_code == 0);
    CHECK(run("no-such-command 2>/dev/null").exit_code == 1);

    auto garbage = write_doc("garbage.txt", "this is not a document\n");
    CHECK(run("k3 '" + garbage.string() + "' 2>/dev/null").exit_code == 1);

    auto no_k3 = write_doc("no_k3.txt", "chi = 2\nbasket = (1,2)\n");
    CHECK(run("k3 '" + no_k3.string() + "' 2>/dev/null").exit_code == 2);

    CHECK(run("delta --fixture no-such-dataset 2>/dev/null").exit_code == 2);
    CHECK(run("bound --l2 0 --beta-tilde 1/19 2>/dev/null").exit_code == 2);
    CHECK(run("bound --l2 nonsense --beta-tilde 1/19 2>/dev/null").exit_code == 1);

    std::string wrong(kChenDoc);
    wrong.replace(wrong.find("1/1170"), 6, "1/1169");
    auto wrong_doc = write_doc("wrong_k3.txt", wrong);
    CHECK(run("verify '" + wrong_doc.string() + "' 2>/dev/null").exit_code == 3);
}

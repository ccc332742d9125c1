// End-to-end tests of the command-line driver: exit codes, configuration
// diagnostics, artifact production, task overrides, and byte-identical
// reruns under a different thread setting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string g_root;

/// Run the driver with the given arguments; returns the exit code and
/// captures combined stdout/stderr into `log`.
int run_cli(const std::string& args, std::string& log) {
    const std::string log_path = g_root + "/last_log.txt";
    const std::string cmd = std::string(TPNS_CLI_PATH) + " " + args + " > " +
                            log_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(log_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    log = buf.str();
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RootInit {
    RootInit() {
        char tmpl[] = "/tmp/tpns_cli_test_XXXXXX";
        g_root = mkdtemp(tmpl);
    }
} g_root_init;

} // namespace

TEST_CASE("smoke: one verification task produces one report and exit 0") {
    const std::string cfg = g_root + "/smoke.json";
    write_file(cfg, R"({
  "params": {"n_spatial": 16, "n_temporal": 2},
  "tasks": ["verify:lemma_4_3"],
  "output_dir": ")" + g_root + R"(/smoke_out"
})");
    std::string log;
    const int rc = run_cli("--config " + cfg, log);
    CHECK(rc == 0);
    CHECK(log.find("verify lemma_4_3: PASS") != std::string::npos);

    int files = 0;
    for (const auto& e : fs::directory_iterator(g_root + "/smoke_out")) {
        ++files;
        CHECK(e.path().filename().string() == "verify_lemma_4_3.json");
    }
    CHECK(files == 1);

    const std::string body = read_file(g_root + "/smoke_out/verify_lemma_4_3.json");
    CHECK(body.find("\"claim\": \"lemma_4_3\"") != std::string::npos);
    CHECK(body.find("\"pass\": true") != std::string::npos);
    CHECK(body.find("route_agreement") != std::string::npos);
}

TEST_CASE("zero drift is rejected at the parse stage with exit 2") {
    const std::string cfg = g_root + "/zerodrift.json";
    write_file(cfg, R"({
  "params": {"lambda": 0.0, "n_spatial": 16, "n_temporal": 1},
  "tasks": ["solve"],
  "output_dir": ")" + g_root + R"(/zd_out"
})");
    std::string log;
    const int rc = run_cli("--config " + cfg, log);
    CHECK(rc == 2);
    CHECK(log.find("drift required") != std::string::npos);
    CHECK(log.find("lambda") != std::string::npos);
    CHECK(log.find("line 2") != std::string::npos);
    // Failing before any computation: the output directory was never made.
    CHECK(!fs::exists(g_root + "/zd_out"));
}

TEST_CASE("malformed configuration names the key and line, exit 2") {
    const std::string cfg = g_root + "/badkey.json";
    write_file(cfg, R"({
  "params": {"n_spatial": 16},
  "tasks": 12,
  "output_dir": ")" + g_root + R"(/bk_out"
})");
    std::string log;
    CHECK(run_cli("--config " + cfg, log) == 2);
    CHECK(log.find("tasks") != std::string::npos);
    CHECK(log.find("line 3") != std::string::npos);

    const std::string cfg2 = g_root + "/syntax.json";
    write_file(cfg2, "{\n  \"tasks\": [\n");
    CHECK(run_cli("--config " + cfg2, log) == 2);
    CHECK(log.find("syntax error") != std::string::npos);

    const std::string cfg3 = g_root + "/noout.json";
    write_file(cfg3, R"({"tasks": ["solve"]})");
    CHECK(run_cli("--config " + cfg3, log) == 2);
    CHECK(log.find("output_dir") != std::string::npos);
}

TEST_CASE("missing config file and bad flags exit 2") {
    std::string log;
    CHECK(run_cli("--config " + g_root + "/does_not_exist.json", log) == 2);
    CHECK(log.find("cannot read") != std::string::npos);
    CHECK(run_cli("--nonsense", log) == 2);
}

TEST_CASE("task override replaces the configured task list") {
    const std::string cfg = g_root + "/override.json";
    write_file(cfg, R"({
  "params": {"n_spatial": 16, "n_temporal": 2},
  "tasks": ["verify:lemma_4_3"],
  "output_dir": ")" + g_root + R"(/ov_out"
})");
    std::string log;
    const int rc = run_cli("--config " + cfg + " --task verify:lemma_4_2 --out " +
                               g_root + "/ov_out2",
                           log);
    CHECK(rc == 0);
    CHECK(fs::exists(g_root + "/ov_out2/verify_lemma_4_2.json"));
    CHECK(!fs::exists(g_root + "/ov_out"));

    CHECK(run_cli("--config " + cfg + " --task frobnicate", log) == 2);
}

TEST_CASE("rerun with a different thread count is byte-identical") {
    const std::string cfg = g_root + "/det.json";
    write_file(cfg, R"({
  "params": {"n_spatial": 16, "n_temporal": 2},
  "tasks": ["verify:lemma_4_2", "solve"],
  "output_dir": ")" + g_root + R"(/det_a"
})");
    std::string log;
    REQUIRE(run_cli("--config " + cfg + " --threads 1", log) == 0);
    REQUIRE(run_cli("--config " + cfg + " --threads 4 --out " + g_root +
                        "/det_b",
                    log) == 0);

    int compared = 0;
    for (const auto& e : fs::directory_iterator(g_root + "/det_a")) {
        const std::string name = e.path().filename().string();
        const std::string other = g_root + "/det_b/" + name;
        REQUIRE(fs::exists(other));
        CHECK(read_file(e.path().string()) == read_file(other));
        ++compared;
    }
    // verify report, solve summary, and the two field dump files.
    CHECK(compared == 4);
}

// Command-line driver: parses flags, loads the JSON configuration file, and
// delegates to the shared library through the C API.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <tpns/tpns.h>

int main(int argc, char** argv) {
    CLI::App app{"Time-periodic flow kernels, solver, and verification runs"};
    std::string config_path;
    std::string task_override;
    std::string out_override;
    int threads = 1;
    app.add_option("--config", config_path, "Path to the JSON run configuration")
        ->required();
    app.add_option("--task", task_override,
                   "Run a single task, overriding the configured task list");
    app.add_option("--out", out_override,
                   "Output directory, overriding the configured output_dir");
    app.add_option("--threads", threads,
                   "Worker thread count (results do not depend on it)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read config file '%s'\n",
                     config_path.c_str());
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const tpns_status st = tpns_run_json(
        text.c_str(), config_path.c_str(),
        out_override.empty() ? nullptr : out_override.c_str(),
        task_override.empty() ? nullptr : task_override.c_str(), threads);
    if (st != TPNS_OK) std::fprintf(stderr, "error: %s\n", tpns_last_error());
    switch (st) {
        case TPNS_OK:
            return 0;
        case TPNS_ERR_VERIFY:
            return 1;
        case TPNS_ERR_NUMERIC:
            return 3;
        default:
            return 2;
    }
}

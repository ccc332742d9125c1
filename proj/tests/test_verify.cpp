// Unit tests for the verification layer and run configuration: claim report
// bookkeeping, the fast symbol claim end to end, integrability exponent
// guards, and configuration parsing with key/line diagnostics.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "errors.hpp"
#include "params.hpp"
#include "runner.hpp"
#include "verify.hpp"

using namespace tpns;

TEST_CASE("claim report: comparison semantics and aggregation") {
    ClaimReport rep;
    rep.claim_id = "demo";
    rep.add("a", 0.5, "<=", 1.0);
    CHECK(rep.pass);
    rep.add("b", 0.5, ">", 0.0);
    CHECK(rep.pass);
    rep.add("c", 2.0, "<=", 1.0);
    CHECK(!rep.pass);
    rep.add("d", 1.0, "==", 1.0);
    CHECK(rep.checks.size() == 4);
    CHECK(rep.checks[2].pass == false);
    CHECK(rep.checks[3].pass == true);

    const ojson j = rep.to_json();
    CHECK(j["claim"] == "demo");
    CHECK(j["pass"] == false);
    CHECK(j["checks"].size() == 4);
    CHECK(j["checks"][0]["name"] == "a");
    CHECK(j["checks"][0]["cmp"] == "<=");
    CHECK(!j.contains("runtime_seconds"));
}

TEST_CASE("symbol claim passes on a small lattice") {
    Params p;
    p.n_spatial = 16;
    p.n_temporal = 2;
    const ClaimReport rep = verify_symbol_nonvanishing(p);
    CHECK(rep.claim_id == "lemma_4_2");
    CHECK(rep.pass);

    bool found_roundtrip = false;
    for (const CheckResult& c : rep.checks) {
        if (c.name == "oscillatory_roundtrip") {
            found_roundtrip = true;
            CHECK(c.value <= 1e-9);
        }
        if (c.name == "base_mode_denominator_error") CHECK(c.value == 0.0);
        if (c.name == "oscillatory_min_positive") CHECK(c.value > 0.0);
    }
    CHECK(found_roundtrip);
    CHECK(rep.details.contains("min_denominator_mode"));
}

TEST_CASE("integrability masses: exponent guards and positivity") {
    CHECK_THROWS_AS(integrability_mass(1.8, false, 4.0, 1.0, 1, 1.0,
                                       2.0 * M_PI),
                    ConfigError);
    CHECK_THROWS_AS(integrability_mass(1.0, false, 4.0, 1.0, 1, 1.0,
                                       2.0 * M_PI),
                    ConfigError);
    CHECK_THROWS_AS(integrability_mass(1.5, true, 4.0, 1.0, 1, 1.0,
                                       2.0 * M_PI),
                    ConfigError);

    const double m = integrability_mass(1.2, false, 4.0, 1.0, 1, 1.0,
                                        2.0 * M_PI);
    const double mg = integrability_mass(1.2, true, 4.0, 1.0, 1, 1.0,
                                         2.0 * M_PI);
    CHECK(m > 0.0);
    CHECK(mg > 0.0);
    // The mass grows with the ball.
    const double m8 = integrability_mass(1.2, false, 8.0, 1.0, 1, 1.0,
                                         2.0 * M_PI);
    CHECK(m8 > m);
}

TEST_CASE("run configuration: defaults, overrides, validation") {
    const std::string text = R"({
  "params": {"lambda": 1.0, "n_spatial": 16, "n_temporal": 2},
  "tasks": ["verify:lemma_4_2"],
  "output_dir": "/tmp/run_cfg_test",
  "seed": 7
})";
    const RunConfig cfg = parse_run_config(text);
    CHECK(cfg.params.n_spatial == 16);
    CHECK(cfg.params.n_temporal == 2);
    CHECK(cfg.params.period == doctest::Approx(2.0 * M_PI));
    CHECK(cfg.tasks.size() == 1);
    CHECK(cfg.tasks[0] == "verify:lemma_4_2");
    CHECK(cfg.output_dir == "/tmp/run_cfg_test");
    CHECK(cfg.seed == 7);
    // Pinned default forcing direction (1, 0.5, 0) scaled to length 0.05.
    CHECK(cfg.forcing.amplitude[0] ==
          doctest::Approx(0.04472135955).epsilon(1e-10));
    CHECK(cfg.forcing.amplitude[1] ==
          doctest::Approx(0.02236067977).epsilon(1e-10));
}

TEST_CASE("run configuration: diagnostics name the key and line") {
    auto message_of = [](const std::string& text) -> std::string {
        try {
            parse_run_config(text);
        } catch (const ConfigError& e) {
            return e.what();
        }
        return "";
    };

    // Zero drift is rejected at the parse stage with its line.
    {
        const std::string msg = message_of(R"({
  "params": {"lambda": 0.0},
  "tasks": ["solve"],
  "output_dir": "/tmp/x"
})");
        CHECK(msg.find("drift required") != std::string::npos);
        CHECK(msg.find("lambda") != std::string::npos);
        CHECK(msg.find("(line 2)") != std::string::npos);
    }
    // Unknown keys are named.
    {
        const std::string msg = message_of(R"({
  "params": {"lambda": 1.0, "n_spatail": 16},
  "tasks": ["solve"],
  "output_dir": "/tmp/x"
})");
        CHECK(msg.find("n_spatail") != std::string::npos);
        CHECK(msg.find("(line 2)") != std::string::npos);
        CHECK(msg.find("unexpected key") != std::string::npos);
    }
    // Wrong types are named with their line.
    {
        const std::string msg = message_of(R"({
  "params": {"lambda": 1.0},
  "tasks": "solve",
  "output_dir": "/tmp/x"
})");
        CHECK(msg.find("tasks") != std::string::npos);
        CHECK(msg.find("(line 3)") != std::string::npos);
    }
    // Syntax errors carry a line number.
    {
        const std::string msg = message_of("{\n  \"tasks\": [,\n}");
        CHECK(msg.find("syntax error") != std::string::npos);
        CHECK(msg.find("line 2") != std::string::npos);
    }
    // Required keys.
    CHECK(message_of(R"({"output_dir": "/tmp/x"})").find("tasks") !=
          std::string::npos);
    CHECK(message_of(R"({"tasks": ["solve"]})").find("output_dir") !=
          std::string::npos);
    // Unknown task names.
    {
        const std::string msg = message_of(R"({
  "tasks": ["frobnicate"],
  "output_dir": "/tmp/x"
})");
        CHECK(msg.find("frobnicate") != std::string::npos);
    }
    // Unknown claim id inside a verify task.
    {
        const std::string msg = message_of(R"({
  "tasks": ["verify:lemma_9_9"],
  "output_dir": "/tmp/x"
})");
        CHECK(msg.find("verify:lemma_9_9") != std::string::npos);
    }
}

#include "teich/cli/config.hpp"
#include "teich/cli/report.hpp"
#include "teich/cli/suites.hpp"
#include "teich/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace teich;
using namespace teich::cli;
using nlohmann::json;

TEST_CASE("config defaults and overrides") {
  const RunConfig d = parse_config(json::object());
  CHECK(d.p == 2);
  CHECK(d.ell == 5);
  CHECK(d.theta_truncation == 6);
  const RunConfig c = parse_config(json::parse(R"({"p": 3, "ell": 7, "v_q": "3/2", "rho_weight": "unit",
      "epsilon_grid": ["1/5"], "theta_sign_convention": "unsigned", "output_format": "csv"})"));
  CHECK(c.p == 3);
  CHECK(c.v_q == make_rat(3, 2));
  CHECK_FALSE(c.rho_weight.has_value());
  CHECK(c.epsilon_grid == std::vector<Rat>{make_rat(1, 5)});
  CHECK(c.theta_sign == SignConvention::Unsigned);
  CHECK(c.output_format == OutputFormat::Csv);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config(json::parse(R"({"bogus": 1})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"v_q": 1.5})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"v_q": "0"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"p": 4})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"ell": 9})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"ell": 2})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"p": 5, "ell": 5})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"theta_truncation": 0})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"theta_sign_convention": "both"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"output_format": "xml"})")), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("every default suite passes") {
  const RunConfig cfg;
  const auto reports = run_command("all", cfg);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) {
    INFO(r.suite);
    for (const auto& c : r.checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
  }
  CHECK(exit_code(reports) == 0);
  CHECK_THROWS_AS(run_command("nope", cfg), Error);
}

TEST_CASE("bound at ell = 3 fails with an equality note") {
  RunConfig cfg;
  cfg.ell = 3;
  const auto reports = run_command("bound", cfg);
  CHECK(exit_code(reports) == 1);
  const auto& checks = reports.at(0).checks;
  const auto it = std::find_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; });
  REQUIRE(it != checks.end());
  CHECK(it->note.find("equality") != std::string::npos);
}

TEST_CASE("verify-theta errors and controls") {
  RunConfig cfg;
  cfg.ell = 7;
  cfg.theta_truncation = 2;
  CHECK_THROWS_AS(run_command("verify-theta", cfg), WindowError);
  cfg.ell = 5;
  cfg.theta_truncation = 6;
  cfg.theta_sign = SignConvention::Unsigned;
  CHECK(exit_code(run_command("verify-theta", cfg)) == 1);
}

TEST_CASE("loglink precision error") {
  RunConfig cfg;
  cfg.padic_precision = 2;
  CHECK_THROWS_AS(run_command("loglink", cfg), PrecisionError);
}

TEST_CASE("json report is deterministic and float-free") {
  const RunConfig cfg;
  const std::string a = render(OutputFormat::Json, "all", cfg, run_command("all", cfg));
  const std::string b = render(OutputFormat::Json, "all", cfg, run_command("all", cfg));
  CHECK(a == b);
  const json doc = json::parse(a);
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["status"] == "pass");
  CHECK(doc["suites"].size() == 5);
  CHECK_FALSE(doc["suites"][0].contains("wall_time_us"));
  CHECK(doc["config"]["v_q"] == "1/1");
  bool any_float = false;
  std::function<void(const json&)> walk = [&](const json& j) {
    if (j.is_number_float()) any_float = true;
    if (j.is_structured())
      for (const auto& x : j) walk(x);
  };
  walk(doc);
  CHECK_FALSE(any_float);
  const auto timed = run_command("bound", cfg, true);
  CHECK(timed.at(0).wall_time_us.has_value());
}

TEST_CASE("csv and text renderings") {
  Report r{"demo", {}, std::nullopt};
  r.add("plain", "demo:plain", true).with("x", make_rat(1, 2));
  r.add("quoted", "demo:quoted", false, "has, comma");
  const std::string csv = render_csv({r});
  CHECK(csv == "suite,check,anchor,status,witness,note\n"
               "demo,plain,demo:plain,pass,x=1/2,\n"
               "demo,quoted,demo:quoted,fail,,\"has, comma\"\n");
  const std::string text = render_text("demo", RunConfig{}, {r});
  CHECK(text.find("plain") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
}

#include <doctest.h>

#include <sstream>

#include "core/error.hpp"
#include "core/experiments.hpp"

using namespace reeb;
using Json = nlohmann::json;

namespace {

std::vector<Json> records(const ExperimentReport& r) {
  std::vector<Json> out;
  std::istringstream in(format_report_records(r));
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_SUITE("experiments") {
  TEST_CASE("every experiment runs a few trials cleanly") {
    for (const auto& name : experiment_names()) {
      ExperimentConfig c;
      c.trials = name == "path-equivalence" ? 3 : 6;
      auto r = run_experiment(name, c);
      CHECK_MESSAGE(r.ok(), name, "\n", format_report_text(r));
      for (const auto& t : r.trials) CHECK_FALSE(t.data.contains("error"));
    }
  }

  TEST_CASE("fixed experiments ignore the trial count") {
    ExperimentConfig c;
    c.trials = 3;
    CHECK(run_experiment("figure1", c).trials.size() == 1);
    CHECK(run_experiment("figure5", c).trials.size() == 8);
  }

  TEST_CASE("runs are deterministic in the seed") {
    ExperimentConfig c;
    c.trials = 5;
    auto a = format_report_records(run_experiment("stability", c));
    auto b = format_report_records(run_experiment("stability", c));
    CHECK(a == b);
    c.seed = 2;
    CHECK(format_report_records(run_experiment("stability", c)) != a);
  }

  TEST_CASE("records end with a summary") {
    ExperimentConfig c;
    c.trials = 4;
    auto r = run_experiment("recovery", c);
    auto recs = records(r);
    REQUIRE(recs.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(recs[i]["experiment"] == "recovery");
      CHECK(recs[i]["trial"] == i);
      CHECK(recs[i].contains("pass"));
    }
    CHECK(recs.back()["summary"] == true);
    CHECK(recs.back()["ok"] == r.ok());
    CHECK(recs.back()["K"] == "1/22");
    CHECK(recs.back().contains("hypothesis_met"));
    CHECK(format_report_text(r).find("recovery: ") != std::string::npos);
  }

  TEST_CASE("configuration is checked") {
    ExperimentConfig c;
    c.K = Rational(1, 21);
    CHECK_THROWS_AS(run_experiment("recovery", c), InvalidArgument);
    c = {};
    c.epsilon_fraction = 1;
    CHECK_THROWS_AS(check_config(c), InvalidArgument);
    c = {};
    c.min_critical = 9;
    CHECK_THROWS_AS(check_config(c), InvalidArgument);
    CHECK_THROWS_AS(run_experiment("nope", {}), InvalidArgument);
  }
}

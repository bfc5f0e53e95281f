#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "helpers.hpp"

using namespace qnil;
using namespace qnil::cli;

namespace {

std::optional<RunConfig> parse(std::vector<const char*> args) {
  args.insert(args.begin(), "qnil");
  return parse_config(static_cast<int>(args.size()), args.data());
}

}  // namespace

TEST_CASE("parse the basis command") {
  const auto cfg = parse({"basis", "dcb", "--cartan", "A2", "--word", "1,2,1", "--height", "4"});
  REQUIRE(cfg);
  CHECK(cfg->cartan->name() == "A2");
  CHECK(*cfg->word == Word{0, 1, 0});
  CHECK(cfg->height == 4);
  CHECK(cfg->command == "basis");
  CHECK(cfg->kind == "dcb");
  CHECK(cfg->format == "json");
}

TEST_CASE("flags override the configuration file") {
  const std::string path = "qnil_test_config.toml";
  {
    std::ofstream f(path);
    f << "cartan = \"B2\"\nheight = 2\nword = \"1,2\"\n";
  }
  const auto cfg = parse({"basis", "pbw", "--config", path.c_str(), "--cartan", "A2"});
  REQUIRE(cfg);
  CHECK(cfg->cartan->name() == "A2");
  CHECK(cfg->height == 2);
  CHECK(*cfg->word == Word{0, 1});
  {
    std::ofstream f(path);
    f << "colour = \"red\"\n";
  }
  CHECK_THROWS_AS(parse({"verify", "all", "--config", path.c_str()}), UsageError);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse({"basis", "dcb", "--cartan", "A2", "--word", "1,3"}), UsageError);
  CHECK_THROWS_AS(parse({"basis", "dcb", "--word", "1,x"}), UsageError);
  CHECK_THROWS_AS(parse({"basis", "nope"}), UsageError);
  CHECK_THROWS_AS(parse({"basis", "pbw", "--height", "-1"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "tsystem", "--cartan", "Q5"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "tsystem", "--order", "1,1"}), UsageError);
  CHECK_THROWS_AS(parse({"minor", "--lambda", "1"}), UsageError);
  CHECK_THROWS_AS(parse({}), UsageError);
  CHECK_THROWS_AS(run(*parse({"verify", "tsystem", "--word", "1,2,1"})), UsageError);
  CHECK_THROWS_AS(run(*parse({"twist", "--w", "1"})), UsageError);
}

TEST_CASE("tsystem report") {
  const RunResult r = run(*parse({"verify", "tsystem", "--cartan", "A2", "--word", "1,2,1", "--b", "1", "--d", "3"}));
  CHECK(r.status == 0);
  CHECK(r.report["schema"] == "qnil/1");
  CHECK(r.report["report"]["A"] == -1);
  CHECK(r.report["report"]["B"] == 0);
  CHECK(r.report["report"]["C"] == 0);
  CHECK(r.report["status"] == "pass");
}

TEST_CASE("dcbtwist report") {
  const RunResult r = run(*parse({"verify", "dcbtwist", "--cartan", "A2", "--word", "1,2,1", "--height", "4"}));
  CHECK(r.status == 0);
  CHECK(r.report["results"].size() > 0);
  for (const auto& e : r.report["results"]) CHECK(e["pass"] == true);
}

TEST_CASE("empty word passes trivially") {
  for (const char* kind : {"rootvectors", "pbwrev", "dcbtwist", "revlex", "tsystem", "tsystemtwist"}) {
    const RunResult r = run(*parse({"verify", kind, "--word", ""}));
    CHECK(r.status == 0);
  }
  CHECK(run(*parse({"basis", "dcb", "--word", ""})).status == 0);
}

TEST_CASE("twist command") {
  const RunResult r = run(*parse({"twist", "--w", "1,2,1", "--fword", "1"}));
  CHECK(r.report["in_minus"] == true);
  CHECK(felement_from_json(r.report["minus_part"]) == FElement::word({1}));
  const RunResult s = run(*parse({"twist", "--w", "1,2", "--inverse", "--fword", R"([[[2], {"num": [[0,1]], "den": [[0,1]]}]])"}));
  CHECK(s.report["w"] == Json::parse("[2,1]"));
}

TEST_CASE("reports are deterministic") {
  const auto cfg = *parse({"basis", "glow", "--cartan", "B2", "--word", "1,2,1,2", "--height", "3"});
  CHECK(render(run(cfg).report, "json") == render(run(cfg).report, "json"));
  CHECK(render(run(cfg).report, "text") == render(run(cfg).report, "text"));
}

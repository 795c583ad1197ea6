#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "suig/scenario.hpp"
#include "suig/sweep.hpp"
#include "suig/trace_io.hpp"

using namespace suig;
using nlohmann::json;

namespace {

const char* kMinimal = R"({
  "algorithm": "suir",
  "robots": [
    {"position": ["0", "0"]},
    {"position": [1, "0"], "frame": {"a": "-1/2", "b": 0, "reflect": true}}
  ],
  "scheduler": {"kind": "fsync"},
  "movement": {"policy": "rigid", "delta": "1/10"}
})";

std::vector<std::string> violations_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.violations;
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::string with(const std::string& patch_path, const json& value) {
  json doc = json::parse(kMinimal);
  doc[json::json_pointer(patch_path)] = value;
  return doc.dump();
}

}  // namespace

TEST_CASE("a minimal scenario parses") {
  const Scenario s = parse_scenario(kMinimal);
  CHECK(s.algorithm == AlgorithmKind::Suir);
  REQUIRE(s.robots.size() == 2);
  CHECK(s.robots[1].position == Point2{Scalar(1), Scalar(0)});
  CHECK(s.robots[1].frame == Frame{Rational(-1, 2), Rational(0), true});
  CHECK(s.robots[0].frame == Frame::identity());
  CHECK(s.movement.delta == Rational(1, 10));
  CHECK(s.max_rounds == 10'000);
}

TEST_CASE("the sample scenario file parses and gathers") {
  std::ifstream in(SUIG_TEST_DATA "/suir_two_robots.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const Scenario s = parse_scenario(buf.str());
  CHECK(run(s, ExecutionMode::Serial).verdict.kind == VerdictKind::Gathered);
}

TEST_CASE("invalid scenarios are rejected with field paths") {
  json crashed = json::parse(kMinimal);
  crashed["robots"][0]["crashed"] = true;
  crashed["robots"][1]["crashed"] = true;
  CHECK(mentions(violations_of(crashed.dump()), "single crashed location"));

  CHECK(mentions(violations_of(with("/movement/delta", "0")), "$.movement.delta: must be a positive distance"));
  CHECK(mentions(violations_of(with("/movement/delta", "-1/2")), "$.movement.delta"));
  CHECK(mentions(violations_of(with("/robots/0/frame", json{{"a", "0"}, {"b", "0"}})), "$.robots[0].frame"));
  CHECK(mentions(violations_of(with("/robots/0/colour", "red")), "$.robots[0].colour: unknown field"));
  CHECK(mentions(violations_of(with("/extra", 1)), "$.extra: unknown field"));
  CHECK(mentions(violations_of(with("/robots/0/position/0", 0.5)), "$.robots[0].position"));
  CHECK(mentions(violations_of(with("/robots", json::array())), "at least one robot"));
  CHECK(mentions(violations_of(with("/max_rounds", 0)), "$.max_rounds"));
  CHECK(mentions(violations_of(with("/algorithm", "teleport")), "$.algorithm"));
  CHECK(mentions(violations_of(with("/movement/delta", "sqrt3")), "must be rational"));
  CHECK_FALSE(violations_of("{not json").empty());

  json impossible = json::parse(kMinimal);
  impossible["scheduler"]["kind"] = "ssync_impossibility";
  impossible["robots"][0]["crashed"] = true;
  CHECK(mentions(violations_of(impossible.dump()), "crash-free"));

  // Every violation is reported, not only the first.
  json many = json::parse(kMinimal);
  many["movement"]["delta"] = "0";
  many["max_rounds"] = 0;
  CHECK(violations_of(many.dump()).size() >= 2);
}

TEST_CASE("axis rendezvous frames must agree on north") {
  json doc = json::parse(kMinimal);
  doc["algorithm"] = "axis_rdv";
  // A negative scale with the reflection keeps north: (x, y) -> (-x/2, y/2).
  CHECK(violations_of(doc.dump()).empty());
  doc["robots"][1]["frame"] = {{"a", "-1"}, {"b", "0"}, {"reflect", false}};
  CHECK(mentions(violations_of(doc.dump()), "agree on the y axis"));
  doc["robots"][1]["frame"] = {{"a", "3/5"}, {"b", "4/5"}, {"reflect", false}};
  CHECK(mentions(violations_of(doc.dump()), "agree on the y axis"));
  doc["robots"][1]["frame"] = {{"a", "2"}, {"b", "0"}, {"reflect", false}};
  CHECK(violations_of(doc.dump()).empty());
  doc["robots"][1]["frame"] = {{"a", "-1"}, {"b", "0"}, {"reflect", true}};
  CHECK(violations_of(doc.dump()).empty());
}

TEST_CASE("serialize and parse round trip") {
  for (SweepFamily family : {SweepFamily::SuirContraction, SweepFamily::SuigNoCrash, SweepFamily::SuigCrash}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Scenario s = generate_case(family, seed).scenario;
      s.outputs.trace = "t.jsonl";
      const std::string text = serialize_scenario(s);
      const Scenario back = parse_scenario(text);
      CHECK(back == s);
      CHECK(serialize_scenario(back) == text);
    }
  }
  Scenario scripted = parse_scenario(kMinimal);
  scripted.movement.kind = MovementKind::Scripted;
  scripted.movement.script = {{Rational(1, 2), Rational(1)}, {Rational(1, 3)}};
  scripted.robots[0].position = {Scalar(Rational(1, 2), Rational(1, 3)), Scalar(0)};
  CHECK(parse_scenario(serialize_scenario(scripted)) == scripted);
}

TEST_CASE("digest ignores output paths only") {
  Scenario a = parse_scenario(kMinimal);
  Scenario b = a;
  b.outputs.trace = "elsewhere.jsonl";
  CHECK(scenario_digest(a) == scenario_digest(b));
  CHECK(scenario_digest(a).size() == 16);
  b.movement.delta = Rational(1, 9);
  CHECK(scenario_digest(a) != scenario_digest(b));
}

TEST_CASE("trace records follow the documented schema") {
  const Scenario s = generate_case(SweepFamily::SuigCrash, 1003).scenario;
  const Trace t = run(s, ExecutionMode::Serial);
  std::ostringstream out;
  write_trace_jsonl(out, t, {&s, true});
  std::istringstream in(out.str());
  std::string line;
  std::vector<json> recs;
  while (std::getline(in, line)) recs.push_back(json::parse(line));
  REQUIRE(recs.size() == t.length() + 2);

  const json& head = recs.front();
  CHECK(head["type"] == "header");
  CHECK(head["format"] == 1);
  CHECK(head["digest"] == scenario_digest(s));
  CHECK(head["algorithm"] == "suig");
  CHECK(head["robots"].size() == s.robots.size());
  CHECK(head["robots"][0].contains("frame"));
  CHECK(parse_scenario(head["scenario"].dump()) == s);

  for (std::size_t i = 1; i + 1 < recs.size(); ++i) {
    const json& r = recs[i];
    CHECK(r["type"] == "round");
    CHECK(r["round"] == i);
    CHECK(r["positions"].size() == s.robots.size());
    CHECK(r["steps"].size() == r["active"].size());
    for (const json& st : r["steps"]) {
      CHECK(st.contains("tag"));
      CHECK(st["destination"].size() == 2);
      // Positions are exact text scalars.
      CHECK(st["stop"][0].is_string());
    }
  }
  const json& v = recs.back();
  CHECK(v["type"] == "verdict");
  CHECK(v["verdict"] == "gathered");
  CHECK(v["round"] == t.verdict.round);
  CHECK(v.contains("activation"));
}

TEST_CASE("summary rows describe every configuration") {
  const Scenario s = generate_case(SweepFamily::SuigNoCrash, 4).scenario;
  const Trace t = run(s, ExecutionMode::Serial);
  std::ostringstream out;
  write_summary_csv(out, t);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "round,occupied,sec_diameter_sq,min_level,max_level,phases");
  std::size_t rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == t.length() + 1);
  CHECK(last.rfind(std::to_string(t.length()) + ",1,0,", 0) == 0);
}

#include "suig/scenario.hpp"

#include <cstdio>
#include <initializer_list>
#include <optional>

#include <json.hpp>

namespace suig {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

  bool object(const json& v, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!v.is_object()) {
      fail(path, "expected an object");
      return false;
    }
    for (const auto& [key, _] : v.items()) {
      bool known = false;
      for (auto a : allowed) known = known || a == key;
      if (!known) fail(path + "." + key, "unknown field");
    }
    return true;
  }

  std::optional<Scalar> scalar(const json& v, const std::string& path) {
    try {
      if (v.is_number_integer()) return Scalar(Rational(std::to_string(v.get<long long>())));
      if (v.is_string()) return Scalar::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
      return std::nullopt;
    }
    fail(path, "expected an exact scalar string or an integer");
    return std::nullopt;
  }

  std::optional<Rational> rational(const json& v, const std::string& path) {
    auto s = scalar(v, path);
    if (!s) return std::nullopt;
    if (!s->is_rational()) {
      fail(path, "must be rational");
      return std::nullopt;
    }
    return s->rational_part();
  }

  template <typename T>
  std::optional<T> unsigned_int(const json& v, const std::string& path) {
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<T>();
    fail(path, "expected a non-negative integer");
    return std::nullopt;
  }

  std::optional<bool> boolean(const json& v, const std::string& path) {
    if (v.is_boolean()) return v.get<bool>();
    fail(path, "expected a boolean");
    return std::nullopt;
  }

  std::optional<std::string> string(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    fail(path, "expected a string");
    return std::nullopt;
  }
};

json rational_json(const Rational& q) { return q.get_str(); }

json to_json(const Scenario& s, bool with_outputs) {
  json robots = json::array();
  for (const RobotSpec& r : s.robots) {
    robots.push_back({{"position", {r.position.x.to_string(), r.position.y.to_string()}},
                      {"frame", {{"a", rational_json(r.frame.a)},
                                 {"b", rational_json(r.frame.b)},
                                 {"reflect", r.frame.reflect}}},
                      {"crashed", r.crashed}});
  }
  json script = json::array();
  for (const auto& round : s.movement.script) {
    json row = json::array();
    for (const auto& f : round) row.push_back(rational_json(f));
    script.push_back(std::move(row));
  }
  json out = {{"algorithm", std::string(to_string(s.algorithm))},
              {"robots", std::move(robots)},
              {"scheduler", {{"kind", std::string(to_string(s.scheduler.kind))}, {"seed", s.scheduler.seed}}},
              {"movement", {{"policy", std::string(to_string(s.movement.kind))},
                            {"delta", rational_json(s.movement.delta)},
                            {"seed", s.movement.seed},
                            {"script", std::move(script)}}},
              {"max_rounds", s.max_rounds},
              {"max_bits", s.max_bits}};
  if (with_outputs) out["outputs"] = {{"trace", s.outputs.trace}, {"summary", s.outputs.summary}};
  return out;
}

}  // namespace

Configuration Scenario::configuration() const {
  Configuration c;
  c.robots.reserve(robots.size());
  for (std::size_t i = 0; i < robots.size(); ++i) {
    c.robots.push_back({static_cast<RobotId>(i), robots[i].position, robots[i].frame, robots[i].crashed});
  }
  return c;
}

ScenarioError::ScenarioError(std::vector<std::string> v)
    : std::runtime_error("invalid scenario: " + join(v)), violations(std::move(v)) {}

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> out;
  if (s.robots.empty()) out.emplace_back("$.robots: at least one robot is required");
  std::optional<Point2> crash;
  bool multiple_crash_points = false;
  for (std::size_t i = 0; i < s.robots.size(); ++i) {
    const RobotSpec& r = s.robots[i];
    const std::string path = "$.robots[" + std::to_string(i) + "]";
    if (!r.frame.invertible()) out.push_back(path + ".frame: frame is not invertible (a = b = 0)");
    if (s.algorithm == AlgorithmKind::AxisRdv) {
      const bool keeps_north = sgn(r.frame.b) == 0 && ((sgn(r.frame.a) > 0 && !r.frame.reflect) ||
                                                       (sgn(r.frame.a) < 0 && r.frame.reflect));
      if (!keeps_north) out.push_back(path + ".frame: axis_rdv requires frames that agree on the y axis");
    }
    if (r.crashed) {
      if (crash && *crash != r.position) multiple_crash_points = true;
      if (!crash) crash = r.position;
    }
  }
  if (multiple_crash_points) {
    out.emplace_back("$.robots: crashed robots must share a single crashed location");
  }
  if (sgn(s.movement.delta) <= 0) out.emplace_back("$.movement.delta: must be a positive distance");
  for (std::size_t t = 0; t < s.movement.script.size(); ++t) {
    for (std::size_t i = 0; i < s.movement.script[t].size(); ++i) {
      const Rational& f = s.movement.script[t][i];
      if (sgn(f) < 0 || f > 1) {
        out.push_back("$.movement.script[" + std::to_string(t) + "][" + std::to_string(i) +
                      "]: stop fraction must lie in [0, 1]");
      }
    }
  }
  if (s.max_rounds < 1) out.emplace_back("$.max_rounds: must be at least 1");
  if (s.max_bits < 1) out.emplace_back("$.max_bits: must be at least 1");
  if (s.scheduler.kind == SchedulerKind::SsyncImpossibility && crash) {
    out.emplace_back("$.scheduler.kind: ssync_impossibility requires crash-free robots");
  }
  return out;
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError({std::string("$: malformed JSON: ") + e.what()});
  }
  Reader rd;
  Scenario s;
  if (!rd.object(doc, "$", {"algorithm", "robots", "scheduler", "movement", "max_rounds", "max_bits", "outputs"})) {
    throw ScenarioError(rd.errors);
  }

  if (!doc.contains("algorithm")) {
    rd.fail("$.algorithm", "required field missing");
  } else if (auto name = rd.string(doc["algorithm"], "$.algorithm")) {
    try {
      s.algorithm = parse_algorithm(*name);
    } catch (const std::exception& e) {
      rd.fail("$.algorithm", e.what());
    }
  }

  if (!doc.contains("robots")) {
    rd.fail("$.robots", "required field missing");
  } else if (!doc["robots"].is_array()) {
    rd.fail("$.robots", "expected an array");
  } else {
    const json& robots = doc["robots"];
    for (std::size_t i = 0; i < robots.size(); ++i) {
      const std::string path = "$.robots[" + std::to_string(i) + "]";
      const json& r = robots[i];
      if (!rd.object(r, path, {"position", "frame", "crashed"})) continue;
      RobotSpec spec;
      if (!r.contains("position")) {
        rd.fail(path + ".position", "required field missing");
      } else if (!r["position"].is_array() || r["position"].size() != 2) {
        rd.fail(path + ".position", "expected [x, y]");
      } else {
        auto x = rd.scalar(r["position"][0], path + ".position[0]");
        auto y = rd.scalar(r["position"][1], path + ".position[1]");
        if (x && y) spec.position = {*x, *y};
      }
      if (r.contains("frame") && rd.object(r["frame"], path + ".frame", {"a", "b", "reflect"})) {
        const json& f = r["frame"];
        if (f.contains("a")) {
          if (auto a = rd.rational(f["a"], path + ".frame.a")) spec.frame.a = *a;
        }
        if (f.contains("b")) {
          if (auto b = rd.rational(f["b"], path + ".frame.b")) spec.frame.b = *b;
        }
        if (f.contains("reflect")) {
          if (auto b = rd.boolean(f["reflect"], path + ".frame.reflect")) spec.frame.reflect = *b;
        }
      }
      if (r.contains("crashed")) {
        if (auto c = rd.boolean(r["crashed"], path + ".crashed")) spec.crashed = *c;
      }
      s.robots.push_back(std::move(spec));
    }
  }

  if (doc.contains("scheduler") && rd.object(doc["scheduler"], "$.scheduler", {"kind", "seed"})) {
    const json& sc = doc["scheduler"];
    if (sc.contains("kind")) {
      if (auto k = rd.string(sc["kind"], "$.scheduler.kind")) {
        try {
          s.scheduler.kind = parse_scheduler(*k);
        } catch (const std::exception& e) {
          rd.fail("$.scheduler.kind", e.what());
        }
      }
    }
    if (sc.contains("seed")) {
      if (auto v = rd.unsigned_int<std::uint64_t>(sc["seed"], "$.scheduler.seed")) s.scheduler.seed = *v;
    }
  }

  if (doc.contains("movement") && rd.object(doc["movement"], "$.movement", {"policy", "delta", "seed", "script"})) {
    const json& mv = doc["movement"];
    if (mv.contains("policy")) {
      if (auto k = rd.string(mv["policy"], "$.movement.policy")) {
        try {
          s.movement.kind = parse_movement(*k);
        } catch (const std::exception& e) {
          rd.fail("$.movement.policy", e.what());
        }
      }
    }
    if (mv.contains("delta")) {
      if (auto d = rd.rational(mv["delta"], "$.movement.delta")) s.movement.delta = *d;
    }
    if (mv.contains("seed")) {
      if (auto v = rd.unsigned_int<std::uint64_t>(mv["seed"], "$.movement.seed")) s.movement.seed = *v;
    }
    if (mv.contains("script")) {
      const json& sc = mv["script"];
      if (!sc.is_array()) {
        rd.fail("$.movement.script", "expected an array of rounds");
      } else {
        for (std::size_t t = 0; t < sc.size(); ++t) {
          const std::string path = "$.movement.script[" + std::to_string(t) + "]";
          std::vector<Rational> row;
          if (!sc[t].is_array()) {
            rd.fail(path, "expected an array of stop fractions");
          } else {
            for (std::size_t i = 0; i < sc[t].size(); ++i) {
              auto f = rd.rational(sc[t][i], path + "[" + std::to_string(i) + "]");
              row.push_back(f ? *f : Rational(1));
            }
          }
          s.movement.script.push_back(std::move(row));
        }
      }
    }
  }

  if (doc.contains("max_rounds")) {
    if (auto v = rd.unsigned_int<std::uint64_t>(doc["max_rounds"], "$.max_rounds")) s.max_rounds = *v;
  }
  if (doc.contains("max_bits")) {
    if (auto v = rd.unsigned_int<std::size_t>(doc["max_bits"], "$.max_bits")) s.max_bits = *v;
  }
  if (doc.contains("outputs") && rd.object(doc["outputs"], "$.outputs", {"trace", "summary"})) {
    const json& o = doc["outputs"];
    if (o.contains("trace")) {
      if (auto v = rd.string(o["trace"], "$.outputs.trace")) s.outputs.trace = *v;
    }
    if (o.contains("summary")) {
      if (auto v = rd.string(o["summary"], "$.outputs.summary")) s.outputs.summary = *v;
    }
  }

  if (!rd.errors.empty()) throw ScenarioError(rd.errors);
  if (auto v = validate(s); !v.empty()) throw ScenarioError(std::move(v));
  return s;
}

std::string serialize_scenario(const Scenario& scenario) { return to_json(scenario, true).dump(2); }

std::string scenario_digest(const Scenario& scenario) {
  const std::string text = to_json(scenario, false).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Trace run(const Scenario& scenario, ExecutionMode mode) {
  return run(scenario, decision_fn(scenario.algorithm), mode);
}

Trace run(const Scenario& scenario, const DecisionFn& decide, ExecutionMode mode) {
  if (auto v = validate(scenario); !v.empty()) throw ScenarioError(std::move(v));
  StepOptions options{decide, scenario.scheduler, scenario.movement, mode};
  RunOptions run_options{scenario.max_rounds, scenario.max_bits, mode};
  Trace trace = run_configuration(scenario.configuration(), options, run_options,
                                  std::string(to_string(scenario.algorithm)));
  trace.digest = scenario_digest(scenario);
  return trace;
}

}  // namespace suig

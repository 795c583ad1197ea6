#include "suig/trace_io.hpp"

#include <set>

#include <json.hpp>

namespace suig {

using nlohmann::json;

namespace {

json point_json(const Point2& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json robot_json(const Robot& r) {
  return {{"id", r.id},
          {"position", point_json(r.position)},
          {"frame", {{"a", r.frame.a.get_str()}, {"b", r.frame.b.get_str()}, {"reflect", r.frame.reflect}}},
          {"crashed", r.crashed}};
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const Trace& trace, const TraceWriteOptions& options) {
  json header = {{"type", "header"},
                 {"format", 1},
                 {"digest", trace.digest},
                 {"algorithm", trace.algorithm},
                 {"round", trace.initial.round}};
  json robots = json::array();
  for (const Robot& r : trace.initial.robots) robots.push_back(robot_json(r));
  header["robots"] = std::move(robots);
  if (options.scenario != nullptr) header["scenario"] = json::parse(serialize_scenario(*options.scenario));
  out << header.dump() << '\n';

  for (const RoundRecord& rec : trace.rounds) {
    json steps = json::array();
    for (const RobotStep& s : rec.steps) {
      steps.push_back({{"id", s.id},
                       {"view_size", s.view_size},
                       {"tag", s.tag},
                       {"command", point_json(s.local_destination)},
                       {"destination", point_json(s.destination)},
                       {"stop", point_json(s.stop)}});
    }
    json positions = json::array();
    std::set<Point2> occupied;
    for (const Point2& p : rec.positions) {
      positions.push_back(point_json(p));
      occupied.insert(p);
    }
    json line = {{"type", "round"},
                 {"round", rec.round},
                 {"active", rec.active},
                 {"rule", rec.rule ? json(std::string(to_string(*rec.rule))) : json(nullptr)},
                 {"steps", std::move(steps)},
                 {"positions", std::move(positions)},
                 {"occupied", occupied.size()}};
    out << line.dump() << '\n';
  }

  json verdict = {{"type", "verdict"},
                  {"verdict", std::string(to_string(trace.verdict.kind))},
                  {"round", trace.verdict.round},
                  {"point", trace.verdict.point ? point_json(*trace.verdict.point) : json(nullptr)}};
  if (options.activation_stats) {
    const ActivationStats stats = activation_stats(trace);
    json max_gap = json::object();
    for (const auto& [id, gap] : stats.max_gap) max_gap[std::to_string(id)] = gap;
    json histogram = json::object();
    for (const auto& [gap, count] : stats.gap_histogram) histogram[std::to_string(gap)] = count;
    verdict["activation"] = {{"max_gap", std::move(max_gap)}, {"gap_histogram", std::move(histogram)}};
  }
  out << verdict.dump() << '\n';
}

void write_summary_csv(std::ostream& out, const Trace& trace) {
  out << "round,occupied,sec_diameter_sq,min_level,max_level,phases\n";
  for (std::size_t t = 0; t <= trace.length(); ++t) {
    const Configuration c = trace.configuration_at(t);
    const auto occupied = c.occupied();
    const Circle sec = smallest_enclosing_circle(occupied);
    out << c.round << ',' << occupied.size() << ',' << (Scalar(4) * sec.radius_sq).to_string() << ',';
    bool has_correct = false;
    for (const Robot& r : c.robots) has_correct = has_correct || !r.crashed;
    if (occupied.size() == 2 && has_correct) {
      const LevelSpread spread = level_spread(c);
      out << spread.lowest << ',' << spread.highest;
    } else {
      out << ',';
    }
    out << ',';
    if (t < trace.length()) {
      std::set<std::string> tags;
      for (const RobotStep& s : trace.rounds[t].steps) tags.insert(s.tag);
      bool first = true;
      for (const auto& tag : tags) {
        out << (first ? "" : "|") << tag;
        first = false;
      }
    }
    out << '\n';
  }
}

}  // namespace suig

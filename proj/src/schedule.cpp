#include "tgsched/schedule.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tgsched {

const char* condition_name(Condition c) {
    switch (c) {
    case Condition::Precedence: return "precedence";
    case Condition::Machines: return "machines";
    case Condition::SelfParallel: return "self-parallel";
    case Condition::Duration: return "duration";
    case Condition::UnknownTask: return "unknown-task";
    case Condition::SegmentDomain: return "segment";
    }
    return "?";
}

bool ValidationReport::has(Condition c) const {
    for (const Violation& v : violations)
        if (v.condition == c)
            return true;
    return false;
}

std::string ValidationReport::to_string() const {
    if (pass())
        return "ok\n";
    std::ostringstream out;
    for (const Violation& v : violations) {
        out << "violation " << condition_name(v.condition);
        if (v.task >= 0)
            out << " task=" << v.task;
        if (v.time)
            out << " t=" << tgsched::to_string(*v.time);
        out << ": " << v.detail << "\n";
    }
    return out.str();
}

namespace {

Rational finish(const Segment& s) { return s.start + s.duration; }

// Closed-open intervals: a segment is active on [start, start+duration),
// so a successor may begin exactly when its predecessor ends.
void check_capacity(const std::vector<std::pair<Rational, int>>& events, int limit,
                    Condition kind, const std::string& what, ValidationReport& report) {
    // events are (time, +1/-1); sort with ends (-1) before starts (+1)
    auto sorted = events;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second < b.second;
    });
    int active = 0;
    for (const auto& [t, delta] : sorted) {
        active += delta;
        if (active > limit) {
            Violation v{kind, -1, t,
                        std::to_string(active) + " concurrent " + what + " at t=" +
                            tgsched::to_string(t) + " (limit " + std::to_string(limit) + ")"};
            report.violations.push_back(std::move(v));
            return;
        }
    }
}

} // namespace

ValidationReport validate_schedule(const TaskGraph& graph, const Schedule& schedule) {
    ValidationReport report;
    const int n = graph.size();

    for (const auto& [task, segs] : schedule.assignments) {
        if (task < 0 || task >= n) {
            report.violations.push_back(
                {Condition::UnknownTask, task, std::nullopt,
                 "schedule references task " + std::to_string(task) + " outside 0.." +
                     std::to_string(n - 1)});
            continue;
        }
        for (const Segment& s : segs) {
            if (s.start < Rational(0) || s.duration <= Rational(0)) {
                report.violations.push_back({Condition::SegmentDomain, task, s.start,
                                             "segment must have start >= 0 and duration > 0"});
                break;
            }
            if (s.machine < 0 || s.machine >= schedule.machine_count) {
                report.violations.push_back(
                    {Condition::Machines, task, s.start,
                     "machine index " + std::to_string(s.machine) + " outside 0.." +
                         std::to_string(schedule.machine_count - 1)});
                break;
            }
        }
    }
    if (!report.violations.empty())
        return report; // later checks assume a well-formed segment map

    // Condition 4 first: it also gives per-task finish times for condition 1.
    std::vector<Rational> min_start(static_cast<size_t>(n), Rational(0));
    std::vector<Rational> max_finish(static_cast<size_t>(n), Rational(0));
    for (int task = 0; task < n; ++task) {
        auto it = schedule.assignments.find(task);
        Rational sum(0);
        if (it == schedule.assignments.end() || it->second.empty()) {
            report.violations.push_back({Condition::Duration, task, std::nullopt,
                                         "task has no segments but duration " +
                                             std::to_string(graph.duration(task))});
            max_finish[static_cast<size_t>(task)] = Rational(0);
            continue;
        }
        const auto& segs = it->second;
        min_start[static_cast<size_t>(task)] = segs.front().start;
        for (const Segment& s : segs) {
            sum += s.duration;
            min_start[static_cast<size_t>(task)] =
                std::min(min_start[static_cast<size_t>(task)], s.start);
            max_finish[static_cast<size_t>(task)] =
                std::max(max_finish[static_cast<size_t>(task)], finish(s));
        }
        if (sum != Rational(graph.duration(task)))
            report.violations.push_back(
                {Condition::Duration, task, std::nullopt,
                 "segment durations sum to " + tgsched::to_string(sum) + ", task duration is " +
                     std::to_string(graph.duration(task))});
    }

    // Condition 1 over direct and transitive predecessors: propagate the
    // latest finish seen anywhere upstream along the topological order.
    std::vector<Rational> upstream_finish(static_cast<size_t>(n), Rational(0));
    for (int u : graph.topological_order()) {
        Rational latest(0);
        for (int p : graph.predecessors(u)) {
            latest = std::max(latest, max_finish[static_cast<size_t>(p)]);
            latest = std::max(latest, upstream_finish[static_cast<size_t>(p)]);
        }
        upstream_finish[static_cast<size_t>(u)] = latest;
        if (!graph.predecessors(u).empty() && min_start[static_cast<size_t>(u)] < latest &&
            schedule.assignments.count(u))
            report.violations.push_back(
                {Condition::Precedence, u, min_start[static_cast<size_t>(u)],
                 "task starts at " + tgsched::to_string(min_start[static_cast<size_t>(u)]) +
                     " before a predecessor finishes at " + tgsched::to_string(latest)});
    }

    // Condition 3: segments of one task are pairwise disjoint.
    for (const auto& [task, segs] : schedule.assignments) {
        auto sorted = segs;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Segment& a, const Segment& b) { return a.start < b.start; });
        for (size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].start < finish(sorted[i - 1])) {
                report.violations.push_back({Condition::SelfParallel, task, sorted[i].start,
                                             "task runs in parallel with itself"});
                break;
            }
        }
    }

    // Condition 2: at most machine_count active segments at any instant,
    // plus per-machine consistency for the explicit lane assignment.
    std::vector<std::pair<Rational, int>> all_events;
    std::map<int, std::vector<std::pair<Rational, int>>> lane_events;
    for (const auto& [task, segs] : schedule.assignments) {
        for (const Segment& s : segs) {
            all_events.emplace_back(s.start, +1);
            all_events.emplace_back(finish(s), -1);
            lane_events[s.machine].emplace_back(s.start, +1);
            lane_events[s.machine].emplace_back(finish(s), -1);
        }
    }
    check_capacity(all_events, schedule.machine_count, Condition::Machines, "tasks", report);
    for (const auto& [machine, events] : lane_events)
        check_capacity(events, 1, Condition::Machines,
                       "segments on machine " + std::to_string(machine), report);

    return report;
}

Rational makespan(const Schedule& schedule) {
    Rational best(0);
    for (const auto& [task, segs] : schedule.assignments)
        for (const Segment& s : segs)
            best = std::max(best, s.start + s.duration);
    return best;
}

namespace {

nlohmann::json rational_to_json(const Rational& r) {
    if (is_integer(r))
        return nlohmann::json(r.numerator());
    return nlohmann::json(to_double(r));
}

Rational rational_from_json(const nlohmann::json& j, const char* field) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_number_float())
        return rational_from_double(j.get<double>());
    throw std::invalid_argument(std::string("schedule JSON: ") + field + " must be a number");
}

} // namespace

std::string schedule_to_json(const Schedule& schedule) {
    nlohmann::json tasks = nlohmann::json::object();
    for (const auto& [task, segs] : schedule.assignments) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Segment& s : segs)
            arr.push_back({{"start", rational_to_json(s.start)},
                           {"dur", rational_to_json(s.duration)},
                           {"machine", s.machine}});
        tasks[std::to_string(task)] = std::move(arr);
    }
    nlohmann::json doc{{"machines", schedule.machine_count}, {"tasks", std::move(tasks)}};
    return doc.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Schedule s;
    s.machine_count = doc.at("machines").get<int>();
    if (s.machine_count < 1)
        throw std::invalid_argument("schedule JSON: machines must be >= 1");
    for (const auto& [key, segs] : doc.at("tasks").items()) {
        int task = std::stoi(key);
        std::vector<Segment> list;
        for (const auto& seg : segs) {
            Segment out;
            out.start = rational_from_json(seg.at("start"), "start");
            out.duration = rational_from_json(seg.at("dur"), "dur");
            out.machine = seg.at("machine").get<int>();
            list.push_back(out);
        }
        s.assignments[task] = std::move(list);
    }
    return s;
}

} // namespace tgsched

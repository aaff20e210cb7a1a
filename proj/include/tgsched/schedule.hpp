// Schedules map each task to timed execution segments. The validator
// checks the four conditions a possible schedule must satisfy: precedence,
// machine capacity, no self-parallelism, and full duration.
#pragma once

#include "tgsched/rational.hpp"
#include "tgsched/taskgraph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tgsched {

struct Segment {
    Rational start;    // >= 0
    Rational duration; // > 0
    int machine = 0;   // 0-based lane, used for capacity checks and rendering
};

struct Schedule {
    int machine_count = 1;
    std::map<int, std::vector<Segment>> assignments; // task id -> segments

    bool empty() const { return assignments.empty(); }
};

enum class Condition {
    Precedence,        // condition 1: no start before all predecessors finish
    Machines,          // condition 2: at most j tasks run at any instant
    SelfParallel,      // condition 3: segments of one task never overlap
    Duration,          // condition 4: segment durations sum to the task duration
    UnknownTask,       // schedule names a task the graph does not have
    SegmentDomain,     // negative start or non-positive duration
};

const char* condition_name(Condition c);

struct Violation {
    Condition condition;
    int task = -1;           // offending task, -1 if not task-specific
    std::optional<Rational> time;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    bool has(Condition c) const;
    std::string to_string() const;
};

ValidationReport validate_schedule(const TaskGraph& graph, const Schedule& schedule);

// Finish time of the last segment; 0 for an empty schedule.
Rational makespan(const Schedule& schedule);

// JSON form: {"machines": j, "tasks": {"<id>": [{"start","dur","machine"}...]}}
std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

} // namespace tgsched

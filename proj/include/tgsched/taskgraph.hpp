// Task graph data model: tasks with integer durations and a strict
// partial order of dependencies, stored as direct edges over a DAG.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tgsched {

struct Task {
    int id = 0;
    int duration = 0;                // >= 1 for every real task
    std::vector<int> predecessors;   // direct predecessor ids, sorted
};

// Immutable after construction; safe to share across threads read-only.
class TaskGraph {
public:
    // Validates ids (dense 0..n-1), edge endpoints, positive durations and
    // acyclicity. Throws GraphError on violation.
    static TaskGraph build(std::vector<Task> tasks);

    int size() const { return static_cast<int>(tasks_.size()); }
    bool empty() const { return tasks_.empty(); }
    const Task& task(int id) const { return tasks_.at(static_cast<size_t>(id)); }
    const std::vector<Task>& tasks() const { return tasks_; }
    const std::vector<int>& predecessors(int id) const { return tasks_[static_cast<size_t>(id)].predecessors; }
    const std::vector<int>& successors(int id) const { return successors_[static_cast<size_t>(id)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int duration(int id) const { return tasks_[static_cast<size_t>(id)].duration; }

    // Kahn's algorithm with a smallest-id-first ready queue.
    const std::vector<int>& topological_order() const { return topo_order_; }

    bool operator==(const TaskGraph& other) const;

private:
    TaskGraph() = default;

    std::vector<Task> tasks_;
    std::vector<std::vector<int>> successors_;
    std::vector<std::pair<int, int>> edges_; // (pred, succ), sorted
    std::vector<int> topo_order_;
};

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        MalformedLine,
        UnknownPredecessor,
        CycleDetected,
        ZeroDurationTask,
        CountMismatch,
    };

    GraphError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// STG text format: a task-count line followed by `id duration pred_count
// pred...` records, one per line, with zero-duration entry/exit dummy
// nodes as records 0 and T+1. Lines starting with '#' are comments.
// A lenient variant carries exactly T records and no dummies.
TaskGraph parse_stg(std::istream& in);
TaskGraph parse_stg(const std::string& text);

// Emits the same grammar; with_dummies re-adds entry/exit nodes and
// shifts ids by one, which matches the standard task graph set layout.
std::string serialize_stg(const TaskGraph& graph, bool with_dummies = true);

// True iff every direct predecessor of `task` is in `completed`.
// Completion propagates inductively, so direct predecessors suffice.
bool all_dependencies_done(const TaskGraph& graph, int task, const std::vector<bool>& completed);

// Longest duration-weighted path through the DAG, endpoints included.
long long critical_path_length(const TaskGraph& graph);

// Sum of all task durations.
long long total_work(const TaskGraph& graph);

} // namespace tgsched

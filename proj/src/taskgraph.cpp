#include "tgsched/taskgraph.hpp"

#include <algorithm>
#include <queue>

namespace tgsched {

TaskGraph TaskGraph::build(std::vector<Task> tasks) {
    const int n = static_cast<int>(tasks.size());
    TaskGraph g;
    g.successors_.resize(static_cast<size_t>(n));

    for (int i = 0; i < n; ++i) {
        Task& t = tasks[static_cast<size_t>(i)];
        if (t.id != i)
            throw GraphError(GraphError::Kind::MalformedLine,
                             "task ids must be dense 0..n-1, got id " + std::to_string(t.id) +
                                 " at position " + std::to_string(i));
        if (t.duration < 1)
            throw GraphError(GraphError::Kind::ZeroDurationTask,
                             "task " + std::to_string(i) + " has non-positive duration");
        std::sort(t.predecessors.begin(), t.predecessors.end());
        t.predecessors.erase(std::unique(t.predecessors.begin(), t.predecessors.end()),
                             t.predecessors.end());
        for (int p : t.predecessors) {
            if (p < 0 || p >= n)
                throw GraphError(GraphError::Kind::UnknownPredecessor,
                                 "task " + std::to_string(i) + " names unknown predecessor " +
                                     std::to_string(p));
            if (p == i)
                throw GraphError(GraphError::Kind::CycleDetected,
                                 "task " + std::to_string(i) + " depends on itself");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int p : tasks[static_cast<size_t>(i)].predecessors) {
            g.successors_[static_cast<size_t>(p)].push_back(i);
            g.edges_.emplace_back(p, i);
        }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.tasks_ = std::move(tasks);

    // Kahn with smallest-id-first ready queue; doubles as the cycle check.
    std::vector<int> indegree(static_cast<size_t>(n));
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < n; ++i) {
        indegree[static_cast<size_t>(i)] = static_cast<int>(g.tasks_[static_cast<size_t>(i)].predecessors.size());
        if (indegree[static_cast<size_t>(i)] == 0)
            ready.push(i);
    }
    g.topo_order_.reserve(static_cast<size_t>(n));
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        g.topo_order_.push_back(u);
        for (int v : g.successors_[static_cast<size_t>(u)])
            if (--indegree[static_cast<size_t>(v)] == 0)
                ready.push(v);
    }
    if (static_cast<int>(g.topo_order_.size()) != n)
        throw GraphError(GraphError::Kind::CycleDetected, "dependency relation contains a cycle");
    return g;
}

bool TaskGraph::operator==(const TaskGraph& other) const {
    if (size() != other.size())
        return false;
    for (int i = 0; i < size(); ++i) {
        const Task& a = tasks_[static_cast<size_t>(i)];
        const Task& b = other.tasks_[static_cast<size_t>(i)];
        if (a.duration != b.duration || a.predecessors != b.predecessors)
            return false;
    }
    return true;
}

bool all_dependencies_done(const TaskGraph& graph, int task, const std::vector<bool>& completed) {
    for (int p : graph.predecessors(task))
        if (!completed[static_cast<size_t>(p)])
            return false;
    return true;
}

long long critical_path_length(const TaskGraph& graph) {
    std::vector<long long> longest(static_cast<size_t>(graph.size()), 0);
    long long best = 0;
    for (int u : graph.topological_order()) {
        long long in = 0;
        for (int p : graph.predecessors(u))
            in = std::max(in, longest[static_cast<size_t>(p)]);
        longest[static_cast<size_t>(u)] = in + graph.duration(u);
        best = std::max(best, longest[static_cast<size_t>(u)]);
    }
    return best;
}

long long total_work(const TaskGraph& graph) {
    long long sum = 0;
    for (const Task& t : graph.tasks())
        sum += t.duration;
    return sum;
}

} // namespace tgsched

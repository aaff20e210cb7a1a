#pragma once

#include "tgsched/schedule.hpp"
#include "tgsched/taskgraph.hpp"

#include <string>

namespace tgsched {

// SVG Gantt chart: one horizontal lane per machine, one labeled rectangle
// per segment, time axis in task time units. Output is deterministic for
// identical input. Throws std::invalid_argument if the schedule does not
// validate against the graph.
std::string render_gantt(const Schedule& schedule, const TaskGraph& graph);

} // namespace tgsched

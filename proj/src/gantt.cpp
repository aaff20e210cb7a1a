#include "tgsched/gantt.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tgsched {

namespace {

constexpr int kLaneHeight = 34;
constexpr int kLanePad = 6;
constexpr int kMarginLeft = 46;
constexpr int kMarginTop = 16;
constexpr int kAxisHeight = 34;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Fixed palette cycled by task id keeps colors stable across runs.
const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                          "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac"};

int tick_step(long long span) {
    int step = 1;
    while (span / step > 24)
        step *= (step % 3 == 0) ? 5 : 2; // 1,2,10,20,100,... close enough to round
    return step;
}

} // namespace

std::string render_gantt(const Schedule& schedule, const TaskGraph& graph) {
    ValidationReport report = validate_schedule(graph, schedule);
    if (!report.pass())
        throw std::invalid_argument("cannot render an invalid schedule:\n" + report.to_string());

    const Rational span = makespan(schedule);
    const long long span_units = span.numerator() / span.denominator() + 1;
    const int px = static_cast<int>(std::clamp(1100LL / std::max(1LL, span_units), 3LL, 48LL));
    const int lanes = schedule.machine_count;
    const int width = kMarginLeft + static_cast<int>(std::max(1LL, span_units) * px) + 24;
    const int height = kMarginTop + lanes * kLaneHeight + kAxisHeight;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";

    for (int m = 0; m < lanes; ++m) {
        const int y = kMarginTop + m * kLaneHeight;
        svg << "  <rect x=\"" << kMarginLeft << "\" y=\"" << y << "\" width=\""
            << width - kMarginLeft - 24 << "\" height=\"" << kLaneHeight - kLanePad
            << "\" fill=\"#f2f2f2\"/>\n";
        svg << "  <text x=\"6\" y=\"" << y + (kLaneHeight - kLanePad) / 2 + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">m" << m << "</text>\n";
    }

    for (const auto& [task, segs] : schedule.assignments) {
        const char* color = kPalette[static_cast<size_t>(task) % (sizeof(kPalette) / sizeof(kPalette[0]))];
        for (const Segment& s : segs) {
            const double x = kMarginLeft + to_double(s.start) * px;
            const double w = to_double(s.duration) * px;
            const int y = kMarginTop + s.machine * kLaneHeight;
            svg << "  <rect x=\"" << fmt(x) << "\" y=\"" << y << "\" width=\"" << fmt(w)
                << "\" height=\"" << kLaneHeight - kLanePad << "\" fill=\"" << color
                << "\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
            svg << "  <text x=\"" << fmt(x + w / 2) << "\" y=\""
                << y + (kLaneHeight - kLanePad) / 2 + 4
                << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\""
                << " fill=\"#ffffff\">" << task << "</text>\n";
        }
    }

    // time axis
    const int axis_y = kMarginTop + lanes * kLaneHeight + 8;
    svg << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << axis_y << "\" x2=\""
        << kMarginLeft + span_units * px << "\" y2=\"" << axis_y
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    const int step = tick_step(span_units);
    for (long long t = 0; t <= span_units; t += step) {
        const long long x = kMarginLeft + t * px;
        svg << "  <line x1=\"" << x << "\" y1=\"" << axis_y << "\" x2=\"" << x << "\" y2=\""
            << axis_y + 4 << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg << "  <text x=\"" << x << "\" y=\"" << axis_y + 17
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << t
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tgsched

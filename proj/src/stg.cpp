// STG format reader/writer. The standard task graph set stores one record
// per line (`id duration pred_count pred...`) bracketed by zero-duration
// entry/exit dummy nodes; the lenient variant drops the dummies.
#include "tgsched/taskgraph.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace tgsched {

namespace {

struct Record {
    int id = 0;
    long long duration = 0;
    std::vector<int> preds;
    int line_no = 0;
};

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty())
        return false;
    size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

[[noreturn]] void malformed(int line_no, const std::string& what) {
    throw GraphError(GraphError::Kind::MalformedLine,
                     "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

TaskGraph parse_stg(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_count = false;
    long long declared = 0;
    std::vector<Record> records;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#')
                break; // rest of line is a comment
            toks.push_back(tok);
        }
        if (toks.empty())
            continue;
        if (!have_count) {
            long long v;
            if (toks.size() != 1 || !parse_int(toks[0], v) || v < 0)
                malformed(line_no, "expected a single non-negative task count");
            declared = v;
            have_count = true;
            continue;
        }
        Record r;
        r.line_no = line_no;
        long long id, dur, cnt;
        if (toks.size() < 3 || !parse_int(toks[0], id) || !parse_int(toks[1], dur) ||
            !parse_int(toks[2], cnt))
            malformed(line_no, "expected `id duration pred_count pred...`");
        if (cnt < 0 || toks.size() != static_cast<size_t>(3 + cnt))
            malformed(line_no, "predecessor count does not match the record");
        if (dur < 0)
            malformed(line_no, "negative duration");
        r.id = static_cast<int>(id);
        r.duration = dur;
        for (long long k = 0; k < cnt; ++k) {
            long long p;
            if (!parse_int(toks[static_cast<size_t>(3 + k)], p))
                malformed(line_no, "non-integer predecessor id");
            r.preds.push_back(static_cast<int>(p));
        }
        records.push_back(std::move(r));
    }
    if (!have_count)
        throw GraphError(GraphError::Kind::CountMismatch, "empty input, no task count line");

    const long long n_records = static_cast<long long>(records.size());
    bool with_dummies;
    if (n_records == declared + 2)
        with_dummies = true;
    else if (n_records == declared)
        with_dummies = false;
    else
        throw GraphError(GraphError::Kind::CountMismatch,
                         "declared " + std::to_string(declared) + " tasks but found " +
                             std::to_string(n_records) + " records (expected " +
                             std::to_string(declared) + " or " + std::to_string(declared + 2) +
                             ")");

    const int t = static_cast<int>(declared);
    const int max_id = with_dummies ? t + 1 : t - 1;
    for (size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        if (r.id != static_cast<int>(i))
            malformed(r.line_no, "record ids must appear in order 0.." + std::to_string(max_id));
        for (int p : r.preds)
            if (p < 0 || p > max_id)
                throw GraphError(GraphError::Kind::UnknownPredecessor,
                                 "line " + std::to_string(r.line_no) + ": unknown predecessor id " +
                                     std::to_string(p));
    }

    std::vector<Task> tasks;
    tasks.reserve(static_cast<size_t>(t));
    if (with_dummies) {
        if (records.front().duration != 0)
            malformed(records.front().line_no, "entry dummy must have duration 0");
        if (records.back().duration != 0)
            malformed(records.back().line_no, "exit dummy must have duration 0");
        for (int i = 1; i <= t; ++i) {
            const Record& r = records[static_cast<size_t>(i)];
            if (r.duration == 0)
                throw GraphError(GraphError::Kind::ZeroDurationTask,
                                 "line " + std::to_string(r.line_no) +
                                     ": zero duration on a non-dummy task");
            Task task;
            task.id = i - 1;
            task.duration = static_cast<int>(r.duration);
            // Edges incident to the dummies carry no constraint: the entry
            // node precedes everything and the exit node succeeds everything.
            for (int p : r.preds)
                if (p != 0 && p != t + 1)
                    task.predecessors.push_back(p - 1);
            tasks.push_back(std::move(task));
        }
    } else {
        for (int i = 0; i < t; ++i) {
            const Record& r = records[static_cast<size_t>(i)];
            if (r.duration == 0)
                throw GraphError(GraphError::Kind::ZeroDurationTask,
                                 "line " + std::to_string(r.line_no) +
                                     ": zero duration on a non-dummy task");
            Task task;
            task.id = i;
            task.duration = static_cast<int>(r.duration);
            task.predecessors = r.preds;
            tasks.push_back(std::move(task));
        }
    }
    return TaskGraph::build(std::move(tasks));
}

TaskGraph parse_stg(const std::string& text) {
    std::istringstream in(text);
    return parse_stg(in);
}

std::string serialize_stg(const TaskGraph& graph, bool with_dummies) {
    std::ostringstream out;
    const int n = graph.size();
    out << n << "\n";
    if (!with_dummies) {
        for (int i = 0; i < n; ++i) {
            const Task& t = graph.task(i);
            out << i << " " << t.duration << " " << t.predecessors.size();
            for (int p : t.predecessors)
                out << " " << p;
            out << "\n";
        }
        return out.str();
    }
    out << 0 << " " << 0 << " " << 0 << "\n";
    for (int i = 0; i < n; ++i) {
        const Task& t = graph.task(i);
        if (t.predecessors.empty()) {
            out << i + 1 << " " << t.duration << " 1 0\n";
            continue;
        }
        out << i + 1 << " " << t.duration << " " << t.predecessors.size();
        for (int p : t.predecessors)
            out << " " << p + 1;
        out << "\n";
    }
    std::vector<int> sinks;
    for (int i = 0; i < n; ++i)
        if (graph.successors(i).empty())
            sinks.push_back(i);
    out << n + 1 << " 0 ";
    if (sinks.empty()) {
        out << "1 0\n";
    } else {
        out << sinks.size();
        for (int s : sinks)
            out << " " << s + 1;
        out << "\n";
    }
    return out.str();
}

} // namespace tgsched

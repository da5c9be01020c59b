#include "tapn/report.h"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tapn {

namespace {

using nlohmann::ordered_json;

std::vector<int> consumed_tokens(const TraceStep& step) {
    std::vector<int> tokens;
    for (int i : step.binding) tokens.push_back(i + 1);
    std::sort(tokens.begin(), tokens.end());
    return tokens;
}

const char* inclusion_label(InclusionMode mode) {
    switch (mode) {
    case InclusionMode::Off: return "off";
    case InclusionMode::Full: return "full";
    case InclusionMode::Custom: return "custom";
    }
    return "?";
}

} // namespace

std::string describe_step(const TimedArcPetriNet& net, const TraceStep& step) {
    if (step.kind == TraceStep::Kind::Delay) return "delay " + to_string(step.delay);
    std::string out = "fire " + net.transition(step.transition).name + " consuming tokens {";
    bool first = true;
    for (int t : consumed_tokens(step)) {
        if (!first) out += ",";
        out += std::to_string(t);
        first = false;
    }
    return out + "}";
}

std::string render_text(const TimedArcPetriNet& net, const RunReport& report) {
    std::ostringstream out;
    const SearchResult& r = report.result;
    out << "net: " << report.net_name << '\n';
    out << "query: " << to_string(report.query) << '\n';
    out << "verdict: " << to_string(r.verdict) << '\n';
    if (r.reason != LimitReason::None) out << "reason: " << to_string(r.reason) << '\n';
    if (r.trace) {
        out << (r.verdict == Verdict::Satisfied ? "trace:\n" : "counterexample:\n");
        for (const TraceStep& s : r.trace->steps) out << "  " << describe_step(net, s) << '\n';
    }
    if (report.include_stats) {
        const SearchStats& s = r.stats;
        out << "stats:\n";
        out << "  search: " << to_string(report.options.strategy) << '\n';
        out << "  inclusion: " << inclusion_label(report.options.inclusion) << '\n';
        out << "  explored: " << s.explored << '\n';
        out << "  stored: " << s.stored << '\n';
        out << "  inserted: " << s.inserted << '\n';
        out << "  successors: " << s.successors << '\n';
        out << "  max_waiting: " << s.max_waiting << '\n';
        out << "  evictions: " << s.evictions << '\n';
        out << "  inclusion_hits: " << s.inclusion_hits << '\n';
        std::ostringstream secs;
        secs.setf(std::ios::fixed);
        secs.precision(6);
        secs << s.elapsed_seconds;
        out << "  elapsed_seconds: " << secs.str() << '\n';
    }
    return out.str();
}

std::string render_json(const TimedArcPetriNet& net, const RunReport& report) {
    const SearchResult& r = report.result;
    ordered_json j;
    j["net"] = report.net_name;
    j["query"] = to_string(report.query);
    j["verdict"] = to_string(r.verdict);
    j["reason"] = to_string(r.reason);
    if (r.trace) {
        j["trace_kind"] = r.verdict == Verdict::Satisfied ? "witness" : "counterexample";
        ordered_json steps = ordered_json::array();
        for (const TraceStep& s : r.trace->steps) {
            ordered_json step;
            if (s.kind == TraceStep::Kind::Delay) {
                step["delay"] = to_string(s.delay);
            } else {
                step["fire"] = net.transition(s.transition).name;
                step["tokens"] = consumed_tokens(s);
            }
            steps.push_back(std::move(step));
        }
        j["trace"] = std::move(steps);
    }
    if (report.include_stats) {
        const SearchStats& s = r.stats;
        j["stats"] = {
            {"search", to_string(report.options.strategy)},
            {"inclusion", inclusion_label(report.options.inclusion)},
            {"explored", s.explored},
            {"stored", s.stored},
            {"inserted", s.inserted},
            {"successors", s.successors},
            {"max_waiting", s.max_waiting},
            {"evictions", s.evictions},
            {"inclusion_hits", s.inclusion_hits},
            {"elapsed_seconds", s.elapsed_seconds},
        };
    }
    return j.dump(2) + "\n";
}

} // namespace tapn

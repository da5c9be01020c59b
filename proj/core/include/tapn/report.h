#ifndef TAPN_REPORT_H
#define TAPN_REPORT_H

#include <string>

#include "tapn/net.h"
#include "tapn/query.h"
#include "tapn/search.h"

namespace tapn {

struct RunReport {
    std::string net_name;
    Query query;
    SearchOptions options;
    SearchResult result;
    bool include_stats = false;
};

/// "delay 2.5" or "fire t consuming tokens {1,2,3,4}"; tokens are 1-based.
std::string describe_step(const TimedArcPetriNet& net, const TraceStep& step);

std::string render_text(const TimedArcPetriNet& net, const RunReport& report);
/// Pretty-printed JSON with a fixed key order.
std::string render_json(const TimedArcPetriNet& net, const RunReport& report);

} // namespace tapn

#endif

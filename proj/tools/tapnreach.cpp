// tapnreach: reachability checker for bounded timed-arc Petri nets.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tapn/net_format.h"
#include "tapn/query.h"
#include "tapn/report.h"
#include "tapn/search.h"

namespace {

enum Exit { kSatisfied = 0, kNotSatisfied = 1, kInconclusive = 2, kError = 3 };

std::string query_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reachability checker for bounded timed-arc Petri nets"};
    std::string net_path;
    std::string query_arg;
    int k = 0;
    std::string search = "bfs";
    std::string inclusion = "full";
    bool trace = false;
    bool stats = false;
    std::string format = "text";
    std::size_t max_states = 0;
    double timeout = 0.0;

    app.add_option("--net", net_path, "Net file")->required();
    app.add_option("--query", query_arg, "Query text or a file containing it")->required();
    app.add_option("--k", k, "Token bound (overrides the file)")->check(CLI::PositiveNumber);
    app.add_option("--search", search, "Search order")->check(CLI::IsMember({"bfs", "dfs"}));
    app.add_option("--inclusion", inclusion, "off, full, or a comma-separated list of places");
    app.add_flag("--trace", trace, "Print a concrete trace");
    app.add_flag("--stats", stats, "Print search statistics");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-states", max_states, "Limit on stored markings (0 = none)");
    app.add_option("--timeout", timeout, "Time limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        tapn::LoadedNet loaded = tapn::load_net(net_path);
        tapn::TimedArcPetriNet net = k > 0 ? loaded.net.with_bound(k) : std::move(loaded.net);
        const tapn::Query query = tapn::parse_query(query_text(query_arg));

        tapn::SearchOptions options;
        options.strategy = search == "dfs" ? tapn::SearchStrategy::DFS : tapn::SearchStrategy::BFS;
        if (inclusion == "off") {
            options.inclusion = tapn::InclusionMode::Off;
        } else if (inclusion == "full") {
            options.inclusion = tapn::InclusionMode::Full;
        } else {
            options.inclusion = tapn::InclusionMode::Custom;
            options.inclusion_places = split_csv(inclusion);
        }
        options.trace = trace;
        options.max_states = max_states;
        options.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000.0));

        tapn::RunReport report{net.name(), query, options, tapn::reach(net, query, options), stats};
        std::cout << (format == "json" ? tapn::render_json(net, report)
                                       : tapn::render_text(net, report));
        switch (report.result.verdict) {
        case tapn::Verdict::Satisfied: return kSatisfied;
        case tapn::Verdict::NotSatisfied: return kNotSatisfied;
        case tapn::Verdict::Inconclusive: return kInconclusive;
        }
    } catch (const tapn::Error& e) {
        std::cerr << "tapnreach: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "tapnreach: internal error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

#include <benchmark/benchmark.h>

#include <random>

#include "tapn/inclusion.h"
#include "tapn/net_format.h"
#include "tapn/search.h"

using namespace tapn;

namespace {

// A consistent zone built by random guard, delay and reset steps.
Dbm scrambled(std::size_t clocks, unsigned seed) {
    std::mt19937 rng(seed);
    Dbm d = up(Dbm::zero(clocks + 1));
    for (int step = 0; step < 4 * static_cast<int>(clocks); ++step) {
        const Clock c = 1 + rng() % clocks;
        Dbm next = d;
        if (next.constrain(0, c, Bound::weak(-static_cast<std::int64_t>(rng() % 4))) &&
            next.constrain(c, 0, Bound::weak(static_cast<std::int64_t>(4 + rng() % 6)))) {
            d = next;
        }
        const std::vector<Clock> r{c};
        if (rng() % 3 == 0) d = reset(d, r);
        d = up(d);
    }
    return d;
}

LoadedNet model(const char* name) { return load_net(std::string(TAPN_MODELS_DIR) + "/" + name + ".tapn"); }

void BM_Close(benchmark::State& state) {
    const Dbm base = scrambled(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        Dbm d = base;
        d.at(1, 0) = Bound::infinity();
        benchmark::DoNotOptimize(d.close());
    }
}
BENCHMARK(BM_Close)->Arg(4)->Arg(8)->Arg(16);

void BM_Extrapolate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Dbm base = scrambled(n, 2);
    std::vector<std::int64_t> mc(n + 1, 3);
    mc[0] = 0;
    for (auto _ : state) benchmark::DoNotOptimize(extrapolate(base, mc));
}
BENCHMARK(BM_Extrapolate)->Arg(4)->Arg(8)->Arg(16);

void BM_ZoneSubset(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Dbm a = scrambled(n, 3);
    const Dbm b = up(a);
    for (auto _ : state) benchmark::DoNotOptimize(zone_subset(a, b));
}
BENCHMARK(BM_ZoneSubset)->Arg(8);

void BM_Inclusion(benchmark::State& state) {
    const auto loaded = model("producer_consumer");
    const auto& net = loaded.net;
    const auto m = initial_symbolic(net);
    const auto succ = successors(net, m);
    const PlaceSet all = all_places(net);
    for (auto _ : state) {
        for (const auto& s : succ.items) benchmark::DoNotOptimize(included(net, s.marking, m, all));
    }
}
BENCHMARK(BM_Inclusion);

void BM_Search(benchmark::State& state) {
    const auto loaded = model("producer_consumer");
    const Query q = parse_query("EF buffer >= 7");
    SearchOptions o;
    o.inclusion = state.range(0) ? InclusionMode::Full : InclusionMode::Off;
    for (auto _ : state) {
        const auto r = reach(loaded.net, q, o);
        state.counters["stored"] = static_cast<double>(r.stats.stored);
    }
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_SearchWithTrace(benchmark::State& state) {
    const auto loaded = model("deadline_monitor");
    const Query q = parse_query("EF alarm >= 1");
    SearchOptions o;
    o.trace = true;
    for (auto _ : state) benchmark::DoNotOptimize(reach(loaded.net, q, o));
}
BENCHMARK(BM_SearchWithTrace)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();

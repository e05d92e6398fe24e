#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "structmap/emit.hpp"
#include "structmap/parse.hpp"
#include "structmap/transform.hpp"

namespace {

std::string seed_source() {
    static const std::string source = [] {
        std::ifstream in(STRUCTMAP_SEED_PATH, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }();
    return source;
}

structmap::ResolvedGraph reduced_seed() {
    auto parsed = structmap::parse_catalog(seed_source());
    auto resolved = structmap::resolve(*parsed.catalog);
    auto reduced = structmap::transitive_reduce(*resolved.graph);
    structmap::compute_levels(reduced.graph);
    return std::move(reduced.graph);
}

void BM_ParseCatalog(benchmark::State& state) {
    const std::string source = seed_source();
    for (auto _ : state) {
        auto result = structmap::parse_catalog(source);
        benchmark::DoNotOptimize(result);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(source.size()));
}

void BM_Resolve(benchmark::State& state) {
    auto parsed = structmap::parse_catalog(seed_source());
    for (auto _ : state) {
        auto result = structmap::resolve(*parsed.catalog);
        benchmark::DoNotOptimize(result);
    }
}

void BM_TransitiveReduce(benchmark::State& state) {
    auto parsed = structmap::parse_catalog(seed_source());
    auto resolved = structmap::resolve(*parsed.catalog);
    for (auto _ : state) {
        auto result = structmap::transitive_reduce(*resolved.graph);
        benchmark::DoNotOptimize(result);
    }
}

void BM_LayoutFullMap(benchmark::State& state) {
    auto graph = reduced_seed();
    structmap::size_nodes(graph);
    for (auto _ : state) {
        auto plan = structmap::layout(graph);
        benchmark::DoNotOptimize(plan);
    }
}

void BM_EmitSvgFullMap(benchmark::State& state) {
    auto graph = reduced_seed();
    structmap::size_nodes(graph);
    auto plan = structmap::layout(graph);
    structmap::EmitOptions options;
    options.title = "all";
    for (auto _ : state) {
        auto svg = structmap::emit_svg(plan, options);
        benchmark::DoNotOptimize(svg);
    }
}

void BM_FullPipeline(benchmark::State& state) {
    const std::string source = seed_source();
    for (auto _ : state) {
        auto parsed = structmap::parse_catalog(source);
        auto resolved = structmap::resolve(*parsed.catalog);
        auto reduced = structmap::transitive_reduce(*resolved.graph);
        structmap::compute_levels(reduced.graph);
        for (auto& map : structmap::map_suite(reduced.graph)) {
            structmap::size_nodes(map.selection.graph);
            auto plan = structmap::layout(map.selection.graph);
            structmap::EmitOptions options;
            options.title = map.name;
            auto svg = structmap::emit_svg(plan, options);
            benchmark::DoNotOptimize(svg);
        }
    }
}

}  // namespace

BENCHMARK(BM_ParseCatalog);
BENCHMARK(BM_Resolve);
BENCHMARK(BM_TransitiveReduce);
BENCHMARK(BM_LayoutFullMap);
BENCHMARK(BM_EmitSvgFullMap);
BENCHMARK(BM_FullPipeline);

BENCHMARK_MAIN();

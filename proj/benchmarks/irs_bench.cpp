// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <benchmark/benchmark.h>

#include "irs/experiments.hpp"

namespace {

using namespace irs;

ChannelSet channels_for(const ScenarioConfig& cfg, const IrsGeometry& geom)
{
    const Point3 ue{15.0, 5.0, cfg.ue_height};
    return compute_channels(geom, cfg.ap_pos, ue, channel_params(cfg));
}

void BM_ComputeChannels(benchmark::State& state)
{
    ScenarioConfig cfg = scenario_preset(1);
    cfg.array_cols = cfg.array_rows = static_cast<std::size_t>(state.range(0));
    const IrsGeometry geom = build_irs_array(cfg);
    const Point3 ue{15.0, 5.0, cfg.ue_height};
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_channels(geom, cfg.ap_pos, ue, channel_params(cfg)));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(geom.size()));
}
BENCHMARK(BM_ComputeChannels)->Arg(16)->Arg(32)->Arg(64);

void BM_Configure(benchmark::State& state)
{
    const ScenarioConfig cfg = scenario_preset(2);
    const IrsGeometry geom = build_irs_array(cfg);
    const ChannelSet ch = channels_for(cfg, geom);
    const auto scheme = kAllSchemes[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(std::string(to_string(scheme)));
    for (auto _ : state)
        benchmark::DoNotOptimize(configure(ch, geom, scheme));
}
BENCHMARK(BM_Configure)->DenseRange(0, 3);

void BM_ExhaustiveColumnBinary(benchmark::State& state)
{
    ScenarioConfig cfg = scenario_preset(1);
    cfg.array_cols = static_cast<std::size_t>(state.range(0));
    const IrsGeometry geom = build_irs_array(cfg);
    const ChannelSet ch = channels_for(cfg, geom);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_column_binary(ch, geom));
}
BENCHMARK(BM_ExhaustiveColumnBinary)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CoordinateAscent(benchmark::State& state)
{
    ScenarioConfig cfg = scenario_preset(3);
    cfg.array_cols = static_cast<std::size_t>(state.range(0));
    const IrsGeometry geom = build_irs_array(cfg);
    const ChannelSet ch = channels_for(cfg, geom);
    const auto init = configure(ch, geom, ControlScheme::ColumnBinary);
    for (auto _ : state)
        benchmark::DoNotOptimize(coordinate_ascent_column_binary(ch, geom, init));
}
BENCHMARK(BM_CoordinateAscent)->Arg(32)->Arg(128);

void BM_Sweep(benchmark::State& state)
{
    ScenarioConfig cfg = scenario_preset(1);
    cfg.grid_step_m = 1.0;
    const IrsGeometry geom = build_irs_array(cfg);
    const SweepOptions opt{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(cfg, geom, ControlScheme::ColumnBinary, opt));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();

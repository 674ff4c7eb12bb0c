#include <benchmark/benchmark.h>

#include <string>

#include "progress_lab/classify.hpp"
#include "progress_lab/emit.hpp"
#include "progress_lab/litmus_format.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/oracle.hpp"
#include "progress_lab/sched_sim.hpp"
#include "progress_lab/synth.hpp"

using namespace progress_lab;

namespace {

LitmusTest idiom(const std::string& name) {
    return loadLitmusFile(std::string(PROGRESS_LAB_SOURCE_DIR) + "/docs/examples/" + name + ".litmus");
}

std::vector<LitmusTest> suite(ThreadId n, std::uint32_t k) {
    SynthConfig c;
    c.numThreads = n;
    c.totalInstructions = k;
    c.symmetryReduction = true;
    return synthesize(c).tests;
}

void BM_PlainLts(benchmark::State& state) {
    auto t = idiom("prodcons_bidirectional");
    for (auto _ : state) benchmark::DoNotOptimize(buildPlainLts(t));
}
BENCHMARK(BM_PlainLts);

void BM_MonitoredLts(benchmark::State& state) {
    auto t = idiom("mutex");
    for (auto _ : state) benchmark::DoNotOptimize(buildMonitoredLts(t, ModelKind::lobe));
}
BENCHMARK(BM_MonitoredLts);

void BM_CheckMatrix(benchmark::State& state) {
    auto t = idiom("prodcons_bidirectional");
    for (auto _ : state) benchmark::DoNotOptimize(checkMatrix(t, allModelVariants()));
}
BENCHMARK(BM_CheckMatrix);

void BM_Synthesize(benchmark::State& state) {
    SynthConfig c;
    c.numThreads = 2;
    c.totalInstructions = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(c));
}
BENCHMARK(BM_Synthesize)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClassifySuite(benchmark::State& state) {
    auto tests = suite(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(classifySuite(tests));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tests.size()));
}
BENCHMARK(BM_ClassifySuite)->Unit(benchmark::kMillisecond);

void BM_EmitGlsl(benchmark::State& state) {
    auto t = idiom("mutex");
    EmitConfig c;
    c.variant = Variant::chunked;
    for (auto _ : state) benchmark::DoNotOptimize(emitKernel(t, c));
}
BENCHMARK(BM_EmitGlsl);

void BM_Simulate(benchmark::State& state) {
    auto program = buildSimProgram(idiom("prodcons_decreasing"), {Variant::chunked, 64});
    SchedulerSpec s;
    s.kind = SchedulerKind::lobeNonpreemptive;
    s.slots = 8;
    s.stepBudget = 100'000;
    for (auto _ : state) benchmark::DoNotOptimize(simulate(program, s));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.stepBudget));
}
BENCHMARK(BM_Simulate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/emit.hpp"

namespace progress_lab {

enum class SchedulerKind { unfairRandom, fairRoundRobin, obeNonpreemptive, lobeNonpreemptive, hsaPriority };

/// `unfair-random`, `fair-round-robin`, `obe-nonpreemptive`,
/// `lobe-nonpreemptive`, `hsa-priority`.
std::string_view schedulerName(SchedulerKind kind);
std::optional<SchedulerKind> parseSchedulerName(std::string_view token);
bool isNonpreemptive(SchedulerKind kind);

struct SchedulerSpec {
    SchedulerKind kind = SchedulerKind::fairRoundRobin;
    std::uint32_t slots = 1;  // occupancy, used by the nonpreemptive kinds
    std::uint64_t seed = 0;
    std::uint64_t stepBudget = 1'000'000;
    double hsaProbability = 0.25;

    /// e.g. `lobe-nonpreemptive/4`.
    std::string label() const;
};

/// Throws ContractViolation for a zero budget, zero slots on a
/// nonpreemptive kind, or a probability outside [0, 1].
void validate(const SchedulerSpec& spec);

/// How many instances of a test run side by side and how their threads are
/// numbered (see mapWorkgroup).
struct Layout {
    Variant variant = Variant::plain;
    std::uint32_t instances = 1;
};

/// A flattened multi-instance program: workgroup w runs the program of test
/// thread `mapping.thread` against the memory region starting at `base`.
struct SimThread {
    ThreadMapping mapping;
    std::uint32_t base = 0;
};

struct SimProgram {
    std::string name;
    std::uint32_t memoryCells = 0;
    std::vector<ThreadProgram> programs;  // one per test thread
    std::vector<SimThread> threads;       // one per workgroup, in id order

    const ThreadProgram& programOf(std::uint32_t w) const { return programs[threads[w].mapping.thread]; }
};

SimProgram buildSimProgram(const LitmusTest& test, const Layout& layout = {});
SimProgram buildSimProgram(const HarnessProgram& harness);

struct RunOutcome {
    bool terminated = false;
    std::uint64_t stepsUsed = 0;
    std::vector<std::uint64_t> perThreadSteps;  // by workgroup id
};

/// One executed instruction.
struct TraceStep {
    std::uint32_t thread = 0;
    std::uint32_t pc = 0;
    bool taken = false;
    bool operator==(const TraceStep&) const = default;
};

using TraceSink = std::function<void(const TraceStep&)>;

/// Runs until every thread terminates or the budget is exhausted.
/// Deterministic given the scheduler seed.
RunOutcome simulate(const SimProgram& program, const SchedulerSpec& spec, const TraceSink& trace = {});
RunOutcome simulate(const LitmusTest& test, const Layout& layout, const SchedulerSpec& spec);

/// Memory after replaying a full trace, for fidelity checks.
std::vector<std::uint32_t> replayMemory(const SimProgram& program, const std::vector<TraceStep>& trace);

/// One (scheduler, layout) configuration of a campaign.
struct CampaignSpec {
    SchedulerSpec scheduler;
    Layout layout;
    /// Chooses M = autoInstances(N) per test for non-plain layouts.
    bool autoInstances = false;
};

struct CampaignRow {
    std::string test;
    std::string scheduler;  // SchedulerSpec::label()
    Layout layout;
    std::uint32_t iterations = 0;
    std::uint32_t terminatedRuns = 0;
    std::uint32_t exhaustedRuns = 0;
    std::uint32_t errorRuns = 0;
    std::uint64_t maxStepsTerminated = 0;
    std::string error;

    /// Every run exhausted its budget.
    bool deterministicNonTermination() const { return iterations > 0 && exhaustedRuns == iterations; }
    /// Some but not all runs exhausted their budget.
    bool nondeterministicNonTermination() const { return exhaustedRuns > 0 && exhaustedRuns < iterations; }
    /// `terminated`, `deterministic`, `nondeterministic` or `error`.
    std::string classification() const;
};

/// Seed of one run, derived from the campaign seed, the test name, the
/// spec index and the iteration.
std::uint64_t deriveSeed(std::uint64_t campaignSeed, std::string_view test, std::size_t specIndex,
                         std::uint32_t iteration);

/// Runs every (test, spec) pair `iterations` times with derived seeds. Rows
/// are ordered by test then spec; parallel across pairs.
std::vector<CampaignRow> campaign(const std::vector<LitmusTest>& suite, const std::vector<CampaignSpec>& specs,
                                  std::uint32_t iterations, std::uint64_t campaignSeed, unsigned jobs = 1);

/// `test,scheduler,variant,instances,iterations,terminated,exhausted,errors,max_steps,classification`.
std::string outcomesCsv(const std::vector<CampaignRow>& rows);

}  // namespace progress_lab

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/lts.hpp"

namespace progress_lab {

struct SynthConfig {
    ThreadId numThreads = 2;
    std::uint32_t totalInstructions = 2;  // split over threads, each >= 1
    std::uint32_t numLocations = 2;
    std::uint32_t valueDomainSize = 2;
    /// Optional scope bounds on the plain LTS; larger candidates are pruned
    /// and counted, not silently dropped.
    std::optional<std::size_t> maxStates;
    std::optional<std::size_t> maxActions;
    /// Additionally identify tests that differ by a renaming of locations.
    bool symmetryReduction = false;
    unsigned jobs = 1;
};

/// Throws ContractViolation unless numThreads >= 2, totalInstructions >=
/// numThreads and the domains are non-empty.
void validate(const SynthConfig& config);

/// Names of the per-candidate filters, in evaluation order.
namespace constraint {
inline constexpr const char* kBound = "bound";                 // LTS exceeds maxStates / maxActions
inline constexpr const char* kEndState = "end-state";          // no reachable end state
inline constexpr const char* kPossibleTermination = "possible-termination";
inline constexpr const char* kNonTerminationCycle = "non-termination-cycle";
inline constexpr const char* kAllBranches = "all-branches-possible";
inline constexpr const char* kInfluence = "inter-thread-influence";
}  // namespace constraint

struct SynthStats {
    std::uint64_t candidates = 0;  // after syntactic pruning
    std::map<std::string, std::uint64_t> rejected;
    std::uint64_t accepted = 0;    // before deduplication
    std::uint64_t duplicates = 0;  // removed by canonical dedup
    /// Canonical texts of candidates pruned by scope bounds.
    std::vector<std::string> boundPruned;
    double elapsedSeconds = 0.0;
};

struct SynthResult {
    std::vector<LitmusTest> tests;  // ordered by canonical text
    SynthStats stats;
};

/// Exhaustive bounded enumeration of progress litmus tests. A candidate is
/// kept when its plain LTS has a reachable end state, every state can still
/// reach an end state, some reachable cycle exists, every branching
/// instruction takes both outcomes somewhere, and inter-thread influence
/// holds. Straight-line instructions only use compare value 0.
SynthResult synthesize(const SynthConfig& config);

/// Runs every semantic filter on one test; returns the name of the first
/// constraint it violates, or nullopt when it is acceptable.
std::optional<std::string> firstViolatedConstraint(const LitmusTest& test, const SynthConfig& config);

/// A store of one thread is read by a branching instruction of another
/// thread that takes both outcomes: some instruction (thread j, index i)
/// with jumpTarget != i+1 has both outcomes in `plainLts`, and on at least
/// one of its executions the checked cell was last written by a thread
/// other than j.
bool influenceHolds(const LitmusTest& test, const Lts& plainLts);

/// Both outcomes of every branching instruction occur on some transition.
bool allBranchesPossible(const LitmusTest& test, const Lts& plainLts);

/// Straight-line instructions compare against 0 only.
bool meaningfulComparisons(const LitmusTest& test);

/// Canonical text of the program, without the name line. With
/// `symmetryReduction`, the minimum over all permutations of location ids.
std::string canonicalize(const LitmusTest& test, bool symmetryReduction = false);

/// The location-permuted variant of `test` whose canonical text is minimal.
LitmusTest canonicalRepresentative(const LitmusTest& test);

/// Name given to the index-th synthesized test of a run.
std::string synthesizedTestName(const SynthConfig& config, std::size_t index);

}  // namespace progress_lab

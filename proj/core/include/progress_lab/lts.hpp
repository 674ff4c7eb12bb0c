#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/progress_model.hpp"

namespace progress_lab {

using StateId = std::size_t;
using TransitionId = std::size_t;

struct LtsState {
    MachineState machine;
    /// In a plain LTS `stepped` is always empty; `terminated` is kept in sync
    /// with the pcs in both kinds.
    SchedulerFacts facts;
};

/// One Step. A thread's Terminate is folded into the step that completes
/// its program, so the target state already records the termination.
struct StepTransition {
    StateId from = 0;
    StateId to = 0;
    ThreadId tid = 0;
    std::uint32_t pc = 0;  // tid's pc before the step
    AxbInstruction instr;
    bool branchTaken = false;
    /// Threads guaranteed fair execution before the step. Always empty in a
    /// plain LTS.
    ThreadSet fairBefore;
};

struct LtsOptions {
    std::size_t maxStates = 1'000'000;
};

/// An explored, immutable state space. State 0 is the initial state;
/// numbering follows BFS order with ascending thread ids.
class Lts {
public:
    const std::vector<LtsState>& states() const { return states_; }
    const std::vector<StepTransition>& transitions() const { return transitions_; }
    std::span<const TransitionId> outgoing(StateId s) const { return outgoing_[s]; }
    StateId initial() const { return 0; }
    const std::vector<StateId>& endStates() const { return ends_; }
    bool isEnd(StateId s) const { return outgoing_[s].empty(); }

    /// nullopt for a plain LTS.
    const std::optional<ModelKind>& model() const { return model_; }
    ThreadId numThreads() const { return numThreads_; }

    /// The fair set attached to every transition leaving `s` (constant per
    /// state since it is a function of the state's facts).
    ThreadSet fairSetAt(StateId s) const;

private:
    friend Lts explore(const LitmusTest&, std::optional<ModelKind>, const LtsOptions&);

    std::vector<LtsState> states_;
    std::vector<StepTransition> transitions_;
    std::vector<std::vector<TransitionId>> outgoing_;
    std::vector<StateId> ends_;
    std::optional<ModelKind> model_;
    ThreadId numThreads_ = 0;
};

/// Exhaustive BFS closure of `step` from the initial state; states keyed by
/// (memory, pcs). Throws ResourceLimitError past `maxStates`.
Lts buildPlainLts(const LitmusTest& test, const LtsOptions& options = {});

/// As buildPlainLts, but states also carry the stepped set and transitions
/// carry the fair set of `model` computed before the step.
Lts buildMonitoredLts(const LitmusTest& test, ModelKind model, const LtsOptions& options = {});

/// Shared implementation; `model` empty means plain.
Lts explore(const LitmusTest& test, std::optional<ModelKind> model, const LtsOptions& options);

struct Scc {
    std::vector<StateId> states;  // ascending
    /// Threads labelling at least one transition with both ends inside.
    ThreadSet steppingThreads;
    /// At least two states, or a self-loop.
    bool nontrivial = false;
};

struct SccDecomposition {
    std::vector<Scc> components;
    std::vector<std::size_t> componentOf;  // indexed by state
};

/// Generic Tarjan over an adjacency list. Components are returned in
/// reverse topological order (sinks first).
std::vector<std::vector<std::size_t>> stronglyConnectedComponents(const std::vector<std::vector<std::size_t>>& successors);

SccDecomposition sccDecompose(const Lts& lts);

/// DOT graph, edges labelled `T<tid>:{F}`.
std::string ltsToDot(const Lts& lts, const std::string& name);
/// JSON dump with states and transitions.
std::string ltsToJson(const Lts& lts, const std::string& name);

}  // namespace progress_lab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/progress_model.hpp"

namespace progress_lab {

enum class Outcome { pass, fail };

inline const char* outcomeName(Outcome o) {
    return o == Outcome::pass ? "pass" : "fail";
}

/// Why a test may not terminate.
///
/// For a cycle witness, `path` leads from the initial state to the first
/// state of `cycle`, and `cycle` is a closed walk on which every thread of
/// the walk's fair set steps. For a stuck-state witness, `path` leads to
/// `state`, from which no fairly-scheduled path reaches termination or a
/// state with an empty fair set.
struct Witness {
    enum class Kind { starvationOrLivelockCycle, stuckState };

    Kind kind = Kind::starvationOrLivelockCycle;
    std::vector<StepTransition> path;
    std::vector<StepTransition> cycle;
    std::optional<MachineState> state;
    ThreadSet fairSet;
};

struct Verdict {
    Outcome outcome = Outcome::pass;
    std::optional<Witness> witness;  // present iff outcome == fail

    bool passed() const { return outcome == Outcome::pass; }
};

/// Weak fairness: fails iff some reachable non-trivial SCC of the monitored
/// LTS has a stepping-thread set covering its (constant) fair set. An empty
/// fair set is covered vacuously. `model` must not be unfair.
Verdict checkWeak(const LitmusTest& test, ModelKind model, const LtsOptions& options = {});
Verdict checkWeak(const Lts& monitored);

/// Strong fairness: passes iff every reachable state can reach, through
/// steps of threads in each step's fair set, an end state or a state whose
/// fair set is empty. `model` must not be unfair.
Verdict checkStrong(const LitmusTest& test, ModelKind model, const LtsOptions& options = {});
Verdict checkStrong(const Lts& monitored);

/// Unfair scheduling: fails iff the plain LTS has any reachable cycle.
Verdict checkUnfair(const LitmusTest& test, const LtsOptions& options = {});

/// Dispatches on the variant's kind and flavor.
Verdict check(const LitmusTest& test, const ModelVariant& model, const LtsOptions& options = {});

struct MatrixEntry {
    ModelVariant model;
    std::optional<Verdict> verdict;
    std::string error;  // set when verdict is empty
};

/// Verdicts for each requested variant, in request order. One monitored LTS
/// is built per model kind and shared by its weak and strong checks.
/// Exploration errors are recorded per entry.
std::vector<MatrixEntry> checkMatrix(const LitmusTest& test, const std::vector<ModelVariant>& models,
                                     const LtsOptions& options = {});

/// Re-executes a witness through `step` and checks that it is a real
/// execution: the path starts at the initial state, every transition's
/// source and target machine states agree with the step semantics, and a
/// cycle returns to its starting machine state. Returns an error message,
/// or nullopt when valid.
std::optional<std::string> replayWitness(const LitmusTest& test, const Witness& witness);

/// One line per transition: `T<tid> pc=<i> F={...}`.
std::string renderWitness(const Witness& witness);

}  // namespace progress_lab

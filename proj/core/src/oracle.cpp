#include "progress_lab/oracle.hpp"

#include <deque>
#include <limits>
#include <map>

#include "progress_lab/errors.hpp"

namespace progress_lab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// BFS over the LTS from `source`, optionally confined to one SCC. Returns
// the incoming transition used to reach each state (kNone if unreached or
// the source itself).
std::vector<TransitionId> bfsParents(const Lts& lts, StateId source, const SccDecomposition* sccs = nullptr) {
    std::vector<TransitionId> parent(lts.states().size(), kNone);
    std::vector<bool> seen(lts.states().size(), false);
    std::deque<StateId> queue{source};
    seen[source] = true;
    const std::size_t comp = sccs ? sccs->componentOf[source] : 0;
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (TransitionId t : lts.outgoing(s)) {
            const StateId to = lts.transitions()[t].to;
            if (seen[to] || (sccs && sccs->componentOf[to] != comp)) continue;
            seen[to] = true;
            parent[to] = t;
            queue.push_back(to);
        }
    }
    return parent;
}

std::vector<StepTransition> pathTo(const Lts& lts, const std::vector<TransitionId>& parent, StateId target) {
    std::vector<StepTransition> path;
    for (StateId s = target; parent[s] != kNone; s = lts.transitions()[parent[s]].from) path.push_back(lts.transitions()[parent[s]]);
    return {path.rbegin(), path.rend()};
}

std::vector<std::size_t> bfsDistances(const Lts& lts) {
    std::vector<std::size_t> dist(lts.states().size(), kNone);
    std::deque<StateId> queue{lts.initial()};
    dist[lts.initial()] = 0;
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (TransitionId t : lts.outgoing(s)) {
            const StateId to = lts.transitions()[t].to;
            if (dist[to] != kNone) continue;
            dist[to] = dist[s] + 1;
            queue.push_back(to);
        }
    }
    return dist;
}

// A closed walk inside `component` starting and ending at `entry` that
// contains a step of every thread in `required` (or at least one step
// when `required` is empty).
std::vector<StepTransition> coveringWalk(const Lts& lts, const SccDecomposition& sccs, StateId entry, ThreadSet required) {
    const std::size_t comp = sccs.componentOf[entry];
    std::vector<StepTransition> walk;
    StateId current = entry;

    auto takeEdgeOf = [&](std::optional<ThreadId> tid) {
        const auto parent = bfsParents(lts, current, &sccs);
        std::deque<StateId> order{current};
        std::vector<bool> seen(lts.states().size(), false);
        seen[current] = true;
        // Visit in BFS order so the nearest suitable edge wins.
        while (!order.empty()) {
            const StateId s = order.front();
            order.pop_front();
            for (TransitionId t : lts.outgoing(s)) {
                const auto& tr = lts.transitions()[t];
                if (sccs.componentOf[tr.to] != comp) continue;
                if (!tid || tr.tid == *tid) {
                    for (auto& step : pathTo(lts, parent, s)) walk.push_back(step);
                    walk.push_back(tr);
                    current = tr.to;
                    return;
                }
                if (!seen[tr.to]) {
                    seen[tr.to] = true;
                    order.push_back(tr.to);
                }
            }
        }
        throw ContractViolation("no internal transition for the requested thread");
    };

    if (required.empty()) {
        takeEdgeOf(std::nullopt);
    } else {
        for (ThreadId tid : required.members()) takeEdgeOf(tid);
    }
    if (current != entry) {
        const auto parent = bfsParents(lts, current, &sccs);
        for (auto& step : pathTo(lts, parent, entry)) walk.push_back(step);
    }
    return walk;
}

Verdict weakCycleCheck(const Lts& lts) {
    const auto sccs = sccDecompose(lts);
    const auto dist = bfsDistances(lts);

    std::optional<StateId> bestEntry;
    for (const auto& c : sccs.components) {
        if (!c.nontrivial) continue;
        const ThreadSet fair = lts.fairSetAt(c.states.front());
        if (!fair.isSubsetOf(c.steppingThreads)) continue;
        StateId entry = c.states.front();
        for (StateId s : c.states) {
            if (dist[s] < dist[entry]) entry = s;
        }
        if (!bestEntry || dist[entry] < dist[*bestEntry] || (dist[entry] == dist[*bestEntry] && entry < *bestEntry)) {
            bestEntry = entry;
        }
    }
    if (!bestEntry) return Verdict{Outcome::pass, std::nullopt};

    Witness w;
    w.kind = Witness::Kind::starvationOrLivelockCycle;
    w.fairSet = lts.fairSetAt(*bestEntry);
    w.path = pathTo(lts, bfsParents(lts, lts.initial()), *bestEntry);
    w.cycle = coveringWalk(lts, sccs, *bestEntry, w.fairSet);
    w.state = lts.states()[*bestEntry].machine;
    return Verdict{Outcome::fail, std::move(w)};
}

void requireMonitored(const Lts& lts, const char* what) {
    if (!lts.model()) throw ContractViolation(std::string(what) + " needs a monitored LTS");
    if (*lts.model() == ModelKind::unfair) throw ContractViolation(std::string(what) + " is undefined for the unfair model; use checkUnfair");
}

}  // namespace

Verdict checkWeak(const Lts& monitored) {
    requireMonitored(monitored, "checkWeak");
    return weakCycleCheck(monitored);
}

Verdict checkWeak(const LitmusTest& test, ModelKind model, const LtsOptions& options) {
    if (model == ModelKind::unfair) throw ContractViolation("checkWeak is undefined for the unfair model; use checkUnfair");
    return checkWeak(buildMonitoredLts(test, model, options));
}

Verdict checkStrong(const Lts& lts) {
    requireMonitored(lts, "checkStrong");
    const std::size_t n = lts.states().size();
    std::vector<std::vector<StateId>> fairPredecessors(n);
    for (const auto& t : lts.transitions()) {
        if (t.fairBefore.contains(t.tid)) fairPredecessors[t.to].push_back(t.from);
    }

    std::vector<bool> good(n, false);
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
        if (lts.isEnd(s) || lts.fairSetAt(s).empty()) {
            good[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (StateId p : fairPredecessors[s]) {
            if (!good[p]) {
                good[p] = true;
                queue.push_back(p);
            }
        }
    }

    const auto dist = bfsDistances(lts);
    std::optional<StateId> stuck;
    for (StateId s = 0; s < n; ++s) {
        if (good[s] || dist[s] == kNone) continue;
        if (!stuck || dist[s] < dist[*stuck]) stuck = s;
    }
    if (!stuck) return Verdict{Outcome::pass, std::nullopt};

    Witness w;
    w.kind = Witness::Kind::stuckState;
    w.path = pathTo(lts, bfsParents(lts, lts.initial()), *stuck);
    w.state = lts.states()[*stuck].machine;
    w.fairSet = lts.fairSetAt(*stuck);
    return Verdict{Outcome::fail, std::move(w)};
}

Verdict checkStrong(const LitmusTest& test, ModelKind model, const LtsOptions& options) {
    if (model == ModelKind::unfair) throw ContractViolation("checkStrong is undefined for the unfair model; use checkUnfair");
    return checkStrong(buildMonitoredLts(test, model, options));
}

Verdict checkUnfair(const LitmusTest& test, const LtsOptions& options) {
    // The plain LTS carries empty fair sets, so any cycle qualifies.
    return weakCycleCheck(buildPlainLts(test, options));
}

Verdict check(const LitmusTest& test, const ModelVariant& model, const LtsOptions& options) {
    if (model.kind == ModelKind::unfair) return checkUnfair(test, options);
    if (!model.flavor) throw ContractViolation("model '" + model.label() + "' needs a fairness flavor");
    return *model.flavor == Fairness::weak ? checkWeak(test, model.kind, options) : checkStrong(test, model.kind, options);
}

std::vector<MatrixEntry> checkMatrix(const LitmusTest& test, const std::vector<ModelVariant>& models, const LtsOptions& options) {
    std::vector<MatrixEntry> row;
    std::map<ModelKind, Lts> cache;
    std::map<ModelKind, std::string> failures;
    for (const auto& m : models) {
        MatrixEntry entry{m, std::nullopt, {}};
        try {
            if (m.kind == ModelKind::unfair) {
                entry.verdict = checkUnfair(test, options);
            } else if (!m.flavor) {
                throw ContractViolation("model '" + m.label() + "' needs a fairness flavor");
            } else if (auto f = failures.find(m.kind); f != failures.end()) {
                entry.error = f->second;
            } else {
                auto it = cache.find(m.kind);
                if (it == cache.end()) it = cache.emplace(m.kind, buildMonitoredLts(test, m.kind, options)).first;
                entry.verdict = *m.flavor == Fairness::weak ? checkWeak(it->second) : checkStrong(it->second);
            }
        } catch (const Error& e) {
            entry.error = e.what();
            if (m.kind != ModelKind::unfair) failures.emplace(m.kind, e.what());
        }
        row.push_back(std::move(entry));
    }
    return row;
}

std::optional<std::string> replayWitness(const LitmusTest& test, const Witness& w) {
    MachineState state = initialState(test);
    auto replay = [&](const std::vector<StepTransition>& steps, const char* part) -> std::optional<std::string> {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto& t = steps[i];
            const std::string where = std::string(part) + " step " + std::to_string(i);
            if (t.tid >= test.numThreads() || isTerminated(test, state, t.tid)) return where + ": thread cannot step";
            if (state.pcs[t.tid] != t.pc) return where + ": pc mismatch";
            if (branchTaken(test, state, t.tid) != t.branchTaken) return where + ": branch outcome mismatch";
            state = step(test, state, t.tid);
        }
        return std::nullopt;
    };

    if (auto err = replay(w.path, "path")) return err;
    if (w.kind == Witness::Kind::stuckState) {
        if (w.state && *w.state != state) return std::string("path does not end at the stuck state");
        return std::nullopt;
    }
    if (w.cycle.empty()) return std::string("empty cycle");
    const MachineState start = state;
    if (auto err = replay(w.cycle, "cycle")) return err;
    if (state != start) return std::string("cycle does not return to its start state");
    ThreadSet stepping;
    for (const auto& t : w.cycle) stepping.insert(t.tid);
    if (!w.fairSet.isSubsetOf(stepping)) return std::string("cycle misses a step of a fair thread");
    return std::nullopt;
}

std::string renderWitness(const Witness& w) {
    std::string out;
    auto line = [&out](const StepTransition& t) {
        out += "T" + std::to_string(t.tid) + " pc=" + std::to_string(t.pc) + " F=" + t.fairBefore.toString() + "\n";
    };
    if (w.kind == Witness::Kind::stuckState) {
        out += "# stuck state reached by:\n";
        for (const auto& t : w.path) line(t);
        out += "# no fair path from here reaches termination, F=" + w.fairSet.toString() + "\n";
        return out;
    }
    out += "# path:\n";
    for (const auto& t : w.path) line(t);
    out += "# cycle:\n";
    for (const auto& t : w.cycle) line(t);
    return out;
}

}  // namespace progress_lab

#include "progress_lab/lts.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "progress_lab/errors.hpp"

namespace progress_lab {

namespace {

// Compact byte key: small numbers take one byte, larger ones an escape
// byte plus four bytes. Litmus-scale keys stay inside the SSO buffer.
void appendNumber(std::string& key, std::uint32_t n) {
    if (n < 0xFF) {
        key.push_back(static_cast<char>(n));
        return;
    }
    key.push_back(static_cast<char>(0xFF));
    for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>((n >> (8 * i)) & 0xFF));
}

std::string stateKey(const MachineState& m, std::optional<ThreadSet> stepped, ThreadId numThreads) {
    std::string key;
    for (Value v : m.memory) appendNumber(key, v.v);
    for (std::uint32_t pc : m.pcs) appendNumber(key, pc);
    if (stepped) {
        const std::uint64_t mask = stepped->mask();
        for (ThreadId byte = 0; byte * 8 < numThreads; ++byte) key.push_back(static_cast<char>((mask >> (8 * byte)) & 0xFF));
    }
    return key;
}

}  // namespace

ThreadSet Lts::fairSetAt(StateId s) const {
    if (!model_) return {};
    return fairSet(*model_, states_[s].facts);
}

Lts explore(const LitmusTest& test, std::optional<ModelKind> model, const LtsOptions& options) {
    validate(test);
    Lts lts;
    lts.model_ = model;
    lts.numThreads_ = test.numThreads();

    std::unordered_map<std::string, StateId> index;
    auto intern = [&](LtsState st) -> StateId {
        auto key = stateKey(st.machine, model ? std::optional<ThreadSet>(st.facts.stepped) : std::nullopt, test.numThreads());
        auto [it, inserted] = index.try_emplace(std::move(key), lts.states_.size());
        if (inserted) {
            if (lts.states_.size() >= options.maxStates) {
                throw ResourceLimitError("state limit of " + std::to_string(options.maxStates) + " exceeded exploring '" +
                                         test.name + "'");
            }
            lts.states_.push_back(std::move(st));
            lts.outgoing_.emplace_back();
        }
        return it->second;
    };

    const MachineState init = initialState(test);
    intern(LtsState{init, SchedulerFacts{{}, terminatedThreads(test, init), test.numThreads()}});

    // states_ doubles as the BFS queue.
    for (StateId s = 0; s < lts.states_.size(); ++s) {
        const ThreadSet enabled = enabledThreads(test, lts.states_[s].machine);
        if (enabled.empty()) {
            lts.ends_.push_back(s);
            continue;
        }
        const ThreadSet fair = model ? fairSet(*model, lts.states_[s].facts) : ThreadSet{};
        for (ThreadId tid : enabled.members()) {
            const MachineState& from = lts.states_[s].machine;
            const std::uint32_t pc = from.pcs[tid];
            const bool taken = branchTaken(test, from, tid);
            MachineState to = step(test, from, tid);
            SchedulerFacts facts = lts.states_[s].facts;
            facts.terminated = terminatedThreads(test, to);
            if (model) facts.stepped.insert(tid);
            const StateId target = intern(LtsState{std::move(to), facts});
            const TransitionId id = lts.transitions_.size();
            lts.transitions_.push_back(StepTransition{s, target, tid, pc, test.threads[tid][pc], taken, fair});
            lts.outgoing_[s].push_back(id);
        }
    }
    return lts;
}

Lts buildPlainLts(const LitmusTest& test, const LtsOptions& options) {
    return explore(test, std::nullopt, options);
}

Lts buildMonitoredLts(const LitmusTest& test, ModelKind model, const LtsOptions& options) {
    return explore(test, model, options);
}

std::vector<std::vector<std::size_t>> stronglyConnectedComponents(const std::vector<std::vector<std::size_t>>& successors) {
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    const std::size_t n = successors.size();
    std::vector<std::size_t> number(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> onStack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    struct Frame {
        std::size_t vertex;
        std::size_t nextEdge;
    };
    std::vector<Frame> callStack;

    for (std::size_t root = 0; root < n; ++root) {
        if (number[root] != kUnvisited) continue;
        callStack.push_back({root, 0});
        number[root] = lowlink[root] = counter++;
        stack.push_back(root);
        onStack[root] = true;

        while (!callStack.empty()) {
            Frame& frame = callStack.back();
            const std::size_t v = frame.vertex;
            if (frame.nextEdge < successors[v].size()) {
                const std::size_t w = successors[v][frame.nextEdge++];
                if (number[w] == kUnvisited) {
                    number[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = true;
                    callStack.push_back({w, 0});
                } else if (onStack[w]) {
                    lowlink[v] = std::min(lowlink[v], number[w]);
                }
                continue;
            }
            if (lowlink[v] == number[v]) {
                std::vector<std::size_t> component;
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    component.push_back(w);
                } while (w != v);
                components.push_back(std::move(component));
            }
            callStack.pop_back();
            if (!callStack.empty()) {
                const std::size_t parent = callStack.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return components;
}

SccDecomposition sccDecompose(const Lts& lts) {
    const std::size_t n = lts.states().size();
    std::vector<std::vector<std::size_t>> successors(n);
    for (const auto& t : lts.transitions()) successors[t.from].push_back(t.to);

    SccDecomposition out;
    out.componentOf.assign(n, 0);
    for (auto& members : stronglyConnectedComponents(successors)) {
        std::sort(members.begin(), members.end());
        for (std::size_t s : members) out.componentOf[s] = out.components.size();
        out.components.push_back(Scc{std::move(members), {}, false});
    }
    for (const auto& t : lts.transitions()) {
        const std::size_t c = out.componentOf[t.from];
        if (c != out.componentOf[t.to]) continue;
        out.components[c].steppingThreads.insert(t.tid);
        out.components[c].nontrivial = true;  // any internal edge closes a cycle
    }
    return out;
}

namespace {

std::string machineLabel(const MachineState& m) {
    std::string s = "mem=[";
    for (std::size_t i = 0; i < m.memory.size(); ++i) s += (i ? "," : "") + std::to_string(m.memory[i].v);
    s += "] pc=[";
    for (std::size_t i = 0; i < m.pcs.size(); ++i) s += (i ? "," : "") + std::to_string(m.pcs[i]);
    return s + "]";
}

std::string dotEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string ltsToDot(const Lts& lts, const std::string& name) {
    std::string out = "digraph \"" + dotEscape(name) + "\" {\n";
    for (StateId s = 0; s < lts.states().size(); ++s) {
        const auto& st = lts.states()[s];
        std::string label = "s" + std::to_string(s) + "\\n" + machineLabel(st.machine);
        if (lts.model()) label += "\\nstepped=" + st.facts.stepped.toString();
        out += "  s" + std::to_string(s) + " [label=\"" + label + "\"";
        if (lts.isEnd(s)) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (const auto& t : lts.transitions()) {
        out += "  s" + std::to_string(t.from) + " -> s" + std::to_string(t.to) + " [label=\"T" + std::to_string(t.tid) + ":" +
               t.fairBefore.toString() + "\"];\n";
    }
    return out + "}\n";
}

std::string ltsToJson(const Lts& lts, const std::string& name) {
    nlohmann::ordered_json out;
    out["name"] = name;
    out["model"] = lts.model() ? nlohmann::ordered_json(std::string(modelName(*lts.model()))) : nlohmann::ordered_json(nullptr);
    out["initial"] = lts.initial();
    auto& states = out["states"] = nlohmann::ordered_json::array();
    for (StateId s = 0; s < lts.states().size(); ++s) {
        const auto& st = lts.states()[s];
        std::vector<std::uint32_t> memory;
        for (Value v : st.machine.memory) memory.push_back(v.v);
        states.push_back({{"id", s},
                          {"memory", memory},
                          {"pcs", st.machine.pcs},
                          {"stepped", st.facts.stepped.members()},
                          {"end", lts.isEnd(s)}});
    }
    auto& transitions = out["transitions"] = nlohmann::ordered_json::array();
    for (const auto& t : lts.transitions()) {
        transitions.push_back({{"from", t.from},
                               {"to", t.to},
                               {"tid", t.tid},
                               {"pc", t.pc},
                               {"taken", t.branchTaken},
                               {"fair", t.fairBefore.members()}});
    }
    return out.dump(2) + "\n";
}

}  // namespace progress_lab

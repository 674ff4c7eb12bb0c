#include "progress_lab/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "progress_lab/errors.hpp"
#include "progress_lab/litmus_format.hpp"
#include "progress_lab/parallel.hpp"

namespace progress_lab {

void validate(const SynthConfig& config) {
    if (config.numThreads < 2) throw ContractViolation("synthesis needs at least 2 threads");
    if (config.numThreads > kMaxThreads) throw ContractViolation("too many threads");
    if (config.totalInstructions < config.numThreads) {
        throw ContractViolation("total instructions must be at least the number of threads");
    }
    if (config.numLocations == 0) throw ContractViolation("synthesis needs at least one location");
    if (config.valueDomainSize == 0) throw ContractViolation("synthesis needs a non-empty value domain");
}

namespace {

void compositionsInto(std::uint32_t remaining, std::uint32_t parts, std::vector<std::uint32_t>& prefix,
                      std::vector<std::vector<std::uint32_t>>& out) {
    if (parts == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint32_t first = 1; first + (parts - 1) <= remaining; ++first) {
        prefix.push_back(first);
        compositionsInto(remaining - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total, std::uint32_t parts) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> prefix;
    compositionsInto(total, parts, prefix, out);
    return out;
}

// Every instruction at `index` of a `length`-long program; straight-line
// instructions only use compare value 0.
std::vector<AxbInstruction> instructionChoices(std::uint32_t index, std::uint32_t length, const SynthConfig& config) {
    std::vector<AxbInstruction> out;
    for (std::uint32_t loc = 0; loc < config.numLocations; ++loc) {
        for (std::uint32_t jump = 0; jump <= length; ++jump) {
            const std::uint32_t cmpCount = (jump == index + 1) ? 1 : config.valueDomainSize;
            for (std::uint32_t cmp = 0; cmp < cmpCount; ++cmp) {
                out.push_back(AxbInstruction{LocationId{loc}, Value{cmp}, jump, false, Value{0}});
                for (std::uint32_t exch = 0; exch < config.valueDomainSize; ++exch) {
                    out.push_back(AxbInstruction{LocationId{loc}, Value{cmp}, jump, true, Value{exch}});
                }
            }
        }
    }
    return out;
}

std::vector<ThreadProgram> programsOfLength(std::uint32_t length, const SynthConfig& config) {
    std::vector<ThreadProgram> programs{ThreadProgram{}};
    for (std::uint32_t i = 0; i < length; ++i) {
        const auto choices = instructionChoices(i, length, config);
        std::vector<ThreadProgram> next;
        next.reserve(programs.size() * choices.size());
        for (const auto& p : programs) {
            for (const auto& c : choices) {
                auto q = p;
                q.push_back(c);
                next.push_back(std::move(q));
            }
        }
        programs = std::move(next);
    }
    return programs;
}

// Instruction tuples the compare-value restriction removes, for the stats.
std::uint64_t syntacticallyPrunedCount(const SynthConfig& config) {
    const std::uint64_t perJumpCmp = config.numLocations * (1ULL + config.valueDomainSize);
    std::uint64_t raw = 0;
    std::uint64_t kept = 0;
    for (const auto& comp : compositions(config.totalInstructions, config.numThreads)) {
        std::uint64_t r = 1;
        std::uint64_t k = 1;
        for (std::uint32_t len : comp) {
            for (std::uint32_t i = 0; i < len; ++i) {
                r *= perJumpCmp * (len + 1ULL) * config.valueDomainSize;
                k *= perJumpCmp * (len * std::uint64_t{config.valueDomainSize} + 1ULL);
            }
        }
        raw += r;
        kept += k;
    }
    return raw - kept;
}

bool everyStateReachesEnd(const Lts& lts) {
    const std::size_t n = lts.states().size();
    std::vector<std::vector<StateId>> preds(n);
    for (const auto& t : lts.transitions()) preds[t.to].push_back(t.from);
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue;
    for (StateId s : lts.endStates()) {
        seen[s] = true;
        queue.push_back(s);
    }
    std::size_t count = queue.size();
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (StateId p : preds[s]) {
            if (!seen[p]) {
                seen[p] = true;
                ++count;
                queue.push_back(p);
            }
        }
    }
    return count == n;
}

bool hasCycle(const Lts& lts) {
    const auto sccs = sccDecompose(lts);
    return std::any_of(sccs.components.begin(), sccs.components.end(), [](const Scc& c) { return c.nontrivial; });
}

struct BranchOutcomes {
    bool taken = false;
    bool fallThrough = false;
};

std::vector<std::vector<BranchOutcomes>> observedOutcomes(const LitmusTest& test, const Lts& plainLts) {
    std::vector<std::vector<BranchOutcomes>> seen(test.numThreads());
    for (ThreadId t = 0; t < test.numThreads(); ++t) seen[t].resize(test.programLength(t));
    for (const auto& tr : plainLts.transitions()) {
        auto& o = seen[tr.tid][tr.pc];
        (tr.branchTaken ? o.taken : o.fallThrough) = true;
    }
    return seen;
}

LitmusTest permuteLocations(const LitmusTest& test, const std::vector<std::uint32_t>& perm) {
    LitmusTest out = test;
    for (auto& program : out.threads) {
        for (auto& in : program) in.checkLoc.index = perm[in.checkLoc.index];
    }
    return out;
}

std::string bodyText(const LitmusTest& test) {
    const std::string text = serializeLitmus(test);
    return text.substr(text.find('\n') + 1);
}

}  // namespace

bool meaningfulComparisons(const LitmusTest& test) {
    for (const auto& program : test.threads) {
        for (std::uint32_t i = 0; i < program.size(); ++i) {
            if (program[i].isStraightLine(i) && program[i].checkVal.v != 0) return false;
        }
    }
    return true;
}

bool allBranchesPossible(const LitmusTest& test, const Lts& plainLts) {
    const auto seen = observedOutcomes(test, plainLts);
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        for (std::uint32_t i = 0; i < test.programLength(t); ++i) {
            if (test.threads[t][i].isStraightLine(i)) continue;
            if (!seen[t][i].taken || !seen[t][i].fallThrough) return false;
        }
    }
    return true;
}

bool influenceHolds(const LitmusTest& test, const Lts& plainLts) {
    const auto outcomes = observedOutcomes(test, plainLts);

    // Explore machine states extended with a last-writer tag per location
    // (0 = initial value, k+1 = thread k) and note which branching
    // instructions ever read a cell last written by another thread.
    constexpr std::uint32_t kInit = 0;
    struct Tagged {
        MachineState machine;
        std::vector<std::uint32_t> writer;
    };
    std::vector<std::vector<bool>> crossRead(test.numThreads());
    for (ThreadId t = 0; t < test.numThreads(); ++t) crossRead[t].assign(test.programLength(t), false);

    auto keyOf = [](const Tagged& s) {
        std::string key;
        for (Value v : s.machine.memory) key += std::to_string(v.v) + ",";
        key += '|';
        for (auto pc : s.machine.pcs) key += std::to_string(pc) + ",";
        key += '|';
        for (auto w : s.writer) key += std::to_string(w) + ",";
        return key;
    };

    std::vector<Tagged> states{Tagged{initialState(test), std::vector<std::uint32_t>(test.numLocations, kInit)}};
    std::unordered_map<std::string, std::size_t> index{{keyOf(states[0]), 0}};
    const std::size_t limit = std::max<std::size_t>(LtsOptions{}.maxStates, plainLts.states().size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        for (ThreadId tid : enabledThreads(test, states[s].machine).members()) {
            const Tagged& from = states[s];
            const std::uint32_t pc = from.machine.pcs[tid];
            const auto& in = test.threads[tid][pc];
            const std::uint32_t w = from.writer[in.checkLoc.index];
            if (w != kInit && w != tid + 1) crossRead[tid][pc] = true;
            Tagged next{step(test, from.machine, tid), from.writer};
            if (in.doExch) next.writer[in.checkLoc.index] = tid + 1;
            auto key = keyOf(next);
            if (index.try_emplace(std::move(key), states.size()).second) {
                if (states.size() >= limit) throw ResourceLimitError("state limit exceeded tracking writers of '" + test.name + "'");
                states.push_back(std::move(next));
            }
        }
    }

    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        for (std::uint32_t i = 0; i < test.programLength(t); ++i) {
            if (test.threads[t][i].isStraightLine(i)) continue;
            if (outcomes[t][i].taken && outcomes[t][i].fallThrough && crossRead[t][i]) return true;
        }
    }
    return false;
}

std::optional<std::string> firstViolatedConstraint(const LitmusTest& test, const SynthConfig& config) {
    LtsOptions options;
    if (config.maxStates) options.maxStates = *config.maxStates;
    std::optional<Lts> lts;
    try {
        lts = buildPlainLts(test, options);
    } catch (const ResourceLimitError&) {
        if (!config.maxStates) throw;
        return constraint::kBound;
    }
    if (config.maxActions && lts->transitions().size() > *config.maxActions) return constraint::kBound;

    // Every non-terminated thread has a step out of every state.
    for (StateId s = 0; s < lts->states().size(); ++s) {
        if (lts->outgoing(s).size() != enabledThreads(test, lts->states()[s].machine).size()) {
            throw ContractViolation("always-enabled invariant broken in '" + test.name + "'");
        }
    }

    if (lts->endStates().empty()) return constraint::kEndState;
    if (!everyStateReachesEnd(*lts)) return constraint::kPossibleTermination;
    if (!hasCycle(*lts)) return constraint::kNonTerminationCycle;
    if (!allBranchesPossible(test, *lts)) return constraint::kAllBranches;
    if (!influenceHolds(test, *lts)) return constraint::kInfluence;
    return std::nullopt;
}

std::string canonicalize(const LitmusTest& test, bool symmetryReduction) {
    if (!symmetryReduction) return bodyText(test);
    return bodyText(canonicalRepresentative(test));
}

LitmusTest canonicalRepresentative(const LitmusTest& test) {
    std::vector<std::uint32_t> perm(test.numLocations);
    std::iota(perm.begin(), perm.end(), 0U);
    std::optional<LitmusTest> best;
    std::string bestText;
    do {
        auto candidate = permuteLocations(test, perm);
        auto text = bodyText(candidate);
        if (!best || text < bestText) {
            best = std::move(candidate);
            bestText = std::move(text);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

std::string synthesizedTestName(const SynthConfig& config, std::size_t index) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "t%ui%u_%04zu", config.numThreads, config.totalInstructions, index);
    return buf;
}

SynthResult synthesize(const SynthConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    // Work items: (composition, thread-0 program). Each item enumerates the
    // remaining threads' programs.
    struct Shape {
        std::vector<std::uint32_t> lengths;
        std::vector<const std::vector<ThreadProgram>*> programs;
    };
    std::map<std::uint32_t, std::vector<ThreadProgram>> programsByLength;
    std::vector<Shape> shapes;
    for (const auto& comp : compositions(config.totalInstructions, config.numThreads)) {
        Shape shape{comp, {}};
        for (std::uint32_t len : comp) {
            auto it = programsByLength.find(len);
            if (it == programsByLength.end()) it = programsByLength.emplace(len, programsOfLength(len, config)).first;
            shape.programs.push_back(&it->second);
        }
        shapes.push_back(std::move(shape));
    }
    struct Item {
        std::size_t shape;
        std::size_t firstProgram;
    };
    std::vector<Item> items;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        for (std::size_t p = 0; p < shapes[s].programs[0]->size(); ++p) items.push_back(Item{s, p});
    }

    struct Partial {
        std::vector<std::pair<std::string, LitmusTest>> accepted;
        SynthStats stats;
    };
    std::vector<Partial> partials(items.size());

    parallelFor(items.size(), config.jobs, [&](std::size_t itemIndex) {
        const Item& item = items[itemIndex];
        const Shape& shape = shapes[item.shape];
        Partial& out = partials[itemIndex];
        LitmusTest test;
        test.name = "candidate";
        test.numLocations = config.numLocations;
        test.valueDomainSize = config.valueDomainSize;
        test.threads.resize(config.numThreads);
        test.threads[0] = (*shape.programs[0])[item.firstProgram];

        std::vector<std::size_t> cursor(config.numThreads, 0);
        while (true) {
            for (ThreadId t = 1; t < config.numThreads; ++t) test.threads[t] = (*shape.programs[t])[cursor[t]];
            ++out.stats.candidates;
            if (auto violated = firstViolatedConstraint(test, config)) {
                ++out.stats.rejected[*violated];
                if (*violated == constraint::kBound) out.stats.boundPruned.push_back(canonicalize(test));
            } else {
                ++out.stats.accepted;
                LitmusTest kept = config.symmetryReduction ? canonicalRepresentative(test) : test;
                out.accepted.emplace_back(canonicalize(kept), std::move(kept));
            }
            // Odometer over threads 1..N-1.
            ThreadId t = config.numThreads - 1;
            while (t >= 1) {
                if (++cursor[t] < shape.programs[t]->size()) break;
                cursor[t] = 0;
                --t;
            }
            if (t == 0) break;
        }
    });

    SynthResult result;
    for (const char* name : {constraint::kBound, constraint::kEndState, constraint::kPossibleTermination,
                             constraint::kNonTerminationCycle, constraint::kAllBranches, constraint::kInfluence})
        result.stats.rejected[name] = 0;
    result.stats.rejected["meaningful-comparisons"] = syntacticallyPrunedCount(config);
    std::map<std::string, LitmusTest> unique;
    for (auto& part : partials) {
        result.stats.candidates += part.stats.candidates;
        result.stats.accepted += part.stats.accepted;
        for (const auto& [name, count] : part.stats.rejected) result.stats.rejected[name] += count;
        for (auto& text : part.stats.boundPruned) result.stats.boundPruned.push_back(std::move(text));
        for (auto& [canon, test] : part.accepted) {
            if (!unique.emplace(std::move(canon), std::move(test)).second) ++result.stats.duplicates;
        }
    }
    std::sort(result.stats.boundPruned.begin(), result.stats.boundPruned.end());
    for (auto& [canon, test] : unique) {
        test.name = synthesizedTestName(config, result.tests.size());
        result.tests.push_back(std::move(test));
    }
    result.stats.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace progress_lab

#include "progress_lab/sched_sim.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "progress_lab/errors.hpp"
#include "progress_lab/parallel.hpp"

namespace progress_lab {

namespace {

__extension__ using Uint128 = unsigned __int128;

/// mt19937_64 with a portable bounded draw (multiply-shift), so runs agree
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<Uint128>(gen_()) * n) >> 64);
    }

    bool chance(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 gen_;
};

/// Circular doubly linked list over thread ids with a cursor. Insertion
/// places the id just before the cursor, i.e. last in the current rotation.
class Ring {
public:
    explicit Ring(std::uint32_t capacity) : next_(capacity, kNone), prev_(capacity, kNone) {}

    bool empty() const { return size_ == 0; }
    std::uint32_t current() const { return cursor_; }
    void advance() { cursor_ = next_[cursor_]; }
    void seek(std::uint32_t id) { cursor_ = id; }

    void pushBack(std::uint32_t id) {
        if (size_ == 0) {
            next_[id] = prev_[id] = id;
            cursor_ = id;
        } else {
            const std::uint32_t last = prev_[cursor_];
            next_[last] = id;
            prev_[id] = last;
            next_[id] = cursor_;
            prev_[cursor_] = id;
        }
        ++size_;
    }

    /// Removes the cursor element; the cursor moves to its successor.
    void removeCurrent() {
        const std::uint32_t c = cursor_;
        if (size_ == 1) {
            cursor_ = kNone;
        } else {
            next_[prev_[c]] = next_[c];
            prev_[next_[c]] = prev_[c];
            cursor_ = next_[c];
        }
        --size_;
    }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prev_;
    std::uint32_t cursor_ = kNone;
    std::size_t size_ = 0;
};

/// Live set supporting uniform sampling and O(1) removal.
class LivePool {
public:
    explicit LivePool(std::uint32_t n) : ids_(n), pos_(n) {
        for (std::uint32_t i = 0; i < n; ++i) ids_[i] = pos_[i] = i;
    }
    std::uint32_t sample(Rng& rng) const { return ids_[rng.below(ids_.size())]; }
    void remove(std::uint32_t id) {
        const std::uint32_t p = pos_[id];
        const std::uint32_t last = ids_.back();
        ids_[p] = last;
        pos_[last] = p;
        ids_.pop_back();
    }

private:
    std::vector<std::uint32_t> ids_;
    std::vector<std::uint32_t> pos_;
};

class Machine {
public:
    explicit Machine(const SimProgram& program)
        : program_(program), memory_(program.memoryCells, 0), pcs_(program.threads.size(), 0) {
        for (std::uint32_t w = 0; w < pcs_.size(); ++w) {
            if (!done(w)) ++live_;
        }
    }

    bool done(std::uint32_t w) const { return pcs_[w] == program_.programOf(w).size(); }
    std::size_t live() const { return live_; }

    /// Executes one instruction of w; returns true when w just terminated.
    bool step(std::uint32_t w, const TraceSink& trace) {
        const AxbInstruction& in = program_.programOf(w)[pcs_[w]];
        std::uint32_t& cell = memory_[program_.threads[w].base + in.checkLoc.index];
        const bool taken = cell == in.checkVal.v;
        if (trace) trace(TraceStep{w, pcs_[w], taken});
        pcs_[w] = taken ? in.jumpTarget : pcs_[w] + 1;
        if (in.doExch) cell = in.exchVal.v;
        if (done(w)) {
            --live_;
            return true;
        }
        return false;
    }

    const std::vector<std::uint32_t>& memory() const { return memory_; }

private:
    const SimProgram& program_;
    std::vector<std::uint32_t> memory_;
    std::vector<std::uint32_t> pcs_;
    std::size_t live_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::string_view schedulerName(SchedulerKind kind) {
    switch (kind) {
        case SchedulerKind::unfairRandom: return "unfair-random";
        case SchedulerKind::fairRoundRobin: return "fair-round-robin";
        case SchedulerKind::obeNonpreemptive: return "obe-nonpreemptive";
        case SchedulerKind::lobeNonpreemptive: return "lobe-nonpreemptive";
        case SchedulerKind::hsaPriority: return "hsa-priority";
    }
    return "?";
}

std::optional<SchedulerKind> parseSchedulerName(std::string_view token) {
    for (SchedulerKind k : {SchedulerKind::unfairRandom, SchedulerKind::fairRoundRobin,
                            SchedulerKind::obeNonpreemptive, SchedulerKind::lobeNonpreemptive,
                            SchedulerKind::hsaPriority}) {
        if (schedulerName(k) == token) return k;
    }
    return std::nullopt;
}

bool isNonpreemptive(SchedulerKind kind) {
    return kind == SchedulerKind::obeNonpreemptive || kind == SchedulerKind::lobeNonpreemptive;
}

std::string SchedulerSpec::label() const {
    std::string s(schedulerName(kind));
    if (isNonpreemptive(kind)) s += "/" + std::to_string(slots);
    return s;
}

void validate(const SchedulerSpec& spec) {
    if (spec.stepBudget == 0) throw ContractViolation("step budget must be at least 1");
    if (isNonpreemptive(spec.kind) && spec.slots == 0) {
        throw ContractViolation(std::string(schedulerName(spec.kind)) + " needs at least 1 slot");
    }
    if (!(spec.hsaProbability >= 0.0 && spec.hsaProbability <= 1.0)) {
        throw ContractViolation("hsa probability must lie in [0, 1]");
    }
}

SimProgram buildSimProgram(const LitmusTest& test, const Layout& layout) {
    validate(test);
    const ThreadId n = test.numThreads();
    const std::uint32_t m = layout.instances;
    if (m == 0) throw ContractViolation("layout needs at least 1 instance");
    const std::uint64_t total = static_cast<std::uint64_t>(n) * m;
    const std::uint64_t cells = static_cast<std::uint64_t>(test.numLocations) * m;
    if (total > std::numeric_limits<std::uint32_t>::max() || cells > std::numeric_limits<std::uint32_t>::max()) {
        throw ContractViolation("layout too large");
    }
    SimProgram p;
    p.name = test.name;
    p.memoryCells = static_cast<std::uint32_t>(cells);
    p.programs = test.threads;
    p.threads.resize(total);
    for (std::uint32_t w = 0; w < total; ++w) {
        const ThreadMapping mp = mapWorkgroup(layout.variant, w, n, m);
        p.threads[w] = SimThread{mp, mp.instance * test.numLocations};
    }
    return p;
}

SimProgram buildSimProgram(const HarnessProgram& h) {
    LitmusTest test;
    test.name = h.test;
    test.numLocations = h.locationsPerInstance;
    std::uint32_t maxValue = 1;
    for (const ThreadProgram& p : h.threads) {
        for (const AxbInstruction& in : p) {
            maxValue = std::max({maxValue, in.checkVal.v + 1, in.doExch ? in.exchVal.v + 1 : 0});
        }
    }
    test.valueDomainSize = std::max<std::uint32_t>(2, maxValue);
    test.threads = h.threads;
    return buildSimProgram(test, Layout{h.variant, h.instances});
}

RunOutcome simulate(const SimProgram& program, const SchedulerSpec& spec, const TraceSink& trace) {
    validate(spec);
    const auto n = static_cast<std::uint32_t>(program.threads.size());
    Machine machine(program);
    Rng rng(spec.seed);
    RunOutcome out;
    out.perThreadSteps.assign(n, 0);

    auto tick = [&](std::uint32_t w) {
        ++out.stepsUsed;
        ++out.perThreadSteps[w];
        return machine.step(w, trace);
    };
    auto budgetLeft = [&] { return machine.live() > 0 && out.stepsUsed < spec.stepBudget; };

    switch (spec.kind) {
        case SchedulerKind::unfairRandom: {
            LivePool pool(n);
            for (std::uint32_t w = 0; w < n; ++w) {
                if (machine.done(w)) pool.remove(w);
            }
            while (budgetLeft()) {
                const std::uint32_t w = pool.sample(rng);
                if (tick(w)) pool.remove(w);
            }
            break;
        }
        case SchedulerKind::hsaPriority: {
            LivePool pool(n);
            for (std::uint32_t w = 0; w < n; ++w) {
                if (machine.done(w)) pool.remove(w);
            }
            std::uint32_t lowest = 0;
            while (budgetLeft()) {
                while (machine.done(lowest)) ++lowest;
                const std::uint32_t w = rng.chance(spec.hsaProbability) ? lowest : pool.sample(rng);
                if (tick(w)) pool.remove(w);
            }
            break;
        }
        case SchedulerKind::fairRoundRobin: {
            Ring ring(n);
            for (std::uint32_t w = 0; w < n; ++w) {
                if (!machine.done(w)) ring.pushBack(w);
            }
            if (!ring.empty()) {
                std::uint32_t start = static_cast<std::uint32_t>(rng.below(n));
                while (machine.done(start)) start = (start + 1) % n;
                ring.seek(start);
            }
            while (budgetLeft()) {
                const std::uint32_t w = ring.current();
                if (tick(w)) {
                    ring.removeCurrent();
                } else {
                    ring.advance();
                }
            }
            break;
        }
        case SchedulerKind::obeNonpreemptive:
        case SchedulerKind::lobeNonpreemptive: {
            std::vector<std::uint32_t> order;
            for (std::uint32_t w = 0; w < n; ++w) {
                if (!machine.done(w)) order.push_back(w);
            }
            if (spec.kind == SchedulerKind::obeNonpreemptive) {
                for (std::size_t i = order.size(); i > 1; --i) {
                    std::swap(order[i - 1], order[rng.below(i)]);
                }
            }
            Ring ring(n);
            std::size_t admitted = 0;
            while (admitted < order.size() && admitted < spec.slots) ring.pushBack(order[admitted++]);
            while (budgetLeft()) {
                const std::uint32_t w = ring.current();
                if (tick(w)) {
                    ring.removeCurrent();
                    if (admitted < order.size()) ring.pushBack(order[admitted++]);
                } else {
                    ring.advance();
                }
            }
            break;
        }
    }
    out.terminated = machine.live() == 0;
    return out;
}

RunOutcome simulate(const LitmusTest& test, const Layout& layout, const SchedulerSpec& spec) {
    return simulate(buildSimProgram(test, layout), spec);
}

std::vector<std::uint32_t> replayMemory(const SimProgram& program, const std::vector<TraceStep>& trace) {
    Machine machine(program);
    for (const TraceStep& s : trace) {
        if (s.thread >= program.threads.size() || machine.done(s.thread)) {
            throw ContractViolation("trace steps an invalid or terminated thread");
        }
        machine.step(s.thread, {});
    }
    return machine.memory();
}

std::string CampaignRow::classification() const {
    if (!error.empty() || errorRuns > 0) return "error";
    if (deterministicNonTermination()) return "deterministic";
    if (nondeterministicNonTermination()) return "nondeterministic";
    return "terminated";
}

std::uint64_t deriveSeed(std::uint64_t campaignSeed, std::string_view test, std::size_t specIndex,
                         std::uint32_t iteration) {
    std::uint64_t s = splitmix64(campaignSeed);
    s = splitmix64(s ^ fnv1a(test));
    s = splitmix64(s ^ static_cast<std::uint64_t>(specIndex));
    return splitmix64(s ^ iteration);
}

std::vector<CampaignRow> campaign(const std::vector<LitmusTest>& suite, const std::vector<CampaignSpec>& specs,
                                  std::uint32_t iterations, std::uint64_t campaignSeed, unsigned jobs) {
    std::vector<CampaignRow> rows(suite.size() * specs.size());
    parallelFor(rows.size(), jobs, [&](std::size_t idx) {
        const LitmusTest& test = suite[idx / specs.size()];
        const std::size_t specIndex = idx % specs.size();
        const CampaignSpec& cs = specs[specIndex];
        CampaignRow& row = rows[idx];
        row.test = test.name;
        row.scheduler = cs.scheduler.label();
        row.layout = cs.layout;
        row.iterations = iterations;
        SimProgram program;
        try {
            validate(cs.scheduler);
            if (cs.autoInstances && cs.layout.variant != Variant::plain) {
                row.layout.instances = autoInstances(test.numThreads());
            }
            program = buildSimProgram(test, row.layout);
        } catch (const Error& ex) {
            row.error = ex.what();
            return;
        }
        for (std::uint32_t it = 0; it < iterations; ++it) {
            SchedulerSpec spec = cs.scheduler;
            spec.seed = deriveSeed(campaignSeed, test.name, specIndex, it);
            try {
                const RunOutcome r = simulate(program, spec);
                if (r.terminated) {
                    ++row.terminatedRuns;
                    row.maxStepsTerminated = std::max(row.maxStepsTerminated, r.stepsUsed);
                } else {
                    ++row.exhaustedRuns;
                }
            } catch (const Error& ex) {
                ++row.errorRuns;
                if (row.error.empty()) row.error = "iteration " + std::to_string(it) + ": " + ex.what();
            }
        }
    });
    return rows;
}

std::string outcomesCsv(const std::vector<CampaignRow>& rows) {
    std::ostringstream os;
    os << "test,scheduler,variant,instances,iterations,terminated,exhausted,errors,max_steps,classification\n";
    for (const CampaignRow& r : rows) {
        os << r.test << ',' << r.scheduler << ',' << variantName(r.layout.variant) << ',' << r.layout.instances << ','
           << r.iterations << ',' << r.terminatedRuns << ',' << r.exhaustedRuns << ',' << r.errorRuns << ','
           << r.maxStepsTerminated << ',' << r.classification() << '\n';
    }
    return os.str();
}

}  // namespace progress_lab

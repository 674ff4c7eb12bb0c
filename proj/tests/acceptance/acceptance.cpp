// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "naive.hpp"
#include "progress_lab/classify.hpp"
#include "progress_lab/emit.hpp"
#include "progress_lab/errors.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/oracle.hpp"
#include "progress_lab/parallel.hpp"
#include "progress_lab/sched_sim.hpp"
#include "progress_lab/suite_io.hpp"
#include "progress_lab/synth.hpp"

using namespace progress_lab;
using MV = ModelVariant;
using Clock = std::chrono::steady_clock;

namespace {

struct Report {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

unsigned jobs() {
    return defaultJobs();
}

// The five synthesis runs with their reference scope bounds and counts.
struct Run {
    ThreadId threads;
    std::uint32_t instructions;
    std::size_t actions;
    std::size_t states;
    std::size_t referenceTests;
};

const std::vector<Run>& referenceRuns() {
    static const std::vector<Run> runs{
        {2, 2, 8, 8, 8}, {2, 3, 14, 12, 176}, {2, 4, 16, 24, 173}, {3, 3, 16, 24, 21}, {3, 4, 16, 24, 105}};
    return runs;
}

SynthConfig runConfig(const Run& r, bool bounded, bool symmetry) {
    SynthConfig c;
    c.numThreads = r.threads;
    c.totalInstructions = r.instructions;
    c.numLocations = 2;
    c.valueDomainSize = 2;
    if (bounded) {
        c.maxActions = r.actions;
        c.maxStates = r.states;
    }
    c.symmetryReduction = symmetry;
    c.jobs = jobs();
    return c;
}

// Symmetry-reduced suites of the five runs, with and without the scope
// bounds on state-space size.
struct Suites {
    std::map<std::pair<ThreadId, std::uint32_t>, SynthResult> bounded;
    std::vector<LitmusTest> full;        // union of the unscoped runs
    std::vector<LitmusTest> fullScoped;  // union of the scoped runs
};

Suites& suites() {
    static Suites s = [] {
        Suites out;
        for (const auto& r : referenceRuns()) {
            for (const auto& t : synthesize(runConfig(r, false, true)).tests) out.full.push_back(t);
            auto res = synthesize(runConfig(r, true, true));
            for (const auto& t : res.tests) out.fullScoped.push_back(t);
            out.bounded.emplace(std::pair{r.threads, r.instructions}, std::move(res));
        }
        return out;
    }();
    return s;
}

// ---------------------------------------------------------------------------

Report idiomVerdicts() {
    Report rep;
    auto start = Clock::now();
    struct Claim {
        const char* test;
        MV model;
        bool pass;
    };
    const Claim claims[] = {
        {"prodcons_increasing", MV::weak(ModelKind::obe), false},
        {"prodcons_increasing", MV::weak(ModelKind::hsa), true},
        {"mutex", MV::weak(ModelKind::obe), true},
        {"mutex", MV::weak(ModelKind::hsa), false},
        {"prodcons_decreasing", MV::weak(ModelKind::lobe), false},
        {"dining_philosophers", MV::weak(ModelKind::fair), false},
        {"dining_philosophers", MV::strong(ModelKind::fair), true},
    };
    for (const auto& c : claims) {
        bool got = check(fixtures::idiom(c.test), c.model).passed();
        rep.require(got == c.pass, std::string(c.test) + " " + c.model.label() + " expected " +
                                       (c.pass ? "pass" : "fail"));
    }
    // Every idiom also has a full, error-free matrix.
    for (const auto& name : fixtures::idiomNames())
        for (const auto& e : checkMatrix(fixtures::idiom(name), allModelVariants()))
            rep.require(e.verdict.has_value(), name + " " + e.model.label() + ": " + e.error);
    double secs = secondsSince(start);
    rep.require(secs < 1.0, "runtime " + fmt(secs) + "s >= 1s");
    rep.note(std::to_string(std::size(claims)) + " stated verdicts, " + fmt(secs, 3) + "s");
    return rep;
}

Report mutexLtsShape() {
    Report rep;
    auto lts = buildPlainLts(fixtures::idiom("mutex"));
    std::set<StateId> loops;
    for (const auto& tr : lts.transitions())
        if (tr.from == tr.to) loops.insert(tr.from);
    rep.require(lts.states().size() == 8, "states " + std::to_string(lts.states().size()) + " != 8");
    rep.require(lts.endStates().size() == 1, "end states " + std::to_string(lts.endStates().size()) + " != 1");
    rep.require(loops.size() == 2, "self-loop states " + std::to_string(loops.size()) + " != 2");
    rep.note("states=" + std::to_string(lts.states().size()) + " actions=" + std::to_string(lts.transitions().size()) +
             " ends=" + std::to_string(lts.endStates().size()) + " self-loops=" + std::to_string(loops.size()));
    return rep;
}

bool containsIdiom(const std::vector<LitmusTest>& tests, const std::string& idiom) {
    auto t = fixtures::idiom(idiom);
    t.numLocations = 2;
    auto want = canonicalize(t, true);
    return std::any_of(tests.begin(), tests.end(), [&](const LitmusTest& x) { return canonicalize(x, true) == want; });
}

Report synthesisRecall() {
    Report rep;
    struct Want {
        ThreadId threads;
        std::uint32_t instructions;
        std::vector<std::string> idioms;
        double limit;
    };
    const Want wants[] = {
        {2, 2, {"prodcons_increasing", "prodcons_decreasing", "dining_philosophers"}, 60},
        {2, 3, {"simplified_mutex"}, 60},
        {2, 4, {"prodcons_bidirectional"}, 1800},
    };
    for (const auto& w : wants) {
        const Run* run = nullptr;
        for (const auto& r : referenceRuns())
            if (r.threads == w.threads && r.instructions == w.instructions) run = &r;
        for (bool bounded : {false, true}) {
            auto start = Clock::now();
            auto res = synthesize(runConfig(*run, bounded, false));
            double secs = secondsSince(start);
            std::string tag = "(" + std::to_string(w.threads) + "," + std::to_string(w.instructions) + ")" +
                              (bounded ? " scoped" : "");
            for (const auto& name : w.idioms) rep.require(containsIdiom(res.tests, name), tag + " misses " + name);
            rep.require(secs < w.limit, tag + " took " + fmt(secs) + "s");
            rep.note(tag + ": " + std::to_string(res.tests.size()) + " tests in " + fmt(secs) + "s");
        }
    }
    return rep;
}

Report synthesisOracle() {
    Report rep;
    for (const auto& r : referenceRuns()) {
        if (r.threads != 2 || r.instructions > 3) continue;
        auto res = synthesize(runConfig(r, false, false));
        std::set<std::string> got;
        for (const auto& t : res.tests) got.insert(naive::text(t));
        auto want = naive::bruteForceSynth(r.threads, r.instructions, 2, 2);
        std::size_t missing = 0, extra = 0;
        for (const auto& s : want) missing += got.count(s) ? 0 : 1;
        for (const auto& s : got) extra += want.count(s) ? 0 : 1;
        std::string tag = "(" + std::to_string(r.threads) + "," + std::to_string(r.instructions) + ")";
        rep.require(got.size() == res.tests.size(), tag + " duplicate programs in output");
        rep.require(missing == 0 && extra == 0,
                    tag + " differs from brute force: " + std::to_string(missing) + " missing, " +
                        std::to_string(extra) + " extra");
        const auto& sym = suites().bounded.at({r.threads, r.instructions});
        rep.note(tag + ": " + std::to_string(res.tests.size()) + " tests = brute force " + std::to_string(want.size()) +
                 "; up to location renaming " + std::to_string(sym.tests.size()) + " vs reference " +
                 std::to_string(r.referenceTests) + " (reconciliation in the decisions ledger)");
    }
    return rep;
}

// Conformance and distinguishing sets recomputed from raw verdict rows.
struct Partition {
    std::map<std::string, std::set<std::string>> conf;
    std::map<std::string, std::set<std::string>> dist;
};

Partition partitionFromRows(const SuiteReport& r, const Hierarchy& h) {
    Partition p;
    std::set<std::string> weak(r.weakTests.begin(), r.weakTests.end());
    std::set<std::string> strong(r.strongTests.begin(), r.strongTests.end());
    for (const auto& m : h.members()) {
        auto& c = p.conf[m.label()];
        std::size_t col = 0;
        while (!(r.models[col] == m)) ++col;
        for (const auto& row : r.rows) {
            if (!row.error.empty()) continue;
            bool inScope = !m.flavor || (*m.flavor == Fairness::weak ? weak.count(row.test) : strong.count(row.test));
            if (inScope && row.cells[col] == Outcome::pass) c.insert(row.test);
        }
    }
    for (const auto& m : h.members()) {
        auto d = p.conf[m.label()];
        for (const auto& q : h.below(m))
            for (const auto& t : p.conf[q.label()]) d.erase(t);
        p.dist[m.label()] = d;
    }
    return p;
}

std::set<std::string> asSet(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

void identities(Report& rep, const std::string& tag, const std::vector<LitmusTest>& tests) {
    const auto h = Hierarchy::standard();
    auto r = classifySuite(tests, h, jobs());
    rep.require(r.excluded.empty(), tag + ": " + std::to_string(r.excluded.size()) + " tests excluded");
    auto p = partitionFromRows(r, h);
    for (const auto& m : h.members()) {
        rep.require(p.conf[m.label()] == asSet(r.conformance.at(m.label())), tag + ": conformance " + m.label());
        rep.require(p.dist[m.label()] == asSet(r.distinguishing.at(m.label())), tag + ": distinguishing " + m.label());
    }
    const auto& dLobe = p.dist["weak-lobe"];
    std::set<std::string> rebuilt = dLobe;
    bool disjoint = true;
    for (const auto* s : {&p.conf["weak-hsa"], &p.conf["weak-obe"]})
        for (const auto& t : *s) {
            disjoint = disjoint && !dLobe.count(t);
            rebuilt.insert(t);
        }
    rep.require(disjoint && rebuilt == p.conf["weak-lobe"], tag + ": C(weak-lobe) != D(weak-lobe) + C(hsa) u C(obe)");
    std::vector<std::string> both;
    for (const auto& t : p.dist["weak-hsa"])
        if (p.dist["weak-obe"].count(t)) both.push_back(t);
    if (!both.empty()) {
        std::string sample;
        for (std::size_t i = 0; i < std::min<std::size_t>(3, both.size()); ++i) sample += " " + both[i];
        rep.require(false, tag + ": " + std::to_string(both.size()) +
                               " tests distinguishing for both weak hsa and weak obe, e.g." + sample);
    }
    rep.require(p.conf["unfair"].empty(), tag + ": unfair conformance not empty");
    std::map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < r.models.size(); ++i) column[r.models[i].label()] = i;
    std::size_t monotone = 0;
    for (const auto& row : r.rows) {
        auto cell = [&](const ModelVariant& m) { return row.cells[column.at(m.label())]; };
        rep.require(cell(MV::strong(ModelKind::fair)) == Outcome::pass, tag + ": " + row.test + " fails strong-fair");
        for (const auto& a : h.members())
            for (const auto& b : h.members())
                if (h.strictlyLessFair(a, b)) {
                    ++monotone;
                    if (cell(a) == Outcome::pass)
                        rep.require(cell(b) == Outcome::pass,
                                    tag + ": " + row.test + " passes " + a.label() + " but fails " + b.label());
                }
    }
    auto grid = dcGrid(r);
    for (const auto& msg : checkGridIdentities(grid)) rep.require(false, tag + ": " + msg);
    rep.note(tag + ": " + std::to_string(tests.size()) + " tests, " + std::to_string(monotone) + " ordered-pair checks");
}

Report classificationIdentities() {
    Report rep;
    for (const auto& [key, res] : suites().bounded)
        identities(rep, "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")", res.tests);
    identities(rep, "full scoped", suites().fullScoped);
    identities(rep, "full", suites().full);
    return rep;
}

void split(Report& rep, const std::string& tag, const std::vector<LitmusTest>& tests) {
    auto r = classifySuite(tests, Hierarchy::standard(), jobs());
    auto s = reportStats(r);
    rep.require(s.excludedCount == 0, tag + ": " + std::to_string(s.excludedCount) + " tests excluded");
    rep.note(tag + " suite, " + std::to_string(s.suiteSize) + " tests: " + std::to_string(s.weakCount) + " weak, " +
             std::to_string(s.strongCount) + " strong, weak fraction " + fmt(s.weakFraction, 3));
    double delta = std::fabs(s.weakFraction - 0.65);
    rep.note(delta > 0.10 ? "FLAG: weak fraction differs from 0.65 by " + fmt(100 * delta, 1) + " points"
                          : "weak fraction within 10 points of 0.65");
    std::string line;
    std::istringstream lines(renderGrid(dcGrid(r)));
    while (std::getline(lines, line)) rep.note(line);
}

Report weakStrongSplit() {
    Report rep;
    split(rep, "full", suites().full);
    split(rep, "full scoped", suites().fullScoped);

    DcGrid reference;
    reference.weak[DcGrid::row(ModelKind::hsa)] = {90, 90};
    reference.weak[DcGrid::row(ModelKind::obe)] = {12, 12};
    reference.weak[DcGrid::row(ModelKind::lobe)] = {20, 122};
    reference.weak[DcGrid::row(ModelKind::fair)] = {201, 323};
    reference.strong[DcGrid::row(ModelKind::hsa)] = {94, 94};
    reference.strong[DcGrid::row(ModelKind::obe)] = {0, 0};
    reference.strong[DcGrid::row(ModelKind::lobe)] = {16, 110};
    reference.strong[DcGrid::row(ModelKind::fair)] = {50, 160};
    auto msgs = checkGridIdentities(reference);
    for (const auto& m : msgs) rep.require(false, "reference grid: " + m);
    rep.require(122 == 20 + 90 + 12, "122 = 20 + 90 + 12");
    rep.note("reference grid identities hold (122 = 20 + 90 + 12, 323 = 201 + 122, 110 = 16 + 94 + 0)");
    return rep;
}

Report oracleConsistency() {
    Report rep;
    auto start = Clock::now();
    const ModelKind kinds[] = {ModelKind::hsa, ModelKind::obe, ModelKind::lobe, ModelKind::hsaObe, ModelKind::fair};

    std::size_t pairs = 0, witnesses = 0;
    for (auto key : {std::pair<ThreadId, std::uint32_t>{2, 2}, {2, 3}}) {
        const Run* run = nullptr;
        for (const auto& r : referenceRuns())
            if (r.threads == key.first && r.instructions == key.second) run = &r;
        for (const auto& t : synthesize(runConfig(*run, false, false)).tests) {
            for (const auto& m : allModelVariants()) {
                auto v = check(t, m);
                if (!v.passed()) {
                    ++witnesses;
                    auto err = v.witness ? replayWitness(t, *v.witness) : std::optional<std::string>("missing");
                    rep.require(!err, t.name + " " + m.label() + " witness: " + err.value_or(""));
                    if (v.witness && v.witness->kind == Witness::Kind::starvationOrLivelockCycle)
                        rep.require(!v.witness->cycle.empty(), t.name + " " + m.label() + " empty cycle");
                }
            }
            for (auto k : kinds) {
                ++pairs;
                if (checkWeak(t, k).passed())
                    rep.require(checkStrong(t, k).passed(), t.name + " weak-pass but strong-fail " +
                                                                std::string(modelName(k)));
            }
        }
    }
    rep.note(std::to_string(pairs) + " weak/strong pairs, " + std::to_string(witnesses) + " witnesses replayed");

    // Every program with at most 3 threads and 3 instructions.
    std::vector<LitmusTest> all;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned k = n; k <= 3; ++k)
            naive::forEachProgram(n, k, 2, 2, [&](const LitmusTest& t) { all.push_back(t); });
    std::atomic<std::size_t> disagreements{0};
    std::vector<std::string> first(all.size());
    parallelFor(all.size(), jobs(), [&](std::size_t i) {
        for (auto k : kinds) {
            if (checkWeak(all[i], k).passed() != naive::weakPasses(all[i], k)) {
                if (disagreements++ < 5) first[i] = naive::text(all[i]) + " " + std::string(modelName(k));
            }
        }
    });
    for (const auto& s : first)
        if (!s.empty()) rep.note("disagreement: " + s);
    rep.require(disagreements == 0, std::to_string(disagreements.load()) + " naive disagreements");
    double secs = secondsSince(start);
    rep.require(secs < 300, "runtime " + fmt(secs) + "s >= 300s");
    rep.note(std::to_string(all.size()) + " programs x 5 weak models agree with simple-cycle enumeration, " +
             fmt(secs) + "s");
    return rep;
}

Report simulatorCrossValidation() {
    Report rep;
    auto start = Clock::now();
    const auto& suite = suites().full;
    rep.note("suite: full, " + std::to_string(suite.size()) + " tests");
    std::vector<LitmusTest> weakFair, weakLobe;
    for (const auto& t : suite) {
        if (checkWeak(t, ModelKind::fair).passed()) weakFair.push_back(t);
        if (checkWeak(t, ModelKind::lobe).passed()) weakLobe.push_back(t);
    }
    auto violations = [&](const std::vector<LitmusTest>& tests, const SchedulerSpec& s) {
        auto rows = campaign(tests, {CampaignSpec{s, {}, false}}, 20, 0x5eed, jobs());
        std::size_t bad = 0;
        for (const auto& r : rows) {
            if (r.terminatedRuns != r.iterations) {
                ++bad;
                rep.note("violation: " + r.test + " under " + r.scheduler);
            }
        }
        return bad;
    };
    SchedulerSpec rr;
    rr.kind = SchedulerKind::fairRoundRobin;
    auto bad = violations(weakFair, rr);
    rep.require(bad == 0, std::to_string(bad) + " fair-round-robin violations");
    rep.note("fair-round-robin: " + std::to_string(weakFair.size()) + " weak-fair tests x 20 runs, " +
             std::to_string(bad) + " violations");
    for (std::uint32_t slots : {1U, 2U, 4U}) {
        SchedulerSpec lobe;
        lobe.kind = SchedulerKind::lobeNonpreemptive;
        lobe.slots = slots;
        bad = violations(weakLobe, lobe);
        rep.require(bad == 0, std::to_string(bad) + " " + lobe.label() + " violations");
        rep.note(lobe.label() + ": " + std::to_string(weakLobe.size()) + " weak-lobe tests x 20 runs, " +
                 std::to_string(bad) + " violations");
    }

    auto pcd = fixtures::idiom("prodcons_decreasing");
    const std::uint32_t instances = 8;
    for (std::uint32_t slots : {1U, 2U, 4U}) {
        SchedulerSpec s;
        s.kind = SchedulerKind::lobeNonpreemptive;
        s.slots = slots;
        s.stepBudget = 100'000;
        auto rows = campaign({pcd}, {CampaignSpec{s, {Variant::chunked, instances}, false}}, 20, 0x5eed, 1);
        rep.require(rows.at(0).exhaustedRuns == 20, "prodcons_decreasing chunked " + s.label() + " exhausted " +
                                                        std::to_string(rows[0].exhaustedRuns) + "/20");
        rep.note("prodcons_decreasing chunked M=8 " + s.label() + ": exhausted " +
                 std::to_string(rows[0].exhaustedRuns) + "/20");
    }
    double secs = secondsSince(start);
    rep.require(secs < 600, "runtime " + fmt(secs) + "s >= 600s");
    rep.note(fmt(secs) + "s");
    return rep;
}

Report emission() {
    Report rep;
    EmitConfig c;
    auto k = emitKernel(fixtures::idiom("mutex"), c);
    std::string golden;
    try {
        golden = readTextFile(fixtures::sourcePath("tests/golden/mutex.plain.comp"));
    } catch (const Error& e) {
        rep.require(false, e.what());
    }
    rep.require(k.source == golden, "mutex GLSL differs from golden file");
    for (const char* token : {"while (", "switch (pc)", "atomicExchange(", "case 0:", "case 1:"})
        rep.require(k.source.find(token) != std::string::npos, std::string("mutex GLSL lacks ") + token);
    auto loads = emitKernel(fixtures::idiom("prodcons_increasing"), c).source;
    rep.require(loads.find("atomicAdd(mem[base + 0u], 0u)") != std::string::npos, "load is not an atomic add of 0");

    gen::Rng rng(0x9e37);
    std::size_t checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        ThreadId n = rng.range(1, 10000);
        std::uint32_t m = rng.range(1, 10000);
        std::uint64_t total = std::uint64_t{n} * m;
        for (auto v : {Variant::roundRobin, Variant::chunked}) {
            for (int s = 0; s < 500; ++s) {
                auto w = static_cast<std::uint32_t>(rng.below(total));
                auto tm = mapWorkgroup(v, w, n, m);
                bool ok = tm.instance < m && tm.thread < n && workgroupOf(v, tm, n, m) == w;
                // successor within the instance (round-robin) or thread (chunked) keeps order
                if (v == Variant::roundRobin && tm.thread + 1 < n)
                    ok = ok && workgroupOf(v, {tm.instance, tm.thread + 1}, n, m) > w;
                if (v == Variant::chunked && tm.instance + 1 < m)
                    ok = ok && workgroupOf(v, {tm.instance + 1, tm.thread}, n, m) > w;
                if (!ok) {
                    rep.require(false, std::string(variantName(v)) + " N=" + std::to_string(n) + " M=" +
                                           std::to_string(m) + " w=" + std::to_string(w));
                    break;
                }
                ++checked;
            }
        }
    }
    // Exhaustive bijectivity on small shapes.
    for (ThreadId n = 1; n <= 16; ++n)
        for (std::uint32_t m = 1; m <= 16; ++m)
            for (auto v : {Variant::roundRobin, Variant::chunked}) {
                std::set<std::pair<std::uint32_t, ThreadId>> seen;
                for (std::uint32_t w = 0; w < n * m; ++w) {
                    auto tm = mapWorkgroup(v, w, n, m);
                    seen.emplace(tm.instance, tm.thread);
                }
                rep.require(seen.size() == std::size_t{n} * m, "not bijective");
            }
    rep.require(autoInstances(2) == 32767, "autoInstances(2) = " + std::to_string(autoInstances(2)));
    rep.note("golden mutex.plain.comp matched; " + std::to_string(checked) + " sampled mappings; autoInstances(2) = " +
             std::to_string(autoInstances(2)));
    return rep;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Report()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "idiom verdict matrix", idiomVerdicts},
        {2, "mutex LTS shape", mutexLtsShape},
        {3, "synthesis recall", synthesisRecall},
        {4, "synthesis oracle equivalence", synthesisOracle},
        {5, "classification identities", classificationIdentities},
        {6, "weak/strong split", weakStrongSplit},
        {7, "oracle internal consistency", oracleConsistency},
        {8, "simulator/oracle cross-validation", simulatorCrossValidation},
        {9, "emission golden files and mappings", emission},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Report rep;
        auto start = Clock::now();
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            rep.require(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << c.id << ": " << (rep.pass ? "PASS" : "FAIL") << " - " << c.title << " ("
                  << fmt(secondsSince(start)) << "s)\n";
        for (const auto& n : rep.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
        failed += rep.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "naive.hpp"
#include "progress_lab/errors.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/synth.hpp"

using namespace progress_lab;

namespace {

SynthConfig config(ThreadId threads, std::uint32_t instructions, bool symmetry = false) {
    SynthConfig c;
    c.numThreads = threads;
    c.totalInstructions = instructions;
    c.symmetryReduction = symmetry;
    c.jobs = 2;
    return c;
}

bool containsIdiom(const SynthResult& r, const LitmusTest& idiom, std::uint32_t locations) {
    auto embedded = idiom;
    embedded.numLocations = locations;
    auto want = canonicalize(embedded, true);
    for (const auto& t : r.tests)
        if (canonicalize(t, true) == want) return true;
    return false;
}

}  // namespace

TEST(Synth, ValidateConfig) {
    EXPECT_THROW(validate(config(1, 2)), ContractViolation);
    EXPECT_THROW(validate(config(3, 2)), ContractViolation);
    auto c = config(2, 2);
    c.numLocations = 0;
    EXPECT_THROW(validate(c), ContractViolation);
    c = config(2, 2);
    c.valueDomainSize = 0;
    EXPECT_THROW(validate(c), ContractViolation);
    EXPECT_NO_THROW(validate(config(2, 2)));
}

TEST(Synth, RecallTwoTwo) {
    auto r = synthesize(config(2, 2));
    EXPECT_TRUE(containsIdiom(r, fixtures::idiom("prodcons_increasing"), 2));
    EXPECT_TRUE(containsIdiom(r, fixtures::idiom("prodcons_decreasing"), 2));
    EXPECT_TRUE(containsIdiom(r, fixtures::idiom("dining_philosophers"), 2));
    EXPECT_FALSE(containsIdiom(r, fixtures::idiom("simplified_mutex"), 2));
}

TEST(Synth, RecallTwoThree) {
    auto r = synthesize(config(2, 3));
    EXPECT_TRUE(containsIdiom(r, fixtures::idiom("simplified_mutex"), 2));
}

TEST(Synth, CountsAndDedup) {
    auto raw = synthesize(config(2, 2));
    auto sym = synthesize(config(2, 2, true));
    EXPECT_EQ(raw.tests.size(), 20U);
    EXPECT_EQ(sym.tests.size(), 10U);
    EXPECT_EQ(sym.stats.accepted, raw.stats.accepted);
    EXPECT_EQ(sym.stats.accepted - sym.stats.duplicates, sym.tests.size());
    std::set<std::string> canon;
    for (const auto& t : raw.tests) canon.insert(canonicalize(t, true));
    EXPECT_EQ(canon.size(), sym.tests.size());
}

TEST(Synth, Deterministic) {
    auto a = synthesize(config(2, 3));
    auto c = config(2, 3);
    c.jobs = 1;
    auto b = synthesize(c);
    ASSERT_EQ(a.tests.size(), b.tests.size());
    for (std::size_t i = 0; i < a.tests.size(); ++i) EXPECT_EQ(a.tests[i], b.tests[i]);
    EXPECT_EQ(a.stats.rejected, b.stats.rejected);
    EXPECT_EQ(a.tests.front().name, synthesizedTestName(c, 0));
}

TEST(Synth, MatchesBruteForce) {
    for (auto [n, k] : {std::pair{2U, 2U}, {2U, 3U}}) {
        auto r = synthesize(config(n, k));
        std::set<std::string> got;
        for (const auto& t : r.tests) got.insert(naive::text(t));
        EXPECT_EQ(got.size(), r.tests.size());
        auto want = naive::bruteForceSynth(n, k, 2, 2);
        EXPECT_EQ(got, want) << "(" << n << "," << k << ")";
    }
}

TEST(Synth, SoundnessOfAcceptedTests) {
    for (auto [n, k] : {std::pair{2U, 2U}, {2U, 3U}, {3U, 3U}}) {
        auto c = config(n, k);
        for (const auto& t : synthesize(c).tests) {
            EXPECT_FALSE(firstViolatedConstraint(t, c).has_value()) << t.name;
            EXPECT_TRUE(meaningfulComparisons(t));
            EXPECT_TRUE(naive::acceptable(t)) << t.name;
            EXPECT_EQ(t.totalInstructions(), k);
            EXPECT_EQ(t.numThreads(), n);
        }
    }
}

TEST(Synth, MeaningfulComparisonsFilter) {
    auto t = fixtures::idiom("prodcons_increasing");
    EXPECT_TRUE(meaningfulComparisons(t));
    t.threads[0][0].checkVal.v = 1;  // straight-line with cmp 1
    EXPECT_FALSE(meaningfulComparisons(t));
}

TEST(Synth, ConstraintsOnIdioms) {
    SynthConfig c = config(2, 4);
    for (const auto& name : fixtures::idiomNames()) {
        auto t = fixtures::idiom(name);
        EXPECT_FALSE(firstViolatedConstraint(t, c).has_value()) << name;
    }

    // Never terminates: both threads spin on a cell nobody writes.
    LitmusTest spin;
    spin.threads = {{fixtures::axb(0, 0, 0)}, {fixtures::axb(0, 0, 0)}};
    EXPECT_EQ(firstViolatedConstraint(spin, c), std::string(constraint::kEndState));

    // Acyclic.
    LitmusTest stores;
    stores.threads = {{fixtures::axb(0, 0, 1, 1)}, {fixtures::axb(0, 0, 1, 1)}};
    EXPECT_EQ(firstViolatedConstraint(stores, c), std::string(constraint::kNonTerminationCycle));

    auto bounded = c;
    bounded.maxStates = 4;
    EXPECT_EQ(firstViolatedConstraint(fixtures::idiom("mutex"), bounded), std::string(constraint::kBound));
}

TEST(Synth, InfluenceAndBranches) {
    auto t = fixtures::idiom("prodcons_increasing");
    auto lts = buildPlainLts(t);
    EXPECT_TRUE(influenceHolds(t, lts));
    EXPECT_TRUE(allBranchesPossible(t, lts));

    // Thread 1 only reads its own write: no cross-thread influence.
    LitmusTest self;
    self.numLocations = 2;
    self.threads = {{fixtures::axb(0, 0, 1, 1)}, {fixtures::axb(1, 0, 1, 1), fixtures::axb(1, 0, 1)}};
    auto selfLts = buildPlainLts(self);
    EXPECT_FALSE(influenceHolds(self, selfLts));
}

TEST(Synth, BoundPrunedAreCounted) {
    auto c = config(2, 3);
    c.maxStates = 5;
    auto r = synthesize(c);
    EXPECT_GT(r.stats.rejected.at(constraint::kBound), 0U);
    EXPECT_EQ(r.stats.boundPruned.size(), r.stats.rejected.at(constraint::kBound));
    EXPECT_LT(r.tests.size(), synthesize(config(2, 3)).tests.size());
}

TEST(Synth, CanonicalRepresentativeIsMinimal) {
    LitmusTest t;
    t.numLocations = 2;
    t.threads = {{fixtures::axb(1, 0, 1, 1)}, {fixtures::axb(1, 0, 0)}};
    auto rep = canonicalRepresentative(t);
    EXPECT_EQ(rep.threads[0][0].checkLoc.index, 0U);
    EXPECT_EQ(canonicalize(t, true), canonicalize(rep, false));
    EXPECT_NE(canonicalize(t, false), canonicalize(rep, false));
}

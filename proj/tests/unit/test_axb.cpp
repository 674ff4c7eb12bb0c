#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "naive.hpp"
#include "progress_lab/axb.hpp"
#include "progress_lab/errors.hpp"

using namespace progress_lab;
using fixtures::axb;

namespace {

LitmusTest single(ThreadProgram p, std::uint32_t locations = 1) {
    LitmusTest t;
    t.name = "single";
    t.numLocations = locations;
    t.threads = {std::move(p), {axb(0, 0, 1)}};
    return t;
}

}  // namespace

TEST(Axb, InitialStateIsZeroed) {
    auto t = fixtures::idiom("mutex");
    auto s = initialState(t);
    EXPECT_EQ(s.memory.size(), 1U);
    EXPECT_EQ(s.memory[0], Value{0});
    EXPECT_EQ(s.pcs, (std::vector<std::uint32_t>{0, 0}));
    EXPECT_EQ(enabledThreads(t, s), (ThreadSet{0, 1}));
    EXPECT_FALSE(isEndState(t, s));
}

TEST(Axb, BranchReadsBeforeExchange) {
    // cell == 0: branch taken to 1, then write 1
    auto t = single({axb(0, 0, 1, 1), axb(0, 1, 0, 0)});
    auto s = step(t, initialState(t), 0);
    EXPECT_EQ(s.pcs[0], 1U);
    EXPECT_EQ(s.memory[0].v, 1U);
    // cell == 1 now: branch to 0 and write 0
    EXPECT_TRUE(branchTaken(t, s, 0));
    s = step(t, s, 0);
    EXPECT_EQ(s.pcs[0], 0U);
    EXPECT_EQ(s.memory[0].v, 0U);
}

TEST(Axb, FallThroughWhenUnequal) {
    auto t = single({axb(0, 1, 0), axb(0, 0, 2)});
    auto s0 = initialState(t);
    EXPECT_FALSE(branchTaken(t, s0, 0));
    auto s = step(t, s0, 0);
    EXPECT_EQ(s.pcs[0], 1U);
    EXPECT_EQ(s.memory, s0.memory);
}

TEST(Axb, JumpToLengthTerminates) {
    auto t = single({axb(0, 0, 1, 1)});
    auto s = step(t, initialState(t), 0);
    EXPECT_TRUE(isTerminated(t, s, 0));
    EXPECT_EQ(terminatedThreads(t, s), ThreadSet{0});
    EXPECT_THROW(step(t, s, 0), ContractViolation);
    s = step(t, s, 1);
    EXPECT_TRUE(isEndState(t, s));
    EXPECT_TRUE(enabledThreads(t, s).empty());
}

TEST(Axb, StepRejectsUnknownThread) {
    auto t = fixtures::idiom("mutex");
    EXPECT_THROW(step(t, initialState(t), 2), ContractViolation);
}

TEST(Axb, ValidateRejectsBrokenTests) {
    auto t = fixtures::idiom("mutex");
    EXPECT_NO_THROW(validate(t));

    auto badLoc = t;
    badLoc.threads[0][0].checkLoc.index = 1;
    EXPECT_THROW(validate(badLoc), ContractViolation);

    auto badVal = t;
    badVal.threads[0][0].checkVal.v = 2;
    EXPECT_THROW(validate(badVal), ContractViolation);

    auto badExch = t;
    badExch.threads[1][0].exchVal.v = 5;
    EXPECT_THROW(validate(badExch), ContractViolation);

    auto badJump = t;
    badJump.threads[0][1].jumpTarget = 3;
    EXPECT_THROW(validate(badJump), ContractViolation);

    auto empty = t;
    empty.threads[1].clear();
    EXPECT_THROW(validate(empty), ContractViolation);

    auto none = t;
    none.threads.clear();
    EXPECT_THROW(validate(none), ContractViolation);
}

TEST(Axb, IgnoredExchangeValueDoesNotAffectEquality) {
    auto a = axb(0, 1, 0);
    auto b = a;
    b.exchVal.v = 1;
    EXPECT_EQ(a, b);
    b.doExch = true;
    EXPECT_NE(a, b);
}

TEST(Axb, TotalInstructions) {
    EXPECT_EQ(fixtures::idiom("mutex").totalInstructions(), 4U);
    EXPECT_EQ(fixtures::idiom("dining_philosophers").totalInstructions(), 2U);
}

TEST(AxbProperty, StepAgreesWithNaiveInterpreter) {
    gen::Rng rng(0xa7b1);
    gen::Shape shape;
    shape.maxLength = 3;
    for (int iter = 0; iter < 500; ++iter) {
        auto t = gen::randomTest(rng, shape);
        auto s = initialState(t);
        naive::State ns{std::vector<std::uint32_t>(t.numLocations, 0), std::vector<std::uint32_t>(t.threads.size(), 0), 0};
        for (int k = 0; k < 40 && !isEndState(t, s); ++k) {
            auto live = enabledThreads(t, s).members();
            ThreadId tid = live[rng.below(live.size())];
            ASSERT_FALSE(naive::finished(t, ns, tid));
            s = step(t, s, tid);
            ns = naive::stepOnce(t, ns, tid);
            for (std::size_t l = 0; l < ns.mem.size(); ++l) ASSERT_EQ(s.memory[l].v, ns.mem[l]);
            ASSERT_EQ(s.pcs, ns.pc);
        }
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "progress_lab/thread_set.hpp"

namespace progress_lab {

/// Index into the test's global memory.
struct LocationId {
    std::uint32_t index = 0;
    auto operator<=>(const LocationId&) const = default;
};

/// A memory cell value; always below the test's value-domain size.
struct Value {
    std::uint32_t v = 0;
    auto operator<=>(const Value&) const = default;
};

/// The single instruction of the language: atomically compare the cell at
/// `checkLoc` with `checkVal` and branch to `jumpTarget` on equality (fall
/// through otherwise), then optionally exchange `exchVal` into the cell.
///
/// A `jumpTarget` equal to the owning thread's program length branches to
/// termination.
struct AxbInstruction {
    LocationId checkLoc;
    Value checkVal;
    std::uint32_t jumpTarget = 0;
    bool doExch = false;
    Value exchVal;  // ignored unless doExch

    /// True when both branch outcomes land on `ownIndex + 1`, i.e. the
    /// instruction behaves as a plain store (or a no-op load).
    bool isStraightLine(std::uint32_t ownIndex) const { return jumpTarget == ownIndex + 1; }

    bool operator==(const AxbInstruction& o) const {
        return checkLoc == o.checkLoc && checkVal == o.checkVal && jumpTarget == o.jumpTarget &&
               doExch == o.doExch && (!doExch || exchVal == o.exchVal);
    }
};

using ThreadProgram = std::vector<AxbInstruction>;

struct LitmusTest {
    std::string name;
    std::uint32_t numLocations = 1;
    std::uint32_t valueDomainSize = 2;
    std::vector<ThreadProgram> threads;

    ThreadId numThreads() const { return static_cast<ThreadId>(threads.size()); }
    std::uint32_t programLength(ThreadId tid) const { return static_cast<std::uint32_t>(threads[tid].size()); }
    std::uint32_t totalInstructions() const;

    /// Structural equality; the name is part of it.
    bool operator==(const LitmusTest&) const = default;
};

/// Throws ContractViolation describing the first broken invariant.
void validate(const LitmusTest& test);

struct MachineState {
    std::vector<Value> memory;
    std::vector<std::uint32_t> pcs;

    bool operator==(const MachineState&) const = default;
};

/// All memory zero, every pc at 0.
MachineState initialState(const LitmusTest& test);

bool isTerminated(const LitmusTest& test, const MachineState& state, ThreadId tid);

/// Non-terminated threads; every such thread can always take a step.
ThreadSet enabledThreads(const LitmusTest& test, const MachineState& state);

/// Threads whose pc has reached the end of their program.
ThreadSet terminatedThreads(const LitmusTest& test, const MachineState& state);

bool isEndState(const LitmusTest& test, const MachineState& state);

/// Executes one instruction of thread `tid`: the branch reads the
/// pre-exchange value, then the exchange (if any) writes. Throws
/// ContractViolation for an invalid or already-terminated thread.
MachineState step(const LitmusTest& test, const MachineState& state, ThreadId tid);

/// Whether `tid`'s next instruction would take its branch (compare equal).
bool branchTaken(const LitmusTest& test, const MachineState& state, ThreadId tid);

}  // namespace progress_lab

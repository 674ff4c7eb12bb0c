#include "progress_lab/axb.hpp"

#include <numeric>

#include "progress_lab/errors.hpp"

namespace progress_lab {

std::uint32_t LitmusTest::totalInstructions() const {
    return std::accumulate(threads.begin(), threads.end(), std::uint32_t{0},
                           [](std::uint32_t acc, const ThreadProgram& p) {
                               return acc + static_cast<std::uint32_t>(p.size());
                           });
}

void validate(const LitmusTest& test) {
    if (test.threads.empty()) throw ContractViolation("test '" + test.name + "' has no threads");
    if (test.threads.size() > kMaxThreads) {
        throw ContractViolation("test '" + test.name + "' has more than " + std::to_string(kMaxThreads) + " threads");
    }
    if (test.numLocations == 0) throw ContractViolation("test '" + test.name + "' declares zero locations");
    if (test.valueDomainSize == 0) throw ContractViolation("test '" + test.name + "' declares an empty value domain");
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        const auto& program = test.threads[t];
        const std::string where = "test '" + test.name + "' thread " + std::to_string(t);
        if (program.empty()) throw ContractViolation(where + " has no instructions");
        for (std::size_t i = 0; i < program.size(); ++i) {
            const auto& in = program[i];
            const std::string at = where + " instruction " + std::to_string(i);
            if (in.checkLoc.index >= test.numLocations) throw ContractViolation(at + ": location out of range");
            if (in.checkVal.v >= test.valueDomainSize) throw ContractViolation(at + ": compare value out of range");
            if (in.doExch && in.exchVal.v >= test.valueDomainSize) {
                throw ContractViolation(at + ": exchange value out of range");
            }
            if (in.jumpTarget > program.size()) throw ContractViolation(at + ": jump target out of range");
        }
    }
}

MachineState initialState(const LitmusTest& test) {
    return MachineState{std::vector<Value>(test.numLocations, Value{0}), std::vector<std::uint32_t>(test.threads.size(), 0)};
}

bool isTerminated(const LitmusTest& test, const MachineState& state, ThreadId tid) {
    return state.pcs[tid] >= test.programLength(tid);
}

ThreadSet enabledThreads(const LitmusTest& test, const MachineState& state) {
    ThreadSet out;
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        if (!isTerminated(test, state, t)) out.insert(t);
    }
    return out;
}

ThreadSet terminatedThreads(const LitmusTest& test, const MachineState& state) {
    return ThreadSet::firstN(test.numThreads()) - enabledThreads(test, state);
}

bool isEndState(const LitmusTest& test, const MachineState& state) {
    return enabledThreads(test, state).empty();
}

namespace {

const AxbInstruction& currentInstruction(const LitmusTest& test, const MachineState& state, ThreadId tid) {
    if (tid >= test.numThreads()) throw ContractViolation("invalid thread id " + std::to_string(tid));
    if (isTerminated(test, state, tid)) {
        throw ContractViolation("thread " + std::to_string(tid) + " has already terminated");
    }
    return test.threads[tid][state.pcs[tid]];
}

}  // namespace

bool branchTaken(const LitmusTest& test, const MachineState& state, ThreadId tid) {
    const auto& in = currentInstruction(test, state, tid);
    return state.memory[in.checkLoc.index] == in.checkVal;
}

MachineState step(const LitmusTest& test, const MachineState& state, ThreadId tid) {
    const auto& in = currentInstruction(test, state, tid);
    MachineState next = state;
    auto& cell = next.memory[in.checkLoc.index];
    next.pcs[tid] = (cell == in.checkVal) ? in.jumpTarget : state.pcs[tid] + 1;
    if (in.doExch) cell = in.exchVal;
    return next;
}

}  // namespace progress_lab

#pragma once

#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/litmus_format.hpp"

#ifndef PROGRESS_LAB_SOURCE_DIR
#define PROGRESS_LAB_SOURCE_DIR "."
#endif

namespace fixtures {

inline std::string sourcePath(const std::string& rel) {
    return std::string(PROGRESS_LAB_SOURCE_DIR) + "/" + rel;
}

/// One of the idiom tests shipped under docs/examples.
inline progress_lab::LitmusTest idiom(const std::string& name) {
    return progress_lab::loadLitmusFile(sourcePath("docs/examples/" + name + ".litmus"));
}

inline const std::vector<std::string>& idiomNames() {
    static const std::vector<std::string> names{"mutex", "prodcons_increasing", "prodcons_decreasing",
                                                "prodcons_bidirectional", "simplified_mutex", "dining_philosophers"};
    return names;
}

inline progress_lab::AxbInstruction axb(std::uint32_t loc, std::uint32_t cmp, std::uint32_t jump) {
    progress_lab::AxbInstruction in;
    in.checkLoc.index = loc;
    in.checkVal.v = cmp;
    in.jumpTarget = jump;
    return in;
}

inline progress_lab::AxbInstruction axb(std::uint32_t loc, std::uint32_t cmp, std::uint32_t jump, std::uint32_t exch) {
    auto in = axb(loc, cmp, jump);
    in.doExch = true;
    in.exchVal.v = exch;
    return in;
}

}  // namespace fixtures

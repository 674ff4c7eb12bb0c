#pragma once

#include <string>
#include <string_view>

#include "progress_lab/axb.hpp"

namespace progress_lab {

/// Parses the `.litmus` text format:
///
///     test mutex
///     locations 1
///     values 2
///     thread 0:
///       0: axb loc=0 cmp=1 jump=0 exch=1
///       1: axb loc=0 cmp=0 jump=2 exch=none
///
/// `#` starts a comment. Throws ParseError with a 1-based line/column.
LitmusTest parseLitmus(std::string_view text);

/// Canonical text: fixed field order, two-space instruction indent, one
/// trailing newline. parseLitmus(serializeLitmus(t)) == t.
std::string serializeLitmus(const LitmusTest& test);

/// Reads and parses a file; parse errors are prefixed with the path.
LitmusTest loadLitmusFile(const std::string& path);

}  // namespace progress_lab

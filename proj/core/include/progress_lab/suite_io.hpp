#pragma once

#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/synth.hpp"

namespace progress_lab {

/// A suite on disk is a directory of `<name>.litmus` files plus a
/// `suite.json` index listing them in order.
inline constexpr const char* kSuiteIndexFile = "suite.json";

/// Writes every test and the index. Existing files with the same names are
/// overwritten. Throws Error on I/O failure or duplicate test names.
void writeSuite(const std::vector<LitmusTest>& tests, const std::string& dir);

/// Loads the tests listed in suite.json, or every `*.litmus` file in name
/// order when the directory has no index.
std::vector<LitmusTest> loadSuite(const std::string& dir);

/// Synthesis configuration and per-constraint counts.
std::string synthStatsJson(const SynthConfig& config, const SynthStats& stats, std::size_t suiteSize);

/// Reads a whole file; throws Error when it cannot be opened.
std::string readTextFile(const std::string& path);

/// Writes a whole file, creating parent directories.
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace progress_lab

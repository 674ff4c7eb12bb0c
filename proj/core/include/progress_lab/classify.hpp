#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "progress_lab/axb.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/oracle.hpp"
#include "progress_lab/progress_model.hpp"

namespace progress_lab {

struct SuiteRow {
    std::string test;
    /// One cell per SuiteReport::models entry; empty when the oracle errored.
    std::vector<std::optional<Outcome>> cells;
    std::string error;
};

/// Verdicts of a suite under all 11 models plus the conformance and
/// distinguishing partitions of the hierarchy's members.
///
/// Weak tests pass weak-fair; strong tests pass strong-fair but not
/// weak-fair. conformance(m) is the set of tests passing m, restricted to
/// the weak tests for weak variants and to the strong tests for strong
/// variants (unrestricted for unfair). distinguishing(m) is conformance(m)
/// minus the conformance sets of every model strictly below m.
struct SuiteReport {
    std::vector<ModelVariant> models;
    std::vector<ModelVariant> hierarchyMembers;
    std::vector<SuiteRow> rows;

    std::vector<std::string> weakTests;
    std::vector<std::string> strongTests;
    /// Tests that fail even strong-fair (never produced by synthesis).
    std::vector<std::string> unclassified;
    /// Tests whose verdicts could not be computed; excluded from aggregates.
    std::vector<std::string> excluded;

    std::map<std::string, std::vector<std::string>> conformance;     // by model label
    std::map<std::string, std::vector<std::string>> distinguishing;  // by model label
    /// "test: pass(q) but fail(p)" for q < p.
    std::vector<std::string> anomalies;

    std::optional<Outcome> outcome(const std::string& test, const ModelVariant& model) const;
};

SuiteReport classifySuite(const std::vector<LitmusTest>& tests, const Hierarchy& hierarchy = Hierarchy::standard(),
                          unsigned jobs = 1, const LtsOptions& options = {});

/// The D/C grid: rows hsa, obe, lobe, fair; columns weak and strong.
struct GridCell {
    std::size_t distinguishing = 0;
    std::size_t conformance = 0;
};

struct DcGrid {
    static constexpr std::array<ModelKind, 4> kRows{ModelKind::hsa, ModelKind::obe, ModelKind::lobe, ModelKind::fair};
    std::array<GridCell, 4> weak{};
    std::array<GridCell, 4> strong{};
    /// |conformance(hsa) ∩ conformance(obe)| per flavor.
    std::size_t weakHsaObeOverlap = 0;
    std::size_t strongHsaObeOverlap = 0;

    static std::size_t row(ModelKind kind);
};

DcGrid dcGrid(const SuiteReport& report);

/// Arithmetic identities every grid must satisfy, per flavor:
///   C(lobe) = D(lobe) + C(hsa) + C(obe) - overlap(hsa, obe)
///   C(fair) = D(fair) + C(lobe)
///   D <= C in every cell
/// Returns one message per violated identity.
std::vector<std::string> checkGridIdentities(const DcGrid& grid);

struct SuiteSummary {
    std::size_t suiteSize = 0;
    std::size_t weakCount = 0;
    std::size_t strongCount = 0;
    std::size_t unclassifiedCount = 0;
    std::size_t excludedCount = 0;
    double weakFraction = 0.0;  // weak / classified suite; 0 for an empty suite
    std::map<std::string, std::size_t> conformanceCounts;
    std::map<std::string, std::size_t> distinguishingCounts;
    std::size_t anomalyCount = 0;
};

SuiteSummary reportStats(const SuiteReport& report);

/// `test,<model labels...>` header then one row per test with pass/fail
/// cells (`error` for excluded tests).
std::string matrixCsv(const SuiteReport& report);
/// Conformance/distinguishing lists and the weak/strong split.
std::string partitionsJson(const SuiteReport& report);
/// Human-readable overview with the D/C grid.
std::string summaryText(const SuiteReport& report);

/// Renders a D/C grid as a markdown table.
std::string renderGrid(const DcGrid& grid);

/// Rebuilds the grid from a partitions.json document written by
/// partitionsJson. Throws Error on malformed input.
DcGrid dcGridFromPartitionsJson(const std::string& json);

}  // namespace progress_lab

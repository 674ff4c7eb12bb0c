#include "progress_lab/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "progress_lab/errors.hpp"
#include "progress_lab/parallel.hpp"

namespace progress_lab {

namespace {

std::optional<std::size_t> columnOf(const SuiteReport& report, const ModelVariant& model) {
    const auto it = std::find(report.models.begin(), report.models.end(), model);
    if (it == report.models.end()) return std::nullopt;
    return static_cast<std::size_t>(it - report.models.begin());
}

bool passes(const SuiteRow& row, std::size_t column) {
    return row.cells[column] == Outcome::pass;
}

std::vector<std::string> sortedUnion(const std::vector<std::vector<std::string>>& sets) {
    std::set<std::string> all;
    for (const auto& s : sets) all.insert(s.begin(), s.end());
    return {all.begin(), all.end()};
}

std::size_t overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> sa(a.begin(), a.end());
    return static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [&](const std::string& x) { return sa.count(x) > 0; }));
}

}  // namespace

std::optional<Outcome> SuiteReport::outcome(const std::string& test, const ModelVariant& model) const {
    const auto col = columnOf(*this, model);
    if (!col) return std::nullopt;
    for (const auto& row : rows) {
        if (row.test == test) return row.cells[*col];
    }
    return std::nullopt;
}

SuiteReport classifySuite(const std::vector<LitmusTest>& tests, const Hierarchy& hierarchy, unsigned jobs, const LtsOptions& options) {
    SuiteReport report;
    report.models = allModelVariants();
    report.hierarchyMembers = hierarchy.members();
    report.rows.resize(tests.size());

    parallelFor(tests.size(), jobs, [&](std::size_t i) {
        SuiteRow& row = report.rows[i];
        row.test = tests[i].name;
        for (auto& entry : checkMatrix(tests[i], report.models, options)) {
            if (entry.verdict) {
                row.cells.push_back(entry.verdict->outcome);
            } else {
                row.cells.push_back(std::nullopt);
                if (row.error.empty()) row.error = entry.model.label() + ": " + entry.error;
            }
        }
    });

    const std::size_t weakFair = *columnOf(report, ModelVariant::weak(ModelKind::fair));
    const std::size_t strongFair = *columnOf(report, ModelVariant::strong(ModelKind::fair));
    std::vector<const SuiteRow*> usable;
    for (const auto& row : report.rows) {
        if (!row.error.empty()) {
            report.excluded.push_back(row.test);
            continue;
        }
        usable.push_back(&row);
        if (passes(row, weakFair)) {
            report.weakTests.push_back(row.test);
        } else if (passes(row, strongFair)) {
            report.strongTests.push_back(row.test);
        } else {
            report.unclassified.push_back(row.test);
        }
    }
    const std::set<std::string> weakSet(report.weakTests.begin(), report.weakTests.end());
    const std::set<std::string> strongSet(report.strongTests.begin(), report.strongTests.end());

    for (const auto& m : hierarchy.members()) {
        const std::size_t col = *columnOf(report, m);
        auto& conf = report.conformance[m.label()];
        for (const SuiteRow* row : usable) {
            if (!passes(*row, col)) continue;
            const bool inPartition = !m.flavor || (*m.flavor == Fairness::weak ? weakSet.count(row->test) > 0
                                                                                : strongSet.count(row->test) > 0);
            if (inPartition) conf.push_back(row->test);
        }
    }
    for (const auto& m : hierarchy.members()) {
        std::vector<std::vector<std::string>> lower;
        for (const auto& q : hierarchy.below(m)) lower.push_back(report.conformance[q.label()]);
        const auto lowerUnion = sortedUnion(lower);
        auto& dist = report.distinguishing[m.label()];
        for (const auto& t : report.conformance[m.label()]) {
            if (!std::binary_search(lowerUnion.begin(), lowerUnion.end(), t)) dist.push_back(t);
        }
    }

    for (const SuiteRow* row : usable) {
        for (const auto& q : hierarchy.members()) {
            for (const auto& p : hierarchy.members()) {
                if (!hierarchy.strictlyLessFair(q, p)) continue;
                if (passes(*row, *columnOf(report, q)) && !passes(*row, *columnOf(report, p))) {
                    report.anomalies.push_back(row->test + ": pass(" + q.label() + ") but fail(" + p.label() + ")");
                }
            }
        }
    }
    return report;
}

std::size_t DcGrid::row(ModelKind kind) {
    for (std::size_t i = 0; i < kRows.size(); ++i) {
        if (kRows[i] == kind) return i;
    }
    throw ContractViolation("model '" + std::string(modelName(kind)) + "' is not a grid row");
}

namespace {

DcGrid gridFromMaps(const std::map<std::string, std::vector<std::string>>& conformance,
                    const std::map<std::string, std::vector<std::string>>& distinguishing) {
    auto sizeOf = [](const std::map<std::string, std::vector<std::string>>& m, const std::string& key) {
        const auto it = m.find(key);
        return it == m.end() ? std::size_t{0} : it->second.size();
    };
    auto listOf = [&](const std::string& key) {
        const auto it = conformance.find(key);
        return it == conformance.end() ? std::vector<std::string>{} : it->second;
    };
    DcGrid grid;
    for (std::size_t r = 0; r < DcGrid::kRows.size(); ++r) {
        const auto w = ModelVariant::weak(DcGrid::kRows[r]).label();
        const auto s = ModelVariant::strong(DcGrid::kRows[r]).label();
        grid.weak[r] = GridCell{sizeOf(distinguishing, w), sizeOf(conformance, w)};
        grid.strong[r] = GridCell{sizeOf(distinguishing, s), sizeOf(conformance, s)};
    }
    grid.weakHsaObeOverlap = overlap(listOf(ModelVariant::weak(ModelKind::hsa).label()), listOf(ModelVariant::weak(ModelKind::obe).label()));
    grid.strongHsaObeOverlap =
        overlap(listOf(ModelVariant::strong(ModelKind::hsa).label()), listOf(ModelVariant::strong(ModelKind::obe).label()));
    return grid;
}

}  // namespace

DcGrid dcGrid(const SuiteReport& report) {
    return gridFromMaps(report.conformance, report.distinguishing);
}

std::vector<std::string> checkGridIdentities(const DcGrid& grid) {
    std::vector<std::string> failures;
    const std::size_t hsa = DcGrid::row(ModelKind::hsa), obe = DcGrid::row(ModelKind::obe);
    const std::size_t lobe = DcGrid::row(ModelKind::lobe), fair = DcGrid::row(ModelKind::fair);
    auto checkFlavor = [&](const std::array<GridCell, 4>& cells, std::size_t hsaObeOverlap, const std::string& flavor) {
        const std::size_t lowerUnion = cells[hsa].conformance + cells[obe].conformance - hsaObeOverlap;
        if (cells[lobe].conformance != cells[lobe].distinguishing + lowerUnion) {
            failures.push_back(flavor + ": C(lobe)=" + std::to_string(cells[lobe].conformance) + " != D(lobe)+|C(hsa) u C(obe)|=" +
                               std::to_string(cells[lobe].distinguishing) + "+" + std::to_string(lowerUnion));
        }
        if (cells[fair].conformance != cells[fair].distinguishing + cells[lobe].conformance) {
            failures.push_back(flavor + ": C(fair)=" + std::to_string(cells[fair].conformance) + " != D(fair)+C(lobe)=" +
                               std::to_string(cells[fair].distinguishing) + "+" + std::to_string(cells[lobe].conformance));
        }
        for (std::size_t r = 0; r < cells.size(); ++r) {
            if (cells[r].distinguishing > cells[r].conformance) {
                failures.push_back(flavor + ": D > C for " + std::string(modelName(DcGrid::kRows[r])));
            }
        }
    };
    checkFlavor(grid.weak, grid.weakHsaObeOverlap, "weak");
    checkFlavor(grid.strong, grid.strongHsaObeOverlap, "strong");
    return failures;
}

SuiteSummary reportStats(const SuiteReport& report) {
    SuiteSummary s;
    s.suiteSize = report.rows.size();
    s.weakCount = report.weakTests.size();
    s.strongCount = report.strongTests.size();
    s.unclassifiedCount = report.unclassified.size();
    s.excludedCount = report.excluded.size();
    const std::size_t classified = s.suiteSize - s.excludedCount;
    s.weakFraction = classified == 0 ? 0.0 : static_cast<double>(s.weakCount) / static_cast<double>(classified);
    for (const auto& [label, tests] : report.conformance) s.conformanceCounts[label] = tests.size();
    for (const auto& [label, tests] : report.distinguishing) s.distinguishingCounts[label] = tests.size();
    s.anomalyCount = report.anomalies.size();
    return s;
}

std::string matrixCsv(const SuiteReport& report) {
    std::string out = "test";
    for (const auto& m : report.models) out += "," + m.label();
    out += "\n";
    for (const auto& row : report.rows) {
        out += row.test;
        for (const auto& cell : row.cells) out += std::string(",") + (cell ? outcomeName(*cell) : "error");
        out += "\n";
    }
    return out;
}

std::string partitionsJson(const SuiteReport& report) {
    nlohmann::ordered_json j;
    std::vector<std::string> models, members;
    for (const auto& m : report.models) models.push_back(m.label());
    for (const auto& m : report.hierarchyMembers) members.push_back(m.label());
    j["models"] = models;
    j["hierarchy"] = members;
    j["suiteSize"] = report.rows.size();
    j["weakTests"] = report.weakTests;
    j["strongTests"] = report.strongTests;
    j["unclassified"] = report.unclassified;
    j["excluded"] = report.excluded;
    j["conformance"] = nlohmann::ordered_json::object();
    j["distinguishing"] = nlohmann::ordered_json::object();
    for (const auto& label : members) {
        j["conformance"][label] = report.conformance.at(label);
        j["distinguishing"][label] = report.distinguishing.at(label);
    }
    j["anomalies"] = report.anomalies;
    return j.dump(2) + "\n";
}

std::string renderGrid(const DcGrid& grid) {
    std::ostringstream out;
    out << "| Model | Weak D | Weak C | Strong D | Strong C |\n";
    out << "|-------|-------:|-------:|---------:|---------:|\n";
    for (std::size_t r = 0; r < DcGrid::kRows.size(); ++r) {
        const auto kind = DcGrid::kRows[r];
        const std::string name = kind == ModelKind::fair ? "full" : [&] {
            std::string n(modelName(kind));
            for (auto& c : n) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            return n;
        }();
        out << "| " << name << " | " << grid.weak[r].distinguishing << " | " << grid.weak[r].conformance << " | "
            << grid.strong[r].distinguishing << " | " << grid.strong[r].conformance << " |\n";
    }
    return out.str();
}

std::string summaryText(const SuiteReport& report) {
    const auto s = reportStats(report);
    std::ostringstream out;
    char fraction[32];
    std::snprintf(fraction, sizeof fraction, "%.4f", s.weakFraction);
    out << "tests: " << s.suiteSize << "\n";
    out << "weak tests: " << s.weakCount << "\n";
    out << "strong tests: " << s.strongCount << "\n";
    out << "unclassified (fail strong-fair): " << s.unclassifiedCount << "\n";
    out << "excluded (oracle error): " << s.excludedCount << "\n";
    out << "weak fraction: " << fraction << "\n";
    out << "hierarchy anomalies: " << s.anomalyCount << "\n\n";
    out << renderGrid(dcGrid(report));
    out << "\nconformance / distinguishing per model:\n";
    for (const auto& m : report.hierarchyMembers) {
        out << "  " << m.label() << ": C=" << s.conformanceCounts.at(m.label()) << " D=" << s.distinguishingCounts.at(m.label()) << "\n";
    }
    for (const auto& a : report.anomalies) out << "anomaly: " << a << "\n";
    return out.str();
}

DcGrid dcGridFromPartitionsJson(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        std::map<std::string, std::vector<std::string>> conformance, distinguishing;
        for (const auto& [label, tests] : j.at("conformance").items()) conformance[label] = tests.get<std::vector<std::string>>();
        for (const auto& [label, tests] : j.at("distinguishing").items()) distinguishing[label] = tests.get<std::vector<std::string>>();
        return gridFromMaps(conformance, distinguishing);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed partitions.json: ") + e.what());
    }
}

}  // namespace progress_lab

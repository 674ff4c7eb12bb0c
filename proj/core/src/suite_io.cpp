#include "progress_lab/suite_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "progress_lab/errors.hpp"
#include "progress_lab/litmus_format.hpp"

namespace progress_lab {

namespace fs = std::filesystem;

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeTextFile(const std::string& path, const std::string& text) {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("failed writing " + path);
}

void writeSuite(const std::vector<LitmusTest>& tests, const std::string& dir) {
    std::set<std::string> seen;
    for (const LitmusTest& t : tests) {
        if (!seen.insert(t.name).second) throw Error("duplicate test name '" + t.name + "'");
    }
    fs::create_directories(dir);
    nlohmann::ordered_json index;
    index["format"] = "progress-lab-suite";
    index["version"] = 1;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const LitmusTest& t : tests) {
        const std::string file = t.name + ".litmus";
        writeTextFile((fs::path(dir) / file).string(), serializeLitmus(t));
        nlohmann::ordered_json e;
        e["name"] = t.name;
        e["file"] = file;
        e["threads"] = t.numThreads();
        e["instructions"] = t.totalInstructions();
        e["locations"] = t.numLocations;
        list.push_back(std::move(e));
    }
    index["tests"] = std::move(list);
    writeTextFile((fs::path(dir) / kSuiteIndexFile).string(), index.dump(2) + "\n");
}

std::vector<LitmusTest> loadSuite(const std::string& dir) {
    if (!fs::is_directory(dir)) throw Error("suite directory " + dir + " does not exist");
    std::vector<LitmusTest> tests;
    const fs::path indexPath = fs::path(dir) / kSuiteIndexFile;
    if (fs::exists(indexPath)) {
        nlohmann::json index;
        try {
            index = nlohmann::json::parse(readTextFile(indexPath.string()));
            for (const auto& e : index.at("tests")) {
                tests.push_back(loadLitmusFile((fs::path(dir) / e.at("file").get<std::string>()).string()));
            }
        } catch (const nlohmann::json::exception& ex) {
            throw Error(indexPath.string() + ": malformed suite index: " + ex.what());
        }
        return tests;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".litmus") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) tests.push_back(loadLitmusFile(f.string()));
    return tests;
}

std::string synthStatsJson(const SynthConfig& config, const SynthStats& stats, std::size_t suiteSize) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json cfg;
    cfg["threads"] = config.numThreads;
    cfg["instructions"] = config.totalInstructions;
    cfg["locations"] = config.numLocations;
    cfg["values"] = config.valueDomainSize;
    cfg["maxStates"] = config.maxStates ? nlohmann::ordered_json(*config.maxStates) : nlohmann::ordered_json();
    cfg["maxActions"] = config.maxActions ? nlohmann::ordered_json(*config.maxActions) : nlohmann::ordered_json();
    cfg["symmetryReduction"] = config.symmetryReduction;
    doc["config"] = std::move(cfg);
    doc["candidates"] = stats.candidates;
    nlohmann::ordered_json rejected = nlohmann::ordered_json::object();
    for (const auto& [name, count] : stats.rejected) rejected[name] = count;
    doc["rejected"] = std::move(rejected);
    doc["accepted"] = stats.accepted;
    doc["duplicates"] = stats.duplicates;
    doc["suiteSize"] = suiteSize;
    doc["boundPruned"] = stats.boundPruned.size();
    return doc.dump(2) + "\n";
}

}  // namespace progress_lab

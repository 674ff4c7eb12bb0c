#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "progress_lab/classify.hpp"
#include "progress_lab/emit.hpp"
#include "progress_lab/errors.hpp"
#include "progress_lab/litmus_format.hpp"
#include "progress_lab/lts.hpp"
#include "progress_lab/oracle.hpp"
#include "progress_lab/sched_sim.hpp"
#include "progress_lab/suite_io.hpp"
#include "progress_lab/synth.hpp"

namespace progress_lab::cli {

namespace {

namespace fs = std::filesystem;

/// Raised for invalid flag combinations detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A module error tagged with the phase and test that raised it.
class PhaseError : public std::runtime_error {
public:
    PhaseError(const std::string& phase, const std::string& subject, const std::string& what)
        : std::runtime_error(phase + ": " + subject + ": " + what) {}
};

struct GlobalOptions {
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed;
    std::string logLevel = "info";
    std::string out;
};

std::shared_ptr<spdlog::logger> logger() {
    static std::shared_ptr<spdlog::logger> log = [] {
        auto l = spdlog::stderr_color_mt("progress_lab");
        l->set_pattern("%Y-%m-%dT%H:%M:%S.%e level=%l %v");
        return l;
    }();
    return log;
}

std::uint64_t parseSeed(const std::string& text, const std::string& origin) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) throw UsageError(origin + ": invalid seed '" + text + "'");
    return value;
}

std::uint64_t resolveSeed(const GlobalOptions& g) {
    if (g.seed) return *g.seed;
    if (const char* env = std::getenv("PROGRESS_LAB_SEED")) return parseSeed(env, "PROGRESS_LAB_SEED");
    return 0;
}

std::vector<LitmusTest> loadInputs(const std::string& suiteDir, const std::vector<std::string>& files,
                                   const std::string& phase) {
    if (suiteDir.empty() && files.empty()) throw UsageError(phase + ": give --suite DIR or test files");
    std::vector<LitmusTest> tests;
    try {
        if (!suiteDir.empty()) tests = loadSuite(suiteDir);
        for (const auto& f : files) tests.push_back(loadLitmusFile(f));
    } catch (const Error& e) {
        throw PhaseError(phase, "load", e.what());
    }
    return tests;
}

void requireOut(const GlobalOptions& g, const std::string& phase) {
    if (g.out.empty()) throw UsageError(phase + ": --out is required");
}

std::string optionalCount(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

// ---------------------------------------------------------------- synth

struct SynthArgs {
    SynthConfig config;
    std::optional<std::size_t> maxStates;
    std::optional<std::size_t> maxActions;
};

int runSynth(const SynthArgs& a, const GlobalOptions& g, std::ostream& out) {
    requireOut(g, "synth");
    SynthConfig config = a.config;
    config.maxStates = a.maxStates;
    config.maxActions = a.maxActions;
    config.jobs = g.jobs;
    try {
        validate(config);
    } catch (const Error& e) {
        throw UsageError(std::string("synth: ") + e.what());
    }
    logger()->info("phase=synth threads={} instructions={} locations={} values={} max_states={} max_actions={}",
                   config.numThreads, config.totalInstructions, config.numLocations, config.valueDomainSize,
                   optionalCount(config.maxStates), optionalCount(config.maxActions));
    SynthResult result;
    try {
        result = synthesize(config);
        writeSuite(result.tests, g.out);
        writeTextFile((fs::path(g.out) / "stats.json").string(),
                      synthStatsJson(config, result.stats, result.tests.size()));
    } catch (const Error& e) {
        throw PhaseError("synth", g.out, e.what());
    }
    logger()->info("phase=synth candidates={} tests={} elapsed_s={:.3f}", result.stats.candidates,
                   result.tests.size(), result.stats.elapsedSeconds);
    out << "synthesized " << result.tests.size() << " tests into " << g.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string model;
    std::string fairness = "weak";
    std::vector<std::string> files;
    bool witness = false;
    bool all = false;
    std::string expect;
    std::size_t maxStates = LtsOptions{}.maxStates;
};

int runCheck(const CheckArgs& a, std::ostream& out) {
    std::vector<ModelVariant> models;
    if (a.all) {
        models = allModelVariants();
    } else {
        if (a.model.empty()) throw UsageError("check: --model or --all is required");
        const auto kind = parseModelName(a.model);
        if (!kind) throw UsageError("check: unknown model '" + a.model + "'");
        const auto flavor = parseFairnessName(a.fairness);
        if (!flavor) throw UsageError("check: unknown fairness '" + a.fairness + "'");
        models.push_back(*kind == ModelKind::unfair ? ModelVariant::unfair() : ModelVariant{*kind, *flavor});
    }
    if (!a.expect.empty() && a.expect != "pass" && a.expect != "fail") {
        throw UsageError("check: --expect takes pass or fail");
    }
    LtsOptions options;
    options.maxStates = a.maxStates;

    bool expectationMet = true;
    for (const std::string& file : a.files) {
        LitmusTest test;
        try {
            test = loadLitmusFile(file);
        } catch (const Error& e) {
            throw PhaseError("check", file, e.what());
        }
        for (const ModelVariant& m : models) {
            Verdict v;
            try {
                v = check(test, m, options);
            } catch (const Error& e) {
                throw PhaseError("check", test.name, e.what());
            }
            logger()->debug("phase=check test={} model={} verdict={}", test.name, m.label(), outcomeName(v.outcome));
            if (a.files.size() > 1) out << test.name << " ";
            if (models.size() > 1) out << m.label() << " ";
            out << outcomeName(v.outcome) << "\n";
            if (a.witness && v.witness) out << renderWitness(*v.witness);
            if (!a.expect.empty() && outcomeName(v.outcome) != a.expect) expectationMet = false;
        }
    }
    return expectationMet ? kExitOk : kExitExpectationFailed;
}

// ------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string suite;
    std::vector<std::string> files;
    bool withHsaObe = false;
};

int runClassify(const ClassifyArgs& a, const GlobalOptions& g, std::ostream& out) {
    requireOut(g, "classify");
    const auto tests = loadInputs(a.suite, a.files, "classify");
    const Hierarchy hierarchy = a.withHsaObe ? Hierarchy::withHsaObe() : Hierarchy::standard();
    logger()->info("phase=classify tests={} jobs={}", tests.size(), g.jobs);
    SuiteReport report;
    try {
        report = classifySuite(tests, hierarchy, g.jobs);
        writeTextFile((fs::path(g.out) / "matrix.csv").string(), matrixCsv(report));
        writeTextFile((fs::path(g.out) / "partitions.json").string(), partitionsJson(report));
        writeTextFile((fs::path(g.out) / "summary.txt").string(), summaryText(report));
    } catch (const Error& e) {
        throw PhaseError("classify", a.suite.empty() ? "tests" : a.suite, e.what());
    }
    for (const auto& row : report.rows) {
        if (!row.error.empty()) logger()->warn("phase=classify test={} error=\"{}\"", row.test, row.error);
    }
    out << summaryText(report);
    return kExitOk;
}

// ----------------------------------------------------------------- emit

struct EmitArgs {
    std::string backend = "glsl";
    std::vector<std::string> variants{"plain"};
    std::string instances = "auto";
    std::uint32_t workgroupSize = 1;
    std::string suite;
    std::vector<std::string> files;
};

std::optional<std::uint32_t> parseInstances(const std::string& text, const std::string& phase) {
    if (text == "auto") return std::nullopt;
    std::uint32_t v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
        throw UsageError(phase + ": --instances takes auto or a positive integer");
    }
    return v;
}

std::vector<Variant> parseVariants(const std::vector<std::string>& tokens, const std::string& phase) {
    std::vector<Variant> out;
    for (const auto& t : tokens) {
        if (t == "all") {
            out = {Variant::plain, Variant::roundRobin, Variant::chunked};
            continue;
        }
        const auto v = parseVariantName(t);
        if (!v) throw UsageError(phase + ": unknown variant '" + t + "'");
        if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
    return out;
}

int runEmit(const EmitArgs& a, const GlobalOptions& g, std::ostream& out) {
    requireOut(g, "emit");
    const auto backend = parseBackendName(a.backend);
    if (!backend) throw UsageError("emit: unknown backend '" + a.backend + "'");
    const auto instances = parseInstances(a.instances, "emit");
    if (a.workgroupSize == 0) throw UsageError("emit: --workgroup-size must be at least 1");
    std::vector<EmitConfig> configs;
    for (Variant v : parseVariants(a.variants, "emit")) {
        EmitConfig c;
        c.backend = *backend;
        c.variant = v;
        c.instances = v == Variant::plain ? std::nullopt : instances;
        c.workgroupSize = a.workgroupSize;
        configs.push_back(c);
    }
    const auto tests = loadInputs(a.suite, a.files, "emit");
    EmitManifest manifest;
    try {
        manifest = emitSuite(tests, configs, g.out);
    } catch (const Error& e) {
        throw PhaseError("emit", g.out, e.what());
    }
    std::size_t failures = 0;
    for (const auto& e : manifest.entries) {
        if (e.error.empty()) continue;
        ++failures;
        logger()->warn("phase=emit test={} variant={} error=\"{}\"", e.test, variantName(e.variant), e.error);
    }
    out << "emitted " << manifest.entries.size() - failures << " artifacts (" << failures << " failed) into " << g.out
        << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string suite;
    std::vector<std::string> files;
    std::string scheduler = "fair-round-robin";
    std::uint32_t slots = 1;
    std::string variant = "plain";
    std::string instances = "1";
    std::uint32_t iterations = 20;
    std::uint64_t budget = 1'000'000;
    double hsaProbability = 0.25;
};

int runSimulate(const SimulateArgs& a, const GlobalOptions& g, std::ostream& out) {
    const auto kind = parseSchedulerName(a.scheduler);
    if (!kind) throw UsageError("simulate: unknown scheduler '" + a.scheduler + "'");
    const auto variant = parseVariantName(a.variant);
    if (!variant) throw UsageError("simulate: unknown variant '" + a.variant + "'");
    CampaignSpec spec;
    spec.scheduler.kind = *kind;
    spec.scheduler.slots = a.slots;
    spec.scheduler.stepBudget = a.budget;
    spec.scheduler.hsaProbability = a.hsaProbability;
    spec.layout.variant = *variant;
    const auto instances = parseInstances(a.instances, "simulate");
    if (*variant == Variant::plain) {
        if (instances && *instances != 1) throw UsageError("simulate: plain variant runs exactly one instance");
        spec.layout.instances = 1;
    } else if (instances) {
        spec.layout.instances = *instances;
    } else {
        spec.autoInstances = true;
    }
    try {
        validate(spec.scheduler);
    } catch (const Error& e) {
        throw UsageError(std::string("simulate: ") + e.what());
    }
    const std::uint64_t seed = resolveSeed(g);
    const auto tests = loadInputs(a.suite, a.files, "simulate");
    logger()->info("phase=simulate tests={} scheduler={} variant={} iterations={} seed={}", tests.size(),
                   spec.scheduler.label(), variantName(*variant), a.iterations, seed);
    const auto rows = campaign(tests, {spec}, a.iterations, seed, g.jobs);
    for (const auto& r : rows) {
        if (!r.error.empty()) logger()->warn("phase=simulate test={} error=\"{}\"", r.test, r.error);
    }
    const std::string csv = outcomesCsv(rows);
    if (g.out.empty()) {
        out << csv;
    } else {
        try {
            writeTextFile(g.out, csv);
        } catch (const Error& e) {
            throw PhaseError("simulate", g.out, e.what());
        }
        std::size_t exhausted = 0;
        for (const auto& r : rows) exhausted += r.exhaustedRuns > 0 ? 1 : 0;
        out << "simulated " << rows.size() << " tests, " << exhausted << " with budget-exhausted runs\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- report

std::string renderSimulationSection(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::map<std::string, std::size_t> byClass;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        byClass[line.substr(line.rfind(',') + 1)]++;
    }
    std::ostringstream os;
    os << "## Simulation\n\n";
    os << "rows: " << rows << "\n";
    for (const auto& [k, v] : byClass) os << k << ": " << v << "\n";
    return os.str();
}

std::string renderClassificationSection(const std::string& partitions) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(partitions);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed partitions.json: ") + e.what());
    }
    const DcGrid grid = dcGridFromPartitionsJson(partitions);
    std::ostringstream os;
    os << "## Classification\n\n";
    const auto count = [&](const char* key) { return j.contains(key) ? j[key].size() : std::size_t{0}; };
    if (j.contains("suiteSize")) os << "suite size: " << j["suiteSize"].get<std::size_t>() << "\n";
    os << "weak tests: " << count("weakTests") << "\n";
    os << "strong tests: " << count("strongTests") << "\n";
    const std::size_t classified = count("weakTests") + count("strongTests");
    if (classified > 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(count("weakTests")) / classified);
        os << "weak fraction: " << buf << "\n";
    }
    os << "\n" << renderGrid(grid);
    const auto problems = checkGridIdentities(grid);
    os << "\ngrid identities: " << (problems.empty() ? "hold" : "VIOLATED") << "\n";
    for (const auto& p : problems) os << "  " << p << "\n";
    return os.str();
}

std::string renderSynthesisSection(const std::string& stats) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(stats);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed stats.json: ") + e.what());
    }
    std::ostringstream os;
    os << "## Synthesis\n\n";
    if (j.contains("config")) {
        const auto& c = j["config"];
        os << "bounds: " << c.value("threads", 0) << " threads, " << c.value("instructions", 0) << " instructions, "
           << c.value("locations", 0) << " locations, " << c.value("values", 0) << " values\n";
    }
    os << "candidates: " << j.value("candidates", 0) << "\n";
    if (j.contains("rejected")) {
        for (const auto& [k, v] : j["rejected"].items()) os << "rejected " << k << ": " << v.get<std::uint64_t>() << "\n";
    }
    os << "duplicates: " << j.value("duplicates", 0) << "\n";
    os << "tests: " << j.value("suiteSize", 0) << "\n";
    return os.str();
}

int runReport(const std::string& dir, const GlobalOptions& g, std::ostream& out) {
    if (!fs::is_directory(dir)) throw PhaseError("report", dir, "report directory does not exist");
    std::vector<std::string> sections;
    try {
        const fs::path root(dir);
        if (fs::exists(root / "stats.json")) {
            sections.push_back(renderSynthesisSection(readTextFile((root / "stats.json").string())));
        }
        if (fs::exists(root / "partitions.json")) {
            sections.push_back(renderClassificationSection(readTextFile((root / "partitions.json").string())));
        }
        if (fs::exists(root / "outcomes.csv")) {
            sections.push_back(renderSimulationSection(readTextFile((root / "outcomes.csv").string())));
        }
    } catch (const Error& e) {
        throw PhaseError("report", dir, e.what());
    }
    std::ostringstream os;
    os << "# Progress report: " << fs::path(dir).filename().string() << "\n\n";
    if (sections.empty()) os << "no data\n";
    for (std::size_t i = 0; i < sections.size(); ++i) os << (i ? "\n" : "") << sections[i];
    if (g.out.empty()) {
        out << os.str();
    } else {
        writeTextFile(g.out, os.str());
    }
    return kExitOk;
}

// ------------------------------------------------------------- lts-dump

struct LtsDumpArgs {
    std::string file;
    std::string model;
    std::string format = "dot";
    std::size_t maxStates = LtsOptions{}.maxStates;
};

int runLtsDump(const LtsDumpArgs& a, const GlobalOptions& g, std::ostream& out) {
    std::optional<ModelKind> kind;
    if (!a.model.empty()) {
        kind = parseModelName(a.model);
        if (!kind) throw UsageError("lts-dump: unknown model '" + a.model + "'");
    }
    if (a.format != "dot" && a.format != "json") throw UsageError("lts-dump: --format takes dot or json");
    LitmusTest test;
    std::string text;
    try {
        test = loadLitmusFile(a.file);
        LtsOptions options;
        options.maxStates = a.maxStates;
        const Lts lts = kind ? buildMonitoredLts(test, *kind, options) : buildPlainLts(test, options);
        text = a.format == "dot" ? ltsToDot(lts, test.name) : ltsToJson(lts, test.name);
    } catch (const Error& e) {
        throw PhaseError("lts-dump", test.name.empty() ? a.file : test.name, e.what());
    }
    if (g.out.empty()) {
        out << text;
    } else {
        writeTextFile(g.out, text);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Forward-progress litmus test toolkit"};
    app.name("progress-lab");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string seedText;
    app.add_option("--jobs,-j", g.jobs, "Worker threads (0 = all cores)");
    app.add_option("--seed", seedText, "Campaign seed (falls back to PROGRESS_LAB_SEED)");
    app.add_option("--log-level", g.logLevel, "trace, debug, info, warn, error or off")
        ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));
    app.add_option("--out,-o", g.out, "Output directory or file");

    SynthArgs synthArgs;
    auto* synth = app.add_subcommand("synth", "Enumerate progress litmus tests within bounds");
    synth->add_option("--threads", synthArgs.config.numThreads, "Threads per test")->required();
    synth->add_option("--instructions", synthArgs.config.totalInstructions, "Total instructions")->required();
    synth->add_option("--locations", synthArgs.config.numLocations, "Memory locations")->capture_default_str();
    synth->add_option("--values", synthArgs.config.valueDomainSize, "Value domain size")->capture_default_str();
    synth->add_option("--max-states", synthArgs.maxStates, "Prune candidates with more LTS states");
    synth->add_option("--max-actions", synthArgs.maxActions, "Prune candidates with more LTS transitions");
    synth->add_flag("--symmetry", synthArgs.config.symmetryReduction, "Identify tests up to location renaming");
    synthArgs.config.numLocations = 2;

    CheckArgs checkArgs;
    auto* checkCmd = app.add_subcommand("check", "Decide termination of tests under a progress model");
    checkCmd->add_option("--model", checkArgs.model, "unfair, hsa, obe, lobe, hsa+obe or fair");
    checkCmd->add_option("--fairness", checkArgs.fairness, "weak or strong")->capture_default_str();
    checkCmd->add_flag("--all", checkArgs.all, "Check all 11 model variants");
    checkCmd->add_flag("--witness", checkArgs.witness, "Print a non-termination witness for fail verdicts");
    checkCmd->add_option("--expect", checkArgs.expect, "Exit 1 unless every verdict equals this");
    checkCmd->add_option("--max-states", checkArgs.maxStates, "Exploration bound")->capture_default_str();
    checkCmd->add_option("files", checkArgs.files, "Test files")->required()->check(CLI::ExistingFile);

    ClassifyArgs classifyArgs;
    auto* classify = app.add_subcommand("classify", "Verdict matrix and conformance/distinguishing sets");
    classify->add_option("--suite", classifyArgs.suite, "Suite directory")->check(CLI::ExistingDirectory);
    classify->add_option("files", classifyArgs.files, "Test files")->check(CLI::ExistingFile);
    classify->add_flag("--with-hsa-obe", classifyArgs.withHsaObe, "Include hsa+obe in the hierarchy");

    EmitArgs emitArgs;
    auto* emit = app.add_subcommand("emit", "Generate GPU kernels and a manifest");
    emit->add_option("--backend", emitArgs.backend, "glsl, cuda, metal or harness")->capture_default_str();
    emit->add_option("--variant", emitArgs.variants, "plain, round-robin, chunked or all")->delimiter(',');
    emit->add_option("--instances", emitArgs.instances, "auto or a count")->capture_default_str();
    emit->add_option("--workgroup-size", emitArgs.workgroupSize, "Threads per workgroup")->capture_default_str();
    emit->add_option("--suite", emitArgs.suite, "Suite directory")->check(CLI::ExistingDirectory);
    emit->add_option("files", emitArgs.files, "Test files")->check(CLI::ExistingFile);

    SimulateArgs simArgs;
    auto* simulate = app.add_subcommand("simulate", "Run tests under simulated schedulers");
    simulate->add_option("--suite", simArgs.suite, "Suite directory")->check(CLI::ExistingDirectory);
    simulate->add_option("files", simArgs.files, "Test files")->check(CLI::ExistingFile);
    simulate->add_option("--scheduler", simArgs.scheduler,
                         "unfair-random, fair-round-robin, obe-nonpreemptive, lobe-nonpreemptive or hsa-priority")
        ->capture_default_str();
    simulate->add_option("--slots", simArgs.slots, "Occupancy of nonpreemptive schedulers")->capture_default_str();
    simulate->add_option("--variant", simArgs.variant, "plain, round-robin or chunked")->capture_default_str();
    simulate->add_option("--instances", simArgs.instances, "auto or a count")->capture_default_str();
    simulate->add_option("--iterations", simArgs.iterations, "Runs per test")->capture_default_str();
    simulate->add_option("--budget", simArgs.budget, "Step budget per run")->capture_default_str();
    simulate->add_option("--hsa-probability", simArgs.hsaProbability, "Priority step probability")
        ->capture_default_str();

    std::string reportDir;
    auto* report = app.add_subcommand("report", "Summarize classify/synth/simulate outputs");
    report->add_option("dir", reportDir, "Directory with partitions.json, stats.json, outcomes.csv")->required();

    LtsDumpArgs dumpArgs;
    auto* dump = app.add_subcommand("lts-dump", "Write the plain or monitored LTS of a test");
    dump->add_option("file", dumpArgs.file, "Test file")->required()->check(CLI::ExistingFile);
    dump->add_option("--model", dumpArgs.model, "Monitor a progress model (default: plain LTS)");
    dump->add_option("--format", dumpArgs.format, "dot or json")->capture_default_str();
    dump->add_option("--max-states", dumpArgs.maxStates, "Exploration bound")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        logger()->error("phase=usage error=\"{}\"", e.what());
        return kExitUsage;
    }

    logger()->set_level(spdlog::level::from_str(g.logLevel));
    try {
        if (!seedText.empty()) g.seed = parseSeed(seedText, "--seed");
        if (synth->parsed()) return runSynth(synthArgs, g, out);
        if (checkCmd->parsed()) return runCheck(checkArgs, out);
        if (classify->parsed()) return runClassify(classifyArgs, g, out);
        if (emit->parsed()) return runEmit(emitArgs, g, out);
        if (simulate->parsed()) return runSimulate(simArgs, g, out);
        if (report->parsed()) return runReport(reportDir, g, out);
        if (dump->parsed()) return runLtsDump(dumpArgs, g, out);
    } catch (const UsageError& e) {
        logger()->error("phase=usage error=\"{}\"", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        logger()->error("error=\"{}\"", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace progress_lab::cli

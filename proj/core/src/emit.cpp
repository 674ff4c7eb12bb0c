#include "progress_lab/emit.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "progress_lab/errors.hpp"

namespace progress_lab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string u(std::uint32_t v) { return std::to_string(v) + "u"; }

/// Per-language spelling of the atomics used by the shared kernel skeleton.
struct Dialect {
    std::string exchange;
    std::string add;
    std::string cellPrefix;
    std::string cellSuffix;
    std::string cell(const std::string& idx) const { return cellPrefix + idx + cellSuffix; }
};

Dialect dialectFor(Backend backend) {
    Dialect d;
    switch (backend) {
        case Backend::glsl:
            d.exchange = "atomicExchange";
            d.add = "atomicAdd";
            d.cellPrefix = "mem[";
            d.cellSuffix = "]";
            break;
        case Backend::cuda:
            d.exchange = "atomicExch";
            d.add = "atomicAdd";
            d.cellPrefix = "&mem[";
            d.cellSuffix = "]";
            break;
        case Backend::metal:
            d.exchange = "atomic_exchange_explicit";
            d.add = "atomic_fetch_add_explicit";
            d.cellPrefix = "&mem[";
            d.cellSuffix = "]";
            break;
        case Backend::harness:
            break;
    }
    return d;
}

std::string atomicCall(Backend backend, const Dialect& d, const AxbInstruction& in) {
    const std::string cell = d.cell("base + " + u(in.checkLoc.index));
    const std::string fn = in.doExch ? d.exchange : d.add;
    const std::string arg = in.doExch ? u(in.exchVal.v) : std::string("0u");
    if (backend == Backend::metal) return fn + "(" + cell + ", " + arg + ", memory_order_relaxed)";
    return fn + "(" + cell + ", " + arg + ")";
}

void emitThreadBody(std::ostringstream& os, Backend backend, const ThreadProgram& program, const std::string& pad) {
    const Dialect d = dialectFor(backend);
    const auto len = static_cast<std::uint32_t>(program.size());
    os << pad << "int pc = 0;\n";
    os << pad << "while (pc != " << len << ") {\n";
    os << pad << "  switch (pc) {\n";
    for (std::uint32_t i = 0; i < len; ++i) {
        const AxbInstruction& in = program[i];
        const std::string call = atomicCall(backend, d, in);
        os << pad << "    case " << i << ":\n";
        if (in.isStraightLine(i)) {
            os << pad << "      " << call << ";\n";
            os << pad << "      pc += 1;\n";
        } else {
            os << pad << "      if (" << call << " == " << u(in.checkVal.v) << ") {\n";
            os << pad << "        pc = " << in.jumpTarget << ";\n";
            os << pad << "      } else {\n";
            os << pad << "        pc += 1;\n";
            os << pad << "      }\n";
        }
        os << pad << "      break;\n";
    }
    os << pad << "  }\n";
    os << pad << "}\n";
}

/// Id derivation: `w` is the workgroup id, N threads per instance, M instances.
void emitMapping(std::ostringstream& os, Variant variant, ThreadId n, std::uint32_t m, const std::string& uintType,
                 const std::string& pad) {
    switch (variant) {
        case Variant::plain:
            os << pad << uintType << " instance = 0u;\n";
            os << pad << uintType << " tid = w;\n";
            break;
        case Variant::roundRobin:
            os << pad << uintType << " instance = w / " << u(n) << ";\n";
            os << pad << uintType << " tid = w % " << u(n) << ";\n";
            break;
        case Variant::chunked:
            os << pad << uintType << " instance = w % " << u(m) << ";\n";
            os << pad << uintType << " tid = w / " << u(m) << ";\n";
            break;
    }
}

void emitDispatch(std::ostringstream& os, ThreadId n, const std::string& pad, const std::string& extraArg) {
    for (ThreadId t = 0; t < n; ++t) {
        os << pad << (t == 0 ? "if" : "} else if") << " (tid == " << u(t) << ") {\n";
        os << pad << "  thread" << t << "(" << extraArg << "base);\n";
    }
    os << pad << "}\n";
}

std::string header(const LitmusTest& test, const EmitConfig& config, std::uint32_t m) {
    std::ostringstream os;
    os << "// " << test.name << ": " << test.numThreads() << " threads, " << test.numLocations << " location(s), "
       << variantName(config.variant) << " mapping, " << m << " instance(s)\n";
    return os.str();
}

std::string glslSource(const LitmusTest& test, const EmitConfig& config, std::uint32_t m) {
    std::ostringstream os;
    os << "#version 450\n" << header(test, config, m) << "\n";
    os << "layout(local_size_x = " << config.workgroupSize << ", local_size_y = 1, local_size_z = 1) in;\n\n";
    os << "layout(std430, binding = 0) buffer Memory {\n  uint mem[];\n};\n";
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        os << "\nvoid thread" << t << "(uint base) {\n";
        emitThreadBody(os, Backend::glsl, test.threads[t], "  ");
        os << "}\n";
    }
    os << "\nvoid main() {\n";
    if (config.workgroupSize > 1) os << "  if (gl_LocalInvocationIndex != 0u) {\n    return;\n  }\n";
    os << "  uint w = gl_WorkGroupID.x;\n";
    emitMapping(os, config.variant, test.numThreads(), m, "uint", "  ");
    os << "  uint base = instance * " << u(test.numLocations) << ";\n";
    emitDispatch(os, test.numThreads(), "  ", "");
    os << "}\n";
    return os.str();
}

std::string cudaSource(const LitmusTest& test, const EmitConfig& config, std::uint32_t m, const std::string& entry) {
    std::ostringstream os;
    os << header(test, config, m);
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        os << "\n__device__ void thread" << t << "(unsigned int* mem, unsigned int base) {\n";
        emitThreadBody(os, Backend::cuda, test.threads[t], "  ");
        os << "}\n";
    }
    os << "\nextern \"C\" __global__ void " << entry << "(unsigned int* mem) {\n";
    if (config.workgroupSize > 1) os << "  if (threadIdx.x != 0) {\n    return;\n  }\n";
    os << "  unsigned int w = blockIdx.x;\n";
    emitMapping(os, config.variant, test.numThreads(), m, "unsigned int", "  ");
    os << "  unsigned int base = instance * " << u(test.numLocations) << ";\n";
    emitDispatch(os, test.numThreads(), "  ", "mem, ");
    os << "}\n";
    return os.str();
}

std::string metalSource(const LitmusTest& test, const EmitConfig& config, std::uint32_t m, const std::string& entry) {
    std::ostringstream os;
    os << "#include <metal_stdlib>\nusing namespace metal;\n\n" << header(test, config, m);
    for (ThreadId t = 0; t < test.numThreads(); ++t) {
        os << "\nstatic void thread" << t << "(device atomic_uint* mem, uint base) {\n";
        emitThreadBody(os, Backend::metal, test.threads[t], "  ");
        os << "}\n";
    }
    os << "\nkernel void " << entry << "(device atomic_uint* mem [[buffer(0)]],\n"
       << "    uint w [[threadgroup_position_in_grid]],\n"
       << "    uint lid [[thread_index_in_threadgroup]]) {\n";
    if (config.workgroupSize > 1) os << "  if (lid != 0u) {\n    return;\n  }\n";
    emitMapping(os, config.variant, test.numThreads(), m, "uint", "  ");
    os << "  uint base = instance * " << u(test.numLocations) << ";\n";
    emitDispatch(os, test.numThreads(), "  ", "mem, ");
    os << "}\n";
    return os.str();
}

std::string harnessSource(const LitmusTest& test, const EmitConfig& config, std::uint32_t m) {
    ordered_json doc;
    doc["format"] = "progress-lab-harness";
    doc["version"] = 1;
    doc["test"] = test.name;
    doc["variant"] = std::string(variantName(config.variant));
    doc["instances"] = m;
    doc["threadsPerInstance"] = test.numThreads();
    doc["locationsPerInstance"] = test.numLocations;
    doc["workgroups"] = test.numThreads() * m;
    doc["workgroupSize"] = config.workgroupSize;
    ordered_json threads = ordered_json::array();
    for (const ThreadProgram& program : test.threads) {
        ordered_json list = ordered_json::array();
        for (std::uint32_t i = 0; i < program.size(); ++i) {
            const AxbInstruction& in = program[i];
            ordered_json op;
            op["op"] = in.doExch ? "exchange" : "add0";
            op["loc"] = in.checkLoc.index;
            op["cmp"] = in.checkVal.v;
            op["jump"] = in.jumpTarget;
            if (in.doExch) op["value"] = in.exchVal.v;
            list.push_back(std::move(op));
        }
        threads.push_back(std::move(list));
    }
    doc["threads"] = std::move(threads);
    return doc.dump(2) + "\n";
}

std::string amberScript(const LitmusTest& test, const KernelArtifact& artifact) {
    std::ostringstream os;
    os << "#!amber\n# " << test.name << " (" << variantName(artifact.variant) << ")\n\n";
    os << "SHADER compute " << artifact.entryPoint << " GLSL\n" << artifact.source << "END\n\n";
    os << "BUFFER mem DATA_TYPE uint32 SIZE " << artifact.buffer.totalCells() << " FILL 0\n\n";
    os << "PIPELINE compute pipeline\n";
    os << "  ATTACH " << artifact.entryPoint << "\n";
    os << "  BIND BUFFER mem AS storage DESCRIPTOR_SET 0 BINDING 0\n";
    os << "END\n\n";
    os << "RUN pipeline " << artifact.launch.workgroups << " 1 1\n";
    return os.str();
}

}  // namespace

std::string_view backendName(Backend b) {
    switch (b) {
        case Backend::glsl: return "glsl";
        case Backend::cuda: return "cuda";
        case Backend::metal: return "metal";
        case Backend::harness: return "harness";
    }
    return "?";
}

std::optional<Backend> parseBackendName(std::string_view token) {
    for (Backend b : {Backend::glsl, Backend::cuda, Backend::metal, Backend::harness}) {
        if (backendName(b) == token) return b;
    }
    return std::nullopt;
}

std::string_view backendExtension(Backend b) {
    switch (b) {
        case Backend::glsl: return "comp";
        case Backend::cuda: return "cu";
        case Backend::metal: return "metal";
        case Backend::harness: return "json";
    }
    return "";
}

std::string_view variantName(Variant v) {
    switch (v) {
        case Variant::plain: return "plain";
        case Variant::roundRobin: return "round-robin";
        case Variant::chunked: return "chunked";
    }
    return "?";
}

std::optional<Variant> parseVariantName(std::string_view token) {
    if (token == "roundRobin") return Variant::roundRobin;
    for (Variant v : {Variant::plain, Variant::roundRobin, Variant::chunked}) {
        if (variantName(v) == token) return v;
    }
    return std::nullopt;
}

std::uint32_t autoInstances(ThreadId threadsPerTest) {
    if (threadsPerTest == 0) throw ContractViolation("test has no threads");
    return kMaxWorkgroups / threadsPerTest;
}

std::uint32_t resolveInstances(const EmitConfig& config, ThreadId threadsPerTest) {
    if (config.variant == Variant::plain) {
        if (config.instances && *config.instances != 1) {
            throw ContractViolation("plain variant runs exactly one instance, got " + std::to_string(*config.instances));
        }
        return 1;
    }
    if (!config.instances) return autoInstances(threadsPerTest);
    if (*config.instances == 0) throw ContractViolation("instance count must be at least 1");
    return *config.instances;
}

ThreadMapping mapWorkgroup(Variant variant, std::uint32_t w, ThreadId n, std::uint32_t m) {
    if (n == 0 || m == 0) throw ContractViolation("mapWorkgroup needs N >= 1 and M >= 1");
    if (variant == Variant::plain && m != 1) throw ContractViolation("plain variant has exactly one instance");
    const std::uint64_t total = static_cast<std::uint64_t>(n) * m;
    if (w >= total) {
        throw ContractViolation("workgroup id " + std::to_string(w) + " out of range for " + std::to_string(total) +
                                " workgroups");
    }
    switch (variant) {
        case Variant::plain: return {0, w};
        case Variant::roundRobin: return {w / n, w % n};
        case Variant::chunked: return {w % m, w / m};
    }
    return {};
}

std::uint32_t workgroupOf(Variant variant, ThreadMapping mapping, ThreadId n, std::uint32_t m) {
    if (mapping.instance >= m || mapping.thread >= n) throw ContractViolation("mapping out of range");
    switch (variant) {
        case Variant::plain: return mapping.thread;
        case Variant::roundRobin: return mapping.instance * n + mapping.thread;
        case Variant::chunked: return mapping.thread * m + mapping.instance;
    }
    return 0;
}

std::string sanitizeIdentifier(std::string_view name) {
    std::string out;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        out.push_back(ok ? c : '_');
    }
    if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(0, "t_");
    return out;
}

std::optional<double> recommendedTimeoutSeconds(Backend backend) {
    switch (backend) {
        case Backend::cuda: return 20.0;
        case Backend::glsl: return 5.0;
        case Backend::metal:
        case Backend::harness: return std::nullopt;
    }
    return std::nullopt;
}

KernelArtifact emitKernel(const LitmusTest& test, const EmitConfig& config) {
    validate(test);
    if (config.workgroupSize == 0) throw ContractViolation("workgroup size must be at least 1");
    const std::uint32_t m = resolveInstances(config, test.numThreads());
    const std::uint64_t workgroups = static_cast<std::uint64_t>(test.numThreads()) * m;
    if (config.backend != Backend::harness && workgroups > kMaxWorkgroups) {
        throw ContractViolation(std::string(backendName(config.backend)) + " launch of " + std::to_string(workgroups) +
                                " workgroups exceeds the portable limit of " + std::to_string(kMaxWorkgroups));
    }
    const std::uint64_t cells = static_cast<std::uint64_t>(test.numLocations) * m;
    if (cells > UINT32_MAX) throw ContractViolation("buffer of " + std::to_string(cells) + " cells is too large");

    KernelArtifact a;
    a.backend = config.backend;
    a.variant = config.variant;
    a.entryPoint = "litmus_" + sanitizeIdentifier(test.name);
    a.buffer = {m, test.numLocations};
    a.launch = {static_cast<std::uint32_t>(workgroups), config.workgroupSize};
    switch (config.backend) {
        case Backend::glsl:
            a.entryPoint = "main";
            a.source = glslSource(test, config, m);
            a.amberScript = amberScript(test, a);
            break;
        case Backend::cuda: a.source = cudaSource(test, config, m, a.entryPoint); break;
        case Backend::metal: a.source = metalSource(test, config, m, a.entryPoint); break;
        case Backend::harness: a.source = harnessSource(test, config, m); break;
    }
    return a;
}

std::string EmitManifest::toJson() const {
    ordered_json doc;
    doc["format"] = "progress-lab-manifest";
    doc["version"] = 1;
    ordered_json list = ordered_json::array();
    for (const ManifestEntry& e : entries) {
        ordered_json j;
        j["test"] = e.test;
        j["backend"] = std::string(backendName(e.backend));
        j["variant"] = std::string(variantName(e.variant));
        if (!e.error.empty()) {
            j["error"] = e.error;
            list.push_back(std::move(j));
            continue;
        }
        j["file"] = e.file;
        if (!e.amberFile.empty()) j["amber"] = e.amberFile;
        j["entryPoint"] = e.entryPoint;
        j["instances"] = e.buffer.instances;
        j["locationsPerInstance"] = e.buffer.locationsPerInstance;
        j["bufferCells"] = e.buffer.totalCells();
        j["workgroups"] = e.launch.workgroups;
        j["workgroupSize"] = e.launch.workgroupSize;
        if (auto t = recommendedTimeoutSeconds(e.backend)) {
            j["timeoutSeconds"] = *t;
        } else {
            j["timeoutSeconds"] = nullptr;
        }
        list.push_back(std::move(j));
    }
    doc["entries"] = std::move(list);
    return doc.dump(2) + "\n";
}

namespace {

void writeFile(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

EmitManifest emitSuite(const std::vector<LitmusTest>& tests, const std::vector<EmitConfig>& configs,
                       const std::string& outDir) {
    namespace fs = std::filesystem;
    fs::create_directories(outDir);
    EmitManifest manifest;
    for (const LitmusTest& test : tests) {
        for (const EmitConfig& config : configs) {
            ManifestEntry e;
            e.test = test.name;
            e.backend = config.backend;
            e.variant = config.variant;
            try {
                KernelArtifact a = emitKernel(test, config);
                const std::string stem = sanitizeIdentifier(test.name) + "." + std::string(variantName(config.variant));
                e.file = stem + "." + std::string(backendExtension(config.backend));
                writeFile(fs::path(outDir) / e.file, a.source);
                if (!a.amberScript.empty()) {
                    e.amberFile = stem + ".amber";
                    writeFile(fs::path(outDir) / e.amberFile, a.amberScript);
                }
                e.entryPoint = a.entryPoint;
                e.buffer = a.buffer;
                e.launch = a.launch;
            } catch (const Error& ex) {
                e.error = ex.what();
                e.file.clear();
                e.amberFile.clear();
            }
            manifest.entries.push_back(std::move(e));
        }
    }
    writeFile(fs::path(outDir) / "manifest.json", manifest.toJson());
    return manifest;
}

HarnessProgram parseHarnessArtifact(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("harness artifact is not valid JSON: ") + ex.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "progress-lab-harness") throw Error("not a harness artifact");
        HarnessProgram h;
        h.test = doc.at("test").get<std::string>();
        const auto variant = parseVariantName(doc.at("variant").get<std::string>());
        if (!variant) throw Error("unknown variant in harness artifact");
        h.variant = *variant;
        h.instances = doc.at("instances").get<std::uint32_t>();
        h.threadsPerInstance = doc.at("threadsPerInstance").get<ThreadId>();
        h.locationsPerInstance = doc.at("locationsPerInstance").get<std::uint32_t>();
        for (const auto& list : doc.at("threads")) {
            ThreadProgram program;
            for (const auto& op : list) {
                AxbInstruction in;
                const std::string kind = op.at("op").get<std::string>();
                if (kind != "exchange" && kind != "add0") throw Error("unknown harness op '" + kind + "'");
                in.checkLoc.index = op.at("loc").get<std::uint32_t>();
                in.checkVal.v = op.at("cmp").get<std::uint32_t>();
                in.jumpTarget = op.at("jump").get<std::uint32_t>();
                in.doExch = kind == "exchange";
                if (in.doExch) in.exchVal.v = op.at("value").get<std::uint32_t>();
                if (in.checkLoc.index >= h.locationsPerInstance) throw Error("harness op location out of range");
                program.push_back(in);
            }
            h.threads.push_back(std::move(program));
        }
        if (h.threads.size() != h.threadsPerInstance) throw Error("harness thread count mismatch");
        if (h.instances == 0) throw Error("harness instance count must be at least 1");
        for (const ThreadProgram& p : h.threads) {
            for (const AxbInstruction& in : p) {
                if (in.jumpTarget > p.size()) throw Error("harness jump target out of range");
            }
        }
        return h;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed harness artifact: ") + ex.what());
    }
}

}  // namespace progress_lab

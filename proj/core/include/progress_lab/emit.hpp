#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "progress_lab/axb.hpp"

namespace progress_lab {

enum class Backend { glsl, cuda, metal, harness };

/// How test-instance threads map onto workgroup ids.
///  - plain:      one instance, thread i on workgroup i
///  - roundRobin: thread i of instance m on workgroup N*m + i
///  - chunked:    thread i of instance m on workgroup M*i + m
enum class Variant { plain, roundRobin, chunked };

std::string_view backendName(Backend b);
std::optional<Backend> parseBackendName(std::string_view token);
/// File extension without the dot: comp, cu, metal, json.
std::string_view backendExtension(Backend b);
/// `plain`, `round-robin`, `chunked`.
std::string_view variantName(Variant v);
std::optional<Variant> parseVariantName(std::string_view token);

/// Largest workgroup count every target is required to support in x.
inline constexpr std::uint32_t kMaxWorkgroups = 65535;

/// ⌊65535 / N⌋, the instance count used for stress variants.
std::uint32_t autoInstances(ThreadId threadsPerTest);

struct EmitConfig {
    Backend backend = Backend::glsl;
    Variant variant = Variant::plain;
    /// Instance count M; empty means auto. Plain always uses 1.
    std::optional<std::uint32_t> instances;
    std::uint32_t workgroupSize = 1;
};

/// The instance count a config resolves to for an N-thread test. Throws
/// ContractViolation for plain with an explicit count other than 1, or a
/// count of 0.
std::uint32_t resolveInstances(const EmitConfig& config, ThreadId threadsPerTest);

struct ThreadMapping {
    std::uint32_t instance = 0;
    ThreadId thread = 0;
    bool operator==(const ThreadMapping&) const = default;
};

/// The (instance, test thread) run by workgroup `w`. Bijective from
/// [0, N*M) onto instances x threads. Throws ContractViolation when w is
/// out of range (or M != 1 for plain).
ThreadMapping mapWorkgroup(Variant variant, std::uint32_t w, ThreadId threadsPerTest, std::uint32_t instances);

/// Inverse of mapWorkgroup.
std::uint32_t workgroupOf(Variant variant, ThreadMapping mapping, ThreadId threadsPerTest, std::uint32_t instances);

/// Instance m owns cells [m * locations, (m + 1) * locations), zero-filled.
struct BufferLayout {
    std::uint32_t instances = 1;
    std::uint32_t locationsPerInstance = 1;
    std::uint32_t totalCells() const { return instances * locationsPerInstance; }
};

struct LaunchGeometry {
    std::uint32_t workgroups = 1;  // N * M, one-dimensional
    std::uint32_t workgroupSize = 1;
};

struct KernelArtifact {
    Backend backend = Backend::glsl;
    Variant variant = Variant::plain;
    std::string source;
    std::string entryPoint;
    BufferLayout buffer;
    LaunchGeometry launch;
    /// Amber script wrapping a GLSL shader; empty for other backends.
    std::string amberScript;
};

/// Compiles a test to a kernel: each thread is a while loop over an integer
/// pc with a switch case per instruction. An exchanging instruction becomes
/// an atomic exchange; a non-exchanging one an atomic add of 0. Branching
/// instructions compare the returned old value. Throws ContractViolation for
/// unsupported combinations.
KernelArtifact emitKernel(const LitmusTest& test, const EmitConfig& config);

/// An identifier-safe version of a test name.
std::string sanitizeIdentifier(std::string_view name);

/// Recommended non-termination timeout; empty when the platform enforces
/// its own watchdog (Metal) or the artifact is not run on a device.
std::optional<double> recommendedTimeoutSeconds(Backend backend);

struct ManifestEntry {
    std::string test;
    Backend backend = Backend::glsl;
    Variant variant = Variant::plain;
    std::string file;       // relative to the output directory
    std::string amberFile;  // glsl only
    std::string entryPoint;
    BufferLayout buffer;
    LaunchGeometry launch;
    std::string error;  // set when this entry failed; no files written
};

struct EmitManifest {
    std::vector<ManifestEntry> entries;
    std::string toJson() const;
};

/// One artifact per (test, config), written under `outDir` together with
/// manifest.json. Failures are recorded per entry.
EmitManifest emitSuite(const std::vector<LitmusTest>& tests, const std::vector<EmitConfig>& configs, const std::string& outDir);

/// A harness artifact read back: per-thread instruction lists plus the
/// mapping, as written by the harness backend.
struct HarnessProgram {
    std::string test;
    Variant variant = Variant::plain;
    std::uint32_t instances = 1;
    ThreadId threadsPerInstance = 0;
    std::uint32_t locationsPerInstance = 0;
    std::vector<ThreadProgram> threads;
};

/// Parses the JSON produced by the harness backend. Throws Error on
/// malformed input.
HarnessProgram parseHarnessArtifact(std::string_view json);

}  // namespace progress_lab

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "progress_lab/thread_set.hpp"

namespace progress_lab {

enum class ModelKind { unfair, hsa, obe, lobe, hsaObe, fair };
enum class Fairness { weak, strong };

/// What the progress model monitors: which threads have stepped and which
/// have finished. A thread must step before it can terminate.
struct SchedulerFacts {
    ThreadSet stepped;
    ThreadSet terminated;
    ThreadId numThreads = 0;

    bool operator==(const SchedulerFacts&) const = default;
};

/// Threads guaranteed fair (eventual) execution under `model` given `facts`.
///
///  - unfair: nobody
///  - fair:   every non-terminated thread
///  - obe:    threads that have stepped and not terminated
///  - hsa:    the lowest-id non-terminated thread
///  - lobe:   non-terminated threads with id <= some stepped thread
///  - hsaObe: hsa | obe
ThreadSet fairSet(ModelKind model, const SchedulerFacts& facts);

/// One of the 11 verdict-producing models. `flavor` is empty exactly for
/// the unfair model, which has a single verdict rule.
struct ModelVariant {
    ModelKind kind = ModelKind::unfair;
    std::optional<Fairness> flavor;

    static ModelVariant unfair() { return {}; }
    static ModelVariant weak(ModelKind k) { return {k, Fairness::weak}; }
    static ModelVariant strong(ModelKind k) { return {k, Fairness::strong}; }

    bool operator==(const ModelVariant&) const = default;

    /// `unfair`, `weak-hsa`, `strong-hsa+obe`, ...
    std::string label() const;
};

/// CLI tokens: unfair, hsa, obe, lobe, hsa+obe, fair.
std::string_view modelName(ModelKind kind);
std::optional<ModelKind> parseModelName(std::string_view token);
std::string_view fairnessName(Fairness f);
std::optional<Fairness> parseFairnessName(std::string_view token);
/// Inverse of ModelVariant::label().
std::optional<ModelVariant> parseModelLabel(std::string_view label);

/// All 11 variants in report column order: unfair, then the weak variants
/// (hsa, obe, lobe, hsa+obe, fair), then the strong ones.
const std::vector<ModelVariant>& allModelVariants();

/// A partial order "strictly less fair than" over a set of model variants.
class Hierarchy {
public:
    /// unfair < {hsa, obe} < lobe < fair within each flavor, and weak-X <
    /// strong-X. hsa+obe is not a member.
    static Hierarchy standard();
    /// As standard(), with hsa+obe inserted between {hsa, obe} and lobe.
    static Hierarchy withHsaObe();

    const std::vector<ModelVariant>& members() const { return members_; }
    bool contains(const ModelVariant& m) const;
    /// True iff a < b under the transitive closure of the covering relation.
    /// Variants outside the hierarchy are incomparable to everything.
    bool strictlyLessFair(const ModelVariant& a, const ModelVariant& b) const;
    /// Every member strictly below `m`.
    std::vector<ModelVariant> below(const ModelVariant& m) const;

private:
    Hierarchy(std::vector<ModelVariant> members, const std::vector<std::pair<ModelVariant, ModelVariant>>& covers);
    std::optional<std::size_t> indexOf(const ModelVariant& m) const;

    std::vector<ModelVariant> members_;
    std::vector<std::vector<bool>> less_;  // less_[a][b]: a < b
};

/// strictlyLessFair under the standard hierarchy.
bool strictlyLessFair(const ModelVariant& a, const ModelVariant& b);

}  // namespace progress_lab

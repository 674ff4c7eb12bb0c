#include "progress_lab/progress_model.hpp"

#include <algorithm>

namespace progress_lab {

ThreadSet fairSet(ModelKind model, const SchedulerFacts& facts) {
    const ThreadSet live = ThreadSet::firstN(facts.numThreads) - facts.terminated;
    switch (model) {
        case ModelKind::unfair:
            return {};
        case ModelKind::fair:
            return live;
        case ModelKind::obe:
            return facts.stepped - facts.terminated;
        case ModelKind::hsa:
            return live.empty() ? ThreadSet{} : ThreadSet{live.min()};
        case ModelKind::lobe:
            if (facts.stepped.empty()) return {};
            return live & ThreadSet::firstN(facts.stepped.max() + 1);
        case ModelKind::hsaObe:
            return fairSet(ModelKind::hsa, facts) | fairSet(ModelKind::obe, facts);
    }
    return {};
}

std::string_view modelName(ModelKind kind) {
    switch (kind) {
        case ModelKind::unfair: return "unfair";
        case ModelKind::hsa: return "hsa";
        case ModelKind::obe: return "obe";
        case ModelKind::lobe: return "lobe";
        case ModelKind::hsaObe: return "hsa+obe";
        case ModelKind::fair: return "fair";
    }
    return "?";
}

std::optional<ModelKind> parseModelName(std::string_view token) {
    for (ModelKind k : {ModelKind::unfair, ModelKind::hsa, ModelKind::obe, ModelKind::lobe, ModelKind::hsaObe, ModelKind::fair}) {
        if (modelName(k) == token) return k;
    }
    return std::nullopt;
}

std::string_view fairnessName(Fairness f) {
    return f == Fairness::weak ? "weak" : "strong";
}

std::optional<Fairness> parseFairnessName(std::string_view token) {
    if (token == "weak") return Fairness::weak;
    if (token == "strong") return Fairness::strong;
    return std::nullopt;
}

std::string ModelVariant::label() const {
    if (!flavor) return std::string(modelName(kind));
    return std::string(fairnessName(*flavor)) + "-" + std::string(modelName(kind));
}

std::optional<ModelVariant> parseModelLabel(std::string_view label) {
    for (const auto& m : allModelVariants()) {
        if (m.label() == label) return m;
    }
    return std::nullopt;
}

const std::vector<ModelVariant>& allModelVariants() {
    static const std::vector<ModelVariant> all = [] {
        std::vector<ModelVariant> v{ModelVariant::unfair()};
        for (Fairness f : {Fairness::weak, Fairness::strong}) {
            for (ModelKind k : {ModelKind::hsa, ModelKind::obe, ModelKind::lobe, ModelKind::hsaObe, ModelKind::fair}) {
                v.push_back(ModelVariant{k, f});
            }
        }
        return v;
    }();
    return all;
}

namespace {

std::vector<std::pair<ModelVariant, ModelVariant>> standardCovers(bool withHsaObe) {
    std::vector<std::pair<ModelVariant, ModelVariant>> covers;
    std::vector<ModelKind> kinds{ModelKind::hsa, ModelKind::obe, ModelKind::lobe, ModelKind::fair};
    if (withHsaObe) kinds.push_back(ModelKind::hsaObe);
    for (Fairness f : {Fairness::weak, Fairness::strong}) {
        const auto v = [f](ModelKind k) { return ModelVariant{k, f}; };
        covers.emplace_back(ModelVariant::unfair(), v(ModelKind::hsa));
        covers.emplace_back(ModelVariant::unfair(), v(ModelKind::obe));
        if (withHsaObe) {
            covers.emplace_back(v(ModelKind::hsa), v(ModelKind::hsaObe));
            covers.emplace_back(v(ModelKind::obe), v(ModelKind::hsaObe));
            covers.emplace_back(v(ModelKind::hsaObe), v(ModelKind::lobe));
        } else {
            covers.emplace_back(v(ModelKind::hsa), v(ModelKind::lobe));
            covers.emplace_back(v(ModelKind::obe), v(ModelKind::lobe));
        }
        covers.emplace_back(v(ModelKind::lobe), v(ModelKind::fair));
    }
    for (ModelKind k : kinds) covers.emplace_back(ModelVariant::weak(k), ModelVariant::strong(k));
    return covers;
}

std::vector<ModelVariant> hierarchyMembers(bool withHsaObe) {
    std::vector<ModelVariant> out;
    for (const auto& m : allModelVariants()) {
        if (m.kind == ModelKind::hsaObe && !withHsaObe) continue;
        out.push_back(m);
    }
    return out;
}

}  // namespace

Hierarchy::Hierarchy(std::vector<ModelVariant> members, const std::vector<std::pair<ModelVariant, ModelVariant>>& covers)
    : members_(std::move(members)), less_(members_.size(), std::vector<bool>(members_.size(), false)) {
    for (const auto& [a, b] : covers) less_[*indexOf(a)][*indexOf(b)] = true;
    // Warshall closure; the member count is tiny.
    const std::size_t n = members_.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (less_[i][k] && less_[k][j]) less_[i][j] = true;
}

Hierarchy Hierarchy::standard() {
    return Hierarchy(hierarchyMembers(false), standardCovers(false));
}

Hierarchy Hierarchy::withHsaObe() {
    return Hierarchy(hierarchyMembers(true), standardCovers(true));
}

std::optional<std::size_t> Hierarchy::indexOf(const ModelVariant& m) const {
    const auto it = std::find(members_.begin(), members_.end(), m);
    if (it == members_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

bool Hierarchy::contains(const ModelVariant& m) const {
    return indexOf(m).has_value();
}

bool Hierarchy::strictlyLessFair(const ModelVariant& a, const ModelVariant& b) const {
    const auto ia = indexOf(a);
    const auto ib = indexOf(b);
    return ia && ib && less_[*ia][*ib];
}

std::vector<ModelVariant> Hierarchy::below(const ModelVariant& m) const {
    std::vector<ModelVariant> out;
    for (const auto& q : members_) {
        if (strictlyLessFair(q, m)) out.push_back(q);
    }
    return out;
}

bool strictlyLessFair(const ModelVariant& a, const ModelVariant& b) {
    static const Hierarchy h = Hierarchy::standard();
    return h.strictlyLessFair(a, b);
}

}  // namespace progress_lab

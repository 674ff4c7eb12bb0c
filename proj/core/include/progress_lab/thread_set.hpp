#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace progress_lab {

using ThreadId = std::uint32_t;

/// Litmus tests are tiny; thread sets are bitmasks over at most 64 threads.
inline constexpr ThreadId kMaxThreads = 64;

class ThreadSet {
public:
    constexpr ThreadSet() = default;
    constexpr ThreadSet(std::initializer_list<ThreadId> ids) {
        for (ThreadId id : ids) insert(id);
    }

    static constexpr ThreadSet fromMask(std::uint64_t mask) {
        ThreadSet s;
        s.bits_ = mask;
        return s;
    }
    /// {0, ..., n-1}
    static constexpr ThreadSet firstN(ThreadId n) {
        return fromMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(ThreadId id) const { return id < 64 && ((bits_ >> id) & 1U) != 0; }
    constexpr void insert(ThreadId id) { bits_ |= std::uint64_t{1} << id; }
    constexpr void erase(ThreadId id) { bits_ &= ~(std::uint64_t{1} << id); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr std::uint64_t mask() const { return bits_; }

    constexpr bool isSubsetOf(ThreadSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Lowest member; only meaningful when non-empty.
    constexpr ThreadId min() const { return static_cast<ThreadId>(std::countr_zero(bits_)); }
    /// Highest member; only meaningful when non-empty.
    constexpr ThreadId max() const { return static_cast<ThreadId>(63 - std::countl_zero(bits_)); }

    constexpr ThreadSet operator|(ThreadSet o) const { return fromMask(bits_ | o.bits_); }
    constexpr ThreadSet operator&(ThreadSet o) const { return fromMask(bits_ & o.bits_); }
    /// Set difference.
    constexpr ThreadSet operator-(ThreadSet o) const { return fromMask(bits_ & ~o.bits_); }
    constexpr bool operator==(const ThreadSet&) const = default;

    std::vector<ThreadId> members() const {
        std::vector<ThreadId> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ThreadId>(std::countr_zero(b)));
        return out;
    }

    /// Renders as `{0,1}`; the empty set is `{}`.
    std::string toString() const {
        std::string s = "{";
        bool first = true;
        for (ThreadId t : members()) {
            if (!first) s += ',';
            s += std::to_string(t);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace progress_lab

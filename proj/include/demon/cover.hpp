#pragma once

#include <demon/community.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace demon {

/// Merge tolerance: the fraction of the smaller community allowed to lie
/// outside the larger one. 0 merges only nested communities, 1 merges anything.
class Epsilon {
public:
    constexpr Epsilon() = default;
    /// Throws DomainError unless 0 <= value <= 1.
    explicit Epsilon(double value);

    constexpr double value() const noexcept { return value_; }
    friend constexpr bool operator==(Epsilon, Epsilon) = default;

private:
    double value_ = 0.0;
};

/**
 * True iff |smaller \ larger| <= eps * |smaller|. The caller orients the
 * pair; smaller.size() > larger.size() is a DomainError.
 */
bool eps_containment(const Community &smaller, const Community &larger, Epsilon eps);

/// True when either orientation allowed by the sizes passes eps_containment.
bool mergeable(const Community &a, const Community &b, Epsilon eps);

inline constexpr NodeId kNoOrigin = std::numeric_limits<NodeId>::max();

struct CoverEntry {
    Community community;
    /// Ego node whose local community this entry came from (kNoOrigin if unknown).
    NodeId origin = kNoOrigin;
};

/**
 * The running global community set.
 *
 * merge() inserts a community, first absorbing every existing community it
 * is eps-mergeable with: the first mergeable community in cover order
 * (size descending, then lexicographic) is removed and united into the
 * candidate, and the scan restarts until nothing merges. At eps = 0 this
 * keeps the cover equal to the maximal sets of everything merged so far.
 *
 * Lookups go through a node -> entries index, so a merge only touches
 * communities that share a node with the candidate (eps = 1 is handled
 * separately, since it also merges disjoint sets).
 */
class CommunityCover {
public:
    CommunityCover() = default;
    explicit CommunityCover(Epsilon eps) : eps_(eps) {}

    Epsilon epsilon() const noexcept { return eps_; }
    std::size_t size() const noexcept { return alive_; }
    bool empty() const noexcept { return alive_ == 0; }

    void merge(Community c, NodeId origin = kNoOrigin);
    bool contains(const Community &c) const;
    /// Removes c if present, without re-merging anything.
    bool erase(const Community &c);

    /// Communities in cover order.
    std::vector<Community> communities() const;
    std::vector<CoverEntry> entries() const;

private:
    struct Slot {
        Community members;
        NodeId origin;
        bool alive;
    };

    std::uint32_t find_slot(const Community &c) const;
    void kill(std::uint32_t slot);
    std::uint32_t insert(Community c, NodeId origin);
    void compact();

    Epsilon eps_;
    std::vector<Slot> slots_;
    // node -> slots containing it; dead slots are filtered lazily
    std::vector<std::vector<std::uint32_t>> by_node_;
    std::size_t alive_ = 0;
    std::vector<std::uint32_t> overlap_;
};

/// Value-returning form of CommunityCover::merge.
CommunityCover merge(CommunityCover cover, Community c, Epsilon eps);

/// Maximal sets of the collection (no set strictly inside another), duplicates collapsed.
std::vector<Community> max_sets(std::span<const Community> sets);

} // namespace demon

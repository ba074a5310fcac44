#pragma once

#include <demon/graph.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace demon {

/// A non-empty set of nodes, kept sorted by id so equality and ordering are exact.
class Community {
public:
    /// Sorts and de-duplicates; throws DomainError when empty.
    explicit Community(std::vector<NodeId> members);
    Community(std::initializer_list<NodeId> members) : Community(std::vector<NodeId>(members)) {}

    std::span<const NodeId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(NodeId v) const;
    bool is_subset_of(const Community &other) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Community &, const Community &) = default;
    /// Lexicographic over members.
    friend auto operator<=>(const Community &a, const Community &b) { return a.members_ <=> b.members_; }

private:
    struct Unchecked {};
    Community(std::vector<NodeId> sorted_members, Unchecked) noexcept : members_(std::move(sorted_members)) {}
    friend Community unite(const Community &, const Community &);

    std::vector<NodeId> members_;
};

Community unite(const Community &a, const Community &b);
std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b);
std::size_t difference_size(const Community &a, const Community &b);

/// Cover order: size descending, then lexicographic members.
struct CoverOrder {
    bool operator()(const Community &a, const Community &b) const {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    }
};

struct CommunityHash {
    std::size_t operator()(const Community &c) const noexcept;
};

/// Member labels sorted in canonical label order.
std::vector<std::string> member_labels(const Community &c, const Graph &g);

} // namespace demon

#include <demon/community.hpp>

#include <demon/error.hpp>
#include <demon/label_order.hpp>

#include <algorithm>
#include <iterator>

namespace demon {

Community::Community(std::vector<NodeId> members) : members_(std::move(members)) {
    if (members_.empty())
        throw DomainError("community must not be empty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Community::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool Community::is_subset_of(const Community &other) const {
    return size() <= other.size() &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Community unite(const Community &a, const Community &b) {
    std::vector<NodeId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                   std::back_inserter(out));
    return Community(std::move(out), Community::Unchecked{});
}

std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

std::size_t difference_size(const Community &a, const Community &b) {
    return a.size() - intersection_size(a.members(), b.members());
}

std::size_t CommunityHash::operator()(const Community &c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (NodeId v : c) {
        h ^= v;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<std::string> member_labels(const Community &c, const Graph &g) {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (NodeId v : c)
        out.push_back(g.label(v));
    std::sort(out.begin(), out.end(), LabelLess{});
    return out;
}

} // namespace demon

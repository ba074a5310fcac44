#include <demon/cover.hpp>

#include <demon/error.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace demon {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

bool fits(std::size_t outside, std::size_t smaller_size, double eps) {
    return static_cast<double>(outside) <= eps * static_cast<double>(smaller_size);
}
} // namespace

Epsilon::Epsilon(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw DomainError("epsilon must lie in [0, 1], got " + std::to_string(value));
}

bool eps_containment(const Community &smaller, const Community &larger, Epsilon eps) {
    if (smaller.size() > larger.size())
        throw DomainError("eps_containment: first community must not be larger than the second");
    return fits(difference_size(smaller, larger), smaller.size(), eps.value());
}

bool mergeable(const Community &a, const Community &b, Epsilon eps) {
    if (a.size() < b.size())
        return eps_containment(a, b, eps);
    if (b.size() < a.size())
        return eps_containment(b, a, eps);
    return eps_containment(a, b, eps) || eps_containment(b, a, eps);
}

void CommunityCover::merge(Community c, NodeId origin) {
    if (eps_.value() >= 1.0) {
        // Everything is mergeable with everything: the cover collapses to one union.
        for (std::uint32_t s = 0; s < slots_.size(); ++s)
            if (slots_[s].alive) {
                c = unite(c, slots_[s].members);
                kill(s);
            }
        insert(std::move(c), origin);
        return;
    }

    const double eps = eps_.value();
    std::vector<std::uint32_t> touched;
    for (;;) {
        overlap_.resize(slots_.size(), 0);
        touched.clear();
        for (NodeId v : c) {
            if (v >= by_node_.size())
                continue;
            for (auto s : by_node_[v]) {
                if (!slots_[s].alive)
                    continue;
                if (overlap_[s]++ == 0)
                    touched.push_back(s);
            }
        }

        std::uint32_t best = kNone;
        for (auto s : touched) {
            const auto shared = overlap_[s];
            overlap_[s] = 0;
            const auto &other = slots_[s].members;
            bool ok = false;
            if (c.size() <= other.size())
                ok = fits(c.size() - shared, c.size(), eps);
            if (!ok && other.size() <= c.size())
                ok = fits(other.size() - shared, other.size(), eps);
            if (ok && (best == kNone || CoverOrder{}(other, slots_[best].members)))
                best = s;
        }
        if (best == kNone)
            break;

        auto &absorbed = slots_[best];
        auto merged = unite(c, absorbed.members);
        if (merged.size() == absorbed.members.size())
            origin = absorbed.origin;
        c = std::move(merged);
        kill(best);
    }
    insert(std::move(c), origin);
}

std::uint32_t CommunityCover::find_slot(const Community &c) const {
    const NodeId first = *c.begin();
    if (first >= by_node_.size())
        return kNone;
    for (auto s : by_node_[first])
        if (slots_[s].alive && slots_[s].members == c)
            return s;
    return kNone;
}

bool CommunityCover::contains(const Community &c) const { return find_slot(c) != kNone; }

bool CommunityCover::erase(const Community &c) {
    const auto s = find_slot(c);
    if (s == kNone)
        return false;
    kill(s);
    return true;
}

void CommunityCover::kill(std::uint32_t slot) {
    slots_[slot].alive = false;
    --alive_;
}

std::uint32_t CommunityCover::insert(Community c, NodeId origin) {
    if (slots_.size() > 64 && slots_.size() > 2 * alive_)
        compact();
    const auto slot = static_cast<std::uint32_t>(slots_.size());
    const NodeId top = *(c.end() - 1);
    if (top >= by_node_.size())
        by_node_.resize(static_cast<std::size_t>(top) + 1);
    for (NodeId v : c)
        by_node_[v].push_back(slot);
    slots_.push_back(Slot{std::move(c), origin, true});
    ++alive_;
    return slot;
}

void CommunityCover::compact() {
    std::vector<Slot> live;
    live.reserve(alive_);
    for (auto &s : slots_)
        if (s.alive)
            live.push_back(std::move(s));
    slots_ = std::move(live);
    for (auto &list : by_node_)
        list.clear();
    for (std::uint32_t s = 0; s < slots_.size(); ++s)
        for (NodeId v : slots_[s].members)
            by_node_[v].push_back(s);
    overlap_.assign(slots_.size(), 0);
}

std::vector<CoverEntry> CommunityCover::entries() const {
    std::vector<CoverEntry> out;
    out.reserve(alive_);
    for (const auto &s : slots_)
        if (s.alive)
            out.push_back(CoverEntry{s.members, s.origin});
    std::sort(out.begin(), out.end(),
              [](const CoverEntry &a, const CoverEntry &b) { return CoverOrder{}(a.community, b.community); });
    return out;
}

std::vector<Community> CommunityCover::communities() const {
    std::vector<Community> out;
    out.reserve(alive_);
    for (const auto &s : slots_)
        if (s.alive)
            out.push_back(s.members);
    std::sort(out.begin(), out.end(), CoverOrder{});
    return out;
}

CommunityCover merge(CommunityCover cover, Community c, Epsilon eps) {
    if (!(cover.epsilon() == eps)) {
        CommunityCover rebuilt(eps);
        for (auto &entry : cover.entries())
            rebuilt.merge(std::move(entry.community), entry.origin);
        cover = std::move(rebuilt);
    }
    cover.merge(std::move(c));
    return cover;
}

std::vector<Community> max_sets(std::span<const Community> sets) {
    std::vector<Community> sorted(sets.begin(), sets.end());
    std::sort(sorted.begin(), sorted.end(), CoverOrder{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Larger sets come first, so a set can only be dominated by an earlier one.
    std::vector<Community> out;
    for (const auto &s : sorted) {
        const bool dominated = std::any_of(out.begin(), out.end(), [&](const Community &kept) {
            return kept.size() > s.size() && s.is_subset_of(kept);
        });
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

} // namespace demon

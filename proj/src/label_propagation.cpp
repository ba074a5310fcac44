#include <demon/label_propagation.hpp>

#include <demon/error.hpp>

#include <algorithm>
#include <numeric>

namespace demon {

namespace {

// Dense label histogram reused across the nodes of one subgraph.
class LabelCounter {
public:
    explicit LabelCounter(std::size_t labels) : count_(labels, 0) {}

    // Counts neighbor labels of v; returns the maximal frequency.
    std::uint32_t tally(std::uint32_t v, const LabelState &state, const Subgraph &sub) {
        clear();
        std::uint32_t best = 0;
        for (auto u : sub.neighbors(v)) {
            const auto label = state.labels[u];
            if (count_[label]++ == 0)
                touched_.push_back(label);
            best = std::max(best, count_[label]);
        }
        return best;
    }

    std::uint32_t count(std::uint32_t label) const { return count_[label]; }
    const std::vector<std::uint32_t> &touched() const { return touched_; }

    std::uint32_t smallest_with(std::uint32_t frequency) const {
        std::uint32_t best = UINT32_MAX;
        for (auto label : touched_)
            if (count_[label] == frequency)
                best = std::min(best, label);
        return best;
    }

private:
    void clear() {
        for (auto label : touched_)
            count_[label] = 0;
        touched_.clear();
    }

    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> touched_;
};

void require_neighbors(std::uint32_t v, const Subgraph &sub) {
    if (v >= sub.node_count())
        throw DomainError("local node " + std::to_string(v) + " out of range");
    if (sub.degree(v) == 0)
        throw DomainError("frequency vote on isolated node " + std::to_string(sub.parent(v)));
}

} // namespace

LabelState LabelState::initial(std::size_t node_count) {
    LabelState s;
    s.labels.resize(node_count);
    std::iota(s.labels.begin(), s.labels.end(), std::uint32_t{0});
    return s;
}

std::uint32_t frequency_vote(std::uint32_t v, const LabelState &state, const Subgraph &sub) {
    require_neighbors(v, sub);
    LabelCounter counter(sub.node_count());
    return counter.smallest_with(counter.tally(v, state, sub));
}

bool holds_majority_label(std::uint32_t v, const LabelState &state, const Subgraph &sub) {
    if (sub.degree(v) == 0)
        return true;
    LabelCounter counter(sub.node_count());
    const auto best = counter.tally(v, state, sub);
    return counter.count(state.labels[v]) == best;
}

PropagationResult run_label_propagation(const Subgraph &sub, const LpConfig &cfg) {
    if (cfg.t_max < 1)
        throw DomainError("t_max must be at least 1");
    const auto k = static_cast<std::uint32_t>(sub.node_count());
    PropagationResult result{LabelState::initial(k), false};
    auto &state = result.state;
    LabelCounter counter(k);

    for (std::size_t t = 1; t <= cfg.t_max; ++t) {
        state.iteration = t;
        for (std::uint32_t v = 0; v < k; ++v) {
            if (sub.degree(v) == 0)
                continue;
            state.labels[v] = counter.smallest_with(counter.tally(v, state, sub));
        }
        bool stable = true;
        for (std::uint32_t v = 0; v < k && stable; ++v) {
            if (sub.degree(v) == 0)
                continue;
            const auto best = counter.tally(v, state, sub);
            stable = counter.count(state.labels[v]) == best;
        }
        if (stable) {
            result.converged = true;
            break;
        }
    }
    return result;
}

LocalCommunitySet group_labels(const Subgraph &sub, const LabelState &state) {
    const auto k = static_cast<std::uint32_t>(sub.node_count());
    std::vector<std::vector<NodeId>> groups(k);
    LocalCommunitySet out;
    LabelCounter counter(k);
    for (std::uint32_t v = 0; v < k; ++v) {
        if (sub.degree(v) == 0) {
            out.push_back(Community{sub.parent(v)});
            continue;
        }
        const auto best = counter.tally(v, state, sub);
        for (auto label : counter.touched())
            if (counter.count(label) == best)
                groups[label].push_back(sub.parent(v));
    }
    for (auto &members : groups)
        if (!members.empty())
            out.emplace_back(std::move(members));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LocalCommunitySet propagate(const Subgraph &sub, const LpConfig &cfg) {
    return group_labels(sub, run_label_propagation(sub, cfg).state);
}

} // namespace demon

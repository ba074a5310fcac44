#pragma once

#include <demon/community.hpp>
#include <demon/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace demon {

/// Label propagation settings. Visiting order (canonical) and tie-breaking
/// (smallest label) are fixed; only the round cap is tunable.
struct LpConfig {
    std::size_t t_max = 100;
};

/// Per-node labels over a subgraph's local ids. A label names the local id
/// of the node it started on.
struct LabelState {
    std::vector<std::uint32_t> labels;
    std::size_t iteration = 0;

    static LabelState initial(std::size_t node_count);
};

struct PropagationResult {
    LabelState state;
    /// True when the stop condition held before reaching t_max.
    bool converged = false;
};

/// Possibly overlapping communities over a subgraph, in parent ids, sorted.
using LocalCommunitySet = std::vector<Community>;

/**
 * Most frequent label among the neighbors of local node v; ties go to the
 * smallest label. Throws DomainError if v has no neighbors.
 */
std::uint32_t frequency_vote(std::uint32_t v, const LabelState &state, const Subgraph &sub);

/// True when v's own label reaches the maximal frequency among its neighbors.
/// Isolated nodes trivially satisfy this.
bool holds_majority_label(std::uint32_t v, const LabelState &state, const Subgraph &sub);

/**
 * Runs asynchronous label propagation in canonical order until every node
 * holds a maximal-frequency label or cfg.t_max rounds have run.
 */
PropagationResult run_label_propagation(const Subgraph &sub, const LpConfig &cfg);

/**
 * Groups the final state into communities. Each node joins the community of
 * every label that reaches the maximal frequency among its neighbors, so a
 * node tied between labels lands in several communities. Isolated nodes
 * become singletons.
 */
LocalCommunitySet group_labels(const Subgraph &sub, const LabelState &state);

/// run_label_propagation followed by group_labels.
LocalCommunitySet propagate(const Subgraph &sub, const LpConfig &cfg);

} // namespace demon

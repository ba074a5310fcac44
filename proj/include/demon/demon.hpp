#pragma once

#include <demon/cover.hpp>
#include <demon/graph.hpp>
#include <demon/label_propagation.hpp>

#include <cstddef>
#include <functional>
#include <span>

namespace demon {

/**
 * Local communities of v: label propagation over the ego-minus-ego network
 * of v, with v added back to every community found. Empty for isolated v.
 * Throws DomainError for unknown v.
 */
LocalCommunitySet local_communities(NodeId v, const Graph &g, const LpConfig &cfg);
LocalCommunitySet local_communities(NodeId v, SubgraphExtractor &extractor, const LpConfig &cfg);

struct DemonOptions {
    /// Worker threads for the per-node phase. Output does not depend on it.
    unsigned workers = 1;
    /// Node visiting order; empty means canonical label order. Must be a
    /// permutation of all node ids when given.
    std::span<const NodeId> visit_order = {};
};

using LocalSetSink = std::function<void(NodeId ego, LocalCommunitySet &&)>;

/**
 * The per-node phase on its own: computes local_communities for every node
 * in `nodes` (possibly on several threads) and hands each result to `sink`
 * on the calling thread, in the order of `nodes`.
 */
void for_each_local_set(const Graph &g, std::span<const NodeId> nodes, const LpConfig &cfg,
                        unsigned workers, const LocalSetSink &sink);

/**
 * Visits every node, computes its local communities, and merges each into a
 * cover started from `initial`. The result is independent of the worker
 * count, and at eps = 0 also of the visiting order.
 */
CommunityCover demon(const Graph &g, Epsilon eps, const LpConfig &cfg,
                     const CommunityCover &initial = CommunityCover{}, const DemonOptions &opts = {});

} // namespace demon

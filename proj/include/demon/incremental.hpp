#pragma once

#include <demon/cover.hpp>
#include <demon/graph.hpp>
#include <demon/label_propagation.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace demon {

/// A batch of additions: new nodes and new edges, by label. Endpoints must
/// be existing nodes or listed in new_nodes.
struct GraphDelta {
    std::vector<std::string> new_nodes;
    std::vector<std::pair<std::string, std::string>> new_edges;

    bool empty() const noexcept { return new_nodes.empty() && new_edges.empty(); }
};

/**
 * Reads a delta batch in edge-list format. Labels not yet in `g` become new
 * nodes; edges already in `g` and self-loops are ignored. An optional leading
 * "+" token marks an addition. A leading "-" token (a deletion) is rejected
 * with a ParseError naming the line.
 */
GraphDelta read_delta(std::istream &in, const Graph &g, const std::string &source = "<stream>");
GraphDelta load_delta(const std::filesystem::path &path, const Graph &g);

/// Throws DomainError on self-loops, re-added nodes, or unknown endpoints.
void validate_delta(const Graph &g, const GraphDelta &d);

/// g with the delta applied. Existing node ids are preserved; new nodes get the next ids.
Graph apply_delta(const Graph &g, const GraphDelta &d);

/**
 * Labels (canonical order) of every node whose ego-minus-ego network can
 * change under the delta: new nodes, endpoints of new edges, and all their
 * neighbors in the updated graph.
 */
std::vector<std::string> affected_nodes(const Graph &g, const GraphDelta &d);

struct IncrementalResult {
    Graph graph;
    CommunityCover cover;
};

/**
 * Applies the delta and updates a cover previously produced from `g` with
 * the same eps and cfg, recomputing local communities only for affected
 * nodes.
 *
 * At eps = 0 old local communities of affected nodes that no node produces
 * any more are retracted, and the communities they had been hiding are
 * re-merged, so the result equals a from-scratch run on the updated graph.
 * At eps > 0 the new local communities are merged in without retraction.
 */
IncrementalResult demon_incremental(const Graph &g, const GraphDelta &d, CommunityCover cover, Epsilon eps,
                                    const LpConfig &cfg, unsigned workers = 1);

} // namespace demon

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace demon {

/// Dense internal node id, 0..node_count()-1.
using NodeId = std::uint32_t;

class GraphBuilder;

/**
 * Undirected simple graph in compressed adjacency form.
 *
 * Immutable once built; concurrent readers need no synchronization. Node ids
 * are assigned in first-seen order, while rank() gives each node's position
 * in canonical label order. Every order-sensitive computation goes through
 * rank() so that results are independent of how the input was ordered.
 */
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    /// Sorted (by id) neighbors of v.
    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;
    bool contains(NodeId v) const noexcept { return v < node_count(); }

    const std::string &label(NodeId v) const { return labels_[v]; }
    std::optional<NodeId> find(std::string_view label) const;
    /// Like find(), but throws DomainError for unknown labels.
    NodeId id(std::string_view label) const;

    std::uint32_t rank(NodeId v) const { return rank_[v]; }
    /// All node ids in canonical label order.
    std::span<const NodeId> canonical_order() const noexcept { return order_; }

    /// Checks symmetry, simplicity and the edge count identity. Throws std::logic_error.
    void check_invariants() const;

private:
    friend class GraphBuilder;

    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::uint32_t> rank_;
    std::vector<NodeId> order_;
};

/// Counts of input items silently discarded while building a graph.
struct BuildReport {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

/**
 * Accumulates labelled nodes and edges, then produces a Graph. Self-loops and
 * parallel edges are dropped and counted. Seeding from an existing graph keeps
 * its node ids stable, so ids held elsewhere (e.g. in a cover) stay valid.
 */
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph &base);

    /// Returns the id of label, creating the node on first sight.
    NodeId add_node(std::string_view label);
    /// Returns true if the edge is new to this builder.
    bool add_edge(std::string_view u, std::string_view v);
    bool add_edge(NodeId u, NodeId v);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::optional<NodeId> find(std::string_view label) const;
    bool has_edge(NodeId u, NodeId v) const;

    const BuildReport &report() const noexcept { return report_; }

    Graph build() const;

private:
    static std::uint64_t key(NodeId u, NodeId v) {
        if (u > v)
            std::swap(u, v);
        return (std::uint64_t{u} << 32) | v;
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::unordered_set<std::uint64_t> edge_set_;
    BuildReport report_;
};

/**
 * Node-induced subgraph with a mapping back to the parent graph.
 *
 * Local ids 0..size()-1 follow the parent's canonical order, so local id
 * order is the canonical visiting order and smaller local ids carry smaller
 * labels.
 */
class Subgraph {
public:
    Subgraph() = default;

    std::size_t node_count() const noexcept { return parent_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    std::span<const NodeId> neighbors(std::uint32_t local) const {
        return {targets_.data() + offsets_[local], targets_.data() + offsets_[local + 1]};
    }
    std::size_t degree(std::uint32_t local) const {
        return offsets_[local + 1] - offsets_[local];
    }
    /// Parent id of a local node.
    NodeId parent(std::uint32_t local) const { return parent_[local]; }
    std::span<const NodeId> parent_ids() const noexcept { return parent_; }

    /// Edges as sorted parent-id pairs (u < v), mostly for tests and debugging.
    std::vector<std::pair<NodeId, NodeId>> parent_edges() const;

private:
    friend class SubgraphExtractor;

    std::vector<NodeId> parent_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> targets_;
};

/**
 * Reusable workspace for carving subgraphs out of one parent graph. Holds an
 * O(n) marker array, so a worker thread should keep one extractor for its
 * whole run instead of calling the free functions repeatedly.
 */
class SubgraphExtractor {
public:
    explicit SubgraphExtractor(const Graph &g);

    Subgraph induced(std::span<const NodeId> nodes);
    /// {v} ∪ N(v) with every parent edge among them.
    Subgraph ego_network(NodeId v);
    /// ego_network(v) without v and its incident edges.
    Subgraph ego_minus_ego(NodeId v);

private:
    Subgraph build(std::vector<NodeId> nodes);

    const Graph *g_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> local_;
    std::uint32_t generation_ = 0;
};

Subgraph induced_subgraph(const Graph &g, std::span<const NodeId> nodes);
Subgraph ego_network(NodeId v, const Graph &g);
Subgraph ego_minus_ego(NodeId v, const Graph &g);

} // namespace demon

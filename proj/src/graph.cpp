#include <demon/graph.hpp>

#include <demon/error.hpp>
#include <demon/label_order.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace demon {

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v))
        return false;
    if (degree(u) > degree(v))
        std::swap(u, v);
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

NodeId Graph::id(std::string_view label) const {
    if (auto v = find(label))
        return *v;
    throw DomainError("unknown node '" + std::string(label) + "'");
}

void Graph::check_invariants() const {
    const auto n = node_count();
    if (offsets_.size() != n + 1 || rank_.size() != n || order_.size() != n)
        throw std::logic_error("graph: inconsistent array sizes");
    if (targets_.size() % 2 != 0)
        throw std::logic_error("graph: odd adjacency total");
    for (NodeId v = 0; v < n; ++v) {
        const auto adj = neighbors(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] == v)
                throw std::logic_error("graph: self-loop at " + labels_[v]);
            if (i > 0 && adj[i - 1] >= adj[i])
                throw std::logic_error("graph: unsorted or parallel edge at " + labels_[v]);
            if (!std::binary_search(neighbors(adj[i]).begin(), neighbors(adj[i]).end(), v))
                throw std::logic_error("graph: asymmetric edge " + labels_[v] + "-" + labels_[adj[i]]);
        }
        if (order_[rank_[v]] != v)
            throw std::logic_error("graph: rank/order mismatch");
    }
    for (std::size_t i = 1; i < n; ++i)
        if (!label_less(labels_[order_[i - 1]], labels_[order_[i]]))
            throw std::logic_error("graph: canonical order not sorted");
}

GraphBuilder::GraphBuilder(const Graph &base) : labels_(base.labels_), index_(base.index_) {
    edges_.reserve(base.edge_count());
    edge_set_.reserve(base.edge_count());
    for (NodeId u = 0; u < base.node_count(); ++u)
        for (NodeId v : base.neighbors(u))
            if (u < v) {
                edges_.emplace_back(u, v);
                edge_set_.insert(key(u, v));
            }
}

NodeId GraphBuilder::add_node(std::string_view label) {
    auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
    if (inserted)
        labels_.emplace_back(label);
    return it->second;
}

bool GraphBuilder::add_edge(std::string_view u, std::string_view v) {
    const NodeId a = add_node(u);
    const NodeId b = add_node(v);
    return add_edge(a, b);
}

bool GraphBuilder::add_edge(NodeId u, NodeId v) {
    if (u >= labels_.size() || v >= labels_.size())
        throw DomainError("edge endpoint out of range");
    if (u == v) {
        ++report_.self_loops_dropped;
        return false;
    }
    if (!edge_set_.insert(key(u, v)).second) {
        ++report_.duplicate_edges_dropped;
        return false;
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    return true;
}

std::optional<NodeId> GraphBuilder::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
    return u != v && edge_set_.count(key(u, v)) > 0;
}

Graph GraphBuilder::build() const {
    Graph g;
    const std::size_t n = labels_.size();
    g.labels_ = labels_;
    g.index_ = index_;

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        g.targets_[cursor[u]++] = v;
        g.targets_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));

    g.order_.resize(n);
    std::iota(g.order_.begin(), g.order_.end(), NodeId{0});
    std::sort(g.order_.begin(), g.order_.end(),
              [&](NodeId a, NodeId b) { return label_less(labels_[a], labels_[b]); });
    g.rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        g.rank_[g.order_[i]] = static_cast<std::uint32_t>(i);
    return g;
}

std::vector<std::pair<NodeId, NodeId>> Subgraph::parent_edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (std::uint32_t i = 0; i < node_count(); ++i)
        for (auto j : neighbors(i)) {
            auto u = parent_[i], v = parent_[j];
            if (u < v)
                out.emplace_back(u, v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

SubgraphExtractor::SubgraphExtractor(const Graph &g)
    : g_(&g), stamp_(g.node_count(), 0), local_(g.node_count(), 0) {}

Subgraph SubgraphExtractor::induced(std::span<const NodeId> nodes) {
    for (NodeId v : nodes)
        if (!g_->contains(v))
            throw DomainError("node id " + std::to_string(v) + " not in graph");
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return build(std::move(sorted));
}

Subgraph SubgraphExtractor::ego_network(NodeId v) {
    if (!g_->contains(v))
        throw DomainError("node id " + std::to_string(v) + " not in graph");
    const auto adj = g_->neighbors(v);
    std::vector<NodeId> nodes(adj.begin(), adj.end());
    nodes.insert(std::upper_bound(nodes.begin(), nodes.end(), v), v);
    return build(std::move(nodes));
}

Subgraph SubgraphExtractor::ego_minus_ego(NodeId v) {
    if (!g_->contains(v))
        throw DomainError("node id " + std::to_string(v) + " not in graph");
    const auto adj = g_->neighbors(v);
    return build(std::vector<NodeId>(adj.begin(), adj.end()));
}

// nodes: sorted by id, unique.
Subgraph SubgraphExtractor::build(std::vector<NodeId> nodes) {
    const Graph &g = *g_;
    if (++generation_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        generation_ = 1;
    }
    for (NodeId u : nodes)
        stamp_[u] = generation_;

    Subgraph sub;
    sub.parent_ = nodes;
    std::sort(sub.parent_.begin(), sub.parent_.end(),
              [&](NodeId a, NodeId b) { return g.rank(a) < g.rank(b); });
    const auto k = sub.parent_.size();
    for (std::uint32_t i = 0; i < k; ++i)
        local_[sub.parent_[i]] = i;

    sub.offsets_.assign(k + 1, 0);
    sub.targets_.clear();
    for (std::uint32_t i = 0; i < k; ++i) {
        const NodeId u = sub.parent_[i];
        const auto adj = g.neighbors(u);
        const auto row_begin = sub.targets_.size();
        // Hubs: probe the (small) member list against the long adjacency list instead.
        if (adj.size() > 8 * k) {
            for (NodeId w : nodes)
                if (w != u && std::binary_search(adj.begin(), adj.end(), w))
                    sub.targets_.push_back(local_[w]);
        } else {
            for (NodeId w : adj)
                if (stamp_[w] == generation_)
                    sub.targets_.push_back(local_[w]);
        }
        std::sort(sub.targets_.begin() + static_cast<std::ptrdiff_t>(row_begin), sub.targets_.end());
        sub.offsets_[i + 1] = sub.targets_.size();
    }
    return sub;
}

Subgraph induced_subgraph(const Graph &g, std::span<const NodeId> nodes) {
    return SubgraphExtractor(g).induced(nodes);
}

Subgraph ego_network(NodeId v, const Graph &g) {
    return SubgraphExtractor(g).ego_network(v);
}

Subgraph ego_minus_ego(NodeId v, const Graph &g) {
    return SubgraphExtractor(g).ego_minus_ego(v);
}

} // namespace demon

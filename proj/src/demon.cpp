#include <demon/demon.hpp>

#include <demon/error.hpp>

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace demon {

LocalCommunitySet local_communities(NodeId v, SubgraphExtractor &extractor, const LpConfig &cfg) {
    const auto sub = extractor.ego_minus_ego(v);
    if (sub.node_count() == 0)
        return {};
    auto sets = propagate(sub, cfg);
    LocalCommunitySet out;
    out.reserve(sets.size());
    for (auto &c : sets) {
        std::vector<NodeId> members(c.begin(), c.end());
        members.push_back(v);
        out.emplace_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

LocalCommunitySet local_communities(NodeId v, const Graph &g, const LpConfig &cfg) {
    SubgraphExtractor extractor(g);
    return local_communities(v, extractor, cfg);
}

void for_each_local_set(const Graph &g, std::span<const NodeId> nodes, const LpConfig &cfg,
                        unsigned workers, const LocalSetSink &sink) {
    for (NodeId v : nodes)
        if (!g.contains(v))
            throw DomainError("node id " + std::to_string(v) + " not in graph");
    workers = std::max(1u, workers);
    if (workers == 1) {
        SubgraphExtractor extractor(g);
        for (NodeId v : nodes)
            sink(v, local_communities(v, extractor, cfg));
        return;
    }

    // Blocks are computed in parallel and drained serially in input order,
    // which keeps the sink's view identical to a serial run.
    const std::size_t block = std::size_t{2048} * workers;
    std::vector<LocalCommunitySet> results;
    std::vector<SubgraphExtractor> extractors;
    extractors.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        extractors.emplace_back(g);

    for (std::size_t begin = 0; begin < nodes.size(); begin += block) {
        const std::size_t end = std::min(nodes.size(), begin + block);
        results.assign(end - begin, {});
        std::atomic<std::size_t> next{begin};
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = next.fetch_add(1); i < end; i = next.fetch_add(1))
                        results[i - begin] = local_communities(nodes[i], extractors[w], cfg);
                });
        }
        for (std::size_t i = begin; i < end; ++i)
            sink(nodes[i], std::move(results[i - begin]));
    }
}

CommunityCover demon(const Graph &g, Epsilon eps, const LpConfig &cfg, const CommunityCover &initial,
                     const DemonOptions &opts) {
    std::span<const NodeId> order = g.canonical_order();
    if (!opts.visit_order.empty()) {
        std::vector<bool> seen(g.node_count(), false);
        for (NodeId v : opts.visit_order) {
            if (!g.contains(v) || seen[v])
                throw DomainError("visit order must be a permutation of the graph's nodes");
            seen[v] = true;
        }
        if (opts.visit_order.size() != g.node_count())
            throw DomainError("visit order must be a permutation of the graph's nodes");
        order = opts.visit_order;
    }

    CommunityCover cover(eps);
    for (auto &entry : initial.entries())
        cover.merge(std::move(entry.community), entry.origin);

    for_each_local_set(g, order, cfg, opts.workers, [&](NodeId ego, LocalCommunitySet &&sets) {
        for (auto &c : sets)
            cover.merge(std::move(c), ego);
    });
    return cover;
}

} // namespace demon

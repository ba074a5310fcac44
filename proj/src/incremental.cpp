#include <demon/incremental.hpp>

#include <demon/demon.hpp>
#include <demon/error.hpp>
#include <demon/io.hpp>
#include <demon/label_order.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace demon {

GraphDelta read_delta(std::istream &in, const Graph &g, const std::string &source) {
    GraphDelta d;
    std::set<std::string> fresh;
    std::set<std::pair<std::string, std::string>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto body = line.substr(0, line.find('#'));
        auto tokens = split_ws(body);
        if (tokens.empty())
            continue;
        if (tokens.front() == "-")
            throw ParseError(source, line_no, "edge deletions are not supported");
        if (tokens.front() == "+")
            tokens.erase(tokens.begin());
        if (tokens.size() < 2)
            throw ParseError(source, line_no, "expected two node labels");

        const auto &u = tokens[0];
        const auto &v = tokens[1];
        for (const auto *label : {&u, &v})
            if (!g.find(*label) && fresh.insert(*label).second)
                d.new_nodes.push_back(*label);
        if (u == v)
            continue;
        const auto gu = g.find(u);
        const auto gv = g.find(v);
        if (gu && gv && g.has_edge(*gu, *gv))
            continue;
        auto key = label_less(u, v) ? std::pair{u, v} : std::pair{v, u};
        if (edges.insert(key).second)
            d.new_edges.push_back(std::move(key));
    }
    if (in.bad())
        throw IoError("read error on " + source);
    return d;
}

GraphDelta load_delta(const std::filesystem::path &path, const Graph &g) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return read_delta(in, g, path.string());
}

void validate_delta(const Graph &g, const GraphDelta &d) {
    std::unordered_set<std::string> fresh;
    for (const auto &label : d.new_nodes) {
        if (g.find(label))
            throw DomainError("delta adds node '" + label + "' which already exists");
        fresh.insert(label);
    }
    for (const auto &[u, v] : d.new_edges) {
        if (u == v)
            throw DomainError("delta contains self-loop on '" + u + "'");
        for (const auto *label : {&u, &v})
            if (!g.find(*label) && !fresh.count(*label))
                throw DomainError("delta edge references unknown node '" + *label + "'");
    }
}

Graph apply_delta(const Graph &g, const GraphDelta &d) {
    validate_delta(g, d);
    GraphBuilder builder(g);
    for (const auto &label : d.new_nodes)
        builder.add_node(label);
    for (const auto &[u, v] : d.new_edges)
        builder.add_edge(u, v);
    return builder.build();
}

namespace {

// Affected ids in the updated graph, in canonical order.
std::vector<NodeId> affected_ids(const Graph &before, const Graph &after, const GraphDelta &d) {
    std::vector<bool> mark(after.node_count(), false);
    std::vector<NodeId> seeds;
    auto seed = [&](NodeId v) {
        if (!mark[v]) {
            mark[v] = true;
            seeds.push_back(v);
        }
    };
    for (const auto &label : d.new_nodes)
        seed(after.id(label));
    for (const auto &[u, v] : d.new_edges) {
        const auto a = before.find(u);
        const auto b = before.find(v);
        if (a && b && before.has_edge(*a, *b))
            continue; // not actually new
        seed(after.id(u));
        seed(after.id(v));
    }
    std::vector<NodeId> out = seeds;
    for (NodeId s : seeds)
        for (NodeId w : after.neighbors(s))
            if (!mark[w]) {
                mark[w] = true;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) { return after.rank(a) < after.rank(b); });
    return out;
}

} // namespace

std::vector<std::string> affected_nodes(const Graph &g, const GraphDelta &d) {
    const Graph after = apply_delta(g, d);
    std::vector<std::string> out;
    for (NodeId v : affected_ids(g, after, d))
        out.push_back(after.label(v));
    return out;
}

IncrementalResult demon_incremental(const Graph &g, const GraphDelta &d, CommunityCover cover, Epsilon eps,
                                    const LpConfig &cfg, unsigned workers) {
    Graph after = apply_delta(g, d);
    if (!(cover.epsilon() == eps))
        throw DomainError("cover was built with a different epsilon");
    const auto affected = affected_ids(g, after, d);

    std::unordered_map<NodeId, LocalCommunitySet> fresh_sets;
    for_each_local_set(after, affected, cfg, workers,
                       [&](NodeId v, LocalCommunitySet &&sets) { fresh_sets.emplace(v, std::move(sets)); });

    if (eps.value() == 0.0) {
        std::vector<NodeId> existing;
        for (NodeId v : affected)
            if (v < g.node_count())
                existing.push_back(v);

        std::unordered_set<Community, CommunityHash> produced;
        for (auto &[v, sets] : fresh_sets)
            produced.insert(sets.begin(), sets.end());

        std::unordered_set<Community, CommunityHash> stale;
        for_each_local_set(g, existing, cfg, workers, [&](NodeId, LocalCommunitySet &&sets) {
            for (auto &c : sets)
                if (!produced.count(c) && cover.contains(c))
                    stale.insert(std::move(c));
        });

        SubgraphExtractor extractor(after);
        std::unordered_map<NodeId, LocalCommunitySet> unaffected_cache;
        auto sets_of = [&](NodeId u) -> const LocalCommunitySet & {
            if (auto it = fresh_sets.find(u); it != fresh_sets.end())
                return it->second;
            auto it = unaffected_cache.find(u);
            if (it == unaffected_cache.end())
                it = unaffected_cache.emplace(u, local_communities(u, extractor, cfg)).first;
            return it->second;
        };

        // A stale community may still be some untouched node's local community;
        // any such node is a member of it.
        std::vector<Community> dead;
        for (const auto &c : stale) {
            const bool supported = std::any_of(c.begin(), c.end(), [&](NodeId u) {
                const auto &sets = sets_of(u);
                return std::binary_search(sets.begin(), sets.end(), c);
            });
            if (!supported)
                dead.push_back(c);
        }
        std::sort(dead.begin(), dead.end());
        for (const auto &c : dead)
            cover.erase(c);
        // Local communities hidden under a dead one have their ego inside it.
        for (const auto &c : dead)
            for (NodeId u : c)
                for (const auto &local : sets_of(u))
                    cover.merge(local, u);
    }

    for (NodeId v : affected)
        for (auto &c : fresh_sets[v])
            cover.merge(std::move(c), v);
    return {std::move(after), std::move(cover)};
}

} // namespace demon

#include "support.hpp"

#include <demon/label_order.hpp>
#include <demon/random.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace demon::testing {

Graph graph_from_edges(const std::vector<std::pair<int, int>> &edges, const std::vector<int> &isolated) {
    GraphBuilder b;
    for (auto [u, v] : edges)
        b.add_edge(std::to_string(u), std::to_string(v));
    for (int v : isolated)
        b.add_node(std::to_string(v));
    return b.build();
}

std::vector<std::pair<std::string, std::string>> erdos_renyi_edges(std::size_t n, double p, std::uint64_t seed,
                                                                   const std::string &prefix) {
    Rng rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p)
                edges.emplace_back(prefix + std::to_string(u), prefix + std::to_string(v));
    return edges;
}

Graph from_label_edges(const std::vector<std::pair<std::string, std::string>> &edges,
                       const std::vector<std::string> &nodes) {
    GraphBuilder b;
    for (const auto &v : nodes)
        b.add_node(v);
    for (const auto &[u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, const std::string &prefix) {
    std::vector<std::string> nodes;
    for (std::size_t v = 0; v < n; ++v)
        nodes.push_back(prefix + std::to_string(v));
    return from_label_edges(erdos_renyi_edges(n, p, seed, prefix), nodes);
}

PlantedGraph planted_partition(std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                               std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = blocks * block_size;
    GraphBuilder b;
    PlantedGraph out;
    for (std::size_t v = 0; v < n; ++v) {
        b.add_node(std::to_string(v));
        out.block_of[std::to_string(v)] = v / block_size;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const double p = (u / block_size == v / block_size) ? p_in : p_out;
            if (uniform_unit(rng) < p)
                b.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    out.graph = b.build();
    return out;
}

Graph chung_lu(std::size_t n, std::size_t m, double alpha, std::uint64_t seed) {
    const double beta = 1.0 / (alpha - 1.0);
    const double mean_degree = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    const double max_degree = std::pow(static_cast<double>(n), beta);
    // Weights (i + offset)^-beta; pick the offset so that the heaviest node,
    // after scaling to the target mean degree, has the natural cutoff degree.
    auto head_ratio = [&](double offset) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sum += std::pow(static_cast<double>(i) + offset, -beta);
        return std::pow(offset, -beta) / (sum / static_cast<double>(n));
    };
    double lo = 1e-3, hi = static_cast<double>(n);
    const double target = max_degree / mean_degree;
    for (int it = 0; it < 60; ++it) {
        const double mid = std::sqrt(lo * hi);
        (head_ratio(mid) > target ? lo : hi) = mid;
    }
    const double offset = std::sqrt(lo * hi);
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::pow(static_cast<double>(i) + offset, -beta);
        cumulative[i] = acc;
    }

    Rng rng(seed);
    auto draw = [&] {
        const double x = uniform_unit(rng) * acc;
        return static_cast<NodeId>(std::upper_bound(cumulative.begin(), cumulative.end(), x) - cumulative.begin());
    };
    GraphBuilder b;
    for (std::size_t v = 0; v < n; ++v)
        b.add_node(std::to_string(v));
    std::size_t added = 0;
    std::size_t attempts = 0;
    while (added < m && attempts < 20 * m) {
        ++attempts;
        NodeId u = std::min<NodeId>(draw(), static_cast<NodeId>(n - 1));
        NodeId v = std::min<NodeId>(draw(), static_cast<NodeId>(n - 1));
        if (u != v && b.add_edge(u, v))
            ++added;
    }
    return b.build();
}

LabelSet sorted_labels(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end(), LabelLess{});
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

LabelCover as_labels(std::span<const Community> cover, const Graph &g) {
    LabelCover out;
    for (const auto &c : cover) {
        std::vector<std::string> labels;
        for (NodeId v : c)
            labels.push_back(g.label(v));
        out.insert(sorted_labels(std::move(labels)));
    }
    return out;
}

LabelCover as_labels(const std::vector<std::vector<std::string>> &sets) {
    LabelCover out;
    for (const auto &s : sets)
        out.insert(sorted_labels(s));
    return out;
}

Adjacency adjacency_of(const Graph &g) {
    Adjacency adj;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto &row = adj[g.label(v)];
        for (NodeId u : g.neighbors(v))
            row.insert(g.label(u));
    }
    return adj;
}

Adjacency oracle_ego_minus_ego(const Adjacency &adj, const std::string &v) {
    Adjacency sub;
    const auto &nbrs = adj.at(v);
    for (const auto &a : nbrs) {
        auto &row = sub[a];
        for (const auto &b : nbrs)
            if (a != b && adj.at(a).count(b))
                row.insert(b);
    }
    return sub;
}

namespace {

// Neighbor label frequencies.
std::map<std::string, int, LabelLess> tally(const Adjacency &sub, const std::map<std::string, std::string> &label,
                                            const std::string &v) {
    std::map<std::string, int, LabelLess> freq;
    for (const auto &u : sub.at(v))
        ++freq[label.at(u)];
    return freq;
}

int max_of(const std::map<std::string, int, LabelLess> &freq) {
    int best = 0;
    for (const auto &[l, c] : freq)
        best = std::max(best, c);
    return best;
}

} // namespace

LabelCover oracle_propagate(const Adjacency &sub, std::size_t t_max) {
    std::vector<std::string> order;
    for (const auto &[v, row] : sub)
        order.push_back(v);
    std::sort(order.begin(), order.end(), LabelLess{});

    std::map<std::string, std::string> label;
    for (const auto &v : order)
        label[v] = v;

    for (std::size_t t = 1; t <= t_max; ++t) {
        for (const auto &v : order) {
            if (sub.at(v).empty())
                continue;
            const auto freq = tally(sub, label, v);
            const int best = max_of(freq);
            // map is ordered by LabelLess, so the first hit is the smallest label
            for (const auto &[l, c] : freq)
                if (c == best) {
                    label[v] = l;
                    break;
                }
        }
        bool stable = true;
        for (const auto &v : order) {
            if (sub.at(v).empty())
                continue;
            const auto freq = tally(sub, label, v);
            const auto it = freq.find(label[v]);
            if (it == freq.end() || it->second != max_of(freq))
                stable = false;
        }
        if (stable)
            break;
    }

    std::map<std::string, std::vector<std::string>> groups;
    LabelCover out;
    for (const auto &v : order) {
        if (sub.at(v).empty()) {
            out.insert({v});
            continue;
        }
        const auto freq = tally(sub, label, v);
        const int best = max_of(freq);
        for (const auto &[l, c] : freq)
            if (c == best)
                groups[l].push_back(v);
    }
    for (auto &[l, members] : groups)
        out.insert(sorted_labels(members));
    return out;
}

LabelCover oracle_local_communities(const Adjacency &adj, const std::string &v, std::size_t t_max) {
    LabelCover out;
    const auto sub = oracle_ego_minus_ego(adj, v);
    if (sub.empty())
        return out;
    for (auto c : oracle_propagate(sub, t_max)) {
        c.push_back(v);
        out.insert(sorted_labels(c));
    }
    return out;
}

LabelCover oracle_max(const std::vector<LabelSet> &sets) {
    std::vector<std::set<std::string>> as_sets;
    for (const auto &s : sets)
        as_sets.emplace_back(s.begin(), s.end());
    LabelCover out;
    for (std::size_t i = 0; i < as_sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < as_sets.size() && !dominated; ++j)
            dominated = as_sets[j].size() > as_sets[i].size() &&
                        std::includes(as_sets[j].begin(), as_sets[j].end(), as_sets[i].begin(), as_sets[i].end());
        if (!dominated)
            out.insert(sets[i]);
    }
    return out;
}

LabelCover oracle_demon(const Graph &g, std::size_t t_max) {
    const auto adj = adjacency_of(g);
    std::vector<LabelSet> all;
    for (const auto &[v, row] : adj)
        for (const auto &c : oracle_local_communities(adj, v, t_max))
            all.push_back(c);
    return oracle_max(all);
}

std::string to_string(const LabelCover &cover) {
    std::ostringstream out;
    out << '{';
    bool first_set = true;
    for (const auto &c : cover) {
        out << (first_set ? "" : ",") << '{';
        first_set = false;
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? "," : "") << c[i];
        out << '}';
    }
    out << '}';
    return out.str();
}

} // namespace demon::testing

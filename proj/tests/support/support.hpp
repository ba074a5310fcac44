#pragma once

// Graph generators and brute-force oracles shared by the unit and acceptance
// tests. The oracles deliberately avoid the library's CSR/id machinery and
// work on labels with std::map/std::set, so they stay independent of the
// code they check.

#include <demon/community.hpp>
#include <demon/graph.hpp>
#include <demon/label_propagation.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace demon::testing {

using LabelSet = std::vector<std::string>;   // sorted with LabelLess
using LabelCover = std::set<LabelSet>;

Graph graph_from_edges(const std::vector<std::pair<int, int>> &edges, const std::vector<int> &isolated = {});

/// G(n, p) over labels prefix+"0" .. prefix+"n-1".
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, const std::string &prefix = "");

/// Appends G(n, p) edges as label pairs; used to assemble multi-component graphs.
std::vector<std::pair<std::string, std::string>> erdos_renyi_edges(std::size_t n, double p, std::uint64_t seed,
                                                                   const std::string &prefix = "");

struct PlantedGraph {
    Graph graph;
    /// Block index per node label.
    std::map<std::string, std::size_t> block_of;
};

PlantedGraph planted_partition(std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                               std::uint64_t seed);

/// Chung-Lu graph with power-law expected degrees (exponent alpha), about m
/// distinct edges, max expected degree n^(1/(alpha-1)).
Graph chung_lu(std::size_t n, std::size_t m, double alpha, std::uint64_t seed);

Graph from_label_edges(const std::vector<std::pair<std::string, std::string>> &edges,
                       const std::vector<std::string> &nodes = {});

LabelSet sorted_labels(std::vector<std::string> labels);
LabelCover as_labels(std::span<const Community> cover, const Graph &g);
LabelCover as_labels(const std::vector<std::vector<std::string>> &sets);

// ---- oracles -------------------------------------------------------------

using Adjacency = std::map<std::string, std::set<std::string>>;

Adjacency adjacency_of(const Graph &g);

/// Ego-minus-ego network built directly from the adjacency map.
Adjacency oracle_ego_minus_ego(const Adjacency &adj, const std::string &v);

/// Label propagation simulated on labels: canonical order, smallest-label ties,
/// tie-membership grouping. Returns the communities as label sets.
LabelCover oracle_propagate(const Adjacency &sub, std::size_t t_max = 100);

/// Local communities of v via the oracle LP on the oracle ego-minus-ego network.
LabelCover oracle_local_communities(const Adjacency &adj, const std::string &v, std::size_t t_max = 100);

/// Max(S): sets not strictly contained in another, by pairwise std::includes.
LabelCover oracle_max(const std::vector<LabelSet> &sets);

/// Max over the union of every node's oracle local communities.
LabelCover oracle_demon(const Graph &g, std::size_t t_max = 100);

std::string to_string(const LabelCover &cover);

} // namespace demon::testing

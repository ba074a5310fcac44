#pragma once

#include <demon/community.hpp>
#include <demon/graph.hpp>
#include <demon/io.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace demon {

struct CoverStats {
    std::size_t community_count = 0;
    /// 0 when the cover is empty; see mean_size_defined.
    double mean_size = 0.0;
    bool mean_size_defined = false;
    std::map<std::size_t, std::size_t> size_histogram;
    /// Fraction of graph nodes in at least one community.
    double node_coverage = 0.0;
    /// Mean number of memberships per covered node.
    double overlap_rate = 0.0;
};

CoverStats cover_stats(std::span<const Community> cover, const Graph &g);

/// |a ∩ b| / |a ∪ b| over sorted attribute lists; 0 when both are empty.
double jaccard(std::span<const std::string> a, std::span<const std::string> b);

inline constexpr std::size_t kDefaultPairSample = 400000;

struct CqReport {
    double cq = 0.0;
    /// |P|: distinct node pairs sharing at least one community.
    std::uint64_t pair_count_P = 0;
    /// Pairs actually scored (|P|, or the sample size).
    std::uint64_t pairs_evaluated = 0;
    std::uint64_t pair_sample_seed = 0;
    bool sampled = false;
    double mean_pair_jaccard = 0.0;
    double mean_edge_jaccard = 0.0;
};

/**
 * Community cohesion: mean attribute Jaccard over node pairs sharing a
 * community, divided by the mean over all edges. 1 means no better than
 * the edges themselves. When |P| exceeds sample_limit a seeded uniform
 * sample of P (without replacement) of that size is scored instead.
 *
 * Throws UndefinedResult when the edge mean is zero (no edges, or no edge
 * joins nodes with shared attributes) or when P is empty.
 */
CqReport community_quality(std::span<const Community> cover, const Graph &g, const AttributeTable &attrs,
                           std::optional<std::uint64_t> sample_limit = kDefaultPairSample,
                           std::uint64_t seed = 0);

struct SubsampledCq {
    double mean_cq = 0.0;
    std::size_t iterations = 0;
    /// Iterations whose CQ was undefined and therefore skipped.
    std::size_t skipped = 0;
    double mean_communities_used = 0.0;
    std::string selection_rule;
};

/**
 * Averages CQ over `iterations` draws of low-overlap sub-covers. Each draw
 * visits the communities in a seeded random order and keeps a community only
 * if none of its nodes was already taken.
 */
SubsampledCq community_quality_subsampled(std::span<const Community> cover, const Graph &g,
                                          const AttributeTable &attrs, std::size_t iterations = 100,
                                          std::optional<std::uint64_t> sample_limit = kDefaultPairSample,
                                          std::uint64_t seed = 0);

/// "size count" lines, ascending by size.
void write_size_distribution(std::span<const Community> cover, std::ostream &out);
void size_distribution_export(std::span<const Community> cover, const std::filesystem::path &path);

} // namespace demon

#include <demon/metrics.hpp>

#include <demon/error.hpp>
#include <demon/random.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace demon {

CoverStats cover_stats(std::span<const Community> cover, const Graph &g) {
    CoverStats s;
    s.community_count = cover.size();
    std::size_t memberships = 0;
    std::vector<bool> covered(g.node_count(), false);
    std::size_t covered_count = 0;
    for (const auto &c : cover) {
        ++s.size_histogram[c.size()];
        memberships += c.size();
        for (NodeId v : c) {
            if (!g.contains(v))
                throw DomainError("cover references node id " + std::to_string(v) + " outside the graph");
            if (!covered[v]) {
                covered[v] = true;
                ++covered_count;
            }
        }
    }
    if (!cover.empty()) {
        s.mean_size = static_cast<double>(memberships) / static_cast<double>(cover.size());
        s.mean_size_defined = true;
    }
    if (g.node_count() > 0)
        s.node_coverage = static_cast<double>(covered_count) / static_cast<double>(g.node_count());
    if (covered_count > 0)
        s.overlap_rate = static_cast<double>(memberships) / static_cast<double>(covered_count);
    return s;
}

namespace {

template <typename T>
double sorted_jaccard(std::span<const T> a, std::span<const T> b) {
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    const auto total = a.size() + b.size() - common;
    return total == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(total);
}

} // namespace

double jaccard(std::span<const std::string> a, std::span<const std::string> b) {
    return sorted_jaccard<std::string>(a, b);
}

namespace {

// Attribute strings interned to sorted integer ids per node.
class InternedAttributes {
public:
    InternedAttributes(const Graph &g, const AttributeTable &attrs) : sets_(g.node_count()) {
        std::unordered_map<std::string, std::uint32_t> ids;
        for (const auto &[v, list] : attrs.entries()) {
            if (!g.contains(v))
                continue;
            auto &out = sets_[v];
            for (const auto &a : list)
                out.push_back(ids.try_emplace(a, static_cast<std::uint32_t>(ids.size())).first->second);
            std::sort(out.begin(), out.end());
        }
    }

    double similarity(NodeId u, NodeId v) const { return sorted_jaccard<std::uint32_t>(sets_[u], sets_[v]); }

private:
    std::vector<std::vector<std::uint32_t>> sets_;
};

// Enumerates P = {(u,v) : u < v share a community} as, for each u ascending,
// its partners v > u ascending. Stops early if fn returns false.
class PairEnumerator {
public:
    PairEnumerator(std::span<const Community> cover, std::size_t n) : member_of_(n), stamp_(n, 0) {
        for (std::uint32_t c = 0; c < cover.size(); ++c)
            for (NodeId v : cover[c])
                member_of_[v].push_back(c);
        cover_ = cover;
    }

    template <typename Fn>
    void for_each(Fn &&fn) {
        std::vector<NodeId> partners;
        for (NodeId u = 0; u < member_of_.size(); ++u) {
            if (member_of_[u].empty())
                continue;
            partners.clear();
            const auto tag = u + 1;
            for (auto c : member_of_[u])
                for (NodeId v : cover_[c])
                    if (v > u && stamp_[v] != tag) {
                        stamp_[v] = tag;
                        partners.push_back(v);
                    }
            std::sort(partners.begin(), partners.end());
            for (NodeId v : partners)
                fn(u, v);
        }
        std::fill(stamp_.begin(), stamp_.end(), 0);
    }

private:
    std::span<const Community> cover_;
    std::vector<std::vector<std::uint32_t>> member_of_;
    std::vector<std::uint32_t> stamp_;
};

// k distinct values from [0, n), sorted (Floyd's algorithm).
std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t k, Rng &rng) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(k);
    for (std::uint64_t j = n - k; j < n; ++j) {
        const auto t = uniform_below(rng, j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CqReport community_quality(std::span<const Community> cover, const Graph &g, const AttributeTable &attrs,
                           std::optional<std::uint64_t> sample_limit, std::uint64_t seed) {
    for (const auto &c : cover)
        for (NodeId v : c)
            if (!g.contains(v))
                throw DomainError("cover references node id " + std::to_string(v) + " outside the graph");
    if (sample_limit && *sample_limit == 0)
        throw DomainError("sample limit must be positive");

    const InternedAttributes qa(g, attrs);
    CqReport report;
    report.pair_sample_seed = seed;

    if (g.edge_count() == 0)
        throw UndefinedResult("CQ undefined: graph has no edges");
    double edge_sum = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v)
                edge_sum += qa.similarity(u, v);
    if (edge_sum == 0.0)
        throw UndefinedResult("CQ undefined: attribute Jaccard is zero on every edge");
    report.mean_edge_jaccard = edge_sum / static_cast<double>(g.edge_count());

    PairEnumerator pairs(cover, g.node_count());
    std::uint64_t total = 0;
    double pair_sum = 0.0;
    pairs.for_each([&](NodeId u, NodeId v) {
        ++total;
        pair_sum += qa.similarity(u, v);
    });
    report.pair_count_P = total;
    if (total == 0)
        throw UndefinedResult("CQ undefined: no node pair shares a community");

    if (sample_limit && total > *sample_limit) {
        Rng rng(seed);
        const auto picks = sample_indices(total, *sample_limit, rng);
        std::uint64_t index = 0;
        std::size_t next = 0;
        pair_sum = 0.0;
        pairs.for_each([&](NodeId u, NodeId v) {
            if (next < picks.size() && picks[next] == index) {
                pair_sum += qa.similarity(u, v);
                ++next;
            }
            ++index;
        });
        report.sampled = true;
        report.pairs_evaluated = picks.size();
    } else {
        report.pairs_evaluated = total;
    }
    report.mean_pair_jaccard = pair_sum / static_cast<double>(report.pairs_evaluated);
    report.cq = report.mean_pair_jaccard / report.mean_edge_jaccard;
    return report;
}

SubsampledCq community_quality_subsampled(std::span<const Community> cover, const Graph &g,
                                          const AttributeTable &attrs, std::size_t iterations,
                                          std::optional<std::uint64_t> sample_limit, std::uint64_t seed) {
    SubsampledCq out;
    out.selection_rule = "random-order greedy, skip communities touching an already selected node";
    Rng rng(seed);
    std::vector<std::size_t> order(cover.size());
    std::vector<bool> taken(g.node_count());
    double cq_sum = 0.0;
    double used_sum = 0.0;
    for (std::size_t it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        shuffle(std::span(order), rng);
        std::fill(taken.begin(), taken.end(), false);
        std::vector<Community> chosen;
        for (auto i : order) {
            const auto &c = cover[i];
            if (std::any_of(c.begin(), c.end(), [&](NodeId v) { return taken[v]; }))
                continue;
            for (NodeId v : c)
                taken[v] = true;
            chosen.push_back(c);
        }
        try {
            cq_sum += community_quality(chosen, g, attrs, sample_limit, rng()).cq;
            used_sum += static_cast<double>(chosen.size());
            ++out.iterations;
        } catch (const UndefinedResult &) {
            ++out.skipped;
        }
    }
    if (out.iterations == 0)
        throw UndefinedResult("CQ undefined on every subsampled cover");
    out.mean_cq = cq_sum / static_cast<double>(out.iterations);
    out.mean_communities_used = used_sum / static_cast<double>(out.iterations);
    return out;
}

void write_size_distribution(std::span<const Community> cover, std::ostream &out) {
    std::map<std::size_t, std::size_t> histogram;
    for (const auto &c : cover)
        ++histogram[c.size()];
    for (auto [size, count] : histogram)
        out << size << ' ' << count << '\n';
}

void size_distribution_export(std::span<const Community> cover, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_size_distribution(cover, out);
    if (!out)
        throw IoError("write error on '" + path.string() + "'");
}

} // namespace demon

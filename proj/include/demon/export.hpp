#pragma once

#include <demon/community.hpp>
#include <demon/graph.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace demon {

/// One row per community: member labels in canonical order, rows sorted
/// lexicographically under the same order. This is the on-disk cover order.
std::vector<std::vector<std::string>> cover_rows(std::span<const Community> cover, const Graph &g);

/// Communities with at least min_size members.
std::vector<Community> filter_min_size(std::span<const Community> cover, std::size_t min_size);

/// Space-separated labels, one community per line.
void write_cover(std::span<const Community> cover, const Graph &g, std::ostream &out);
void save_cover(std::span<const Community> cover, const Graph &g, const std::filesystem::path &path);

/// Reads the text format back. Unknown labels raise ParseError.
std::vector<Community> read_cover(std::istream &in, const Graph &g, const std::string &source = "<stream>");
std::vector<Community> load_cover(const std::filesystem::path &path, const Graph &g);

struct RunMetadata {
    double epsilon = 0.0;
    std::size_t t_max = 100;
    std::size_t min_size = 1;
};

/// Structured export: run metadata, counts and the rows of cover_rows().
void write_cover_json(std::span<const Community> cover, const Graph &g, const RunMetadata &meta,
                      std::ostream &out);

} // namespace demon

#pragma once

#include <demon/graph.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace demon {

struct EdgeListReport {
    BuildReport build;
    /// Lines that carried extra columns (weights, directions); the extras were ignored.
    std::size_t extra_column_lines = 0;
};

/**
 * Reads a whitespace-separated edge list: two node labels per line, '#'
 * starts a comment, blank lines are skipped. Self-loops and duplicate edges
 * are dropped but their endpoints still become nodes. Columns past the
 * second are ignored and counted in the report.
 */
Graph load_edge_list(const std::filesystem::path &path, EdgeListReport *report = nullptr);
Graph read_edge_list(std::istream &in, const std::string &source = "<stream>",
                     EdgeListReport *report = nullptr);

/// Writes every edge once, in canonical label order. Isolated nodes are written
/// as "v v" so that reloading restores them.
void write_edge_list(const Graph &g, std::ostream &out);
void save_edge_list(const Graph &g, const std::filesystem::path &path);

/// Qualitative attributes per node (QA(n)). Nodes without an entry have none.
class AttributeTable {
public:
    void set(NodeId v, std::vector<std::string> attributes);
    /// Sorted, de-duplicated attributes of v; empty when v has no entry.
    std::span<const std::string> of(NodeId v) const;
    bool has(NodeId v) const { return table_.count(v) > 0; }
    std::size_t size() const noexcept { return table_.size(); }
    const std::map<NodeId, std::vector<std::string>> &entries() const noexcept { return table_; }

private:
    std::map<NodeId, std::vector<std::string>> table_;
};

struct AttributeLoadResult {
    AttributeTable table;
    /// One message per line whose node label is not in the graph.
    std::vector<std::string> warnings;
};

/// Reads "label|attr1,attr2,..." lines. Unknown labels produce warnings.
AttributeLoadResult load_attributes(const std::filesystem::path &path, const Graph &g);
AttributeLoadResult read_attributes(std::istream &in, const Graph &g,
                                    const std::string &source = "<stream>");

/// Splits on ASCII whitespace.
std::vector<std::string> split_ws(const std::string &line);

} // namespace demon

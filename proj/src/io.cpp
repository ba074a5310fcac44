#include <demon/io.hpp>

#include <demon/error.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace demon {

std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        tokens.push_back(std::move(tok));
    return tokens;
}

namespace {

std::string strip_comment(const std::string &line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

} // namespace

Graph read_edge_list(std::istream &in, const std::string &source, EdgeListReport *report) {
    GraphBuilder builder;
    EdgeListReport local;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(strip_comment(line));
        if (tokens.empty())
            continue;
        if (tokens.size() < 2)
            throw ParseError(source, line_no, "expected two node labels, got '" + trim(line) + "'");
        if (tokens.size() > 2)
            ++local.extra_column_lines;
        builder.add_edge(tokens[0], tokens[1]);
    }
    if (in.bad())
        throw IoError("read error on " + source);
    local.build = builder.report();
    if (report)
        *report = local;
    return builder.build();
}

Graph load_edge_list(const std::filesystem::path &path, EdgeListReport *report) {
    auto in = open_input(path);
    return read_edge_list(in, path.string(), report);
}

void write_edge_list(const Graph &g, std::ostream &out) {
    for (NodeId u : g.canonical_order()) {
        if (g.degree(u) == 0) {
            out << g.label(u) << ' ' << g.label(u) << '\n';
            continue;
        }
        std::vector<NodeId> later;
        for (NodeId v : g.neighbors(u))
            if (g.rank(v) > g.rank(u))
                later.push_back(v);
        std::sort(later.begin(), later.end(), [&](NodeId a, NodeId b) { return g.rank(a) < g.rank(b); });
        for (NodeId v : later)
            out << g.label(u) << ' ' << g.label(v) << '\n';
    }
}

void save_edge_list(const Graph &g, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_edge_list(g, out);
    if (!out)
        throw IoError("write error on '" + path.string() + "'");
}

void AttributeTable::set(NodeId v, std::vector<std::string> attributes) {
    std::sort(attributes.begin(), attributes.end());
    attributes.erase(std::unique(attributes.begin(), attributes.end()), attributes.end());
    table_[v] = std::move(attributes);
}

std::span<const std::string> AttributeTable::of(NodeId v) const {
    const auto it = table_.find(v);
    if (it == table_.end())
        return {};
    return it->second;
}

AttributeLoadResult read_attributes(std::istream &in, const Graph &g, const std::string &source) {
    AttributeLoadResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        const auto bar = body.find('|');
        if (bar == std::string::npos)
            throw ParseError(source, line_no, "expected 'label|attr,...'");
        const auto label = trim(std::string_view(body).substr(0, bar));
        if (label.empty())
            throw ParseError(source, line_no, "empty node label");

        std::vector<std::string> attrs;
        std::istringstream list(body.substr(bar + 1));
        std::string item;
        while (std::getline(list, item, ',')) {
            auto a = trim(item);
            if (!a.empty())
                attrs.push_back(std::move(a));
        }

        const auto v = g.find(label);
        if (!v) {
            result.warnings.push_back(source + ":" + std::to_string(line_no) + ": unknown node '" + label + "'");
            continue;
        }
        // repeated lines for the same node accumulate
        const auto existing = result.table.of(*v);
        attrs.insert(attrs.end(), existing.begin(), existing.end());
        result.table.set(*v, std::move(attrs));
    }
    if (in.bad())
        throw IoError("read error on " + source);
    return result;
}

AttributeLoadResult load_attributes(const std::filesystem::path &path, const Graph &g) {
    auto in = open_input(path);
    return read_attributes(in, g, path.string());
}

} // namespace demon

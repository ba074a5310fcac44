#include <demon/export.hpp>

#include <demon/error.hpp>
#include <demon/io.hpp>
#include <demon/label_order.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace demon {

std::vector<std::vector<std::string>> cover_rows(std::span<const Community> cover, const Graph &g) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(cover.size());
    for (const auto &c : cover)
        rows.push_back(member_labels(c, g));
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
    });
    return rows;
}

std::vector<Community> filter_min_size(std::span<const Community> cover, std::size_t min_size) {
    std::vector<Community> out;
    for (const auto &c : cover)
        if (c.size() >= min_size)
            out.push_back(c);
    return out;
}

void write_cover(std::span<const Community> cover, const Graph &g, std::ostream &out) {
    for (const auto &row : cover_rows(cover, g)) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << '\n';
    }
}

void save_cover(std::span<const Community> cover, const Graph &g, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_cover(cover, g, out);
    if (!out)
        throw IoError("write error on '" + path.string() + "'");
}

std::vector<Community> read_cover(std::istream &in, const Graph &g, const std::string &source) {
    std::vector<Community> cover;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line.substr(0, line.find('#')));
        if (tokens.empty())
            continue;
        std::vector<NodeId> members;
        members.reserve(tokens.size());
        for (const auto &label : tokens) {
            const auto v = g.find(label);
            if (!v)
                throw ParseError(source, line_no, "unknown node '" + label + "'");
            members.push_back(*v);
        }
        cover.emplace_back(std::move(members));
    }
    if (in.bad())
        throw IoError("read error on " + source);
    return cover;
}

std::vector<Community> load_cover(const std::filesystem::path &path, const Graph &g) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return read_cover(in, g, path.string());
}

void write_cover_json(std::span<const Community> cover, const Graph &g, const RunMetadata &meta,
                      std::ostream &out) {
    nlohmann::json doc;
    doc["epsilon"] = meta.epsilon;
    doc["t_max"] = meta.t_max;
    doc["min_size"] = meta.min_size;
    doc["node_count"] = g.node_count();
    doc["edge_count"] = g.edge_count();
    doc["community_count"] = cover.size();
    doc["communities"] = cover_rows(cover, g);
    out << doc.dump(1) << '\n';
}

} // namespace demon

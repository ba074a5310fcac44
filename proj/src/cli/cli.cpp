#include <demon/cli.hpp>

#include <demon/demon.hpp>
#include <demon/error.hpp>
#include <demon/export.hpp>
#include <demon/incremental.hpp>
#include <demon/io.hpp>
#include <demon/metrics.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;

namespace demon::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string attrs;
    double epsilon = 0.0;
    std::vector<double> epsilon_sweep;
    std::size_t t_max = 100;
    std::size_t min_size = 1;
    std::string out_dir;
    std::uint64_t seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::ofstream open_out(const fs::path &path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

void write_kv(const fs::path &path, const KeyValues &kv) {
    auto out = open_out(path);
    for (const auto &[k, v] : kv)
        out << k << '=' << v << '\n';
}

KeyValues stats_kv(const CoverStats &s, const Graph &g, const RunMetadata &meta) {
    return {
        {"epsilon", format_double(meta.epsilon)},
        {"t_max", std::to_string(meta.t_max)},
        {"min_size", std::to_string(meta.min_size)},
        {"node_count", std::to_string(g.node_count())},
        {"edge_count", std::to_string(g.edge_count())},
        {"community_count", std::to_string(s.community_count)},
        {"mean_size", format_double(s.mean_size)},
        {"mean_size_defined", s.mean_size_defined ? "true" : "false"},
        {"node_coverage", format_double(s.node_coverage)},
        {"overlap_rate", format_double(s.overlap_rate)},
    };
}

void write_stats_report(const fs::path &path, const CoverStats &s, const Graph &g, const RunMetadata &meta) {
    auto out = open_out(path);
    out << "nodes            " << g.node_count() << '\n'
        << "edges            " << g.edge_count() << '\n'
        << "epsilon          " << format_double(meta.epsilon) << '\n'
        << "t_max            " << meta.t_max << '\n'
        << "min_size         " << meta.min_size << '\n'
        << "communities      " << s.community_count << '\n'
        << "mean size        " << (s.mean_size_defined ? format_double(s.mean_size) : "undefined") << '\n'
        << "node coverage    " << format_double(s.node_coverage) << '\n'
        << "overlap rate     " << format_double(s.overlap_rate) << '\n'
        << "size histogram (size count)\n";
    for (auto [size, count] : s.size_histogram)
        out << "  " << size << ' ' << count << '\n';
}

/// Writes every artifact of a finished run into dir and returns the stats of the exported cover.
CoverStats write_run(const fs::path &dir, const Graph &g, const CommunityCover &cover, const RunMetadata &meta) {
    fs::create_directories(dir);
    const auto all = cover.communities();
    const auto kept = filter_min_size(all, meta.min_size);

    save_edge_list(g, dir / "graph.edges");
    save_cover(all, g, dir / "cover.full.txt");
    save_cover(kept, g, dir / "cover.txt");
    {
        auto out = open_out(dir / "cover.json");
        write_cover_json(kept, g, meta, out);
    }
    {
        nlohmann::json run;
        run["epsilon"] = meta.epsilon;
        run["t_max"] = meta.t_max;
        run["min_size"] = meta.min_size;
        auto out = open_out(dir / "run.json");
        out << run.dump(1) << '\n';
    }
    size_distribution_export(kept, dir / "size_distribution.txt");
    const auto stats = cover_stats(kept, g);
    write_stats_report(dir / "stats.txt", stats, g, meta);
    write_kv(dir / "stats.kv", stats_kv(stats, g, meta));
    return stats;
}

Graph load_graph(const std::string &path, std::ostream &err) {
    EdgeListReport report;
    Graph g = load_edge_list(path, &report);
    if (report.build.self_loops_dropped || report.build.duplicate_edges_dropped)
        err << "note: dropped " << report.build.self_loops_dropped << " self-loop(s) and "
            << report.build.duplicate_edges_dropped << " duplicate edge(s) from " << path << '\n';
    if (report.extra_column_lines)
        err << "warning: ignored extra columns (weights/directions) on " << report.extra_column_lines
            << " line(s) of " << path << '\n';
    return g;
}

KeyValues cq_kv(const CqReport &report) {
    return {
        {"cq", format_double(report.cq)},
        {"pair_count_P", std::to_string(report.pair_count_P)},
        {"pairs_evaluated", std::to_string(report.pairs_evaluated)},
        {"sampled", report.sampled ? "true" : "false"},
        {"pair_sample_seed", std::to_string(report.pair_sample_seed)},
        {"mean_pair_jaccard", format_double(report.mean_pair_jaccard)},
        {"mean_edge_jaccard", format_double(report.mean_edge_jaccard)},
    };
}

/// Writes cq.kv for the exported cover of a discover run; an undefined score is recorded, not fatal.
void write_run_cq(const fs::path &dir, const Graph &g, const CommunityCover &cover, const AttributeTable &attrs,
                  const RunConfig &cfg, std::ostream &err) {
    const auto kept = filter_min_size(cover.communities(), cfg.min_size);
    KeyValues kv;
    try {
        kv = cq_kv(community_quality(kept, g, attrs, kDefaultPairSample, cfg.seed));
    } catch (const UndefinedResult &e) {
        err << "warning: " << e.what() << '\n';
        kv = {{"cq", "undefined"}};
    }
    write_kv(dir / "cq.kv", kv);
}

std::optional<AttributeTable> load_attrs_if_given(const RunConfig &cfg, const Graph &g, std::ostream &err) {
    if (cfg.attrs.empty())
        return std::nullopt;
    auto loaded = load_attributes(cfg.attrs, g);
    for (const auto &w : loaded.warnings)
        err << "warning: " << w << '\n';
    return std::move(loaded.table);
}

std::string sweep_dir_name(double eps) { return "eps_" + format_double(eps); }

int cmd_discover(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const Graph g = load_graph(cfg.input, err);
    const LpConfig lp{cfg.t_max};
    const DemonOptions opts{cfg.workers, {}};
    const auto attrs = load_attrs_if_given(cfg, g, err);

    if (cfg.epsilon_sweep.empty()) {
        const auto cover = demon(g, Epsilon(cfg.epsilon), lp, CommunityCover{}, opts);
        const RunMetadata meta{cfg.epsilon, cfg.t_max, cfg.min_size};
        const auto stats = write_run(cfg.out_dir, g, cover, meta);
        if (attrs)
            write_run_cq(cfg.out_dir, g, cover, *attrs, cfg, err);
        out << "communities " << stats.community_count << " mean_size " << format_double(stats.mean_size)
            << " -> " << cfg.out_dir << '\n';
        return kOk;
    }

    fs::create_directories(cfg.out_dir);
    auto summary = open_out(fs::path(cfg.out_dir) / "sweep_summary.txt");
    summary << "# epsilon community_count mean_size\n";
    for (double eps : cfg.epsilon_sweep) {
        const auto cover = demon(g, Epsilon(eps), lp, CommunityCover{}, opts);
        const RunMetadata meta{eps, cfg.t_max, cfg.min_size};
        const fs::path dir = fs::path(cfg.out_dir) / sweep_dir_name(eps);
        const auto stats = write_run(dir, g, cover, meta);
        if (attrs)
            write_run_cq(dir, g, cover, *attrs, cfg, err);
        summary << format_double(eps) << ' ' << stats.community_count << ' ' << format_double(stats.mean_size)
                << '\n';
        out << "epsilon " << format_double(eps) << " communities " << stats.community_count << '\n';
    }
    return kOk;
}

RunMetadata read_run_metadata(const fs::path &dir) {
    std::ifstream in(dir / "run.json");
    if (!in)
        throw IoError("no previous run found in '" + dir.string() + "' (run.json missing)");
    const auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("epsilon") || !doc.contains("t_max"))
        throw IoError("malformed run.json in '" + dir.string() + "'");
    RunMetadata meta;
    meta.epsilon = doc["epsilon"].get<double>();
    meta.t_max = doc["t_max"].get<std::size_t>();
    meta.min_size = doc.value("min_size", std::size_t{1});
    return meta;
}

int cmd_update(const RunConfig &cfg, const std::vector<std::string> &deltas, bool eps_given, bool tmax_given,
               bool min_size_given, std::ostream &out, std::ostream &err) {
    const fs::path dir = cfg.out_dir;
    auto meta = read_run_metadata(dir);
    if (eps_given && cfg.epsilon != meta.epsilon)
        throw UsageError("--epsilon differs from the previous run (" + format_double(meta.epsilon) + ")");
    if (tmax_given && cfg.t_max != meta.t_max)
        throw UsageError("--t-max differs from the previous run (" + std::to_string(meta.t_max) + ")");
    if (min_size_given)
        meta.min_size = cfg.min_size;

    Graph g = load_graph((dir / "graph.edges").string(), err);
    const Epsilon eps(meta.epsilon);
    CommunityCover cover(eps);
    for (auto &c : load_cover(dir / "cover.full.txt", g))
        cover.merge(std::move(c));

    const LpConfig lp{meta.t_max};
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        const auto delta = load_delta(deltas[k], g);
        const auto affected = affected_nodes(g, delta).size();
        auto result = demon_incremental(g, delta, std::move(cover), eps, lp, cfg.workers);
        g = std::move(result.graph);
        cover = std::move(result.cover);

        const auto kept = filter_min_size(cover.communities(), meta.min_size);
        const auto stats = cover_stats(kept, g);
        auto kv = stats_kv(stats, g, meta);
        kv.insert(kv.begin(), {{"batch", std::to_string(k + 1)},
                               {"delta", deltas[k]},
                               {"new_nodes", std::to_string(delta.new_nodes.size())},
                               {"new_edges", std::to_string(delta.new_edges.size())},
                               {"affected_nodes", std::to_string(affected)}});
        write_kv(dir / ("batch_" + std::to_string(k + 1) + ".stats.kv"), kv);
        out << "batch " << k + 1 << " new_nodes " << delta.new_nodes.size() << " new_edges "
            << delta.new_edges.size() << " affected " << affected << " communities " << stats.community_count
            << '\n';
    }
    write_run(dir, g, cover, meta);
    return kOk;
}

struct EvalOptions {
    std::string cover;
    std::uint64_t sample_limit = kDefaultPairSample;
    std::size_t subsample_iterations = 0;
    bool bundle = false;
};

void write_bundle(const fs::path &dir, std::span<const Community> cover, const Graph &g,
                  const AttributeTable &attrs) {
    fs::create_directories(dir);
    const auto rows = cover_rows(cover, g);
    {
        auto out = open_out(dir / "membership.txt");
        for (std::size_t id = 0; id < rows.size(); ++id)
            for (const auto &label : rows[id])
                out << label << ' ' << id << '\n';
    }
    {
        auto out = open_out(dir / "labels.txt");
        for (NodeId v : g.canonical_order()) {
            out << g.label(v) << '|';
            const auto list = attrs.of(v);
            for (std::size_t i = 0; i < list.size(); ++i)
                out << (i ? "," : "") << list[i];
            out << '\n';
        }
    }
    nlohmann::json manifest;
    manifest["community_count"] = rows.size();
    manifest["node_count"] = g.node_count();
    manifest["membership"] = "membership.txt";
    manifest["labels"] = "labels.txt";
    auto out = open_out(dir / "manifest.json");
    out << manifest.dump(1) << '\n';
}

int cmd_eval(const RunConfig &cfg, const EvalOptions &opt, std::ostream &out, std::ostream &err) {
    const Graph g = load_graph(cfg.input, err);
    auto loaded = load_attributes(cfg.attrs, g);
    for (const auto &w : loaded.warnings)
        err << "warning: " << w << '\n';
    const auto cover = filter_min_size(load_cover(opt.cover, g), cfg.min_size);
    const std::optional<std::uint64_t> limit =
        opt.sample_limit == 0 ? std::nullopt : std::optional<std::uint64_t>(opt.sample_limit);

    const auto report = community_quality(cover, g, loaded.table, limit, cfg.seed);
    KeyValues kv = cq_kv(report);
    kv.emplace_back("community_count", std::to_string(cover.size()));
    kv.emplace_back("min_size", std::to_string(cfg.min_size));
    if (opt.subsample_iterations > 0) {
        const auto sub = community_quality_subsampled(cover, g, loaded.table, opt.subsample_iterations, limit,
                                                      cfg.seed);
        kv.emplace_back("subsampled_cq", format_double(sub.mean_cq));
        kv.emplace_back("subsample_iterations", std::to_string(sub.iterations));
        kv.emplace_back("subsample_skipped", std::to_string(sub.skipped));
        kv.emplace_back("subsample_mean_communities", format_double(sub.mean_communities_used));
        kv.emplace_back("subsample_rule", sub.selection_rule);
    }

    for (const auto &[k, v] : kv)
        out << k << '=' << v << '\n';
    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        write_kv(fs::path(cfg.out_dir) / "cq.kv", kv);
        auto txt = open_out(fs::path(cfg.out_dir) / "cq.txt");
        txt << "community quality (CQ)  " << format_double(report.cq) << '\n'
            << "pairs sharing a community  " << report.pair_count_P
            << (report.sampled ? " (sampled " + std::to_string(report.pairs_evaluated) + ")" : "") << '\n'
            << "mean pair jaccard  " << format_double(report.mean_pair_jaccard) << '\n'
            << "mean edge jaccard  " << format_double(report.mean_edge_jaccard) << '\n';
        if (opt.bundle)
            write_bundle(fs::path(cfg.out_dir) / "bundle", cover, g, loaded.table);
    } else if (opt.bundle) {
        throw UsageError("--bundle requires --out-dir");
    }
    return kOk;
}

void add_common(CLI::App &cmd, RunConfig &cfg) {
    cmd.add_option("--t-max", cfg.t_max, "Label propagation round cap")->check(CLI::PositiveNumber);
    cmd.add_option("--min-size", cfg.min_size, "Smallest community size written to exports")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--workers", cfg.workers, "Worker threads for the per-node phase")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", cfg.seed, "Seed for sampled metrics");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Overlapping community discovery from ego-minus-ego label propagation", "demon"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> deltas;
    EvalOptions eval;

    auto *discover = app.add_subcommand("discover", "Compute a community cover from an edge list");
    discover->add_option("--input", cfg.input, "Edge list")->required()->check(CLI::ExistingFile);
    discover->add_option("--attrs", cfg.attrs, "Attribute file (label|a,b,...); adds cq.kv to the run")
        ->check(CLI::ExistingFile);
    discover->add_option("--epsilon", cfg.epsilon, "Merge tolerance in [0,1]")->check(CLI::Range(0.0, 1.0));
    discover->add_option("--epsilon-sweep", cfg.epsilon_sweep, "Comma-separated epsilon values")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    discover->add_option("--out-dir", cfg.out_dir, "Output directory")->required();
    add_common(*discover, cfg);

    auto *update = app.add_subcommand("update", "Apply delta edge lists to a previous run in --out-dir");
    auto *upd_eps = update->add_option("--epsilon", cfg.epsilon, "Must match the previous run")
                        ->check(CLI::Range(0.0, 1.0));
    update->add_option("--out-dir", cfg.out_dir, "Directory of the previous run")->required();
    update->add_option("deltas", deltas, "Delta edge lists, applied in order")->check(CLI::ExistingFile);
    update->add_option("--input", cfg.input, "Ignored; the graph is read from --out-dir");
    add_common(*update, cfg);

    auto *evaluate = app.add_subcommand("eval", "Community quality of a cover against node attributes");
    evaluate->add_option("--input", cfg.input, "Edge list")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--attrs", cfg.attrs, "Attribute file (label|a,b,...)")->required();
    evaluate->add_option("--cover", eval.cover, "Cover file, one community per line")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--out-dir", cfg.out_dir, "Where to write cq.kv, cq.txt and the bundle");
    evaluate->add_option("--sample-limit", eval.sample_limit, "Max community pairs scored (0 = all)");
    evaluate->add_option("--subsample-iterations", eval.subsample_iterations,
                         "Also average CQ over this many low-overlap sub-covers");
    evaluate->add_flag("--bundle", eval.bundle, "Write the prediction input bundle");
    evaluate->add_option("--min-size", cfg.min_size, "Smallest community size scored")->check(CLI::PositiveNumber);
    evaluate->add_option("--seed", cfg.seed, "Seed for pair sampling and subsampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*discover)
            return cmd_discover(cfg, out, err);
        if (*update) {
            auto *tmax = update->get_option("--t-max");
            auto *min_size = update->get_option("--min-size");
            return cmd_update(cfg, deltas, upd_eps->count() > 0, tmax->count() > 0, min_size->count() > 0,
                              out, err);
        }
        return cmd_eval(cfg, eval, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const UndefinedResult &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const fs::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

} // namespace demon::cli

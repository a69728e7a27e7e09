#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ie/analysis.hpp"
#include "ie/entropy.hpp"
#include "ie/extremal.hpp"
#include "ie/io.hpp"

namespace {

struct RunConfig {
    std::vector<std::string> paths;
    std::string reference = "center";
    std::string format = "json";
    std::string eps_variant = "center";
    std::string h21_normalization = "row";
    double tolerance = 1e-9;
    bool distinctness = false;
    int tree_size = 0;
};

ie::EstimatorOptions estimator_options(const RunConfig& cfg, bool auto_bn,
                                       const ie::Graph& g) {
    ie::EstimatorOptions opts;
    opts.reference = cfg.reference == "bn" || (auto_bn && g.base_node)
                         ? ie::Reference::BaseNode
                         : ie::Reference::Center;
    opts.eps_variant = cfg.eps_variant == "per-vertex" ? ie::EpsVariant::PerVertex
                                                       : ie::EpsVariant::Center;
    opts.h21_normalization = cfg.h21_normalization == "global"
                                 ? ie::H21Normalization::Global
                                 : ie::H21Normalization::Row;
    return opts;
}

ie::OutputFormat output_format(const RunConfig& cfg) {
    if (cfg.format == "csv") return ie::OutputFormat::Csv;
    if (cfg.format == "table") return ie::OutputFormat::Table;
    return ie::OutputFormat::Json;
}

int cmd_estimate(const RunConfig& cfg) {
    const auto fmt = output_format(cfg);
    int failures = 0;
    if (fmt == ie::OutputFormat::Csv) std::cout << ie::ie_csv_header() << '\n';
    for (const auto& path : cfg.paths) {
        try {
            auto g = ie::load_graph(path);
            ie::ensure_valid(g);
            auto v = ie::ie_vector(g, estimator_options(cfg, true, g));
            std::cout << ie::render_ie(v, path, fmt) << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << path << ": " << e.what() << '\n';
        }
    }
    if (failures) std::cerr << failures << " of " << cfg.paths.size() << " inputs failed\n";
    return failures ? 2 : 0;
}

int cmd_rank(const RunConfig& cfg) {
    std::vector<ie::Graph> graphs;
    for (const auto& path : cfg.paths) {
        auto g = ie::load_graph(path);
        ie::ensure_valid(g);
        graphs.push_back(std::move(g));
    }
    auto ranking = ie::rank_structures(graphs, cfg.tolerance);
    const auto fmt = output_format(cfg);
    if (fmt == ie::OutputFormat::Csv) std::cout << "rank," << ie::ie_csv_header() << '\n';
    for (std::size_t r = 0; r < ranking.size(); ++r) {
        const auto& entry = ranking[r];
        const auto& name = cfg.paths[entry.graph_id];
        if (fmt == ie::OutputFormat::Csv)
            std::cout << r + 1 << ',' << ie::ie_csv_row(entry.ie, name) << '\n';
        else if (fmt == ie::OutputFormat::Json)
            std::cout << "{\"rank\":" << r + 1 << ",\"entry\":"
                      << ie::render_ie(entry.ie, name, fmt) << "}\n";
        else
            std::cout << "#" << r + 1 << " " << ie::render_ie(entry.ie, name, fmt) << '\n';
    }
    return 0;
}

int cmd_bn_sweep(const RunConfig& cfg) {
    auto g = ie::load_graph(cfg.paths.front());
    ie::ensure_valid(g);
    auto rep = ie::bn_sweep(g, cfg.tolerance);
    const auto fmt = output_format(cfg);
    if (fmt == ie::OutputFormat::Csv) std::cout << ie::ie_csv_header() << '\n';
    for (std::size_t v = 0; v < rep.per_vertex.size(); ++v)
        std::cout << ie::render_ie(rep.per_vertex[v], "bn=" + std::to_string(v), fmt)
                  << '\n';
    std::cout << "argmin_Hm=" << rep.argmin_amplitude << " argmin_H1=" << rep.argmin_h1
              << " argmin_H2=" << rep.argmin_h2 << " center=" << rep.center
              << " distance_to_center=" << rep.argmin_distance_to_center
              << " center_attains_min=" << (rep.center_attains_min ? "yes" : "no")
              << '\n';
    return 0;
}

int cmd_enumerate_trees(const RunConfig& cfg) {
    if (cfg.distinctness) {
        auto rep = ie::distinctness_experiment(cfg.tree_size, cfg.tolerance);
        std::cout << rep.tree_count << " trees, " << rep.partition_count
                  << " partitions, " << rep.distinct_count << " distinct IE vectors\n";
        const auto fmt = output_format(cfg);
        if (fmt == ie::OutputFormat::Csv) std::cout << ie::ie_csv_header() << '\n';
        for (std::size_t i = 0; i < rep.vectors.size(); ++i)
            std::cout << ie::render_ie(rep.vectors[i], "tree" + std::to_string(i), fmt)
                      << '\n';
        for (const auto& c : rep.collisions)
            std::cout << "collision: tree" << c.first << " ~ tree" << c.second << '\n';
        return 0;
    }
    auto trees = ie::enumerate_trees(cfg.tree_size);
    std::set<std::vector<int>> partitions;
    for (const auto& t : trees) partitions.insert(ie::degree_partition(t).parts);
    std::cout << trees.size() << " trees, " << partitions.size() << " partitions\n";
    for (const auto& t : trees) {
        std::cout << t.vertex_count() << ' ' << t.branch_count();
        for (auto [u, v] : t.edges()) std::cout << "  " << u << '-' << v;
        std::cout << '\n';
    }
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    auto g = ie::load_graph(cfg.paths.front());
    ie::ensure_valid(g);
    auto opts = estimator_options(cfg, true, g);
    auto v = ie::ie_vector(g, opts);
    auto dp = ie::all_pairs_distances(g);
    int ref = ie::reference_vertex(g, dp, opts.reference);
    auto cs = ie::union_system(g, ref, dp);
    auto rep = ie::bound_audit(g, v, cs);
    std::cout << ie::render_report(rep, output_format(cfg));
    if (output_format(cfg) == ie::OutputFormat::Json) std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information estimations of graph structures"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--reference", cfg.reference, "Reference vertex: center|bn")
            ->check(CLI::IsMember({"center", "bn"}));
        cmd->add_option("--format", cfg.format, "Output format: json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--tolerance", cfg.tolerance, "Comparison tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--eps-variant", cfg.eps_variant,
                        "Remoteness numerator: center|per-vertex")
            ->check(CLI::IsMember({"center", "per-vertex"}));
        cmd->add_option("--h21-normalization", cfg.h21_normalization,
                        "Contour degree entropy normalization: row|global")
            ->check(CLI::IsMember({"row", "global"}));
    };

    auto* estimate = app.add_subcommand("estimate", "Compute the IE vector per graph");
    estimate->add_option("paths", cfg.paths, "Input graph files")->required();
    add_common(estimate);

    auto* rank = app.add_subcommand(
        "rank", "Order graphs by (amplitude, phase, H1), descending");
    rank->add_option("paths", cfg.paths, "Input graph files")->required();
    add_common(rank);

    auto* sweep = app.add_subcommand(
        "bn-sweep", "Marked IE with the base node at each vertex in turn");
    sweep->add_option("path", cfg.paths, "Input graph file")->expected(1)->required();
    add_common(sweep);

    auto* trees = app.add_subcommand("enumerate-trees",
                                     "Enumerate nonisomorphic trees on n vertices");
    trees->add_option("n", cfg.tree_size, "Vertex count")->required();
    trees->add_flag("--distinctness", cfg.distinctness,
                    "Also compute IE vectors and report distinctness");
    add_common(trees);

    auto* bounds = app.add_subcommand("bounds", "Extremal bound audit for a graph");
    bounds->add_option("path", cfg.paths, "Input graph file")->expected(1)->required();
    add_common(bounds);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(estimate)) return cmd_estimate(cfg);
        if (app.got_subcommand(rank)) return cmd_rank(cfg);
        if (app.got_subcommand(sweep)) return cmd_bn_sweep(cfg);
        if (app.got_subcommand(trees)) return cmd_enumerate_trees(cfg);
        if (app.got_subcommand(bounds)) return cmd_bounds(cfg);
    } catch (const ie::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ie::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

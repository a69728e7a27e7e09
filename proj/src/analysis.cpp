#include "ie/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ie/canonical.hpp"
#include "ie/metric.hpp"

namespace ie {

namespace {

constexpr int kMaxVertices = 12;

bool ie_equal(const IEVector& a, const IEVector& b, double tol) {
    return std::abs(a.h11 - b.h11) <= tol && std::abs(a.h12 - b.h12) <= tol &&
           std::abs(a.h21 - b.h21) <= tol && std::abs(a.h22 - b.h22) <= tol &&
           std::abs(a.h23 - b.h23) <= tol && std::abs(a.amplitude - b.amplitude) <= tol &&
           std::abs(a.phase - b.phase) <= tol;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.vertex_count() > kMaxVertices)
        throw TooLarge("canonical form limited to " + std::to_string(kMaxVertices) +
                       " vertices");
    return canonical_certificate(g);
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw TooLarge("vertex count must be positive");
    if (n > kMaxVertices)
        throw TooLarge("tree enumeration limited to " + std::to_string(kMaxVertices) +
                       " vertices");

    std::vector<Graph> current{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::set<CanonicalForm> seen;
        for (const auto& t : current) {
            for (int attach = 0; attach < t.vertex_count(); ++attach) {
                Graph grown(size);
                for (auto [u, v] : t.edges()) grown.add_edge(u, v);
                grown.add_edge(attach, size - 1);
                if (seen.insert(canonical_certificate(grown)).second)
                    next.push_back(std::move(grown));
            }
        }
        current = std::move(next);
    }
    return current;
}

DistinctnessReport distinctness_experiment(int n, double tolerance) {
    DistinctnessReport rep;
    auto trees = enumerate_trees(n);
    rep.tree_count = static_cast<int>(trees.size());

    std::set<std::vector<int>> partitions;
    for (const auto& t : trees) partitions.insert(degree_partition(t).parts);
    rep.partition_count = static_cast<int>(partitions.size());

    rep.vectors.reserve(trees.size());
    for (const auto& t : trees) rep.vectors.push_back(ie_vector(t));

    std::vector<int> representative;  // indices of distinct vectors seen so far
    for (int i = 0; i < rep.tree_count; ++i) {
        bool collided = false;
        for (int r : representative) {
            if (ie_equal(rep.vectors[i], rep.vectors[r], tolerance)) {
                rep.collisions.push_back({r, i, canonical_form(trees[r]),
                                          canonical_form(trees[i])});
                collided = true;
                break;
            }
        }
        if (!collided) representative.push_back(i);
    }
    rep.distinct_count = static_cast<int>(representative.size());
    return rep;
}

std::vector<RankingEntry> rank_structures(std::span<const Graph> graphs,
                                          double tolerance) {
    std::vector<RankingEntry> entries;
    entries.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        entries.push_back({static_cast<int>(i), ie_vector(graphs[i])});

    auto before = [tolerance](const RankingEntry& a, const RankingEntry& b) {
        for (auto key : {&IEVector::amplitude, &IEVector::phase, &IEVector::h1}) {
            const double da = a.ie.*key, db = b.ie.*key;
            if (std::abs(da - db) > tolerance) return da > db;
        }
        return false;
    };
    std::stable_sort(entries.begin(), entries.end(), before);
    return entries;
}

BnSweepReport bn_sweep(const Graph& g, double tolerance) {
    ensure_valid(g);
    BnSweepReport rep;
    const int k = g.vertex_count();

    auto dp = all_pairs_distances(g);
    rep.center = find_center(g, dp).center;

    rep.per_vertex.reserve(k);
    for (int v = 0; v < k; ++v) {
        Graph marked = g;
        marked.base_node = v;
        EstimatorOptions opts;
        opts.reference = Reference::BaseNode;
        rep.per_vertex.push_back(ie_vector(marked, opts));
    }

    auto argmin = [&](double IEVector::* key) {
        int best = 0;
        for (int v = 1; v < k; ++v)
            if (rep.per_vertex[v].*key < rep.per_vertex[best].*key - tolerance) best = v;
        return best;
    };
    rep.argmin_amplitude = argmin(&IEVector::amplitude);
    rep.argmin_h1 = argmin(&IEVector::h1);
    rep.argmin_h2 = argmin(&IEVector::h2);
    rep.argmin_distance_to_center = dp.dist[rep.argmin_amplitude][rep.center];
    rep.center_attains_min =
        rep.per_vertex[rep.center].amplitude <=
        rep.per_vertex[rep.argmin_amplitude].amplitude + tolerance;
    return rep;
}

}  // namespace ie

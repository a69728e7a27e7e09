#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ie/entropy.hpp"
#include "ie/graph.hpp"

namespace ie {

struct TooLarge : GraphError {
    explicit TooLarge(const std::string& what) : GraphError(what) {}
};

using CanonicalForm = std::vector<std::uint8_t>;

// Exact certificate: equal iff isomorphic. Desk scale only (K <= 12).
CanonicalForm canonical_form(const Graph& g);

// One representative per isomorphism class of free trees on n vertices,
// grown by leaf attachment with certificate deduplication. 1 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);

struct CollisionPair {
    int first = 0;
    int second = 0;
    CanonicalForm first_certificate;
    CanonicalForm second_certificate;
};

struct DistinctnessReport {
    int tree_count = 0;
    int partition_count = 0;   // distinct degree partitions
    int distinct_count = 0;    // distinct IE vectors at the tolerance
    std::vector<IEVector> vectors;
    std::vector<CollisionPair> collisions;
};

DistinctnessReport distinctness_experiment(int n, double tolerance = 1e-9);

struct RankingEntry {
    int graph_id = 0;
    IEVector ie;
};

// Descending by amplitude, then phase, then H1; comparisons at the tolerance.
// Entries with IE-identical vectors keep their input order.
std::vector<RankingEntry> rank_structures(std::span<const Graph> graphs,
                                          double tolerance = 1e-9);

struct BnSweepReport {
    std::vector<IEVector> per_vertex;  // marked IE with the base node at each vertex
    int center = 0;
    int argmin_amplitude = 0;  // lowest-index vertex minimizing the amplitude
    int argmin_h1 = 0;
    int argmin_h2 = 0;
    int argmin_distance_to_center = 0;
    bool center_attains_min = false;  // center amplitude within tolerance of the minimum
};

BnSweepReport bn_sweep(const Graph& g, double tolerance = 1e-9);

}  // namespace ie

#pragma once

#include <vector>

#include "ie/graph.hpp"

namespace ie {

/// All-pairs hop distances and the derived metric symbols.
struct DistanceProfile {
    std::vector<std::vector<int>> dist;  // d(u, v), hop counts
    std::vector<int> eccentricity;      // max_j d(i, j)

    int eccentricity_of(int v) const { return eccentricity[v]; }
};

DistanceProfile all_pairs_distances(const Graph& g);

struct CenterResult {
    int center = 0;
    int center_eccentricity = 0;
    bool bicenter = false;  // two adjacent vertices share the minimum eccentricity
};

// Minimum eccentricity wins; among ties, the smaller distance sum; the final
// tie goes to the vertex ranked first by `priority` (vertex index when empty).
CenterResult find_center(const Graph& g, const DistanceProfile& d,
                         const std::vector<int>& priority = {});

enum class Reference { Center, BaseNode };

struct NoBaseNode : GraphError {
    NoBaseNode() : GraphError("reference is the base node, but none is marked") {}
};

// Resolves the reference vertex: the base node when asked for (throws
// NoBaseNode if unset), the center otherwise.
int reference_vertex(const Graph& g, const DistanceProfile& d, Reference ref,
                     const std::vector<int>& priority = {});

// Remoteness t_i = eccentricity(ref) + d(ref, i); t_ref = eccentricity(ref).
std::vector<int> remoteness(const Graph& g, const DistanceProfile& d, int ref_vertex);

}  // namespace ie

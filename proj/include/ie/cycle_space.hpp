#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ie/graph.hpp"
#include "ie/metric.hpp"

namespace ie {

struct DimensionMismatch : GraphError {
    DimensionMismatch() : GraphError("matrix branch orderings do not match") {}
};

/// Unoriented incidence matrix with the basic vertex's row crossed out.
/// Rows follow vertex order (basic vertex skipped); columns follow g.edges().
struct IncidenceMatrix {
    int basic_vertex = 0;
    std::vector<std::pair<int, int>> branches;     // column labels
    std::vector<int> row_vertices;                 // vertex of each row
    std::vector<std::vector<std::uint8_t>> rows;   // (K-1) x L, entries {0,1}
    int column_count = 0;
};

IncidenceMatrix build_incidence(const Graph& g, int basic_vertex);

/// The united system U of open contours (path rows, from W) stacked over
/// fundamental cycles (cycle rows, from N). Columns follow g.edges().
struct ContourSystem {
    std::vector<std::pair<int, int>> branches;     // column labels
    std::vector<std::vector<std::uint8_t>> rows;   // path rows first, then cycle rows
    int path_row_count = 0;                        // rows of W
    int cycle_row_count = 0;                       // rows of N
    std::vector<std::vector<int>> row_vertices;    // vertices incident to each row

    int row_count() const { return static_cast<int>(rows.size()); }  // P
    bool empty() const { return rows.empty(); }

    std::vector<int> complexities() const;   // C_i: branches per row
    std::vector<int> frequencies() const;    // F^j: rows containing branch j
    std::vector<int> vertex_counts() const;  // M_i
};

// Fundamental cycles of the breadth-first spanning tree rooted at `root`
// (neighbors visited in ascending order). One row per non-tree branch.
ContourSystem fundamental_cycles(const Graph& g, int root);

// One row per terminal (degree-1) vertex other than the reference: the
// shortest path from the reference, ties broken by the lexicographically
// smallest vertex sequence.
ContourSystem open_contours(const Graph& g, int ref_vertex, const DistanceProfile& d);

// W stacked over N, sharing the reference as path source and tree root.
ContourSystem union_system(const Graph& g, int ref_vertex, const DistanceProfile& d);

// M * N^t == 0 over GF(2), cycle rows only.
bool check_orthogonality(const IncidenceMatrix& m, const ContourSystem& cs);

std::string to_csv(const IncidenceMatrix& m);
std::string to_csv(const ContourSystem& cs);

}  // namespace ie

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ie {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph with an optional marked base node.
class Graph {
public:
    explicit Graph(int vertex_count);

    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int branch_count() const { return static_cast<int>(edges_.size()); }

    // Edges in insertion order; this is the branch (column) ordering used
    // by every matrix built from the graph.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Sorted neighbor lists.
    const std::vector<std::vector<int>>& adjacency() const;

    int degree(int v) const { return static_cast<int>(adjacency()[v].size()); }
    bool has_edge(int u, int v) const;

    std::optional<int> base_node;
    std::vector<std::string> labels;  // empty or one label per vertex

private:
    std::vector<std::pair<int, int>> edges_;
    mutable std::vector<std::vector<int>> adj_;
    mutable bool adj_sorted_ = true;
};

enum class GraphIssueKind { Disconnected, SelfLoop, DuplicateEdge, BadBaseNode };

struct GraphIssue {
    GraphIssueKind kind;
    std::string detail;  // names the first offending element
};

struct ValidationResult {
    bool connected = false;
    bool simple = false;
    bool degree_sum_ok = false;
    std::vector<GraphIssue> issues;

    bool ok() const { return issues.empty(); }
};

ValidationResult validate_graph(const Graph& g);

// Throws GraphError with the first issue's detail if the graph is invalid.
void ensure_valid(const Graph& g);

/// Degree multiset, sorted descending: the partition of 2L into K parts.
struct DegreePartition {
    std::vector<int> parts;
    bool is_tree = false;  // L == K - 1
};

DegreePartition degree_partition(const Graph& g);

}  // namespace ie

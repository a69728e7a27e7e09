#include "ie/graph.hpp"

#include <algorithm>
#include <set>

namespace ie {

Graph::Graph(int vertex_count) : adj_(std::max(vertex_count, 0)) {
    if (vertex_count <= 0)
        throw GraphError("vertex count must be positive");
}

void Graph::add_edge(int u, int v) {
    const int k = vertex_count();
    if (u < 0 || u >= k || v < 0 || v >= k)
        throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" +
                         std::to_string(v));
    edges_.emplace_back(u, v);
    if (u != v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    adj_sorted_ = false;
}

const std::vector<std::vector<int>>& Graph::adjacency() const {
    if (!adj_sorted_) {
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        adj_sorted_ = true;
    }
    return adj_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency()[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

std::string edge_name(const std::pair<int, int>& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

}  // namespace

ValidationResult validate_graph(const Graph& g) {
    ValidationResult r;
    r.simple = true;

    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges()) {
        if (e.first == e.second) {
            r.simple = false;
            r.issues.push_back({GraphIssueKind::SelfLoop, "self-loop at vertex " +
                                                              std::to_string(e.first)});
            break;
        }
        auto key = std::minmax(e.first, e.second);
        if (!seen.insert(key).second) {
            r.simple = false;
            r.issues.push_back(
                {GraphIssueKind::DuplicateEdge, "duplicate edge " + edge_name(e)});
            break;
        }
    }

    // BFS from vertex 0; self-loops do not affect reachability.
    const int k = g.vertex_count();
    std::vector<char> visited(k, 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.adjacency()[queue[head]]) {
            if (!visited[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
        }
    }
    r.connected = static_cast<int>(queue.size()) == k;
    if (!r.connected) {
        int first_unreached = 0;
        while (visited[first_unreached]) ++first_unreached;
        r.issues.push_back({GraphIssueKind::Disconnected,
                            "vertex " + std::to_string(first_unreached) +
                                " unreachable from vertex 0"});
    }

    if (g.base_node && (*g.base_node < 0 || *g.base_node >= k)) {
        r.issues.push_back({GraphIssueKind::BadBaseNode,
                            "base node " + std::to_string(*g.base_node) +
                                " out of range"});
    }

    long long degree_sum = 0;
    for (int v = 0; v < k; ++v) degree_sum += g.degree(v);
    r.degree_sum_ok = degree_sum == 2LL * g.branch_count();

    return r;
}

void ensure_valid(const Graph& g) {
    auto r = validate_graph(g);
    if (!r.ok()) throw GraphError(r.issues.front().detail);
}

DegreePartition degree_partition(const Graph& g) {
    DegreePartition p;
    p.parts.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) p.parts.push_back(g.degree(v));
    std::sort(p.parts.rbegin(), p.parts.rend());
    p.is_tree = g.branch_count() == g.vertex_count() - 1;
    return p;
}

}  // namespace ie

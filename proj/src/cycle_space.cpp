#include "ie/cycle_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ie {

namespace {

std::map<std::pair<int, int>, int> column_index(const Graph& g) {
    std::map<std::pair<int, int>, int> idx;
    for (int j = 0; j < g.branch_count(); ++j) {
        auto [u, v] = g.edges()[j];
        idx[std::minmax(u, v)] = j;
    }
    return idx;
}

std::vector<int> vertices_of_row(const std::vector<std::uint8_t>& row, const Graph& g) {
    std::set<int> vs;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
        if (row[j]) {
            vs.insert(g.edges()[j].first);
            vs.insert(g.edges()[j].second);
        }
    }
    return {vs.begin(), vs.end()};
}

// BFS tree rooted at `root`, neighbors in ascending order.
std::vector<int> bfs_parents(const Graph& g, int root) {
    std::vector<int> parent(g.vertex_count(), -2);
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.adjacency()[queue[head]]) {
            if (parent[w] == -2) {
                parent[w] = queue[head];
                queue.push_back(w);
            }
        }
    }
    return parent;
}

}  // namespace

IncidenceMatrix build_incidence(const Graph& g, int basic_vertex) {
    IncidenceMatrix m;
    m.basic_vertex = basic_vertex;
    m.branches = g.edges();
    m.column_count = g.branch_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == basic_vertex) continue;
        std::vector<std::uint8_t> row(g.branch_count(), 0);
        for (int j = 0; j < g.branch_count(); ++j) {
            auto [a, b] = g.edges()[j];
            if (a == v || b == v) row[j] = 1;
        }
        m.row_vertices.push_back(v);
        m.rows.push_back(std::move(row));
    }
    return m;
}

ContourSystem fundamental_cycles(const Graph& g, int root) {
    ContourSystem cs;
    cs.branches = g.edges();

    auto parent = bfs_parents(g, root);
    auto cols = column_index(g);
    std::set<std::pair<int, int>> tree_edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (parent[v] >= 0) tree_edges.insert(std::minmax(v, parent[v]));

    auto path_to_root = [&](int v) {
        std::vector<int> path;
        for (; v >= 0; v = parent[v]) path.push_back(v);
        return path;
    };

    for (const auto& e : g.edges()) {
        auto key = std::minmax(e.first, e.second);
        if (tree_edges.count(key)) continue;
        std::vector<std::uint8_t> row(g.branch_count(), 0);
        row[cols[key]] = 1;
        auto pu = path_to_root(e.first);
        auto pv = path_to_root(e.second);
        std::set<int> on_pu(pu.begin(), pu.end());
        int meet = *std::find_if(pv.begin(), pv.end(),
                                 [&](int x) { return on_pu.count(x) > 0; });
        for (auto* p : {&pu, &pv}) {
            for (std::size_t i = 0; (*p)[i] != meet; ++i)
                row[cols[std::minmax((*p)[i], (*p)[i + 1])]] = 1;
        }
        cs.row_vertices.push_back(vertices_of_row(row, g));
        cs.rows.push_back(std::move(row));
        ++cs.cycle_row_count;
    }
    return cs;
}

ContourSystem open_contours(const Graph& g, int ref_vertex, const DistanceProfile& d) {
    ContourSystem cs;
    cs.branches = g.edges();
    auto cols = column_index(g);

    for (int t = 0; t < g.vertex_count(); ++t) {
        if (t == ref_vertex || g.degree(t) != 1) continue;
        // Lexicographically smallest shortest path ref -> t.
        std::vector<std::uint8_t> row(g.branch_count(), 0);
        int cur = ref_vertex;
        const int total = d.dist[ref_vertex][t];
        for (int step = 0; step < total; ++step) {
            int next = -1;
            for (int w : g.adjacency()[cur]) {
                if (d.dist[ref_vertex][w] == step + 1 && d.dist[w][t] == total - step - 1) {
                    next = w;
                    break;  // neighbors are ascending
                }
            }
            row[cols[std::minmax(cur, next)]] = 1;
            cur = next;
        }
        cs.row_vertices.push_back(vertices_of_row(row, g));
        cs.rows.push_back(std::move(row));
        ++cs.path_row_count;
    }
    return cs;
}

ContourSystem union_system(const Graph& g, int ref_vertex, const DistanceProfile& d) {
    ContourSystem u = open_contours(g, ref_vertex, d);
    ContourSystem n = fundamental_cycles(g, ref_vertex);
    for (std::size_t i = 0; i < n.rows.size(); ++i) {
        u.rows.push_back(std::move(n.rows[i]));
        u.row_vertices.push_back(std::move(n.row_vertices[i]));
    }
    u.cycle_row_count = n.cycle_row_count;
    return u;
}

std::vector<int> ContourSystem::complexities() const {
    std::vector<int> c;
    c.reserve(rows.size());
    for (const auto& row : rows) {
        int sum = 0;
        for (auto b : row) sum += b;
        c.push_back(sum);
    }
    return c;
}

std::vector<int> ContourSystem::frequencies() const {
    std::vector<int> f(branches.size(), 0);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) f[j] += row[j];
    return f;
}

std::vector<int> ContourSystem::vertex_counts() const {
    std::vector<int> m;
    m.reserve(row_vertices.size());
    for (const auto& vs : row_vertices) m.push_back(static_cast<int>(vs.size()));
    return m;
}

bool check_orthogonality(const IncidenceMatrix& m, const ContourSystem& cs) {
    if (m.column_count != static_cast<int>(cs.branches.size())) throw DimensionMismatch();
    for (const auto& mrow : m.rows) {
        for (int i = cs.path_row_count; i < cs.row_count(); ++i) {
            int dot = 0;
            for (int j = 0; j < m.column_count; ++j) dot ^= mrow[j] & cs.rows[i][j];
            if (dot) return false;
        }
    }
    return true;
}

namespace {

std::string branch_header(const std::vector<std::pair<int, int>>& branches) {
    std::ostringstream out;
    for (std::size_t j = 0; j < branches.size(); ++j) {
        if (j) out << ',';
        out << branches[j].first << '-' << branches[j].second;
    }
    return out.str();
}

}  // namespace

std::string to_csv(const IncidenceMatrix& m) {
    std::ostringstream out;
    out << "vertex," << branch_header(m.branches) << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        out << m.row_vertices[i];
        for (int j = 0; j < m.column_count; ++j) out << ',' << int(m.rows[i][j]);
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const ContourSystem& cs) {
    std::ostringstream out;
    out << "row," << branch_header(cs.branches) << '\n';
    for (int i = 0; i < cs.row_count(); ++i) {
        out << (i < cs.path_row_count ? "path" : "cycle");
        for (std::size_t j = 0; j < cs.rows[i].size(); ++j)
            out << ',' << int(cs.rows[i][j]);
        out << '\n';
    }
    return out.str();
}

}  // namespace ie

#include "ie/metric.hpp"

#include <algorithm>
#include <numeric>

namespace ie {

DistanceProfile all_pairs_distances(const Graph& g) {
    const int k = g.vertex_count();
    DistanceProfile p;
    p.dist.assign(k, std::vector<int>(k, -1));
    p.eccentricity.assign(k, 0);

    std::vector<int> queue;
    queue.reserve(k);
    for (int s = 0; s < k; ++s) {
        auto& row = p.dist[s];
        row[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.adjacency()[u]) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        p.eccentricity[s] = *std::max_element(row.begin(), row.end());
    }
    return p;
}

CenterResult find_center(const Graph& g, const DistanceProfile& d,
                         const std::vector<int>& priority) {
    const int k = g.vertex_count();
    const int min_ecc = *std::min_element(d.eccentricity.begin(), d.eccentricity.end());

    auto dist_sum = [&](int v) {
        return std::accumulate(d.dist[v].begin(), d.dist[v].end(), 0LL);
    };
    auto rank = [&](int v) { return priority.empty() ? v : priority[v]; };

    int best = -1;
    for (int v = 0; v < k; ++v) {
        if (d.eccentricity[v] != min_ecc) continue;
        if (best < 0 || dist_sum(v) < dist_sum(best) ||
            (dist_sum(v) == dist_sum(best) && rank(v) < rank(best)))
            best = v;
    }

    CenterResult r;
    r.center = best;
    r.center_eccentricity = min_ecc;
    for (int w : g.adjacency()[best])
        if (d.eccentricity[w] == min_ecc) r.bicenter = true;
    return r;
}

int reference_vertex(const Graph& g, const DistanceProfile& d, Reference ref,
                     const std::vector<int>& priority) {
    if (ref == Reference::BaseNode) {
        if (!g.base_node) throw NoBaseNode();
        return *g.base_node;
    }
    return find_center(g, d, priority).center;
}

std::vector<int> remoteness(const Graph& g, const DistanceProfile& d, int ref_vertex) {
    const int ecc = d.eccentricity[ref_vertex];
    std::vector<int> t(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) t[v] = ecc + d.dist[ref_vertex][v];
    return t;
}

}  // namespace ie

#include "ie/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "ie/canonical.hpp"

namespace ie {

double entropy_of_weights(std::span<const double> weights) {
    double sum = 0;
    for (double w : weights) sum += w;
    if (sum <= 0) throw AllZero();
    double h = 0;
    for (double w : weights) {
        if (w <= 0) continue;
        const double p = w / sum;
        h -= p * std::log2(p);
    }
    return h;
}

double entropy_of_weights(std::span<const int> weights) {
    std::vector<double> w(weights.begin(), weights.end());
    return entropy_of_weights(std::span<const double>(w));
}

double h11(const Graph& g) {
    std::vector<int> degrees;
    degrees.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    return entropy_of_weights(std::span<const int>(degrees));
}

double h12(const Graph& g, const DistanceProfile& d, int ref_vertex, EpsVariant variant) {
    std::vector<int> t(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int eps = variant == EpsVariant::Center ? d.eccentricity[ref_vertex]
                                                      : d.eccentricity[v];
        t[v] = eps + d.dist[ref_vertex][v];
    }
    return entropy_of_weights(std::span<const int>(t));
}

double h21(const ContourSystem& cs, const Graph& g, H21Normalization norm) {
    if (cs.empty()) return 0;
    if (norm == H21Normalization::Row) {
        double sum = 0;
        for (const auto& vs : cs.row_vertices) {
            std::vector<int> degrees;
            degrees.reserve(vs.size());
            for (int v : vs) degrees.push_back(g.degree(v));
            sum += entropy_of_weights(std::span<const int>(degrees));
        }
        return sum;
    }
    std::vector<int> degrees;  // one weight per vertex occurrence across rows
    for (const auto& vs : cs.row_vertices)
        for (int v : vs) degrees.push_back(g.degree(v));
    return entropy_of_weights(std::span<const int>(degrees));
}

double h22(const ContourSystem& cs) {
    if (cs.empty()) return 0;
    auto c = cs.complexities();
    return entropy_of_weights(std::span<const int>(c));
}

double h23(const ContourSystem& cs) {
    if (cs.empty()) return 0;
    auto f = cs.frequencies();
    return entropy_of_weights(std::span<const int>(f));
}

double h2(const ContourSystem& cs, const Graph& g, H21Normalization norm) {
    return h21(cs, g, norm) + h22(cs) + h23(cs);
}

namespace {

constexpr int kCanonicalLimit = 12;

Graph relabel(const Graph& g, const std::vector<int>& order) {
    std::vector<int> position(g.vertex_count());
    for (int pos = 0; pos < g.vertex_count(); ++pos) position[order[pos]] = pos;
    Graph out(g.vertex_count());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.branch_count());
    for (auto [u, v] : g.edges()) {
        auto e = std::minmax(position[u], position[v]);
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out.add_edge(u, v);
    if (g.base_node) out.base_node = position[*g.base_node];
    return out;
}

}  // namespace

IEVector ie_vector(const Graph& g, const EstimatorOptions& opts) {
    ensure_valid(g);
    if (g.vertex_count() == 1) return {};

    // Resolve the reference vertex on the input graph. Center ties are broken
    // by canonical position so the choice is stable under relabeling.
    auto dp = all_pairs_distances(g);
    int ref;
    if (opts.reference == Reference::BaseNode) {
        if (!g.base_node) throw NoBaseNode();
        ref = *g.base_node;
    } else {
        std::vector<int> priority;
        if (g.vertex_count() <= kCanonicalLimit) {
            auto order = canonical_order(g);
            priority.assign(g.vertex_count(), 0);
            for (int pos = 0; pos < g.vertex_count(); ++pos) priority[order[pos]] = pos;
        }
        ref = find_center(g, dp, priority).center;
    }

    // Relabel canonically with the reference distinguished, so the contour
    // system (and with it H2) does not depend on the input labeling.
    Graph work = g;
    int work_ref = ref;
    if (g.vertex_count() <= kCanonicalLimit) {
        std::vector<int> colors(g.vertex_count(), 0);
        colors[ref] = 1;
        auto order = canonical_order(g, colors);
        work = relabel(g, order);
        work_ref = static_cast<int>(
            std::find(order.begin(), order.end(), ref) - order.begin());
    }

    auto wdp = all_pairs_distances(work);
    auto cs = union_system(work, work_ref, wdp);

    IEVector v;
    v.h11 = h11(work);
    v.h12 = h12(work, wdp, work_ref, opts.eps_variant);
    v.h1 = v.h11 + v.h12;
    v.h21 = h21(cs, work, opts.h21_normalization);
    v.h22 = h22(cs);
    v.h23 = h23(cs);
    v.h2 = v.h21 + v.h22 + v.h23;
    v.amplitude = std::hypot(v.h1, v.h2);
    v.phase = (v.h1 == 0 && v.h2 == 0) ? 0 : std::atan2(v.h2, v.h1);
    return v;
}

}  // namespace ie

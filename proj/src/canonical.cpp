#include "ie/canonical.hpp"

#include <algorithm>
#include <map>

#include "ie/metric.hpp"

namespace ie {

namespace {

// Rank vertices by key content: equal keys share a rank, ranks follow the
// lexicographic order of the keys. Label-invariant by construction.
std::vector<int> rank_by_key(const std::vector<std::vector<int>>& keys) {
    std::map<std::vector<int>, int> index;
    for (const auto& k : keys) index.emplace(k, 0);
    int next = 0;
    for (auto& [key, r] : index) r = next++;
    std::vector<int> ranks(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) ranks[v] = index[keys[v]];
    return ranks;
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<int> base_rank;  // static invariant classes

    std::vector<int> placed;          // placed[pos] = vertex
    std::vector<int> position;        // position[v] or -1
    std::vector<std::uint8_t> bits;   // adjacency blocks so far
    std::vector<std::uint8_t> best_bits;
    std::vector<int> best_order;
    bool have_best = false;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        position.assign(n, -1);
    }

    // Color refinement with the placed vertices individualized as codes
    // 0..pos-1; unplaced vertices get codes >= pos.
    std::vector<int> refined_codes() const {
        const int pos = static_cast<int>(placed.size());
        std::vector<int> code(n);
        for (int v = 0; v < n; ++v)
            code[v] = position[v] >= 0 ? position[v] : pos + base_rank[v];
        for (int round = 0; round < n; ++round) {
            std::vector<std::vector<int>> keys(n);
            for (int v = 0; v < n; ++v) {
                keys[v].push_back(code[v]);
                std::vector<int> nbr;
                for (int w : g.adjacency()[v]) nbr.push_back(code[w]);
                std::sort(nbr.begin(), nbr.end());
                keys[v].insert(keys[v].end(), nbr.begin(), nbr.end());
            }
            auto ranks = rank_by_key(keys);
            std::vector<int> next(n);
            for (int v = 0; v < n; ++v)
                next[v] = position[v] >= 0 ? position[v] : pos + ranks[v];
            if (next == code) break;
            code = std::move(next);
        }
        return code;
    }

    void search() {
        const int pos = static_cast<int>(placed.size());
        if (pos == n) {
            if (!have_best || bits < best_bits) {
                best_bits = bits;
                best_order = placed;
                have_best = true;
            }
            return;
        }

        auto code = refined_codes();
        int target = -1;
        for (int v = 0; v < n; ++v)
            if (position[v] < 0 && (target < 0 || code[v] < code[target])) target = v;

        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (position[v] < 0 && code[v] == code[target]) candidates.push_back(v);

        // Drop candidates whose transposition with an earlier candidate is an
        // automorphism (identical neighborhoods apart from each other).
        std::vector<int> kept;
        for (int v : candidates) {
            bool twin = false;
            for (int u : kept) {
                auto nu = g.adjacency()[u];
                auto nv = g.adjacency()[v];
                std::erase(nu, v);
                std::erase(nv, u);
                if (nu == nv) {
                    twin = true;
                    break;
                }
            }
            if (!twin) kept.push_back(v);
        }

        // Explore smaller adjacency blocks first so the minimum is found early.
        std::vector<std::pair<std::vector<std::uint8_t>, int>> ordered;
        for (int v : kept) {
            std::vector<std::uint8_t> block(pos);
            for (int p = 0; p < pos; ++p) block[p] = g.has_edge(v, placed[p]) ? 1 : 0;
            ordered.emplace_back(std::move(block), v);
        }
        std::sort(ordered.begin(), ordered.end());

        const std::size_t offset = bits.size();
        for (auto& [block, v] : ordered) {
            if (have_best) {
                // Prune branches already worse than the best certificate.
                int cmp = 0;
                for (std::size_t i = 0; i < block.size() && cmp == 0; ++i)
                    cmp = int(block[i]) - int(best_bits[offset + i]);
                bool prefix_equal =
                    std::equal(bits.begin(), bits.end(), best_bits.begin());
                if (prefix_equal && cmp > 0) continue;
            }
            bits.insert(bits.end(), block.begin(), block.end());
            placed.push_back(v);
            position[v] = pos;
            search();
            position[v] = -1;
            placed.pop_back();
            bits.resize(offset);
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g, const std::vector<int>& colors) {
    const int n = g.vertex_count();
    Searcher s(g);

    auto dp = all_pairs_distances(g);
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
        keys[v].push_back(colors.empty() ? 0 : colors[v]);
        keys[v].push_back(g.degree(v));
        std::vector<int> row = dp.dist[v];
        std::sort(row.begin(), row.end());
        keys[v].insert(keys[v].end(), row.begin(), row.end());
    }
    s.base_rank = rank_by_key(keys);
    s.search();
    return s.best_order;
}

std::vector<std::uint8_t> canonical_certificate(const Graph& g,
                                                const std::vector<int>& colors) {
    auto order = canonical_order(g, colors);
    const int n = g.vertex_count();

    std::vector<std::uint8_t> cert;
    cert.push_back(static_cast<std::uint8_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        int c = colors.empty() ? 0 : colors[order[pos]];
        cert.push_back(static_cast<std::uint8_t>(c & 0xff));
    }
    std::vector<int> position(n);
    for (int pos = 0; pos < n; ++pos) position[order[pos]] = pos;
    for (int pos = 1; pos < n; ++pos)
        for (int p = 0; p < pos; ++p)
            cert.push_back(g.has_edge(order[pos], order[p]) ? 1 : 0);
    return cert;
}

}  // namespace ie

#include <doctest.h>

#include <random>

#include "ie/graph.hpp"
#include "ie/metric.hpp"
#include "test_support.hpp"

using namespace ie;
using namespace test_support;

TEST_CASE("validate: P2 is the smallest accepted graph") {
    Graph g(2);
    g.add_edge(0, 1);
    auto r = validate_graph(g);
    CHECK(r.ok());
    CHECK(r.connected);
    CHECK(r.simple);
    CHECK(r.degree_sum_ok);
}

TEST_CASE("validate: two isolated edges are disconnected") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto r = validate_graph(g);
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.issues.empty());
    CHECK(r.issues.front().kind == GraphIssueKind::Disconnected);
    CHECK(r.issues.front().detail.find("2") != std::string::npos);
}

TEST_CASE("validate: self-loop rejected with the offending vertex") {
    Graph g(1);
    g.add_edge(0, 0);
    auto r = validate_graph(g);
    CHECK_FALSE(r.ok());
    CHECK(r.issues.front().kind == GraphIssueKind::SelfLoop);
    CHECK(r.issues.front().detail.find("0") != std::string::npos);
}

TEST_CASE("validate: duplicate edge and bad base node") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(1, 2);
    auto r = validate_graph(g);
    CHECK_FALSE(r.ok());
    CHECK(r.issues.front().kind == GraphIssueKind::DuplicateEdge);

    Graph h(2);
    h.add_edge(0, 1);
    h.base_node = 5;
    auto rh = validate_graph(h);
    CHECK_FALSE(rh.ok());
    CHECK(rh.issues.front().kind == GraphIssueKind::BadBaseNode);
}

TEST_CASE("degree sum equals 2L on accepted graphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto g = random_connected_graph(rng);
        REQUIRE(validate_graph(g).ok());
        int sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.branch_count());
    }
}

TEST_CASE("all-pairs distances: named small graphs") {
    auto p3 = path_graph(3);
    auto d = all_pairs_distances(p3);
    CHECK(d.dist[0][2] == 2);
    CHECK(d.dist[0][1] == 1);
    CHECK(d.dist[1][1] == 0);

    auto c3 = cycle_graph(3);
    auto dc = all_pairs_distances(c3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(dc.dist[u][v] == (u == v ? 0 : 1));

    auto star = star_graph(3);
    auto ds = all_pairs_distances(star);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (a != b) CHECK(ds.dist[a][b] == 2);
}

TEST_CASE("distance matrix: symmetry, zero diagonal, single-source cross-check") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto g = random_connected_graph(rng);
        auto d = all_pairs_distances(g);
        const int k = g.vertex_count();
        for (int u = 0; u < k; ++u) {
            CHECK(d.dist[u][u] == 0);
            for (int v = 0; v < k; ++v) {
                CHECK(d.dist[u][v] == d.dist[v][u]);
                // Triangle inequality via every intermediate vertex.
                for (int w = 0; w < k; ++w)
                    CHECK(d.dist[u][v] <= d.dist[u][w] + d.dist[w][v]);
            }
        }
        // Independent single-source recomputation of one row.
        std::uniform_int_distribution<int> pick(0, k - 1);
        int s = pick(rng);
        std::vector<int> dist(k, -1);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : g.adjacency()[queue[head]])
                if (dist[w] < 0) {
                    dist[w] = dist[queue[head]] + 1;
                    queue.push_back(w);
                }
        CHECK(dist == d.dist[s]);
    }
}

TEST_CASE("center: P3, P4 bicenter, star") {
    auto p3 = path_graph(3);
    auto c = find_center(p3, all_pairs_distances(p3));
    CHECK(c.center == 1);
    CHECK(c.center_eccentricity == 1);
    CHECK_FALSE(c.bicenter);

    auto p4 = path_graph(4);
    auto c4 = find_center(p4, all_pairs_distances(p4));
    CHECK(c4.center == 1);  // equal distance sums (4, 4); index tie-break
    CHECK(c4.center_eccentricity == 2);
    CHECK(c4.bicenter);

    auto star = star_graph(3);
    auto cs = find_center(star, all_pairs_distances(star));
    CHECK(cs.center == 0);
    CHECK(cs.center_eccentricity == 1);
}

TEST_CASE("center is relabeling-stable up to (eccentricity, distance-sum) signature") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto g = random_connected_graph(rng, 9);
        auto d = all_pairs_distances(g);
        auto c = find_center(g, d);
        auto perm = random_permutation(g.vertex_count(), rng);
        auto h = relabel_graph(g, perm);
        auto dh = all_pairs_distances(h);
        auto ch = find_center(h, dh);
        CHECK(ch.center_eccentricity == c.center_eccentricity);
        long long sum_g = 0, sum_h = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            sum_g += d.dist[c.center][v];
            sum_h += dh.dist[ch.center][v];
        }
        CHECK(sum_g == sum_h);
    }
}

TEST_CASE("remoteness: center, base node, K1") {
    auto p3 = path_graph(3);
    auto d = all_pairs_distances(p3);
    CHECK(remoteness(p3, d, 1) == std::vector<int>{2, 1, 2});
    CHECK(remoteness(p3, d, 0) == std::vector<int>{2, 3, 4});

    Graph k1(1);
    auto d1 = all_pairs_distances(k1);
    CHECK(remoteness(k1, d1, 0) == std::vector<int>{0});
}

TEST_CASE("remoteness with BN at the center matches the center reference") {
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        auto g = random_connected_graph(rng);
        auto d = all_pairs_distances(g);
        int c = find_center(g, d).center;
        g.base_node = c;
        int by_center = reference_vertex(g, d, Reference::Center);
        int by_bn = reference_vertex(g, d, Reference::BaseNode);
        CHECK(remoteness(g, d, by_center) == remoteness(g, d, by_bn));
    }
}

TEST_CASE("reference_vertex throws NoBaseNode when unmarked") {
    auto g = path_graph(3);
    auto d = all_pairs_distances(g);
    CHECK_THROWS_AS(reference_vertex(g, d, Reference::BaseNode), NoBaseNode);
}

TEST_CASE("degree partition: star, cycle, path") {
    auto star = star_graph(3);
    auto p = degree_partition(star);
    CHECK(p.parts == std::vector<int>{3, 1, 1, 1});
    CHECK(p.is_tree);

    auto c3 = cycle_graph(3);
    auto pc = degree_partition(c3);
    CHECK(pc.parts == std::vector<int>{2, 2, 2});
    CHECK_FALSE(pc.is_tree);

    auto p8 = path_graph(8);
    CHECK(degree_partition(p8).parts == std::vector<int>{2, 2, 2, 2, 2, 2, 1, 1});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectra/errors.hpp"
#include "spectra/fset.hpp"
#include "spectra/induced_sizes.hpp"

using namespace spectra;

TEST_CASE("induced size sets of the small named graphs") {
    CHECK(induced_size_set(SimpleGraph(2, {{1, 2}})).values == std::vector<int>{0, 1});
    CHECK(induced_size_set(SimpleGraph::complete(3)).values == std::vector<int>{0, 1, 3});
    CHECK(induced_size_set(SimpleGraph::path(3)).values == std::vector<int>{0, 1, 2});

    for (int n = 1; n <= 7; ++n) {
        std::vector<int> want;
        for (int s = 0; s <= n; ++s) want.push_back(s * (s - 1) / 2);
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(induced_size_set(SimpleGraph::complete(n)).values == want);
    }
    CHECK_THROWS_AS(induced_size_set(SimpleGraph(25, {})), BoundError);
}

TEST_CASE("induced size sets agree with recomputation and ignore labelling") {
    std::mt19937 rng(12);
    for (int round = 0; round < 50; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const SimpleGraph g(n, edges);
        CHECK(induced_size_set(g).values == oracles::induced_size_set(g));

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabelled;
        for (auto [i, j] : edges)
            relabelled.emplace_back(perm[static_cast<std::size_t>(i - 1)],
                                    perm[static_cast<std::size_t>(j - 1)]);
        CHECK(induced_size_set(SimpleGraph(n, relabelled)).values == induced_size_set(g).values);
    }
}

TEST_CASE("canonical masks identify isomorphic graphs") {
    std::mt19937 rng(23);
    for (int round = 0; round < 50; ++round) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const SimpleGraph g(n, edges);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabelled;
        for (auto [i, j] : edges)
            relabelled.emplace_back(perm[static_cast<std::size_t>(i - 1)],
                                    perm[static_cast<std::size_t>(j - 1)]);
        CHECK(canonical_graph_mask(g) == canonical_graph_mask(SimpleGraph(n, relabelled)));
        // the canonical relabelling is itself a graph with that mask
        const auto canon = canonical_graph(g);
        CHECK(canon.edge_count() == g.edge_count());
        CHECK(canonical_graph_mask(canon) == canonical_graph_mask(g));
    }
}

TEST_CASE("unlabelled graph counts") {
    const int want[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        int count = 0;
        std::uint64_t last_mask = 0;
        bool first = true;
        for_each_graph(n, [&](const SimpleGraph& g) {
            ++count;
            REQUIRE(g.n() == n);
            const auto mask = canonical_graph_mask(g);
            if (!first) CHECK(canonical_mask_less(last_mask, mask, n));
            first = false;
            last_mask = mask;
        });
        CHECK(count == want[n]);
    }
}

TEST_CASE("min_size_set on the pinned cases") {
    const auto m1 = min_size_set(1, 3);
    CHECK(m1.best == 2);
    CHECK(m1.witness.n() == 2);
    CHECK(m1.witness.edge_count() == 1);

    const auto m3 = min_size_set(3, 4);
    CHECK(m3.best == 3);
    CHECK(canonical_graph_mask(m3.witness) == canonical_graph_mask(SimpleGraph::complete(3)));

    // value and witness fixed by the exhaustive labelled oracle
    const auto m6 = min_size_set(6, 5);
    CHECK(m6.best == 4);
    CHECK(m6.witness.n() == 4);
    CHECK(canonical_graph_mask(m6.witness) == canonical_graph_mask(SimpleGraph::complete(4)));
    CHECK(m6.best == oracles::min_size(6, 5));

    for (int m = 1; m <= 6; ++m) CHECK(min_size_set(m, 5).best == oracles::min_size(m, 5));

    CHECK_THROWS_AS(min_size_set(7, 3), BoundError);
    CHECK_THROWS_AS(min_size_set(0, 3), std::invalid_argument);
}

TEST_CASE("min_size_set never grows with the vertex budget") {
    for (int m = 1; m <= 10; ++m)
        for (int n = 3; n <= 6; ++n) {
            if (m > n * (n - 1) / 2 || m > (n - 1) * (n - 2) / 2) continue;
            CHECK(min_size_set(m, n).best <= min_size_set(m, n - 1).best);
        }
}

TEST_CASE("rainbow embedding ties size sets to colour spectra") {
    // shared convention: the empty subgraph counts, matching the background-only
    // infinite set on the colouring side
    for (int n = 1; n <= 4; ++n) {
        for_each_graph(n, [&](const SimpleGraph& g) {
            if (g.edge_count() == 0) return;
            const auto f = f_set(embed_graph_rainbow(g));
            std::vector<int> shifted;
            for (int s : induced_size_set(g).values) shifted.push_back(s + 1);
            CHECK(f.values == shifted);
        });
    }
}

TEST_CASE("graph json round trip") {
    const SimpleGraph g(4, {{1, 2}, {2, 3}, {1, 4}});
    CHECK(SimpleGraph::from_json(g.to_json()) == g);
    CHECK_THROWS_AS(SimpleGraph::from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
}

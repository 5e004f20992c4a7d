#include <doctest.h>

#include "oddsub/errors.hpp"
#include "oddsub/gallai.hpp"
#include "oddsub/generate.hpp"
#include "oddsub/parity.hpp"
#include "test_util.hpp"

using namespace oddsub;

TEST_CASE("even-even partition on small instances") {
    Graph c4 = cycle_graph(4);
    EvenPartition p = even_even_partition(c4);
    CHECK(is_valid_even_partition(c4, p));

    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    p = even_even_partition(k2);
    CHECK(is_valid_even_partition(k2, p));
    CHECK(p.part_one.count() == 1);  // each side a singleton

    Graph k7 = k7_minus_hamilton();
    p = even_even_partition(k7);
    CHECK(is_valid_even_partition(k7, p));
    EvenPartition brute = even_even_partition_bruteforce(k7);
    CHECK(is_valid_even_partition(k7, brute));

    p = even_even_partition(Graph(0));
    CHECK(p.part_one.empty());
    CHECK(p.part_two.empty());
}

TEST_CASE("brute force returns the numerically first valid indicator") {
    Graph c4 = cycle_graph(4);
    EvenPartition p = even_even_partition_bruteforce(c4);
    // indicator 0 is valid for an even graph: everything in part two
    CHECK(p.part_one.empty());
    CHECK(p.part_two == VertexSet::full(4));

    CHECK_THROWS_AS(even_even_partition_bruteforce(Graph(21)), TooLargeError);
}

TEST_CASE("gf2 and brute force agree in validity on all graphs up to n=6") {
    for (uint32_t n = 0; n <= 6; ++n) {
        uint32_t pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
            std::vector<std::pair<uint32_t, uint32_t>> edges;
            uint32_t t = 0;
            for (uint32_t u = 0; u < n; ++u)
                for (uint32_t v = u + 1; v < n; ++v, ++t)
                    if (mask >> t & 1) edges.emplace_back(u, v);
            Graph g = Graph::from_edge_list(n, edges);
            EvenPartition a = even_even_partition(g);
            EvenPartition b = even_even_partition_bruteforce(g);
            REQUIRE(is_valid_even_partition(g, a));
            REQUIRE(is_valid_even_partition(g, b));
        }
    }
}

TEST_CASE("partition validity and half bound on random graphs") {
    SplitMix64 rng(404);
    for (int t = 0; t < 60; ++t) {
        uint32_t n = 1 + uint32_t(rng.next_below(500));
        Graph g = testutil::random_graph(rng, n, 2.0 / std::max(1u, n));
        EvenPartition p = even_even_partition(g);
        CHECK(is_valid_even_partition(g, p));
        CHECK(std::max(p.part_one.count(), p.part_two.count()) >= (n + 1) / 2);
        CHECK(is_even_set(g, p.part_one));
        CHECK(is_even_set(g, p.part_two));
    }
}

TEST_CASE("gf2 partition is deterministic") {
    SplitMix64 rng(8);
    Graph g = testutil::random_graph(rng, 40, 0.15);
    EvenPartition a = even_even_partition(g);
    EvenPartition b = even_even_partition(g);
    CHECK(a.part_one == b.part_one);
    CHECK(a.part_two == b.part_two);
}

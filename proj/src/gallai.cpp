#include "oddsub/gallai.hpp"

#include <numeric>

#include "oddsub/errors.hpp"
#include "oddsub/parity.hpp"

namespace oddsub {

bool is_valid_even_partition(const Graph& g, const EvenPartition& p) {
    uint32_t n = g.vertex_count();
    if (p.part_one.width() != n || p.part_two.width() != n) return false;
    if (p.part_one.intersects(p.part_two)) return false;
    if ((p.part_one | p.part_two) != VertexSet::full(n)) return false;
    return is_even_set(g, p.part_one) && is_even_set(g, p.part_two);
}

static EvenPartition partition_from_indicator(const Graph& g, const VertexSet& x) {
    EvenPartition p{x, x.complement()};
    if (!is_valid_even_partition(g, p)) throw InternalError("invalid even-even partition");
    // pigeonhole consequence of any valid partition
    if (std::max(p.part_one.count(), p.part_two.count()) < (g.vertex_count() + 1) / 2)
        throw InternalError("partition smaller than half bound");
    return p;
}

EvenPartition even_even_partition(const Graph& g) {
    uint32_t n = g.vertex_count();
    // rows of [A + diag(d mod 2) | d mod 2], one bit-vector of width n+1 each
    std::vector<VertexSet> rows(n, VertexSet(n + 1));
    for (uint32_t v = 0; v < n; ++v) {
        g.neighbors(v).for_each([&](uint32_t u) { rows[v].set(u); });
        if (g.degree(v) % 2 == 1) {
            rows[v].set(v);
            rows[v].set(n);
        }
    }

    // Gauss-Jordan over GF(2)
    std::vector<int32_t> pivot_row_of_col(n, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t pivot = rank;
        while (pivot < n && !rows[pivot].test(col)) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        for (uint32_t r = 0; r < n; ++r)
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        pivot_row_of_col[col] = int32_t(rank);
        ++rank;
    }
    for (uint32_t r = rank; r < n; ++r)
        if (rows[r].test(n)) throw InternalError("inconsistent parity system");

    // free variables are zero, so each pivot variable equals its row's rhs
    VertexSet x(n);
    for (uint32_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] >= 0 && rows[uint32_t(pivot_row_of_col[col])].test(n))
            x.set(col);
    return partition_from_indicator(g, x);
}

EvenPartition even_even_partition_bruteforce(const Graph& g) {
    uint32_t n = g.vertex_count();
    if (n > kPartitionBruteForceCap)
        throw TooLargeError("brute-force partition over " + std::to_string(n) +
                            " vertices exceeds cap " + std::to_string(kPartitionBruteForceCap));
    uint64_t end = uint64_t(1) << n;
    for (uint64_t mask = 0; mask < end; ++mask) {
        VertexSet x(n);
        uint64_t bits = mask;
        while (bits) {
            x.set(uint32_t(std::countr_zero(bits)));
            bits &= bits - 1;
        }
        EvenPartition p{x, x.complement()};
        if (is_valid_even_partition(g, p)) return p;
    }
    throw InternalError("no even-even bipartition found");
}

}  // namespace oddsub

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

// Edge counts of induced subgraphs; 0 (empty subset) and m (everything) are
// always in, so 2 is the least possible size once m >= 1.
struct SizeSet {
    std::vector<int> values; // sorted ascending
    int m{0};                // edge count of the graph it came from

    int size() const { return static_cast<int>(values.size()); }
    bool contains(int s) const;
};

// { |E(G[S])| : S subset of V(G) }; Gray-code subset walk, guard n <= 24.
SizeSet induced_size_set(const SimpleGraph& g, bool force = false);

// Minimum edge bitmask over all vertex orderings, bits in colex pair order
// ((1,2),(1,3),(2,3),(1,4),...), earlier bits more significant. Equal masks
// <=> isomorphic graphs. Guard n <= 8.
std::uint64_t canonical_graph_mask(const SimpleGraph& g);
SimpleGraph canonical_graph(const SimpleGraph& g);
// true when a's canonical string precedes b's (same n required)
bool canonical_mask_less(std::uint64_t a, std::uint64_t b, int n);

// One representative per unlabelled graph on exactly n vertices, by vertex
// augmentation with canonical dedupe, visited in ascending canonical order.
// Guard n <= 8.
void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit);

struct MinSizeResult {
    int best{0};
    SimpleGraph witness;
    std::uint64_t classes_scanned{0};
};

// Minimum |induced_size_set| over graphs with exactly m edges and at most
// n_max vertices; witness least under (vertex count, canonical edge string).
// Requires 1 <= m <= C(n_max,2), n_max <= 8.
MinSizeResult min_size_set(int m, int n_max, bool force = false);

} // namespace spectra

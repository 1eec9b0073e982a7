#include "spectra/induced_sizes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "spectra/errors.hpp"

namespace spectra {

bool SizeSet::contains(int s) const {
    return std::binary_search(values.begin(), values.end(), s);
}

SizeSet induced_size_set(const SimpleGraph& g, bool force) {
    const int n = g.n();
    if (n > 24 && !force) throw BoundError("induced_size_set: n <= 24 (2^n subsets)");
    if (n > 30) throw BoundError("induced_size_set: n <= 30");
    const auto adj = g.adjacency_masks();
    const int m = g.edge_count();
    std::vector<char> achieved(static_cast<std::size_t>(m) + 1, 0);
    achieved[0] = 1; // empty subset

    int edges_in = 0;
    std::uint32_t prev = 0;
    for (std::uint64_t gc = 1; gc < (1ull << n); ++gc) {
        const auto cur = static_cast<std::uint32_t>(gc ^ (gc >> 1));
        const std::uint32_t diff = cur ^ prev;
        const int v = std::countr_zero(diff) + 1;
        const bool added = (cur & diff) != 0;
        const int touching = std::popcount(adj[static_cast<std::size_t>(v)] & (cur & ~diff));
        edges_in += added ? touching : -touching;
        achieved[static_cast<std::size_t>(edges_in)] = 1;
        prev = cur;
    }

    SizeSet out;
    out.m = m;
    for (int s = 0; s <= m; ++s)
        if (achieved[static_cast<std::size_t>(s)]) out.values.push_back(s);
    return out;
}

namespace {

// colex pair order: (1,2),(1,3),(2,3),(1,4),...: the edges towards a new
// vertex extend the string, which is what vertex augmentation needs
int colex_index(int i, int j) { // 1 <= i < j
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

SimpleGraph mask_to_graph(std::uint64_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (mask >> colex_index(i, j) & 1) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

// Minimum edge string over all vertex orderings, built position by position:
// the frontier keeps every partial ordering that still realises the minimal
// partial string; each level appends the bit segment towards the new position.
std::uint64_t canonical_mask_impl(const std::vector<std::uint32_t>& adj, int n) {
    std::vector<std::vector<int>> frontier{{}};
    std::uint64_t mask = 0;
    for (int pos = 1; pos <= n; ++pos) {
        std::vector<std::vector<int>> next;
        std::uint32_t best_seg = UINT32_MAX;
        for (const auto& ord : frontier) {
            std::uint32_t used = 0;
            for (int u : ord) used |= 1u << (u - 1);
            for (int u = 1; u <= n; ++u) {
                if (used >> (u - 1) & 1u) continue;
                // earlier positions more significant within the segment
                std::uint32_t seg = 0;
                for (int q = 0; q < pos - 1; ++q)
                    seg = (seg << 1) |
                          ((adj[static_cast<std::size_t>(u)] >> (ord[static_cast<std::size_t>(q)] - 1)) & 1u);
                if (seg < best_seg) {
                    best_seg = seg;
                    next.clear();
                }
                if (seg == best_seg) {
                    next.push_back(ord);
                    next.back().push_back(u);
                }
            }
        }
        frontier = std::move(next);
        for (int q = 0; q < pos - 1; ++q)
            if (best_seg >> (pos - 2 - q) & 1u) mask |= 1ull << colex_index(q + 1, pos);
    }
    return mask;
}

} // namespace

std::uint64_t canonical_graph_mask(const SimpleGraph& g) {
    if (g.n() > 8) throw BoundError("canonical_graph_mask: n <= 8");
    return canonical_mask_impl(g.adjacency_masks(), g.n());
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
    return mask_to_graph(canonical_graph_mask(g), g.n());
}

bool canonical_mask_less(std::uint64_t a, std::uint64_t b, int n) {
    const int e = n * (n - 1) / 2;
    for (int q = 0; q < e; ++q) {
        const bool ba = a >> q & 1, bb = b >> q & 1;
        if (ba != bb) return !ba; // absent edge precedes present edge
    }
    return false;
}

void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit) {
    if (n < 1 || n > 8) throw BoundError("for_each_graph: 1 <= n <= 8");
    std::vector<std::uint64_t> level{0}; // the one graph on a single vertex
    for (int p = 2; p <= n; ++p) {
        std::set<std::uint64_t> next;
        for (std::uint64_t mask : level) {
            const SimpleGraph base = mask_to_graph(mask, p - 1);
            auto adj = base.adjacency_masks();
            adj.resize(static_cast<std::size_t>(p) + 1, 0);
            for (std::uint32_t nb = 0; nb < (1u << (p - 1)); ++nb) {
                auto adj2 = adj;
                adj2[static_cast<std::size_t>(p)] = nb;
                for (int u = 1; u < p; ++u)
                    if (nb >> (u - 1) & 1u) adj2[static_cast<std::size_t>(u)] |= 1u << (p - 1);
                next.insert(canonical_mask_impl(adj2, p));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end(),
              [n](std::uint64_t a, std::uint64_t b) { return canonical_mask_less(a, b, n); });
    for (std::uint64_t mask : level) visit(mask_to_graph(mask, n));
}

MinSizeResult min_size_set(int m, int n_max, bool force) {
    if (m < 1) throw std::invalid_argument("min_size_set: m >= 1");
    if (n_max > 8 && !force) throw BoundError("min_size_set: n_max <= 8");
    if (n_max > 8) throw BoundError("min_size_set: canonical labelling caps n_max at 8");
    if (m > n_max * (n_max - 1) / 2)
        throw BoundError("min_size_set: infeasible, m > C(n_max,2)");

    MinSizeResult result;
    result.best = m + 2; // |S| <= m+1 always, so this is above any real value
    for (int n = 1; n <= n_max; ++n) {
        for_each_graph(n, [&](const SimpleGraph& g) {
            if (g.edge_count() != m) return;
            ++result.classes_scanned;
            const int s = induced_size_set(g).size();
            // ascending n, then ascending canonical order: strict improvement
            // keeps the least witness
            if (s < result.best) {
                result.best = s;
                result.witness = g;
            }
        });
    }
    if (result.classes_scanned == 0)
        throw BoundError("min_size_set: no graph with m edges within the vertex budget");
    return result;
}

} // namespace spectra

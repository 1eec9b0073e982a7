#include "spectra/fset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "spectra/errors.hpp"

namespace spectra {

bool FSet::contains(int m) const {
    return std::binary_search(values.begin(), values.end(), m);
}

bool GSet::contains(long long m) const {
    return std::binary_search(values.begin(), values.end(), m);
}

FSet f_set(const TemplateColouring& c) {
    {
        const auto violations = validate(c);
        if (!violations.empty()) throw ValidationError("f_set: invalid colouring: " + violations.front());
    }
    const int t = c.t();
    if (t > 24) throw BoundError("f_set: t <= 24 required (2^t subsets)");
    const int k = c.k();
    const std::size_t bg = static_cast<std::size_t>(c.background());

    // Gray-code walk over subsets: each step toggles one vertex, so only its
    // incident edges move in or out of the colour counts.
    std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
    int distinct = 0;
    std::vector<char> achieved(static_cast<std::size_t>(k) + 1, 0);

    auto record = [&] {
        // an infinite set is the template part plus infinitely many background
        // vertices, which contribute exactly the background colour
        const int m = distinct + (count[bg] > 0 ? 0 : 1);
        achieved[static_cast<std::size_t>(m)] = 1;
    };
    record(); // empty template part

    std::uint32_t prev = 0;
    for (std::uint64_t g = 1; g < (1ull << t); ++g) {
        const auto cur = static_cast<std::uint32_t>(g ^ (g >> 1));
        const std::uint32_t diff = cur ^ prev;
        const int v = std::countr_zero(diff) + 1;
        const bool added = (cur & diff) != 0;
        // neighbours of the toggled vertex inside the smaller of the two sets
        const std::uint32_t others = cur & ~diff;
        for (int u = 1; u <= t; ++u) {
            if (!(others >> (u - 1) & 1u)) continue;
            const auto col = static_cast<std::size_t>(c.edge_colour(std::min(u, v), std::max(u, v)));
            if (added) {
                if (count[col]++ == 0) ++distinct;
            } else {
                if (--count[col] == 0) --distinct;
            }
        }
        record();
        prev = cur;
    }

    FSet f;
    f.k = k;
    for (int m = 1; m <= k; ++m)
        if (achieved[static_cast<std::size_t>(m)]) f.values.push_back(m);

    // theorem-backed sanity: 1 and k always attained, 2 as soon as k >= 2
    if (f.values.empty() || f.values.front() != 1 || f.values.back() != k ||
        (k >= 2 && !f.contains(2)))
        throw std::logic_error("f_set: invariant violated (1, 2, k membership)");
    return f;
}

GSet g_set_prefix(const LazyColouring& c, int n) {
    if (n < 2 || n > 24) throw BoundError("g_set_prefix: 2 <= N <= 24 required");

    // dense colour ids for the C(n,2) prefix edges
    std::map<Colour, int> dense;
    std::vector<std::vector<int>> edge(static_cast<std::size_t>(n) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Colour col = c(i, j);
            const auto [it, fresh] = dense.try_emplace(col, static_cast<int>(dense.size()));
            (void)fresh;
            edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                edge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = it->second;
        }

    std::vector<int> count(dense.size(), 0);
    int distinct = 0;
    int members = 0;
    std::vector<char> achieved(dense.size() + 1, 0);

    std::uint32_t prev = 0;
    for (std::uint64_t g = 1; g < (1ull << n); ++g) {
        const auto cur = static_cast<std::uint32_t>(g ^ (g >> 1));
        const std::uint32_t diff = cur ^ prev;
        const int v = std::countr_zero(diff) + 1;
        const bool added = (cur & diff) != 0;
        members += added ? 1 : -1;
        const std::uint32_t others = cur & ~diff;
        for (int u = 1; u <= n; ++u) {
            if (!(others >> (u - 1) & 1u)) continue;
            const auto col = static_cast<std::size_t>(edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            if (added) {
                if (count[col]++ == 0) ++distinct;
            } else {
                if (--count[col] == 0) --distinct;
            }
        }
        if (members >= 2) achieved[static_cast<std::size_t>(distinct)] = 1;
        prev = cur;
    }

    GSet gs;
    gs.prefix = n;
    for (std::size_t m = 1; m < achieved.size(); ++m)
        if (achieved[m]) gs.values.push_back(static_cast<long long>(m));
    return gs;
}

} // namespace spectra

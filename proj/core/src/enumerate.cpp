#include "spectra/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "enumerate_internal.hpp"
#include "spectra/errors.hpp"

namespace spectra {

namespace {

// src arrays for every vertex permutation: permuted string position q reads
// the source string at src[q], where the permuted colouring maps edge {i,j}
// to the original edge {pi(i), pi(j)}
std::vector<std::vector<int>> perm_edge_maps(int t) {
    std::vector<int> pi(static_cast<std::size_t>(t));
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> src;
        src.reserve(static_cast<std::size_t>(TemplateColouring::pair_count(t)));
        for (int i = 1; i <= t; ++i)
            for (int j = i + 1; j <= t; ++j) {
                int a = pi[static_cast<std::size_t>(i - 1)];
                int b = pi[static_cast<std::size_t>(j - 1)];
                if (a > b) std::swap(a, b);
                src.push_back(TemplateColouring::pair_index(t, a, b));
            }
        maps.push_back(std::move(src));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return maps;
}

} // namespace

std::vector<Colour> first_use_renumbered(std::span<const Colour> edge_colours, int k,
                                         Colour background) {
    std::vector<Colour> rename(static_cast<std::size_t>(k) + 1, 0);
    rename[static_cast<std::size_t>(background)] = k;
    Colour next = 1;
    std::vector<Colour> out;
    out.reserve(edge_colours.size());
    for (Colour c : edge_colours) {
        if (c < 1 || c > k) throw std::invalid_argument("first_use_renumbered: colour outside [k]");
        auto& r = rename[static_cast<std::size_t>(c)];
        if (r == 0) r = next++;
        out.push_back(r);
    }
    return out;
}

std::vector<Colour> canonical_edge_string(const TemplateColouring& c) {
    if (c.t() > 8) throw BoundError("canonical_edge_string: t <= 8 required");
    const TemplateColouring base = canonical_colours(c); // background = k
    const int k = base.k();
    const auto maps = perm_edge_maps(base.t());
    std::vector<Colour> best;
    std::vector<Colour> permuted(base.edge_colours().size());
    for (const auto& src : maps) {
        for (std::size_t q = 0; q < permuted.size(); ++q)
            permuted[q] = base.edge_colours()[static_cast<std::size_t>(src[q])];
        auto renamed = first_use_renumbered(permuted, k, k);
        if (best.empty() || renamed < best) best = std::move(renamed);
    }
    if (best.empty()) best = {}; // t <= 1: no edges
    return best;
}

TemplateColouring canonical_form(const TemplateColouring& c) {
    return TemplateColouring(c.t(), c.k(), c.k(), canonical_edge_string(c));
}

std::uint64_t raw_template_count(int t, int k) {
    const int e = TemplateColouring::pair_count(t);
    if (k < 1 || e + 1 < k) return 0;
    // inclusion-exclusion over which non-background colours are missing
    __int128 total = 0;
    auto powi = [](__int128 b, int exp) {
        __int128 r = 1;
        while (exp-- > 0) r *= b;
        return r;
    };
    __int128 binom = 1; // C(k-1, j)
    for (int j = 0; j <= k - 1; ++j) {
        const __int128 term = binom * powi(k - j, e);
        total += (j % 2 == 0) ? term : -term;
        binom = binom * (k - 1 - j) / (j + 1);
    }
    if (total < 0 || total > static_cast<__int128>(UINT64_MAX))
        throw BoundError("raw_template_count: out of range");
    return static_cast<std::uint64_t>(total);
}

namespace detail {

OrderlyEnumerator::OrderlyEnumerator(int t, int k)
    : t_(t), k_(k), e_(TemplateColouring::pair_count(t)), s_(static_cast<std::size_t>(e_)) {
    const auto maps = perm_edge_maps(t);
    perms_.reserve(maps.size());
    for (const auto& src : maps) {
        Perm p;
        p.src = src;
        // comparable prefix length given the first `a` positions assigned:
        // the longest q such that every source among the first q is < a
        p.complen.assign(static_cast<std::size_t>(e_) + 1, 0);
        int running_max = -1;
        std::vector<int> prefix_max(static_cast<std::size_t>(e_));
        for (int q = 0; q < e_; ++q) {
            running_max = std::max(running_max, src[static_cast<std::size_t>(q)]);
            prefix_max[static_cast<std::size_t>(q)] = running_max;
        }
        for (int a = 0; a <= e_; ++a) {
            int len = 0;
            while (len < e_ && prefix_max[static_cast<std::size_t>(len)] < a) ++len;
            p.complen[static_cast<std::size_t>(a)] = len;
        }
        perms_.push_back(std::move(p));
    }
}

int OrderlyEnumerator::cmp_perm(const Perm& p, int assigned) const {
    // first-use renaming is prefix-deterministic, so the comparable prefix of
    // the permuted-renamed string is already final
    Colour rename[kMaxTemplateColours + 1] = {0};
    Colour next = 1;
    const int len = p.complen[static_cast<std::size_t>(assigned)];
    for (int q = 0; q < len; ++q) {
        const Colour c = s_[static_cast<std::size_t>(p.src[static_cast<std::size_t>(q)])];
        Colour r;
        if (c == k_) {
            r = k_;
        } else {
            auto& slot = rename[c];
            if (slot == 0) slot = next++;
            r = slot;
        }
        if (r != s_[static_cast<std::size_t>(q)]) return r < s_[static_cast<std::size_t>(q)] ? -1 : 1;
    }
    return 0;
}

void OrderlyEnumerator::rec(int pos, int used, const std::vector<int>& live,
                            const std::function<void(const std::vector<Colour>&)>& visit,
                            int snapshot_depth, std::vector<EnumBlock>* snapshots) {
    if (snapshots != nullptr && pos == snapshot_depth) {
        snapshots->push_back(
            {std::vector<Colour>(s_.begin(), s_.begin() + pos), used, live});
        return;
    }
    if (pos == e_) {
        if (used == k_ - 1) visit(s_);
        return;
    }
    const int rem = e_ - pos - 1;
    const Colour cmax = std::min<Colour>(used + 1, k_ - 1);
    for (Colour step = 1; step <= cmax + 1; ++step) {
        const Colour col = (step == cmax + 1) ? k_ : step; // background tried last
        const int used2 = used + (col != k_ && col == used + 1 ? 1 : 0);
        if (used2 + rem < k_ - 1) continue; // surjectivity unreachable
        s_[static_cast<std::size_t>(pos)] = col;
        bool dominated = false;
        std::vector<int> live2;
        live2.reserve(live.size());
        for (int pi : live) {
            const int r = cmp_perm(perms_[static_cast<std::size_t>(pi)], pos + 1);
            if (r < 0) { dominated = true; break; } // a relabelling is smaller
            if (r == 0) live2.push_back(pi);
        }
        if (!dominated) rec(pos + 1, used2, live2, visit, snapshot_depth, snapshots);
    }
}

void OrderlyEnumerator::run(const std::function<void(const std::vector<Colour>&)>& visit) {
    std::vector<int> live(perms_.size());
    std::iota(live.begin(), live.end(), 0);
    rec(0, 0, live, visit, -1, nullptr);
}

std::vector<EnumBlock> OrderlyEnumerator::blocks(int depth) {
    std::vector<EnumBlock> out;
    std::vector<int> live(perms_.size());
    std::iota(live.begin(), live.end(), 0);
    rec(0, 0, live, {}, depth, &out);
    return out;
}

void OrderlyEnumerator::run_block(const EnumBlock& block, int depth,
                                  const std::function<void(const std::vector<Colour>&)>& visit) {
    std::copy(block.prefix.begin(), block.prefix.end(), s_.begin());
    rec(depth, block.used_nonbg, block.live_perms, visit, -1, nullptr);
}

void OrderlyEnumerator::rec_raw(int pos, std::uint64_t used_mask,
                                const std::function<void(const std::vector<Colour>&)>& visit) {
    if (pos == e_) {
        if (std::popcount(used_mask) == k_ - 1) visit(s_);
        return;
    }
    const int rem = e_ - pos - 1;
    for (Colour col = 1; col <= k_; ++col) {
        const std::uint64_t mask2 = used_mask | (col != k_ ? (1ull << col) : 0);
        if (std::popcount(mask2) + rem < k_ - 1) continue;
        s_[static_cast<std::size_t>(pos)] = col;
        rec_raw(pos + 1, mask2, visit);
    }
}

void OrderlyEnumerator::run_raw(const std::function<void(const std::vector<Colour>&)>& visit) {
    if (k_ > 63) throw BoundError("run_raw: k <= 63 required");
    rec_raw(0, 0, visit);
}

} // namespace detail

EnumStats enumerate_templates(int t, int k, bool up_to_symmetry,
                              const std::function<void(const TemplateColouring&)>& visit,
                              bool force) {
    if (t < 0 || k < 1) throw std::invalid_argument("enumerate_templates: t >= 0, k >= 1");
    if (!force && (t > 6 || k > 10))
        throw BoundError("enumerate_templates: guard t <= 6, k <= 10 (pass force to override)");
    if (k > kMaxTemplateColours)
        throw BoundError("enumerate_templates: k exceeds the colour-mask width");
    EnumStats stats;
    if (TemplateColouring::pair_count(t) + 1 < k) {
        stats.diagnostic = "infeasible: C(t,2)+1 = " +
                           std::to_string(TemplateColouring::pair_count(t) + 1) + " < k = " +
                           std::to_string(k) + ", no surjective template exists";
        return stats;
    }
    detail::OrderlyEnumerator en(t, k);
    auto emit = [&](const std::vector<Colour>& s) {
        ++stats.emitted;
        if (visit) visit(TemplateColouring(t, k, k, s));
    };
    if (up_to_symmetry)
        en.run(emit);
    else
        en.run_raw(emit);
    return stats;
}

} // namespace spectra

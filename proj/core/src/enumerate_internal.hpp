#pragma once

// Shared between enumerate.cpp and search.cpp: the orderly enumerator with its
// work-partitioning hooks. Not installed.

#include <functional>
#include <vector>

#include "spectra/colouring.hpp"

namespace spectra::detail {

// A branch of the search tree: the colour assignment of the first `depth`
// edges, plus the state needed to resume (distinct non-background colours used
// and the vertex permutations still tied with the identity on the comparable
// prefix). Blocks are produced in ascending prefix order, so completing them
// in order yields the same stream as a sequential run.
struct EnumBlock {
    std::vector<Colour> prefix;
    int used_nonbg{0};
    std::vector<int> live_perms;
};

class OrderlyEnumerator {
public:
    OrderlyEnumerator(int t, int k);

    // canonical representatives in ascending canonical-string order
    void run(const std::function<void(const std::vector<Colour>&)>& visit);
    // every valid colouring with background = k, ascending string order
    void run_raw(const std::function<void(const std::vector<Colour>&)>& visit);

    std::vector<EnumBlock> blocks(int depth);
    void run_block(const EnumBlock& block, int depth,
                   const std::function<void(const std::vector<Colour>&)>& visit);

    int edge_count() const { return e_; }
    static int default_block_depth(int edge_count) {
        return edge_count == 0 ? 0 : (edge_count + 3) / 4;
    }

private:
    struct Perm {
        std::vector<int> src;     // permuted string position -> source position
        std::vector<int> complen; // comparable prefix length per assigned count
    };

    int t_, k_, e_;
    std::vector<Perm> perms_;
    std::vector<Colour> s_;

    // -1: permuted prefix smaller (prune); 0: tied; +1: larger (drop perm)
    int cmp_perm(const Perm& p, int assigned) const;
    void rec(int pos, int used, const std::vector<int>& live,
             const std::function<void(const std::vector<Colour>&)>& visit, int snapshot_depth,
             std::vector<EnumBlock>* snapshots);
    void rec_raw(int pos, std::uint64_t used_mask,
                 const std::function<void(const std::vector<Colour>&)>& visit);
};

} // namespace spectra::detail

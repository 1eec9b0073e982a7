#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spectra/colouring.hpp"
#include "spectra/vertex.hpp"

namespace spectra {

// Ordered tuple (X_1,...,X_n) of pairwise disjoint non-empty vertex sets.
// Strong mode: X_1 is the infinite part (includes the whole background class,
// minus any representatives explicitly placed elsewhere) plus finitely many
// absorbed template vertices. Weak mode: |X_1| = 1 and there is no implicit
// part; for lazy colourings every vertex is a plain natural.
struct HomogTuple {
    enum class Mode { Strong, Weak };
    Mode mode{Mode::Strong};
    bool x1_includes_background{false}; // strong only
    std::vector<std::vector<Vertex>> parts;

    int size() const { return static_cast<int>(parts.size()); }
};

// per-level new-colour counts (x_1,...,x_{n-1}); the termination measure
using RankVector = std::vector<int>;

// strict lexicographic order; lengths must agree
bool rank_less(const RankVector& a, const RankVector& b);

struct CheckResult {
    bool ok{false};
    int failed_condition{0}; // 1..5, 0 when ok
    std::string detail;
};

// Checks the five homogeneity conditions in order, stopping at the first
// failure:
//   1 parts non-empty and pairwise disjoint
//   2 strong: X_1 infinite (includes-background) and 1-coloured;
//     weak: |X_1| = 1
//   3 strictly nested prefix spectra
//   4 every v in X_i (i >= 2) has new-colour set exactly the spectrum step
//   5 |last spectrum| <= C(n,2)+1 (strong) or C(n,2) (weak)
CheckResult is_homogeneous(const TemplateColouring& c, const HomogTuple& t);
// weak mode only (an infinite 1-coloured first set is not decidable here)
CheckResult is_homogeneous(const LazyColouring& c, const HomogTuple& t);

// Defined when condition 4 holds (all vertices of a part agree).
RankVector rank_of(const TemplateColouring& c, const HomogTuple& t);
RankVector rank_of(const LazyColouring& c, const HomogTuple& t);

// |spectrum(X_1 ... X_i)| per level (strong mode counts the background)
std::vector<long long> chain_sizes(const TemplateColouring& c, const HomogTuple& t);
std::vector<long long> chain_sizes(const LazyColouring& c, const HomogTuple& t);

// step log sink for --trace and golden tests; one line per extension,
// split, absorption and rank-descent replacement
using TraceFn = std::function<void(const std::string&)>;

// Constructive form of the structural theorem: requires k >= C(n,2)+1 and a
// valid colouring, returns a tuple passing strong-mode is_homogeneous.
// Induction: start from the background class; extend by a vertex with new
// colours (appending it when it brings at most i, otherwise splitting at the
// first level it reaches and realising the remaining colours by singletons);
// when no outside vertex brings new colours, absorb one endpoint of a
// fresh-coloured outside edge and append the other. Absorption that detects a
// strictly smaller new-colour set replaces the tuple by a rank-smaller one and
// retries; lexicographic rank descent terminates. Choice points resolve
// smallest-index-first, so the result is deterministic.
HomogTuple build_homogeneous(const TemplateColouring& c, int n, const TraceFn& trace = {});

struct WeakBuildResult {
    bool found{false};
    HomogTuple tuple;       // valid when found
    int frontier_used{0};   // vertices 1..frontier_used were considered
};

// Same induction with |X_1| = 1 and final bound C(n,2), searching inside
// [vertex_bound]. When stuck the frontier is incremented and the build
// restarts; exhausting vertex_bound is inconclusive, not a counterexample.
WeakBuildResult build_weakly_homogeneous(const LazyColouring& c, int n, int vertex_bound,
                                         const TraceFn& trace = {});

struct CanonicalCheckResult {
    bool pass{false}; // false = inconclusive (builder bound-exhausted)
    std::vector<long long> sizes; // the n-1 distinct witness sizes
    HomogTuple tuple;
};

// Certifies |G ∩ [C(n,2)]| >= n-1 for this colouring: builds a weakly
// homogeneous tuple and confirms its n-1 spectrum sizes are distinct, lie in
// [1, C(n,2)] and are all present in g_set_prefix(c, vertex_bound).
CanonicalCheckResult canonical_check(const LazyColouring& c, int n, int vertex_bound);

std::string tuple_json(const HomogTuple& t);

} // namespace spectra

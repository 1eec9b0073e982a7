#pragma once

#include <vector>

#include "spectra/colouring.hpp"

namespace spectra {

// The achievable exact colour counts over infinite vertex sets, for a template
// colouring. Always contains 1 and k, and 2 when k >= 2.
struct FSet {
    std::vector<int> values; // sorted ascending
    int k{1};

    int size() const { return static_cast<int>(values.size()); }
    bool contains(int m) const;
};

// Achievable exact colour counts over subsets of the prefix [N] with at least
// two vertices; a one-sided approximation of the infinite-colouring G set.
struct GSet {
    std::vector<long long> values; // sorted ascending
    int prefix{2};

    bool contains(long long m) const;
};

// { |spectrum(S) + background| : S subset of the template }. Exact: every
// infinite vertex set splits into a template part and an infinite background
// part, which contributes exactly the background colour. Enumerates all 2^t
// subsets in Gray-code order; guard t <= 24.
FSet f_set(const TemplateColouring& c);

// { |colours inside S| : S subset of [N], |S| >= 2 }; 2 <= N <= 24.
GSet g_set_prefix(const LazyColouring& c, int n);

} // namespace spectra

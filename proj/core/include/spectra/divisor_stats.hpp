#pragma once

#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

// Count of naturals n <= x with an integer divisor d, y < d <= z. Sieve of
// multiples over a bitset; endpoints compared exactly as rationals.
// Guard x <= 10^8.
long long h_count(long long x, const Rat& y, const Rat& z, bool force = false);

// |{ab : a,b <= n}| by product marking; guard n <= 10^5 (n^2 bits).
long long mult_table_size(long long n, bool force = false);

// k is in A iff k-1 = ab for some ln(k) <= a <= b. Natural log throughout.
bool in_A(long long k);

struct DensityPoint {
    long long x{0};
    long long count{0}; // |A ∩ [2,x]|
    double density() const { return x > 1 ? static_cast<double>(count) / static_cast<double>(x - 1) : 0.0; }
};

// guard x <= 10^7
DensityPoint density_A(long long x, bool force = false);

// |{a'b' : 0 <= a' <= a, 0 <= b' <= b}|, i.e. the F-set size of the bipartite
// rainbow colouring with sides a, b (the zero product is the all-background
// value 1). Sides normalised so a <= b; guard ab <= 10^8.
long long bipartite_f_size(long long a, long long b, bool force = false);

struct ProofSum {
    long long sum{0};
    bool holds{false}; // product-set size <= sum
};

// The dyadic sum  sum_i h_count(floor(ab/2^i), a/2^{i+1}, a/2^i)  over i with
// 2^i <= a, checked against the exact positive-product count. Guard ab <= 10^6.
ProofSum proof_sum_bound(long long a, long long b, bool force = false);

// 1 - (1 + ln ln 2)/ln 2 = 0.08607133...
double delta();

// k / ((ln ln k)^delta (ln ln ln k)^{3/2}); requires k >= 16 so the inner
// logarithm is positive.
double upper_bound_fn(long long k);

struct EvidenceRow {
    long long k{0};
    bool member{false}; // in_A(k)
    long long a{0}, b{0}; // factorisation minimising the F size (ties: smallest a)
    long long f_size{0};
    double upper_bound{0.0};
    double ratio{0.0};
};

// requires k >= 16; rows for k outside A carry member=false and zeros
EvidenceRow evidence_row(long long k);

// deterministic sample of A ∩ [16, 10^6]: the least member of each decade
std::vector<long long> default_evidence_sample();

} // namespace spectra

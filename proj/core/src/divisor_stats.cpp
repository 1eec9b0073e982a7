#include "spectra/divisor_stats.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

struct MarkSet {
    std::vector<std::uint64_t> words;
    explicit MarkSet(long long bits)
        : words(static_cast<std::size_t>(bits / 64 + 1), 0) {}
    void set(long long i) { words[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    long long count() const {
        long long total = 0;
        for (std::uint64_t w : words) total += std::popcount(w);
        return total;
    }
};

bool log_le(long long k, long long a) {
    // ln k <= a; ln k is irrational for k >= 2, so doubles decide this exactly
    // at these scales
    return std::log(static_cast<double>(k)) <= static_cast<double>(a);
}

} // namespace

long long h_count(long long x, const Rat& y, const Rat& z, bool force) {
    if (x < 1) throw std::invalid_argument("h_count: x >= 1");
    if (y < Rat(0) || !(y < z)) throw std::invalid_argument("h_count: 0 <= y < z required");
    if (x > 100'000'000 && !force) throw BoundError("h_count: x <= 1e8 (pass force to override)");
    const long long dmin = std::max(1LL, y.floor_val() + 1); // smallest integer > y
    const long long dmax = std::min(z.floor_val(), x);
    if (dmin > dmax) return 0;
    MarkSet marks(x);
    for (long long d = dmin; d <= dmax; ++d)
        for (long long m = d; m <= x; m += d) marks.set(m);
    return marks.count();
}

long long mult_table_size(long long n, bool force) {
    if (n < 1) throw std::invalid_argument("mult_table_size: n >= 1");
    if (n > 100'000 && !force) throw BoundError("mult_table_size: n <= 1e5 (n^2 bits)");
    MarkSet marks(n * n);
    for (long long a = 1; a <= n; ++a)
        for (long long m = a * a; m <= a * n; m += a) marks.set(m);
    return marks.count();
}

bool in_A(long long k) {
    if (k < 2) throw std::invalid_argument("in_A: k >= 2");
    const long long m = k - 1;
    for (long long a = 1; a * a <= m; ++a)
        if (m % a == 0 && log_le(k, a)) return true;
    return false;
}

DensityPoint density_A(long long x, bool force) {
    if (x < 2) throw std::invalid_argument("density_A: x >= 2");
    if (x > 10'000'000 && !force) throw BoundError("density_A: x <= 1e7 (pass force to override)");
    MarkSet marks(x);
    for (long long a = 1; a * a <= x - 1; ++a) {
        const long long bhi = (x - 1) / a;
        if (bhi < a) break;
        long long cap;
        if (log_le(x, a)) {
            cap = bhi; // every k <= x already satisfies ln k <= a
        } else {
            cap = static_cast<long long>((std::exp(static_cast<double>(a)) - 1.0) /
                                         static_cast<double>(a));
            while (cap > 0 && !log_le(a * cap + 1, a)) --cap;
            while (log_le(a * (cap + 1) + 1, a)) ++cap;
            if (cap > bhi) cap = bhi;
        }
        for (long long b = a; b <= cap; ++b) marks.set(a * b + 1);
    }
    return {x, marks.count()};
}

long long bipartite_f_size(long long a, long long b, bool force) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite_f_size: a, b >= 1");
    if (a > b) std::swap(a, b);
    if (a * b > 100'000'000 && !force)
        throw BoundError("bipartite_f_size: ab <= 1e8 (pass force to override)");
    MarkSet marks(a * b);
    for (long long ap = 1; ap <= a; ++ap)
        for (long long m = ap; m <= ap * b; m += ap) marks.set(m);
    return marks.count() + 1; // the empty product stands for the all-background value
}

ProofSum proof_sum_bound(long long a, long long b, bool force) {
    if (a < 1 || b < 1) throw std::invalid_argument("proof_sum_bound: a, b >= 1");
    if (a > b) std::swap(a, b);
    if (a * b > 1'000'000 && !force)
        throw BoundError("proof_sum_bound: ab <= 1e6 (pass force to override)");
    long long sum = 0;
    for (int i = 0; (1LL << i) <= a; ++i) {
        const long long x = (a * b) >> i;
        sum += h_count(x, Rat(a, 1LL << (i + 1)), Rat(a, 1LL << i), force);
    }
    const long long products = bipartite_f_size(a, b, force) - 1;
    return {sum, products <= sum};
}

double delta() {
    const double ln2 = std::log(2.0);
    return 1.0 - (1.0 + std::log(ln2)) / ln2;
}

double upper_bound_fn(long long k) {
    if (k < 16) throw std::domain_error("upper_bound_fn: k >= 16 (ln ln ln k must be positive)");
    const double lll = std::log(std::log(std::log(static_cast<double>(k))));
    const double ll = std::log(std::log(static_cast<double>(k)));
    return static_cast<double>(k) / (std::pow(ll, delta()) * std::pow(lll, 1.5));
}

EvidenceRow evidence_row(long long k) {
    if (k < 16) throw std::invalid_argument("evidence_row: k >= 16");
    EvidenceRow row;
    row.k = k;
    row.member = in_A(k);
    row.upper_bound = upper_bound_fn(k);
    if (!row.member) return row;
    const long long m = k - 1;
    for (long long a = 1; a * a <= m; ++a) {
        if (m % a != 0 || !log_le(k, a)) continue;
        const long long f = bipartite_f_size(a, m / a);
        if (row.a == 0 || f < row.f_size) {
            row.a = a;
            row.b = m / a;
            row.f_size = f;
        }
    }
    row.ratio = static_cast<double>(row.f_size) / row.upper_bound;
    return row;
}

std::vector<long long> default_evidence_sample() {
    return {16, 100, 1000, 10000, 100000, 1000000};
}

} // namespace spectra

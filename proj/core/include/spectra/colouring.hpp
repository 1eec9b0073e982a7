#pragma once

#include <bitset>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/vertex.hpp"

namespace spectra {

// Fixed width of the template colour universe. Wide enough for every
// constructor exercised here (bipartite_rainbow(8,8) needs k = 65).
inline constexpr int kMaxTemplateColours = 128;

// bit c set <=> colour c present; bit 0 unused (colour ids are 1-based)
using ColourMask = std::bitset<kMaxTemplateColours + 1>;

// A finite set of colour ids, sorted ascending.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<Colour> colours);
    static Spectrum from_mask(const ColourMask& mask);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(Colour c) const;
    const std::vector<Colour>& values() const { return values_; }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<Colour> values_;
};

// Finite encoding of a surjective k-colouring of the pairs of naturals:
// arbitrary colours on the complete graph over the t template vertices, one
// background colour on every edge that leaves the template. Colour ids live in
// [k]; the background colour is explicit and need not equal k. An edge colour
// of 0 marks an unassigned pair; it is representable so validate() can report
// it, but every operation demands fully assigned, valid colourings.
class TemplateColouring {
public:
    // the degenerate all-background colouring (t = 0, k = 1)
    TemplateColouring() = default;
    // Throws std::invalid_argument on structural nonsense (t < 0, k outside
    // [1, kMaxTemplateColours], background outside [k], wrong vector length).
    // Colour-level violations are validate()'s business.
    TemplateColouring(int t, int k, Colour background, std::vector<Colour> edge_colours);

    int t() const { return t_; }
    int k() const { return k_; }
    Colour background() const { return background_; }

    // 1 <= i < j <= t
    Colour edge_colour(int i, int j) const;
    const std::vector<Colour>& edge_colours() const { return edge_colours_; }

    static int pair_count(int t) { return t * (t - 1) / 2; }
    // index of {i,j} (i<j) in lexicographic pair order (1,2),(1,3),...,(t-1,t)
    static int pair_index(int t, int i, int j);

    friend bool operator==(const TemplateColouring&, const TemplateColouring&) = default;

private:
    int t_{0};
    int k_{1};
    Colour background_{1};
    std::vector<Colour> edge_colours_;
};

// All invariant violations, not just the first; empty means valid.
std::vector<std::string> validate(const TemplateColouring& c);

// rainbow K_n plus one background colour; k = C(n,2)+1
TemplateColouring small_rainbow(int n);
// distinct colours on the complete bipartite graph between [a] and the next b
// vertices, background everywhere else; k = ab+1
TemplateColouring bipartite_rainbow(int a, int b);
// each edge of G a distinct colour, every non-edge and the outside background;
// k = |E(G)|+1, G must have at least one edge
TemplateColouring embed_graph_rainbow(const SimpleGraph& g);

// Exact set of colours attained on pairs inside S. Template indices must lie
// in [t]; two background representatives (or one plus any template vertex)
// put the background colour in the result.
Spectrum spectrum(const TemplateColouring& c, std::span<const Vertex> s);
// N(v, X): colours on edges v-X that are absent from X's internal spectrum.
// Requires v not in X.
Spectrum new_colours(const TemplateColouring& c, Vertex v, std::span<const Vertex> x);

// A pure deterministic pair -> colour function modelling an infinite
// colouring. Symmetric in its arguments; repeated evaluation must agree.
class LazyColouring {
public:
    using Fn = std::function<Colour(long long, long long)>;
    LazyColouring(std::string name, Fn fn);

    Colour operator()(long long i, long long j) const; // i != j
    const std::string& name() const { return name_; }

    static const LazyColouring& injective();        // every pair its own colour
    static const LazyColouring& constant();         // one colour (not infinite)
    static const LazyColouring& min_of_endpoints(); // colour(i,j) = min(i,j)

    static const LazyColouring* find(std::string_view name);
    static std::vector<std::string> names();

private:
    std::string name_;
    Fn fn_;
};

Spectrum spectrum(const LazyColouring& c, std::span<const long long> s);

// Colour renumbering only (no vertex relabelling): background becomes k,
// the other colours 1..k-1 in order of first use along the edge list.
TemplateColouring canonical_colours(const TemplateColouring& c);

// Canonical witness file format:
//   {"t":4,"k":5,"background":5,"edges":[[1,2,1],[1,3,2],...]}
// with i<j, pairs sorted lexicographically, colours canonically renumbered.
std::string to_witness_json(const TemplateColouring& c);
// Throws ValidationError when the encoded colouring fails validate(), and
// std::invalid_argument on malformed files.
TemplateColouring witness_from_json(const std::string& text);

void write_witness_file(const TemplateColouring& c, const std::filesystem::path& path);
TemplateColouring load_witness_file(const std::filesystem::path& path);

} // namespace spectra

#include "spectra/colouring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spectra/errors.hpp"

namespace spectra {

Spectrum::Spectrum(std::vector<Colour> colours) : values_(std::move(colours)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Spectrum Spectrum::from_mask(const ColourMask& mask) {
    std::vector<Colour> v;
    for (int c = 1; c <= kMaxTemplateColours; ++c)
        if (mask.test(static_cast<std::size_t>(c))) v.push_back(c);
    Spectrum s;
    s.values_ = std::move(v);
    return s;
}

bool Spectrum::contains(Colour c) const {
    return std::binary_search(values_.begin(), values_.end(), c);
}

TemplateColouring::TemplateColouring(int t, int k, Colour background,
                                     std::vector<Colour> edge_colours)
    : t_(t), k_(k), background_(background), edge_colours_(std::move(edge_colours)) {
    if (t < 0) throw std::invalid_argument("TemplateColouring: t < 0");
    if (k < 1 || k > kMaxTemplateColours)
        throw std::invalid_argument("TemplateColouring: k outside [1," +
                                    std::to_string(kMaxTemplateColours) + "]");
    if (background < 1 || background > k)
        throw std::invalid_argument("TemplateColouring: background outside [k]");
    if (static_cast<int>(edge_colours_.size()) != pair_count(t))
        throw std::invalid_argument("TemplateColouring: expected " +
                                    std::to_string(pair_count(t)) + " edge colours, got " +
                                    std::to_string(edge_colours_.size()));
}

int TemplateColouring::pair_index(int t, int i, int j) {
    if (!(1 <= i && i < j && j <= t)) throw std::out_of_range("pair_index: need 1 <= i < j <= t");
    // lexicographic: all pairs starting below i come first
    return (i - 1) * t - (i * (i - 1)) / 2 + (j - i - 1);
}

Colour TemplateColouring::edge_colour(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edge_colours_[static_cast<std::size_t>(pair_index(t_, i, j))];
}

std::vector<std::string> validate(const TemplateColouring& c) {
    std::vector<std::string> violations;
    std::vector<char> seen(static_cast<std::size_t>(c.k()) + 1, 0);
    seen[static_cast<std::size_t>(c.background())] = 1;
    int idx = 0;
    for (int i = 1; i <= c.t(); ++i) {
        for (int j = i + 1; j <= c.t(); ++j, ++idx) {
            const Colour col = c.edge_colours()[static_cast<std::size_t>(idx)];
            if (col == 0) {
                violations.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") unassigned");
            } else if (col < 1 || col > c.k()) {
                violations.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") carries colour " + std::to_string(col) + " outside [k]");
            } else {
                seen[static_cast<std::size_t>(col)] = 1;
            }
        }
    }
    for (Colour col = 1; col <= c.k(); ++col)
        if (!seen[static_cast<std::size_t>(col)])
            violations.push_back("colour " + std::to_string(col) + " unused");
    return violations;
}

TemplateColouring small_rainbow(int n) {
    if (n < 2) throw std::invalid_argument("small_rainbow: n >= 2 required");
    const int e = TemplateColouring::pair_count(n);
    std::vector<Colour> cols(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
    return TemplateColouring(n, e + 1, e + 1, std::move(cols));
}

TemplateColouring bipartite_rainbow(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite_rainbow: a, b >= 1 required");
    const int t = a + b;
    const Colour bg = static_cast<Colour>(a) * b + 1;
    std::vector<Colour> cols(static_cast<std::size_t>(TemplateColouring::pair_count(t)), bg);
    Colour next = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= t; ++j)
            cols[static_cast<std::size_t>(TemplateColouring::pair_index(t, i, j))] = next++;
    return TemplateColouring(t, static_cast<int>(bg), bg, std::move(cols));
}

TemplateColouring embed_graph_rainbow(const SimpleGraph& g) {
    if (g.edge_count() < 1)
        throw std::invalid_argument("embed_graph_rainbow: graph needs at least one edge");
    const int t = g.n();
    const Colour bg = g.edge_count() + 1;
    std::vector<Colour> cols(static_cast<std::size_t>(TemplateColouring::pair_count(t)), bg);
    Colour next = 1;
    for (const auto& [i, j] : g.edges())
        cols[static_cast<std::size_t>(TemplateColouring::pair_index(t, i, j))] = next++;
    return TemplateColouring(t, static_cast<int>(bg), bg, std::move(cols));
}

namespace {

// splits S into distinct template indices (checked against t) and the number
// of distinct background representatives
struct SplitSet {
    std::vector<int> tpl;
    std::size_t background_reps{0};
};

SplitSet split_vertex_set(const TemplateColouring& c, std::span<const Vertex> s) {
    SplitSet out;
    std::set<long long> reps;
    for (const Vertex& v : s) {
        if (v.is_template()) {
            if (v.id < 1 || v.id > c.t())
                throw std::out_of_range("template vertex " + std::to_string(v.id) +
                                        " outside [" + std::to_string(c.t()) + "]");
            out.tpl.push_back(static_cast<int>(v.id));
        } else {
            reps.insert(v.id);
        }
    }
    std::sort(out.tpl.begin(), out.tpl.end());
    out.tpl.erase(std::unique(out.tpl.begin(), out.tpl.end()), out.tpl.end());
    out.background_reps = reps.size();
    return out;
}

ColourMask mask_of(const TemplateColouring& c, const SplitSet& s) {
    ColourMask m;
    for (std::size_t a = 0; a < s.tpl.size(); ++a)
        for (std::size_t b = a + 1; b < s.tpl.size(); ++b)
            m.set(static_cast<std::size_t>(c.edge_colour(s.tpl[a], s.tpl[b])));
    const bool background_pair =
        s.background_reps >= 2 || (s.background_reps >= 1 && !s.tpl.empty());
    if (background_pair) m.set(static_cast<std::size_t>(c.background()));
    return m;
}

} // namespace

Spectrum spectrum(const TemplateColouring& c, std::span<const Vertex> s) {
    return Spectrum::from_mask(mask_of(c, split_vertex_set(c, s)));
}

Spectrum new_colours(const TemplateColouring& c, Vertex v, std::span<const Vertex> x) {
    for (const Vertex& u : x)
        if (u == v) throw std::invalid_argument("new_colours: v must not lie in X");
    const SplitSet sx = split_vertex_set(c, x);
    const ColourMask inside = mask_of(c, sx);
    ColourMask from_v;
    if (v.is_template()) {
        if (v.id < 1 || v.id > c.t())
            throw std::out_of_range("template vertex " + std::to_string(v.id) + " outside [" +
                                    std::to_string(c.t()) + "]");
        for (int u : sx.tpl)
            from_v.set(static_cast<std::size_t>(c.edge_colour(static_cast<int>(v.id), u)));
        if (sx.background_reps >= 1) from_v.set(static_cast<std::size_t>(c.background()));
    } else {
        if (!sx.tpl.empty() || sx.background_reps >= 1)
            from_v.set(static_cast<std::size_t>(c.background()));
    }
    return Spectrum::from_mask(from_v & ~inside);
}

LazyColouring::LazyColouring(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::move(fn)) {
    if (!fn_) throw std::invalid_argument("LazyColouring: empty function");
}

Colour LazyColouring::operator()(long long i, long long j) const {
    if (i == j) throw std::invalid_argument("LazyColouring: i != j required");
    if (i > j) std::swap(i, j);
    return fn_(i, j);
}

const LazyColouring& LazyColouring::injective() {
    static const LazyColouring c("injective", [](long long i, long long j) {
        // pairs numbered along increasing j: (1,2)=1, (1,3)=2, (2,3)=3, (1,4)=4, ...
        return (j - 1) * (j - 2) / 2 + i;
    });
    return c;
}

const LazyColouring& LazyColouring::constant() {
    static const LazyColouring c("constant", [](long long, long long) { return Colour{1}; });
    return c;
}

const LazyColouring& LazyColouring::min_of_endpoints() {
    static const LazyColouring c("min", [](long long i, long long) { return i; });
    return c;
}

const LazyColouring* LazyColouring::find(std::string_view name) {
    if (name == "injective") return &injective();
    if (name == "constant") return &constant();
    if (name == "min") return &min_of_endpoints();
    return nullptr;
}

std::vector<std::string> LazyColouring::names() { return {"injective", "constant", "min"}; }

Spectrum spectrum(const LazyColouring& c, std::span<const long long> s) {
    std::vector<long long> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Colour> cols;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) cols.push_back(c(v[a], v[b]));
    return Spectrum(std::move(cols));
}

TemplateColouring canonical_colours(const TemplateColouring& c) {
    const auto violations = validate(c);
    if (!violations.empty())
        throw ValidationError("canonical_colours: invalid colouring: " + violations.front());
    std::vector<Colour> rename(static_cast<std::size_t>(c.k()) + 1, 0);
    rename[static_cast<std::size_t>(c.background())] = c.k();
    Colour next = 1;
    std::vector<Colour> out;
    out.reserve(c.edge_colours().size());
    for (Colour col : c.edge_colours()) {
        auto& r = rename[static_cast<std::size_t>(col)];
        if (r == 0) r = next++;
        out.push_back(r);
    }
    return TemplateColouring(c.t(), c.k(), c.k(), std::move(out));
}

} // namespace spectra

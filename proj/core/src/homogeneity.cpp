#include "spectra/homogeneity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spectra/errors.hpp"
#include "spectra/fset.hpp"

namespace spectra {

bool rank_less(const RankVector& a, const RankVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank_less: length mismatch");
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Evaluates edge colours for either colouring model. Template rules: any pair
// touching the background class is background-coloured.
struct ColourCtx {
    const TemplateColouring* tc{nullptr};
    const LazyColouring* lc{nullptr};

    Colour edge(const Vertex& a, const Vertex& b) const {
        if (tc != nullptr) {
            if (a.is_template() && b.is_template())
                return tc->edge_colour(static_cast<int>(std::min(a.id, b.id)),
                                       static_cast<int>(std::max(a.id, b.id)));
            return tc->background();
        }
        if (a.is_template() || b.is_template())
            throw std::invalid_argument("lazy colouring: vertices must be plain naturals");
        return (*lc)(a.id, b.id);
    }

    void check_vertex(const Vertex& v) const {
        if (tc != nullptr && v.is_template() && (v.id < 1 || v.id > tc->t()))
            throw std::out_of_range("template vertex " + std::to_string(v.id) + " outside [" +
                                    std::to_string(tc->t()) + "]");
    }
};

std::string set_str(const std::set<Colour>& s) {
    std::string out = "{";
    for (Colour c : s) out += (out.size() > 1 ? "," : "") + std::to_string(c);
    return out + "}";
}

struct TupleView {
    const HomogTuple& t;
    const ColourCtx& ctx;
    bool infinite_x1; // strong mode with the implicit background part

    // spectrum of X_1 ... X_levels (explicit pairs; plus the background colour
    // carried by the infinite part and its edges)
    std::set<Colour> prefix_spectrum(int levels) const {
        std::set<Colour> s;
        if (infinite_x1) s.insert(ctx.tc->background());
        std::vector<const Vertex*> seen;
        for (int i = 0; i < levels; ++i)
            for (const Vertex& v : t.parts[static_cast<std::size_t>(i)]) {
                for (const Vertex* u : seen) s.insert(ctx.edge(*u, v));
                seen.push_back(&v);
            }
        return s;
    }

    std::set<Colour> new_colours_into_prefix(const Vertex& v, int levels,
                                             const std::set<Colour>& spect) const {
        std::set<Colour> out;
        if (infinite_x1 && !spect.count(ctx.tc->background()))
            out.insert(ctx.tc->background()); // v joins the infinite part by background
        for (int i = 0; i < levels; ++i)
            for (const Vertex& u : t.parts[static_cast<std::size_t>(i)]) {
                const Colour c = ctx.edge(u, v);
                if (!spect.count(c)) out.insert(c);
            }
        return out;
    }
};

CheckResult fail(int cond, std::string detail) { return {false, cond, std::move(detail)}; }

CheckResult check(const ColourCtx& ctx, const HomogTuple& t) {
    const bool strong = t.mode == HomogTuple::Mode::Strong;
    if (strong && ctx.tc == nullptr)
        throw std::invalid_argument("is_homogeneous: strong mode needs a template colouring");
    const int n = t.size();
    if (n < 1) return fail(1, "empty tuple");

    // condition 1: non-empty, pairwise disjoint
    std::set<Vertex> all;
    for (int i = 0; i < n; ++i) {
        const auto& part = t.parts[static_cast<std::size_t>(i)];
        if (part.empty() && !(strong && i == 0 && t.x1_includes_background))
            return fail(1, "X" + std::to_string(i + 1) + " empty");
        for (const Vertex& v : part) {
            ctx.check_vertex(v);
            if (!all.insert(v).second)
                return fail(1, to_string(v) + " appears twice");
        }
    }

    // condition 2
    if (strong) {
        if (!t.x1_includes_background)
            return fail(2, "X1 lacks the infinite background part");
        const auto& x1 = t.parts[0];
        for (std::size_t a = 0; a < x1.size(); ++a)
            for (std::size_t b = a + 1; b < x1.size(); ++b)
                if (ctx.edge(x1[a], x1[b]) != ctx.tc->background())
                    return fail(2, "X1 pair " + to_string(x1[a]) + "-" + to_string(x1[b]) +
                                       " not background-coloured");
    } else {
        if (t.x1_includes_background) return fail(2, "weak mode has no infinite part");
        if (t.parts[0].size() != 1) return fail(2, "|X1| != 1");
    }

    const TupleView view{t, ctx, strong && t.x1_includes_background};

    // condition 3: strictly nested prefix spectra
    std::vector<std::set<Colour>> spectra;
    spectra.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) spectra.push_back(view.prefix_spectrum(i));
    for (int i = 1; i < n; ++i) {
        const auto& a = spectra[static_cast<std::size_t>(i - 1)];
        const auto& b = spectra[static_cast<std::size_t>(i)];
        if (!(a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())))
            return fail(3, "spectrum of X1..X" + std::to_string(i) +
                               " not strictly inside the next: " + set_str(a) + " vs " +
                               set_str(b));
    }

    // condition 4: every vertex of X_i realises exactly the spectrum step
    for (int i = 2; i <= n; ++i) {
        std::set<Colour> step;
        std::set_difference(spectra[static_cast<std::size_t>(i - 1)].begin(),
                            spectra[static_cast<std::size_t>(i - 1)].end(),
                            spectra[static_cast<std::size_t>(i - 2)].begin(),
                            spectra[static_cast<std::size_t>(i - 2)].end(),
                            std::inserter(step, step.begin()));
        for (const Vertex& v : t.parts[static_cast<std::size_t>(i - 1)]) {
            const auto nv = view.new_colours_into_prefix(
                v, i - 1, spectra[static_cast<std::size_t>(i - 2)]);
            if (nv != step)
                return fail(4, "N(" + to_string(v) + ", X1..X" + std::to_string(i - 1) +
                                   ") = " + set_str(nv) + " != " + set_str(step));
        }
    }

    // condition 5
    const long long bound = static_cast<long long>(n) * (n - 1) / 2 + (strong ? 1 : 0);
    const long long got = static_cast<long long>(spectra.back().size());
    if (got > bound)
        return fail(5, "|spectrum| = " + std::to_string(got) + " > " + std::to_string(bound));

    return {true, 0, ""};
}

RankVector rank_from(const ColourCtx& ctx, const HomogTuple& t) {
    const bool strong = t.mode == HomogTuple::Mode::Strong;
    const TupleView view{t, ctx, strong && t.x1_includes_background};
    RankVector r;
    for (int i = 2; i <= t.size(); ++i) {
        const auto spect = view.prefix_spectrum(i - 1);
        const auto& part = t.parts[static_cast<std::size_t>(i - 1)];
        if (part.empty()) throw std::invalid_argument("rank_of: empty part");
        std::set<Colour> first = view.new_colours_into_prefix(part[0], i - 1, spect);
        for (std::size_t a = 1; a < part.size(); ++a)
            if (view.new_colours_into_prefix(part[a], i - 1, spect) != first)
                throw std::invalid_argument(
                    "rank_of: vertices of X" + std::to_string(i) + " disagree");
        r.push_back(static_cast<int>(first.size()));
    }
    return r;
}

std::vector<long long> sizes_from(const ColourCtx& ctx, const HomogTuple& t) {
    const bool strong = t.mode == HomogTuple::Mode::Strong;
    const TupleView view{t, ctx, strong && t.x1_includes_background};
    std::vector<long long> out;
    for (int i = 1; i <= t.size(); ++i)
        out.push_back(static_cast<long long>(view.prefix_spectrum(i).size()));
    return out;
}

} // namespace

CheckResult is_homogeneous(const TemplateColouring& c, const HomogTuple& t) {
    ColourCtx ctx;
    ctx.tc = &c;
    return check(ctx, t);
}

CheckResult is_homogeneous(const LazyColouring& c, const HomogTuple& t) {
    if (t.mode == HomogTuple::Mode::Strong)
        throw std::invalid_argument("is_homogeneous: strong mode needs a template colouring");
    ColourCtx ctx;
    ctx.lc = &c;
    return check(ctx, t);
}

RankVector rank_of(const TemplateColouring& c, const HomogTuple& t) {
    ColourCtx ctx;
    ctx.tc = &c;
    return rank_from(ctx, t);
}

RankVector rank_of(const LazyColouring& c, const HomogTuple& t) {
    ColourCtx ctx;
    ctx.lc = &c;
    return rank_from(ctx, t);
}

std::vector<long long> chain_sizes(const TemplateColouring& c, const HomogTuple& t) {
    ColourCtx ctx;
    ctx.tc = &c;
    return sizes_from(ctx, t);
}

std::vector<long long> chain_sizes(const LazyColouring& c, const HomogTuple& t) {
    ColourCtx ctx;
    ctx.lc = &c;
    return sizes_from(ctx, t);
}

namespace {

// Builder working state over integer vertex ids: template indices in strong
// mode (the infinite background part of X_1 is implicit), plain naturals in
// weak mode.
struct Build {
    const TemplateColouring* tc{nullptr};
    const LazyColouring* lc{nullptr};
    bool strong{false};
    int universe{0};
    std::vector<std::vector<int>> parts;
    TraceFn trace;

    Colour col(int u, int v) const {
        if (tc != nullptr)
            return tc->edge_colour(std::min(u, v), std::max(u, v));
        return (*lc)(u, v);
    }

    std::string vname(int v) const { return strong ? "T" + std::to_string(v) : std::to_string(v); }

    void log(const std::string& line) const {
        if (trace) trace(line);
    }

    std::set<Colour> prefix_spectrum(int levels) const {
        std::set<Colour> s;
        if (strong) s.insert(tc->background());
        std::vector<int> seen;
        for (int i = 0; i < levels; ++i)
            for (int v : parts[static_cast<std::size_t>(i)]) {
                for (int u : seen) s.insert(col(u, v));
                seen.push_back(v);
            }
        return s;
    }

    std::set<Colour> new_cols(int v, int levels, const std::set<Colour>& spect) const {
        std::set<Colour> out;
        for (int i = 0; i < levels; ++i)
            for (int u : parts[static_cast<std::size_t>(i)]) {
                const Colour c = col(u, v);
                if (!spect.count(c)) out.insert(c);
            }
        return out;
    }

    std::vector<int> unused() const {
        std::vector<char> used(static_cast<std::size_t>(universe) + 1, 0);
        for (const auto& part : parts)
            for (int v : part) used[static_cast<std::size_t>(v)] = 1;
        std::vector<int> out;
        for (int v = 1; v <= universe; ++v)
            if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    std::vector<int> members_upto(int levels) const {
        std::vector<int> out;
        for (int i = 0; i < levels; ++i)
            for (int v : parts[static_cast<std::size_t>(i)]) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

    HomogTuple to_tuple() const {
        HomogTuple t;
        t.mode = strong ? HomogTuple::Mode::Strong : HomogTuple::Mode::Weak;
        t.x1_includes_background = strong;
        for (const auto& part : parts) {
            std::vector<Vertex> vs;
            for (int v : part) vs.push_back(strong ? Vertex::tpl(v) : Vertex::nat(v));
            t.parts.push_back(std::move(vs));
        }
        return t;
    }

    RankVector rank() const {
        RankVector r;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const auto spect = prefix_spectrum(static_cast<int>(i));
            r.push_back(static_cast<int>(new_cols(parts[i][0], static_cast<int>(i), spect).size()));
        }
        return r;
    }

    void assert_homog(const char* where) const {
        const HomogTuple t = to_tuple();
        const CheckResult res = tc != nullptr ? is_homogeneous(*tc, t) : is_homogeneous(*lc, t);
        if (!res.ok)
            throw std::logic_error(std::string("builder: tuple invalid after ") + where +
                                   " (condition " + std::to_string(res.failed_condition) +
                                   ": " + res.detail + ")");
    }
};

std::string rank_str(const RankVector& r) {
    std::string out = "(";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    return out + ")";
}

// One step of the induction: extend the tuple by one part (true), descend to a
// rank-smaller tuple of the same length (true), or report a dead end (false,
// weak mode only). Choice points resolve smallest-index, smallest-colour first.
bool advance(Build& b) {
    const int i = static_cast<int>(b.parts.size());
    const auto spect_i = b.prefix_spectrum(i);

    // extension by a vertex with new colours
    for (int v : b.unused()) {
        const auto big = b.new_cols(v, i, spect_i);
        if (big.empty()) continue;
        if (static_cast<int>(big.size()) <= i) {
            b.parts.push_back({v});
            b.log("extend v=" + b.vname(v) + " |N|=" + std::to_string(big.size()) +
                  " -> n=" + std::to_string(i + 1));
            b.assert_homog("extend");
            return true;
        }
        // too many new colours: split at the first level v reaches, keep the
        // vertices of that level compatible with one chosen colour, then
        // realise i-j further colours by singletons
        int j = 1;
        std::set<Colour> nj;
        for (; j <= i; ++j) {
            nj = b.new_cols(v, j, b.prefix_spectrum(j));
            if (!nj.empty()) break;
        }
        const Colour c = *nj.begin();
        const auto spect_j = b.prefix_spectrum(j);
        std::vector<int> kept;
        for (int u : b.parts[static_cast<std::size_t>(j - 1)]) {
            const Colour cu = b.col(u, v);
            if (cu == c || spect_j.count(cu)) kept.push_back(u);
        }
        if (kept.empty() && !(b.strong && j == 1))
            throw std::logic_error("builder: split emptied a part");

        std::vector<int> singles;
        const auto members = b.members_upto(i);
        for (Colour d : big) {
            if (d == c) continue;
            if (static_cast<int>(singles.size()) == i - j) break;
            int pick = 0;
            for (int u : members)
                if (b.col(u, v) == d) { pick = u; break; }
            if (pick == 0) throw std::logic_error("builder: no vertex realises a new colour");
            singles.push_back(pick);
        }
        if (static_cast<int>(singles.size()) != i - j)
            throw std::logic_error("builder: not enough distinct new colours");

        std::vector<std::vector<int>> next(b.parts.begin(), b.parts.begin() + (j - 1));
        next.push_back(kept);
        next.push_back({v});
        for (int u : singles) next.push_back({u});
        b.parts = std::move(next);
        b.log("split v=" + b.vname(v) + " j=" + std::to_string(j) + " c=" + std::to_string(c) +
              " keep=" + std::to_string(kept.size()) + " -> n=" + std::to_string(i + 1));
        b.assert_homog("split");
        return true;
    }

    // no outside vertex brings new colours: look for a fresh-coloured edge
    // entirely outside the tuple
    const auto outside = b.unused();
    int v1 = 0, v2 = 0;
    Colour fresh = 0;
    for (std::size_t a = 0; a < outside.size() && v1 == 0; ++a)
        for (std::size_t bb = a + 1; bb < outside.size(); ++bb) {
            const Colour cc = b.col(outside[a], outside[bb]);
            if (!spect_i.count(cc)) {
                v1 = outside[a];
                v2 = outside[bb];
                fresh = cc;
                break;
            }
        }
    if (v1 == 0) return false; // colours exhausted inside the bound

    // absorb v1 without changing any spectrum
    const RankVector rank_before = b.rank();
    int j = 0;
    std::set<Colour> nv1;
    for (int m = i; m >= 1; --m) {
        const auto nm = b.new_cols(v1, m, b.prefix_spectrum(m));
        if (!nm.empty()) {
            j = m;
            nv1 = nm;
            break;
        }
    }
    if (j == i) throw std::logic_error("builder: absorb candidate has new colours");
    if (j == 0) {
        if (!b.strong) throw std::logic_error("builder: weak-mode vertex with no new colours at all");
        b.parts[0].push_back(v1);
        std::sort(b.parts[0].begin(), b.parts[0].end());
        b.log("absorb v=" + b.vname(v1) + " -> X1");
        b.assert_homog("absorb");
    } else {
        const auto spect_j = b.prefix_spectrum(j);
        const auto spect_j1 = b.prefix_spectrum(j + 1);
        std::set<Colour> step;
        std::set_difference(spect_j1.begin(), spect_j1.end(), spect_j.begin(), spect_j.end(),
                            std::inserter(step, step.begin()));
        if (!std::includes(step.begin(), step.end(), nv1.begin(), nv1.end()))
            throw std::logic_error("builder: absorb set not inside the spectrum step");
        if (nv1 == step) {
            b.parts[static_cast<std::size_t>(j)].push_back(v1);
            std::sort(b.parts[static_cast<std::size_t>(j)].begin(),
                      b.parts[static_cast<std::size_t>(j)].end());
            b.log("absorb v=" + b.vname(v1) + " -> X" + std::to_string(j + 1));
            b.assert_homog("absorb");
        } else {
            // v1 realises strictly fewer colours than X_{j+1} does: swap it in
            // as a singleton and drop the last part; the rank strictly drops
            std::vector<std::vector<int>> next(b.parts.begin(), b.parts.begin() + j);
            next.push_back({v1});
            for (int m = j; m + 1 < i; ++m) next.push_back(b.parts[static_cast<std::size_t>(m)]);
            b.parts = std::move(next);
            const RankVector rank_after = b.rank();
            b.log("descend v=" + b.vname(v1) + " j=" + std::to_string(j) + " rank " +
                  rank_str(rank_before) + " -> " + rank_str(rank_after));
            b.assert_homog("descend");
            if (!rank_less(rank_after, rank_before))
                throw std::logic_error("builder: rank did not decrease on descent");
            return true; // same length, re-dispatch
        }
    }

    // the fresh colour is now reachable from v2 alone
    const auto spect_new = b.prefix_spectrum(i);
    const auto n2 = b.new_cols(v2, i, spect_new);
    if (n2 != std::set<Colour>{fresh})
        throw std::logic_error("builder: appended vertex sees more than the fresh colour");
    b.parts.push_back({v2});
    b.log("extend v=" + b.vname(v2) + " |N|=1 -> n=" + std::to_string(i + 1));
    b.assert_homog("extend");
    return true;
}

constexpr int kStepGuard = 100000;

} // namespace

HomogTuple build_homogeneous(const TemplateColouring& c, int n, const TraceFn& trace) {
    {
        const auto violations = validate(c);
        if (!violations.empty())
            throw ValidationError("build_homogeneous: invalid colouring: " + violations.front());
    }
    if (n < 1) throw std::invalid_argument("build_homogeneous: n >= 1");
    if (c.k() < n * (n - 1) / 2 + 1)
        throw std::invalid_argument("build_homogeneous: requires k >= C(n,2)+1, got k = " +
                                    std::to_string(c.k()));
    Build b;
    b.tc = &c;
    b.strong = true;
    b.universe = c.t();
    b.parts = {{}};
    b.trace = trace;
    b.assert_homog("base");
    int steps = 0;
    while (static_cast<int>(b.parts.size()) < n) {
        if (!advance(b))
            throw std::logic_error("build_homogeneous: no fresh colour found (colouring not surjective?)");
        if (++steps > kStepGuard) throw std::logic_error("build_homogeneous: step guard tripped");
    }
    return b.to_tuple();
}

WeakBuildResult build_weakly_homogeneous(const LazyColouring& c, int n, int vertex_bound,
                                         const TraceFn& trace) {
    if (n < 2) throw std::invalid_argument("build_weakly_homogeneous: n >= 2");
    if (vertex_bound < n)
        throw std::invalid_argument("build_weakly_homogeneous: vertex_bound >= n");
    for (int frontier = n; frontier <= vertex_bound; ++frontier) {
        if (trace) trace("frontier M=" + std::to_string(frontier));
        Build b;
        b.lc = &c;
        b.strong = false;
        b.universe = frontier;
        b.parts = {{1}};
        b.trace = trace;
        b.assert_homog("base");
        int steps = 0;
        bool stuck = false;
        while (static_cast<int>(b.parts.size()) < n) {
            if (!advance(b)) { stuck = true; break; }
            if (++steps > kStepGuard)
                throw std::logic_error("build_weakly_homogeneous: step guard tripped");
        }
        if (!stuck) return {true, b.to_tuple(), frontier};
    }
    return {false, {}, vertex_bound};
}

CanonicalCheckResult canonical_check(const LazyColouring& c, int n, int vertex_bound) {
    if (vertex_bound > 24)
        throw BoundError("canonical_check: vertex_bound <= 24 (prefix enumeration)");
    const auto built = build_weakly_homogeneous(c, n, vertex_bound);
    if (!built.found) return {false, {}, {}};

    const auto sizes = chain_sizes(c, built.tuple);
    const GSet g = g_set_prefix(c, vertex_bound);
    const long long cap = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<long long> witness(sizes.begin() + 1, sizes.end()); // levels 2..n
    for (std::size_t a = 0; a < witness.size(); ++a) {
        const long long s = witness[a];
        if (s < 1 || s > cap || !g.contains(s) || (a > 0 && witness[a - 1] >= s))
            throw std::logic_error("canonical_check: built tuple fails the size certificate");
    }
    return {true, std::move(witness), built.tuple};
}

std::string tuple_json(const HomogTuple& t) {
    nlohmann::ordered_json j;
    j["mode"] = t.mode == HomogTuple::Mode::Strong ? "strong" : "weak";
    j["n"] = t.size();
    if (t.mode == HomogTuple::Mode::Strong)
        j["x1_includes_background"] = t.x1_includes_background;
    auto& parts = j["parts"] = nlohmann::ordered_json::array();
    for (const auto& part : t.parts) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Vertex& v : part) {
            if (v.is_template())
                arr.push_back("T" + std::to_string(v.id));
            else if (t.mode == HomogTuple::Mode::Weak)
                arr.push_back(v.id);
            else
                arr.push_back("B" + std::to_string(v.id));
        }
        parts.push_back(std::move(arr));
    }
    return j.dump();
}

} // namespace spectra

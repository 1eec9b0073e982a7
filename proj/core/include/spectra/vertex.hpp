#pragma once

#include <compare>
#include <string>

namespace spectra {

using Colour = long long;

// A vertex of the complete graph on the naturals, as seen by a template
// colouring: either one of the t template vertices, or a representative of the
// background class (everything outside the template). Background
// representatives are pairwise interchangeable; any result is invariant under
// renaming them. For lazy colourings there is no template and a vertex is just
// a natural number; those are carried in the Background slot.
struct Vertex {
    enum class Kind : unsigned char { Template, Background };
    Kind kind{Kind::Background};
    long long id{1};

    static constexpr Vertex tpl(long long i) { return {Kind::Template, i}; }
    static constexpr Vertex bg(long long r) { return {Kind::Background, r}; }
    // alias for lazy colourings, where every vertex is a plain natural
    static constexpr Vertex nat(long long n) { return {Kind::Background, n}; }

    bool is_template() const { return kind == Kind::Template; }

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(const Vertex& v) {
    return (v.is_template() ? "T" : "B") + std::to_string(v.id);
}

} // namespace spectra

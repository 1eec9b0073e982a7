#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spectra/colouring.hpp"

namespace spectra {

// Non-background colours renamed 1,2,... in order of first use along the edge
// string; the background keeps id k ("pinned last").
std::vector<Colour> first_use_renumbered(std::span<const Colour> edge_colours, int k,
                                         Colour background);

// Minimum first-use-renamed edge string over all vertex permutations. Two
// colourings are equivalent under (vertex permutation) x (non-background
// colour permutation) exactly when these agree. Requires background = k after
// canonical_colours(); guard t <= 8.
std::vector<Colour> canonical_edge_string(const TemplateColouring& c);
TemplateColouring canonical_form(const TemplateColouring& c);

struct EnumStats {
    std::uint64_t emitted{0};
    std::string diagnostic; // non-empty when the (t,k) cell is infeasible
};

// Visit every valid colouring with this t and k and background = k. With
// up_to_symmetry, exactly one representative per equivalence class is emitted,
// namely its canonical form, in ascending canonical-string order (orderly
// backtracking over edges with prefix-canonical and surjectivity pruning).
// Guards t <= 6, k <= 10 unless force.
EnumStats enumerate_templates(int t, int k, bool up_to_symmetry,
                              const std::function<void(const TemplateColouring&)>& visit,
                              bool force = false);

// Number of valid colourings with background = k (closed form,
// inclusion-exclusion over missing non-background colours).
std::uint64_t raw_template_count(int t, int k);

} // namespace spectra

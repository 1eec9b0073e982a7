#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

// Simple unlabelled graph on vertices 1..n. No loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    // Normalises each pair to i < j, sorts, rejects loops/duplicates/range errors.
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int i, int j) const;

    // adjacency bitmask per vertex, bit (v-1); requires n <= 32
    std::vector<std::uint32_t> adjacency_masks() const;

    static SimpleGraph complete(int n);
    static SimpleGraph path(int n);

    std::string to_json() const;
    static SimpleGraph from_json(const std::string& text);

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_{0};
    std::vector<std::pair<int, int>> edges_;
};

void write_graph_file(const SimpleGraph& g, const std::filesystem::path& path);
SimpleGraph load_graph_file(const std::filesystem::path& path);

} // namespace spectra

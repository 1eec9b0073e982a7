#include "spectra/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spectra {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("SimpleGraph: loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n)
            throw std::invalid_argument("SimpleGraph: edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") outside [1," + std::to_string(n) + "]");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("SimpleGraph: duplicate edge");
    edges_ = std::move(edges);
}

bool SimpleGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<std::uint32_t> SimpleGraph::adjacency_masks() const {
    if (n_ > 32) throw std::invalid_argument("SimpleGraph: adjacency masks need n <= 32");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [i, j] : edges_) {
        adj[i] |= 1u << (j - 1);
        adj[j] |= 1u << (i - 1);
    }
    return adj;
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(e));
}

std::string SimpleGraph::to_json() const {
    nlohmann::ordered_json j;
    j["v"] = n_;
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges_) arr.push_back({a, b});
    return j.dump();
}

SimpleGraph SimpleGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph json: ") + e.what());
    }
    if (!j.contains("v") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need fields v and edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge entries are [i,j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph(j["v"].get<int>(), std::move(edges));
}

void write_graph_file(const SimpleGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << g.to_json() << '\n';
}

SimpleGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return SimpleGraph::from_json(ss.str());
}

} // namespace spectra

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spectra/colouring.hpp"
#include "spectra/errors.hpp"

namespace spectra {

std::string to_witness_json(const TemplateColouring& c) {
    const TemplateColouring canon = canonical_colours(c);
    nlohmann::ordered_json j;
    j["t"] = canon.t();
    j["k"] = canon.k();
    j["background"] = canon.background();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (int i = 1; i <= canon.t(); ++i)
        for (int jv = i + 1; jv <= canon.t(); ++jv)
            edges.push_back({i, jv, canon.edge_colour(i, jv)});
    return j.dump();
}

TemplateColouring witness_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("witness json: ") + e.what());
    }
    for (const char* field : {"t", "k", "background", "edges"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("witness json: missing field ") + field);
    const int t = j["t"].get<int>();
    const int k = j["k"].get<int>();
    const Colour bg = j["background"].get<Colour>();
    if (t < 0 || TemplateColouring::pair_count(t) != static_cast<int>(j["edges"].size()))
        throw std::invalid_argument("witness json: edge list does not cover all pairs");
    std::vector<Colour> cols(static_cast<std::size_t>(TemplateColouring::pair_count(t)), 0);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("witness json: edge entries are [i,j,colour]");
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        if (!(1 <= a && a < b && b <= t))
            throw std::invalid_argument("witness json: bad pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        auto& slot = cols[static_cast<std::size_t>(TemplateColouring::pair_index(t, a, b))];
        if (slot != 0)
            throw std::invalid_argument("witness json: duplicate pair (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        slot = e[2].get<Colour>();
    }
    TemplateColouring c(t, k, bg, std::move(cols));
    const auto violations = validate(c);
    if (!violations.empty()) {
        std::string msg = "witness rejected:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw ValidationError(msg);
    }
    return c;
}

void write_witness_file(const TemplateColouring& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_witness_json(c) << '\n';
}

TemplateColouring load_witness_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return witness_from_json(ss.str());
}

} // namespace spectra

#include "spectra/rational.hpp"

namespace spectra {

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text));
        const long long n = std::stoll(text.substr(0, slash));
        const long long d = std::stoll(text.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    }
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace spectra

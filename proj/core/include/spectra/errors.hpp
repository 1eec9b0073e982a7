#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// A desk-scale guard was exceeded (enumeration bounds, sieve sizes, ...).
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// A colouring or witness file violates its structural invariants.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spectra

#pragma once

#include <stdexcept>
#include <string>

namespace hyperpath {

// A search or construction refused because a configured resource cap would
// be exceeded. Maps to CLI exit code 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A view was not enumerated deep enough for the requested homology dimension.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperpath

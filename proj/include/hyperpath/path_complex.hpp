#pragma once

#include <hyperpath/path.hpp>

#include <functional>
#include <string>
#include <vector>

namespace hyperpath {

// A truncated, enumerable path complex: all allowed regular paths up to
// max_length, in lexicographic order, plus a membership oracle that also
// answers queries about paths with stationary steps. Every downstream
// matrix inherits its ordering from `allowed`, which makes results
// canonical for a given input.
struct PathComplexView {
    VertexSet vertices;
    int max_length = 0;
    std::vector<std::vector<Path>> allowed;     // allowed[n], n = 0..max_length
    std::function<bool(const Path&)> contains;  // arbitrary paths, any length
    std::string label;

    bool is_allowed_listed(const Path& p) const;
};

// Enumerates all allowed regular paths by depth-first extension, relying on
// the defining closure property of path complexes (prefixes of allowed
// paths are allowed).
PathComplexView enumerate_view(VertexSet vertices, int max_length,
                               std::function<bool(const Path&)> oracle, std::string label);

// Index of a path inside a sorted basis list, or npos.
std::size_t path_index(const std::vector<Path>& basis, const Path& p);

// Structural checks used by tests and law reports. Empty result = clean.
std::vector<std::string> check_view_consistency(const PathComplexView& view);

} // namespace hyperpath

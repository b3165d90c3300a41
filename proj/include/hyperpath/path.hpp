#pragma once

#include <hyperpath/hypergraph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hyperpath {

// A path is a non-empty vertex sequence; its length is one less than the
// number of vertices. Regular means no two consecutive vertices coincide.
using Path = std::vector<VertexId>;

inline bool is_regular(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return false;
    return true;
}

inline int path_length(const Path& p) { return static_cast<int>(p.size()) - 1; }

std::string path_str(const Path& p);

// Alternating-sign face sum with irregular faces dropped; coefficients are
// +/-1. Throws on irregular input.
std::vector<std::pair<Path, int>> regular_boundary(const Path& p);

} // namespace hyperpath

#pragma once

#include <hyperpath/omega.hpp>

#include <map>
#include <optional>

namespace hyperpath {

// A vertex map between two path complexes that carries allowed paths to
// allowed paths (composing with the collapse of stationary steps).
struct PCMorphism {
    PathComplexView source;
    PathComplexView target;
    std::map<VertexId, VertexId> vertex_map;

    Path apply(const Path& p) const;
};

struct PCMorphismCheck {
    std::optional<PCMorphism> morphism;
    std::optional<Path> violation; // shortest offending source path
    std::string message;

    bool ok() const { return morphism.has_value(); }
};

// Verifies every enumerated allowed path of the source (up to the common
// truncation) maps to an allowed path of the target; image paths with
// stationary steps are checked through the target's oracle. Throws if the
// vertex map misses a source vertex.
PCMorphismCheck check_pc_morphism(const PathComplexView& source, const PathComplexView& target,
                                  const std::map<VertexId, VertexId>& vertex_map);

// Matrix of the induced map on homology in dimension n, written in the
// deterministic homology bases of source and target. Throws logic_error if
// the chain map fails to preserve the cycle submodule (an invalid morphism
// or too small a truncation).
DenseMatrix induced_homology_map(const PCMorphism& m, int n, const Field& field = Field());

// Same but sharing one omega build across dimensions 0..max_dim.
std::vector<DenseMatrix> induced_homology_maps(const PCMorphism& m, int max_dim,
                                               const Field& field = Field());

} // namespace hyperpath

#pragma once

#include <hyperpath/hypergraph.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperpath {

// Vertex map between directed hypergraphs together with the forced edge
// map: arrow i of the source maps to arrow edge_map[i] of the target, whose
// origin/end are exactly the images of the source's.
struct DHMorphism {
    DirectedHypergraph source;
    DirectedHypergraph target;
    std::map<VertexId, VertexId> vertex_map;
    std::vector<std::size_t> edge_map;

    VertexSet apply(const VertexSet& s) const;
    bool same_map(const DHMorphism& o) const { return vertex_map == o.vertex_map; }
};

struct DHMorphismCheck {
    std::optional<DHMorphism> morphism;
    std::optional<std::size_t> violating_arrow;
    std::string message;
    bool ok() const { return morphism.has_value(); }
};

// Checks that each arrow's image pair is an arrow of the target. Throws if
// the vertex map misses a source vertex.
DHMorphismCheck check_dh_morphism(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                  const std::map<VertexId, VertexId>& vertex_map);

DHMorphism identity_morphism(const DirectedHypergraph& g);

// g after f; sources and targets must chain.
DHMorphism compose(const DHMorphism& g, const DHMorphism& f);

// Every morphism G -> H, ordered lexicographically by vertex map. Throws
// CapExceeded when the number of candidate vertex maps exceeds the cap.
std::vector<DHMorphism> enumerate_morphisms(const DirectedHypergraph& g,
                                            const DirectedHypergraph& h,
                                            std::size_t cap = 1000000);

} // namespace hyperpath

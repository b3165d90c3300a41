#pragma once

#include <hyperpath/hypergraph.hpp>
#include <hyperpath/path_complex.hpp>

namespace hyperpath {

// Underlying digraph: v -> w whenever some arrow has v in its origin and w
// in its end. Loop-free because origin and end are disjoint.
Digraph gamma(const DirectedHypergraph& g);

// Forgets direction: one hyperedge origin+end per arrow, duplicates merged.
// Output is a generalized hypergraph (singleton edges tolerated) even
// though unions of disjoint non-empty sets always have >= 2 vertices.
Hypergraph epsilon(const DirectedHypergraph& g);

// Digraph on the origin/end subsets themselves, one arrow per distinct
// arrow of g; vertices are rendered subset labels.
Digraph natural(const DirectedHypergraph& g);

// Resolves a rendered subset label of natural(g) back to the subset.
VertexSet natural_vertex_set(const VertexId& label);

// Path complex of a digraph: consecutive vertices joined by arrows. The
// oracle additionally accepts stationary steps.
PathComplexView digraph_complex(const Digraph& d, int max_length, std::string label = "digraph");

// Each arrow v -> w becomes the arrow {v} -> {w}.
DirectedHypergraph as_directed_hypergraph(const Digraph& d);

// Box product with a connected digraph that has at least one arrow;
// vertices are rendered "v|i". Throws invalid_argument otherwise.
DirectedHypergraph box_product(const DirectedHypergraph& g, const Digraph& d);

// All subsets of pairs whose two projections are edges of the factors.
// Refuses (CapExceeded) when a candidate edge product has more than 2^20
// subsets.
Hypergraph hypergraph_product(const Hypergraph& x, const Hypergraph& y);

bool digraph_connected(const Digraph& d);

} // namespace hyperpath

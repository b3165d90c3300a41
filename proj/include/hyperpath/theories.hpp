#pragma once

#include <hyperpath/dh_morphism.hpp>
#include <hyperpath/functors.hpp>
#include <hyperpath/omega.hpp>

#include <string>

namespace hyperpath {

enum class TheoryKind { connective, bold, nondirected, natural };

TheoryKind theory_from_name(const std::string& name);
std::string theory_name(TheoryKind kind);

struct TheorySpec {
    TheoryKind kind = TheoryKind::connective;
    int density = 1; // connective c / nondirected q; ignored by bold, natural
    int max_dim = 2;
    Field field;

    std::string label() const;
};

// Thresholded digraph: v -> w when at least `density` distinct arrows have
// v in their origin and w in their end.
Digraph connective_digraph(const DirectedHypergraph& g, int density);

PathComplexView connective_view(const DirectedHypergraph& g, int density, int max_length);

// Membership in the chained-crossing path complex: the path decomposes into
// stretches inside origins/ends of a hyperedge sequence whose consecutive
// ends and origins intersect, crossing each hyperedge once. Decided by a
// nondeterministic automaton over (phase, hyperedge) states.
bool bold_contains(const DirectedHypergraph& g, const Path& p);

// Enumerates by depth-first search over (vertex, reachable-state-set)
// pairs, determinizing the automaton on the fly; the oracle is
// bold_contains.
PathComplexView bold_view(const DirectedHypergraph& g, int max_length);

// A path is allowed when every window of min(q, vertex count) consecutive
// vertices lies inside one merged hyperedge.
PathComplexView nondirected_view(const DirectedHypergraph& g, int density, int max_length);
PathComplexView hypergraph_density_view(const Hypergraph& h, int density, int max_length,
                                        std::string label);

PathComplexView natural_view(const DirectedHypergraph& g, int max_length);

PathComplexView theory_view(const DirectedHypergraph& g, const TheorySpec& spec, int max_length);

// Builds the requested view to length max_dim + 1 and computes its table.
BettiTable theory_betti(const DirectedHypergraph& g, const TheorySpec& spec);

// Vertex map induced on a theory's path complex by a hypergraph morphism:
// the plain vertex map, except for the subset digraph where origin/end
// subsets map to their images.
std::map<VertexId, VertexId> theory_vertex_map(const DHMorphism& f, TheoryKind kind);

} // namespace hyperpath

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hyperpath {

// Vertex labels are plain tokens. Two characters are reserved for internal
// renderings and rejected in user input: "'" marks the primed copy of a
// vertex in a cylinder, "|" joins the components of product and subset
// vertices.
using VertexId = std::string;

// A vertex subset in canonical form: sorted, duplicate-free.
using VertexSet = std::vector<VertexId>;

VertexSet make_set(std::vector<VertexId> labels);
bool set_contains(const VertexSet& s, const VertexId& v);
bool set_subset(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

// "{a|b|c}" for the set {a, b, c}; deterministic and collision-free because
// "|" cannot occur inside a user label.
std::string render_subset(const VertexSet& s);
// "v|i" for the pair (v, i).
VertexId render_pair(const VertexId& v, const VertexId& i);

// Returns "" if the label is acceptable in user input, otherwise the reason.
std::string label_violation(const VertexId& label);

struct Arrow {
    VertexSet origin;
    VertexSet end;
    bool operator==(const Arrow& o) const { return origin == o.origin && end == o.end; }
    auto operator<=>(const Arrow& o) const = default;
};

// Ordered pair of disjoint non-empty vertex subsets per arrow; every vertex
// must occur in some origin or end. Edge order is kept as given (it has no
// semantic weight, but reports stay stable); equality of arrows is set-pair
// equality.
struct DirectedHypergraph {
    VertexSet vertices;
    std::vector<Arrow> edges;
};

struct Hypergraph {
    VertexSet vertices;
    std::vector<VertexSet> edges; // canonically ordered, duplicate-free
    bool strict = false;          // strict mode: every edge has >= 2 vertices
};

struct Digraph {
    VertexSet vertices;
    std::set<std::pair<VertexId, VertexId>> arrows; // loop-free
    bool has_arrow(const VertexId& v, const VertexId& w) const {
        return arrows.count({v, w}) > 0;
    }
};

// Violations are data, not faults: each entry names the offending arrow or
// vertex.
std::vector<std::string> validate(const DirectedHypergraph& g);
std::vector<std::string> validate(const Hypergraph& g);

struct PSets {
    std::vector<VertexSet> origins;     // P_0
    std::vector<VertexSet> ends;        // P_1
    std::vector<VertexSet> all;         // P_01
};
PSets p_sets(const DirectedHypergraph& g);

} // namespace hyperpath

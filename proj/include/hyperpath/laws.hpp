#pragma once

#include <hyperpath/theories.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperpath {

struct LawParams {
    int max_length = 3;
    int max_dim = 2;
    int density = 2;     // used by the product-inclusion check
    int max_density = 3; // used by the filtration check
    Field field;
};

struct LawReport {
    std::string law;
    std::string title;
    bool holds = false;
    std::vector<std::string> details;
    std::optional<std::string> counterexample;
    std::optional<std::string> witness;
};

// Cylinder of the connective complex vs the connective complex of the box
// product with the interval: exact path-set equality up to max_length.
LawReport law_connective_cylinder(const DirectedHypergraph& g, const LawParams& p);

// Cylinder of the chained-crossing complex includes into the complex of the
// box product (inclusion only).
LawReport law_bold_cylinder(const DirectedHypergraph& g, const LawParams& p);

// Same inclusion for the density-2 non-directed complex.
LawReport law_nondirected_cylinder(const DirectedHypergraph& g, const LawParams& p);

// The subset digraph of the box product equals the box product of the
// subset digraph, as labeled digraphs under (C, i) -> C x {i}.
LawReport law_natural_box(const DirectedHypergraph& g, const LawParams& p);

// Connective density-1 Betti tables equal those of the path complex of the
// underlying digraph.
LawReport law_gamma_factorization(const DirectedHypergraph& g, const LawParams& p);

// Density-1 non-directed homology is that of the full path complex:
// betti = (1, 0, ..., 0).
LawReport law_full_complex(const DirectedHypergraph& g, const LawParams& p);

// Non-directed complex of the box product includes into the complex of the
// hypergraph product with the three-edge interval hypergraph; also hunts
// for a strictness witness pair (v, w) spanning an arrow but no shared
// origin/end subset.
LawReport law_product_inclusion(const DirectedHypergraph& g, const LawParams& p);

// Connective views shrink as density grows.
LawReport law_filtration(const DirectedHypergraph& g, const LawParams& p);

struct LawEntry {
    std::string id;
    std::string description;
    LawReport (*run)(const DirectedHypergraph&, const LawParams&);
};
const std::vector<LawEntry>& law_registry();
LawReport run_law(const std::string& id, const DirectedHypergraph& g, const LawParams& p);

} // namespace hyperpath

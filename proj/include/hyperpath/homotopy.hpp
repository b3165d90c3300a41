#pragma once

#include <hyperpath/dh_morphism.hpp>
#include <hyperpath/functors.hpp>

#include <optional>

namespace hyperpath {

// Oriented path digraph on 0..n; orientations[i] true means i -> i+1.
Digraph line_digraph(const std::vector<bool>& orientations);

// One elementary homotopy move: a verified morphism out of the box product
// of the common source with a one-arrow interval, restricting to `from` and
// `to` on the two ends. forward_interval records which of the two interval
// orientations worked.
struct HomotopyStep {
    DHMorphism from;
    DHMorphism to;
    bool forward_interval = true;
    DHMorphism box_morphism;
};

struct HomotopyWitness {
    std::vector<HomotopyStep> steps; // empty chain: the morphisms are equal
};

struct HomotopySearchCaps {
    std::size_t max_steps = 8;
    std::size_t morphism_cap = 1000000;
};

// Tries both interval orientations, building the forced vertex map
// (v, i) |-> f_i(v) and checking it arrow by arrow.
std::optional<HomotopyStep> one_step_homotopic(const DHMorphism& f0, const DHMorphism& f1);

// Breadth-first search through the finite morphism space, stepping by
// one-step homotopies in either orientation. Returns nullopt when no chain
// of at most max_steps moves exists; throws CapExceeded if the space is
// too large to enumerate.
std::optional<HomotopyWitness> homotopic(const DHMorphism& f, const DHMorphism& g,
                                         const HomotopySearchCaps& caps = {});

struct HomotopyEquivalence {
    DHMorphism forward;   // G -> H
    DHMorphism backward;  // H -> G
    HomotopyWitness back_forward_to_id; // backward o forward ~ id_G
    HomotopyWitness forward_back_to_id; // forward o backward ~ id_H
};

std::optional<HomotopyEquivalence> homotopy_equivalent(const DirectedHypergraph& g,
                                                       const DirectedHypergraph& h,
                                                       const HomotopySearchCaps& caps = {});

// Re-checks every step of a witness end to end.
bool verify_witness(const HomotopyWitness& w, const DHMorphism& f, const DHMorphism& g);

} // namespace hyperpath

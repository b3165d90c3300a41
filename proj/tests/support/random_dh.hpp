#pragma once

#include <hyperpath/hypergraph.hpp>

#include <random>

namespace hyperpath::testing {

// Deterministic sampler of valid directed hypergraphs with at most max_v
// vertices and max_e arrows. Origins and ends have one or two vertices,
// which matches the scale every suite here works at.
DirectedHypergraph random_dh(std::mt19937& rng, int max_v = 5, int max_e = 5);

} // namespace hyperpath::testing

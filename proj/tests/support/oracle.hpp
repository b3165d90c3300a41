#pragma once

// Test-only oracles, kept independent of the engine's path enumeration and
// elimination code on purpose: paths come from exhaustive sequence
// generation, ranks from determinant minors (with an independently written
// division-based elimination taking over where minor expansion is
// intractable).

#include <hyperpath/hypergraph.hpp>
#include <hyperpath/path.hpp>
#include <hyperpath/scalar.hpp>

#include <functional>
#include <vector>

namespace hyperpath::testing {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a;
    long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Determinant by Laplace expansion memoized over column subsets; n <= 20.
long long det_laplace(const IntMatrix& m);

// Rank as the size of a largest non-vanishing minor, grown by bordering.
// Practical only for small matrices; throws if min(rows, cols) > 12.
std::size_t minor_rank(const IntMatrix& m);

// Textbook division-based elimination with largest-pivot selection,
// written against hyperpath::Scalar directly.
std::size_t gauss_rank(const IntMatrix& m);

// minor_rank when feasible, gauss_rank beyond; the two agree on every
// matrix where both run (asserted by tests).
std::size_t oracle_rank(const IntMatrix& m);

// Exhaustive regular sequences of n+1 vertices over V.
std::vector<Path> all_regular_sequences(const VertexSet& v, int n);

struct NaiveBetti {
    std::vector<std::size_t> betti;      // 0..max_dim
    std::vector<std::size_t> dim_omega;  // 0..max_dim+1
    std::vector<std::size_t> rank_bnd;   // 0..max_dim+1
};

// Homology of the path complex given by `allowed`, via stacked-matrix
// ranks: dim of the boundary on the cycle submodule equals
// rank([off-complex part; full boundary]) - rank(off-complex part).
NaiveBetti naive_betti(const VertexSet& v, const std::function<bool(const Path&)>& allowed,
                       int max_dim);

// Connected components of the underlying undirected graph, by union-find.
std::size_t undirected_components(const Digraph& d);

} // namespace hyperpath::testing

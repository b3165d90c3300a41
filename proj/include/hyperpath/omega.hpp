#pragma once

#include <hyperpath/elimination.hpp>
#include <hyperpath/path_complex.hpp>

#include <string>
#include <vector>

namespace hyperpath {

// Chain-level boundary data of a view, per dimension n = 0..depth:
//   allowed[n]       ordered allowed regular n-paths (the generators)
//   nonallowed[n]    regular n-paths hit by boundaries but not allowed
//   bnd_allowed[n]   boundary coefficients landing on allowed (n-1)-paths
//   bnd_nonallowed[n] coefficients landing on non-allowed (n-1)-paths
// The cycle submodule in dimension n is the kernel of bnd_nonallowed[n].
struct RawChainComplex {
    int depth = 0;
    std::vector<std::vector<Path>> allowed;
    std::vector<std::vector<Path>> nonallowed;
    std::vector<DenseMatrix> bnd_allowed;
    std::vector<DenseMatrix> bnd_nonallowed;
};

RawChainComplex build_raw_complex(const PathComplexView& view, int depth);

// Per-dimension bases of the largest submodules whose boundaries stay on
// allowed paths, with the boundary maps written in those bases.
struct OmegaComplex {
    Field field;
    int max_dim = 0;                      // bases cover dimensions 0..max_dim+1
    std::vector<std::vector<Path>> allowed;
    std::vector<DenseMatrix> omega_basis; // columns are coefficient vectors over allowed[n]
    std::vector<DenseMatrix> boundary;    // boundary[n]: dim(n-1) x dim(n); boundary[0] = 0 x dim(0)

    std::size_t dim(int n) const { return omega_basis[n].cols(); }
};

// Requires view.max_length >= max_dim + 1; throws TruncationError otherwise.
OmegaComplex build_omega(const PathComplexView& view, int max_dim, const Field& field = Field());

struct BettiTable {
    std::string label;
    std::string field_name;
    int max_dim = 0;
    int length_bound = 0;
    std::vector<std::size_t> dim_omega;     // n = 0..max_dim+1
    std::vector<std::size_t> rank_boundary; // n = 0..max_dim+1; rank of the boundary on dim n
    std::vector<std::size_t> betti;         // n = 0..max_dim

    bool operator==(const BettiTable& o) const = default;
    std::string to_string() const;
};

// betti(n) = dim_omega(n) - rank_boundary(n) - rank_boundary(n+1). Computed
// from chain-level ranks directly (no basis materialization), which keeps
// large truncations affordable.
BettiTable betti(const PathComplexView& view, int max_dim, const Field& field = Field());

BettiTable betti_of(const OmegaComplex& oc, const PathComplexView& view);

// Representatives of homology in dimension n: kernel vectors of boundary[n]
// taken greedily while independent of the image of boundary[n+1], in
// omega-basis coordinates.
DenseMatrix homology_basis(const OmegaComplex& oc, int n);

} // namespace hyperpath

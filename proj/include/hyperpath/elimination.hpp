#pragma once

#include <hyperpath/matrix.hpp>

#include <optional>
#include <vector>

namespace hyperpath {

// Row elimination backend. `parallel` runs the fraction-free row updates
// under OpenMP; results are identical to `serial` because each row update
// depends only on the pivot row and the row's own previous state.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

struct RrefResult {
    DenseMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

// Rank over the given field. Forward fraction-free elimination only,
// pivoting on the first non-zero entry of each column.
std::size_t rank(const DenseMatrix& m, const Field& field = Field(), Exec exec = default_exec());

// Reduced row echelon form; canonical for a fixed column order.
RrefResult rref(const DenseMatrix& m, const Field& field = Field(), Exec exec = default_exec());

// Canonical basis of the right null space, one column per free column of
// the RREF, in increasing free-column order.
DenseMatrix kernel_basis(const DenseMatrix& m, const Field& field = Field(),
                         Exec exec = default_exec());

// Coefficients expressing `target` in `basis` (columns), or nullopt when
// the target is outside the span. Throws on a length mismatch.
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& basis,
                                                 const std::vector<Scalar>& target,
                                                 const Field& field = Field(),
                                                 Exec exec = default_exec());

// Batched span solve: finds X with basis * X = targets, or nullopt if some
// target column is outside the span of the basis columns.
std::optional<DenseMatrix> solve_in_span(const DenseMatrix& basis, const DenseMatrix& targets,
                                         const Field& field = Field(),
                                         Exec exec = default_exec());

} // namespace hyperpath

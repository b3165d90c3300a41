#pragma once

#include <hyperpath/path_complex.hpp>

namespace hyperpath {

// Primed copy of a vertex and its inverse. Priming appends the reserved
// suffix "'", so user labels can always be recovered.
VertexId prime(const VertexId& v);
bool is_primed(const VertexId& v);
VertexId unprime(const VertexId& v);

// The path complex on two copies of the vertex set whose paths are: the
// unprimed copy of each allowed path, the primed copy, and for each allowed
// path one "jump" path per position k, which repeats vertex k as its primed
// twin and continues primed. Jump paths of length n+1 come from source
// paths of length n; enumeration is truncated at the source's max_length.
PathComplexView cylinder(const PathComplexView& view);

} // namespace hyperpath

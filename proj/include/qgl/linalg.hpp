#pragma once
// Exact rank computations by fraction-free (Bareiss) elimination.

#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

/// Rank of a matrix of scalars (all of one field).  The matrix is taken
/// by value and destroyed.
int rank(std::vector<std::vector<Scalar>> m);
int rank_rational(std::vector<std::vector<Rat>> m);

}  // namespace qgl

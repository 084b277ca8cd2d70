#pragma once

#include <vector>

#include "bsato/rat.hpp"

namespace bsato {

/// Sparse vector over Q: (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<long, Rat>>;

struct SparseMat {
    long ncols = 0;
    std::vector<SparseVec> rows;
};

/// Reduced row echelon form. Rows are sorted by leading column, each pivot
/// is 1 and is the only nonzero in its column among the returned rows.
struct RrefResult {
    std::vector<SparseVec> rows;
    std::vector<long> pivot_col;          // leading column per returned row
    std::vector<long> pivot_row_of_col;   // -1 for columns without a pivot
    long rank = 0;
};

/// Exact Gauss-Jordan elimination with columns processed in order.
/// Within a column the pivot is the sparsest candidate row (lowest index on
/// ties), so the computation is deterministic; row updates run under OpenMP.
RrefResult rref(SparseMat m);

/// Plain textbook elimination, single-threaded, kept as the reference
/// implementation: the RREF is canonical, so both must agree exactly.
RrefResult rref_serial(SparseMat m);

/// Basis of the right nullspace (dense vectors of length ncols).
std::vector<std::vector<Rat>> nullspace_basis(SparseMat m);

}  // namespace bsato

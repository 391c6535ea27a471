#pragma once

#include "lscmf/layout.hpp"

namespace lscmf {

/// A (possibly truncated) singular value decomposition. Columns of
/// left_vectors/right_vectors are ordered to match singular_values.
struct SpectralDecomposition {
  Vector singular_values;  // descending, >= 0
  Matrix left_vectors;     // n_rows x k, orthonormal columns
  Matrix right_vectors;    // n_cols x k, orthonormal columns
  Index n_rows = 0;
  Index n_cols = 0;
};

/// All singular values of a dense matrix, descending. Computed from the
/// Gram matrix of the smaller side, so only values are produced (pass 1
/// of the two-pass strategy).
Vector singular_values(const Matrix& m);

/// The top `count` singular triplets (pass 2). Only the requested
/// eigenpairs of the Gram matrix are computed; the larger-side vectors
/// are recovered by one matrix product. Throws DomainError if the
/// numerical rank of the matrix is below `count`.
SpectralDecomposition truncated_svd(const Matrix& m, Index count);

/// Caps the number of threads the dense linear algebra backend may use.
/// Thread count is process-global.
void set_backend_threads(int threads);

}  // namespace lscmf

#pragma once

#include "lscmf/layout.hpp"

namespace lscmf {

/// Limiting aspect ratio beta = min(m,n)/max(m,n) of a matrix sequence.
/// All spectral formulas in this module are stated for beta in (0,1].
struct AspectRatio {
  double beta;

  explicit AspectRatio(double b) : beta(b) {
    if (!(b > 0.0) || b > 1.0)
      throw DomainError("aspect ratio must lie in (0,1], got " + std::to_string(b));
  }
};

inline AspectRatio aspect_of(Index n_rows, Index n_cols) {
  const double lo = static_cast<double>(std::min(n_rows, n_cols));
  const double hi = static_cast<double>(std::max(n_rows, n_cols));
  return AspectRatio(lo / hi);
}

/// Which side of the (rows <= cols)-oriented model a singular vector
/// belongs to. The smaller dimension of a matrix carries the `left`
/// formulas; at beta = 1 both coincide.
enum class Side { left, right };

/// Median of the Marchenko-Pastur eigenvalue distribution with sigma = 1
/// and ratio beta: the unique q with CDF(q) = 1/2 on the support
/// [(1-sqrt(beta))^2, (1+sqrt(beta))^2]. Deterministic to 1e-9 absolute;
/// values are memoized per beta.
double mp_median(AspectRatio beta);

/// CDF of the same distribution, exposed for diagnostics and tests.
double mp_cdf(double q, AspectRatio beta);

/// Noise-scale estimate median(values) / sqrt(n * mp_median(beta)) with
/// n = max(n_rows, n_cols). Orientation of the matrix is irrelevant;
/// callers may pass either (rows, cols) order.
double estimate_noise_scale(const Vector& singular_values, Index n_rows, Index n_cols);

/// Frobenius-optimal singular value shrinker:
/// sqrt((y^2-beta-1)^2 - 4 beta)/y for y >= 1+sqrt(beta), else 0.
/// Continuous and non-decreasing in y.
double shrink(double y, AspectRatio beta);

/// Limit of the data singular value produced by a signal singular value x:
/// sqrt((x+1/x)(x+beta/x)) above the detection point x > beta^{1/4},
/// the bulk edge 1+sqrt(beta) at or below it.
double asymptotic_data_sv(double x, AspectRatio beta);

/// Limit of |<data singular vector, signal singular vector>| for a signal
/// of strength x. Zero at or below the detection point.
double asymptotic_cosine(double x, AspectRatio beta, Side side);

/// Inverse of asymptotic_data_sv on the supercritical branch:
/// sqrt(((y^2-beta-1) + sqrt((y^2-beta-1)^2 - 4 beta)) / 2).
/// Requires y > 1+sqrt(beta).
double invert_data_sv(double y, AspectRatio beta);

/// Truncated decomposition with singular values replaced by their shrunk
/// counterparts. Vectors are kept in the caller's orientation: left_vectors
/// spans the rows of the input, right_vectors its columns.
struct DenoiseResult {
  Vector shrunk_values;        // strictly positive, descending
  Vector data_values;          // the matching raw singular values
  Index rank = 0;              // == shrunk_values.size()
  Matrix left_vectors;         // n_rows x rank
  Matrix right_vectors;        // n_cols x rank
  double noise_scale = 0.0;    // estimate on the matrix as given
  AspectRatio aspect{1.0};
  Index n_rows = 0;
  Index n_cols = 0;

  /// Model side of the given view dimension: left iff it is the smaller one.
  Side side_of_dim(Index dim) const { return dim <= std::min(n_rows, n_cols) ? Side::left : Side::right; }
};

/// Denoises a matrix already standardized to the unit-noise model
/// Y = X + Z/sqrt(max(m,n)). Pass 1 computes singular values only and
/// fixes the rank as the count of values >= 1+sqrt(beta); pass 2 computes
/// a truncated decomposition of exactly that many components. Values at
/// the threshold shrink to exactly zero and are dropped.
DenoiseResult denoise_matrix(const Matrix& m);

/// Same, reusing a precomputed pass-1 spectrum (descending).
DenoiseResult denoise_with_spectrum(const Matrix& m, const Vector& singular_values);

}  // namespace lscmf

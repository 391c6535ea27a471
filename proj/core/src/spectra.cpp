#include "lscmf/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <cblas.h>
#include <lapacke.h>

extern "C" void openblas_set_num_threads(int);

namespace lscmf {
namespace {

// Gram matrix of the smaller side (lower triangle filled): M M^T when the
// matrix is wide or square, M^T M when it is tall. dsyrk keeps the O(s^2 k)
// cost at half a full product and dispatches to tuned kernels at runtime.
Matrix small_side_gram(const Matrix& m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  const Index s = std::min(rows, cols);
  Matrix g = Matrix::Zero(s, s);
  if (s == 0) return g;
  cblas_dsyrk(CblasColMajor, CblasLower, rows <= cols ? CblasNoTrans : CblasTrans,
              static_cast<blasint>(s), static_cast<blasint>(std::max(rows, cols)), 1.0,
              m.data(), static_cast<blasint>(rows), 0.0, g.data(), static_cast<blasint>(s));
  return g;
}

double sv_from_eigenvalue(double lambda) { return std::sqrt(std::max(lambda, 0.0)); }

}  // namespace

void set_backend_threads(int threads) { openblas_set_num_threads(std::max(threads, 1)); }

Vector singular_values(const Matrix& m) {
  Matrix g = small_side_gram(m);
  const Index s = g.rows();
  Vector evals(s);
  if (s == 0) return evals;
  const auto info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(s),
                                   g.data(), static_cast<lapack_int>(s), evals.data());
  if (info != 0) throw Error("dsyevd failed with info=" + std::to_string(info));
  Vector sv(s);
  for (Index i = 0; i < s; ++i) sv(i) = sv_from_eigenvalue(evals(s - 1 - i));
  return sv;
}

SpectralDecomposition truncated_svd(const Matrix& m, Index count) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Index s = std::min(rows, cols);
  if (count < 0 || count > s)
    throw DomainError("truncated_svd: requested " + std::to_string(count) +
                      " components from a matrix with min dimension " + std::to_string(s));

  SpectralDecomposition out;
  out.n_rows = rows;
  out.n_cols = cols;
  out.singular_values = Vector(count);
  out.left_vectors = Matrix(rows, count);
  out.right_vectors = Matrix(cols, count);
  if (count == 0) return out;

  Matrix g = small_side_gram(m);
  Vector evals(s);
  Matrix z(s, count);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(count));
  lapack_int found = 0;
  const auto info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', static_cast<lapack_int>(s), g.data(),
      static_cast<lapack_int>(s), 0.0, 0.0, static_cast<lapack_int>(s - count + 1),
      static_cast<lapack_int>(s), 0.0, &found, evals.data(), z.data(),
      static_cast<lapack_int>(s), isuppz.data());
  if (info != 0 || found != count)
    throw Error("dsyevr failed (info=" + std::to_string(info) + ", found=" + std::to_string(found) + ")");

  // dsyevr returns the selected eigenpairs in ascending order.
  Matrix small_vecs(s, count);
  for (Index i = 0; i < count; ++i) {
    out.singular_values(i) = sv_from_eigenvalue(evals(count - 1 - i));
    small_vecs.col(i) = z.col(count - 1 - i);
  }

  const double top = out.singular_values(0);
  const double floor = top * 1e-12;
  if (out.singular_values(count - 1) <= floor)
    throw DomainError("truncated_svd: matrix has numerical rank below the requested component count");

  // The Gram eigenvectors live on the smaller side; the other side follows
  // from one product with the matrix and a per-column 1/sigma scaling.
  if (rows <= cols) {
    out.left_vectors = small_vecs;
    out.right_vectors.noalias() = m.transpose() * small_vecs;
    for (Index i = 0; i < count; ++i) out.right_vectors.col(i) /= out.singular_values(i);
  } else {
    out.right_vectors = small_vecs;
    out.left_vectors.noalias() = m * small_vecs;
    for (Index i = 0; i < count; ++i) out.left_vectors.col(i) /= out.singular_values(i);
  }
  return out;
}

}  // namespace lscmf

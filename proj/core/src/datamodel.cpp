#include "lscmf/datamodel.hpp"

#include <cmath>
#include <map>

#include "lscmf/spectra.hpp"

namespace lscmf {

void validate_layout(const ViewLayout& layout, const std::vector<ObservedMatrix>& matrices) {
  std::map<EdgeKey, int> seen;
  for (const auto& m : matrices) ++seen[m.key];

  for (const auto& m : matrices) {
    if (!layout.edges().contains(m.key))
      throw LayoutError(LayoutError::Kind::invalid_edge,
                        "matrix for edge " + m.key.label() + " is not part of the layout");
    if (seen[m.key] > 1)
      throw LayoutError(LayoutError::Kind::duplicate_matrix,
                        "edge " + m.key.label() + " has more than one matrix");
    const Index want_rows = layout.view_dim(m.key.row_view);
    const Index want_cols = layout.view_dim(m.key.col_view);
    if (m.data.rows() != want_rows || m.data.cols() != want_cols)
      throw LayoutError(LayoutError::Kind::shape_mismatch,
                        "matrix for edge " + m.key.label() + " has shape " +
                            std::to_string(m.data.rows()) + "x" + std::to_string(m.data.cols()) +
                            ", expected " + std::to_string(want_rows) + "x" +
                            std::to_string(want_cols));
  }
  for (const auto& e : layout.edges())
    if (!seen.contains(e))
      throw LayoutError(LayoutError::Kind::missing_matrix,
                        "no matrix provided for edge " + e.label());
  if (!layout.connected())
    throw LayoutError(LayoutError::Kind::disconnected, "disconnected view graph");
}

std::pair<ObservedMatrix, Vector> standardize_with_spectrum(const ObservedMatrix& matrix) {
  if (matrix.scale_applied)
    throw InputError("standardize: matrix for edge " + matrix.key.label() +
                     " is already standardized");
  if (!matrix.data.allFinite())
    throw InputError("standardize: matrix for edge " + matrix.key.label() +
                     " has non-finite entries");

  // sigma_hat works on singular values, which the transpose shares, so the
  // orientation rule of the estimator is handled by estimate_noise_scale.
  Vector spectrum = singular_values(matrix.data);
  double sigma;
  try {
    sigma = estimate_noise_scale(spectrum, matrix.data.rows(), matrix.data.cols());
  } catch (const DegenerateInputError&) {
    throw DegenerateInputError("standardize: matrix for edge " + matrix.key.label() +
                               " is identically zero");
  }

  const double p = static_cast<double>(std::max(matrix.data.rows(), matrix.data.cols()));
  const double divisor = std::sqrt(p) * sigma;

  ObservedMatrix out{matrix.key, matrix.data / divisor, divisor};
  return {std::move(out), spectrum / divisor};
}

ObservedMatrix standardize(const ObservedMatrix& matrix) {
  return standardize_with_spectrum(matrix).first;
}

void center_columns(Matrix& m) {
  m.rowwise() -= m.colwise().mean();
}

}  // namespace lscmf

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lscmf/denoise.hpp"
#include "lscmf/layout.hpp"

namespace lscmf {

/// One raw or standardized data matrix attached to an edge of the view
/// graph. scale_applied records the divisor sqrt(p_ij) * sigma_hat once
/// the matrix has been standardized.
struct ObservedMatrix {
  EdgeKey key;
  Matrix data;
  std::optional<double> scale_applied;
};

/// Checks that every edge of the layout has exactly one matrix, that
/// shapes match the declared view dimensions, and that the view graph is
/// connected. Each failure raises a LayoutError with a distinct kind.
void validate_layout(const ViewLayout& layout, const std::vector<ObservedMatrix>& matrices);

/// Divides the matrix by sqrt(p_ij) * sigma_hat with p_ij = max(p_i, p_j),
/// so that it conforms to the unit-noise model Y = X + Z/sqrt(p_ij).
/// The noise scale is estimated from the full singular spectrum.
ObservedMatrix standardize(const ObservedMatrix& matrix);

/// Standardizes and also returns the spectrum of the standardized matrix
/// (the raw spectrum divided by the standardization divisor), saving the
/// pipeline a second values-only pass.
std::pair<ObservedMatrix, Vector> standardize_with_spectrum(const ObservedMatrix& matrix);

/// In-place column centering (subtract each column mean). Offered as an
/// opt-in preprocessing step; the model itself carries no mean term.
void center_columns(Matrix& m);

}  // namespace lscmf

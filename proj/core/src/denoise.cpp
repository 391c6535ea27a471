#include "lscmf/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lscmf/spectra.hpp"

namespace lscmf {

double estimate_noise_scale(const Vector& singular_values, Index n_rows, Index n_cols) {
  if (singular_values.size() == 0)
    throw InputError("estimate_noise_scale: empty singular value vector");
  if ((singular_values.array() < 0.0).any())
    throw InputError("estimate_noise_scale: singular values must be non-negative");
  if ((singular_values.array() == 0.0).all())
    throw DegenerateInputError("estimate_noise_scale: all singular values are zero");

  std::vector<double> v(singular_values.data(), singular_values.data() + singular_values.size());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const double median = (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);

  const double big = static_cast<double>(std::max(n_rows, n_cols));
  return median / std::sqrt(big * mp_median(aspect_of(n_rows, n_cols)));
}

double shrink(double y, AspectRatio beta) {
  if (y < 0.0) throw DomainError("shrink: singular value must be non-negative");
  if (y < 1.0 + std::sqrt(beta.beta)) return 0.0;
  const double t = y * y - beta.beta - 1.0;
  const double disc = t * t - 4.0 * beta.beta;
  return std::sqrt(std::max(disc, 0.0)) / y;
}

double asymptotic_data_sv(double x, AspectRatio beta) {
  if (!(x > 0.0)) throw DomainError("asymptotic_data_sv: signal value must be positive");
  if (x <= std::pow(beta.beta, 0.25)) return 1.0 + std::sqrt(beta.beta);
  return std::sqrt((x + 1.0 / x) * (x + beta.beta / x));
}

double asymptotic_cosine(double x, AspectRatio beta, Side side) {
  if (!(x > 0.0)) throw DomainError("asymptotic_cosine: signal value must be positive");
  if (x <= std::pow(beta.beta, 0.25)) return 0.0;
  const double x2 = x * x;
  const double x4 = x2 * x2;
  const double denom = side == Side::left ? x4 + beta.beta * x2 : x4 + x2;
  return std::clamp(std::sqrt((x4 - beta.beta) / denom), 0.0, 1.0);
}

double invert_data_sv(double y, AspectRatio beta) {
  if (!(y > 1.0 + std::sqrt(beta.beta)))
    throw DomainError("invert_data_sv: value " + std::to_string(y) +
                      " is not above the bulk edge 1+sqrt(beta)");
  const double t = y * y - beta.beta - 1.0;
  const double disc = std::max(t * t - 4.0 * beta.beta, 0.0);
  return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

DenoiseResult denoise_with_spectrum(const Matrix& m, const Vector& spectrum) {
  if (!m.allFinite()) throw InputError("denoise: matrix has non-finite entries");
  if (spectrum.size() != std::min(m.rows(), m.cols()))
    throw InputError("denoise: spectrum length does not match the matrix");

  DenoiseResult out;
  out.aspect = aspect_of(m.rows(), m.cols());
  out.n_rows = m.rows();
  out.n_cols = m.cols();

  const double top = spectrum.size() > 0 ? spectrum(0) : 0.0;
  out.noise_scale = top > 0.0 ? estimate_noise_scale(spectrum, m.rows(), m.cols()) : 0.0;

  // Values within rounding of zero are not real components.
  const double floor = top * 1e-12;
  const double threshold = 1.0 + std::sqrt(out.aspect.beta);
  Index candidates = 0;
  while (candidates < spectrum.size() && spectrum(candidates) >= threshold &&
         spectrum(candidates) > floor)
    ++candidates;

  if (candidates == 0) {
    out.rank = 0;
    out.shrunk_values = Vector(0);
    out.data_values = Vector(0);
    out.left_vectors = Matrix(m.rows(), 0);
    out.right_vectors = Matrix(m.cols(), 0);
    return out;
  }

  SpectralDecomposition trunc = truncated_svd(m, candidates);

  // Ties at the threshold shrink to exactly zero; they contribute nothing
  // and are dropped, so rank == count of positive shrunk values.
  Index rank = 0;
  Vector shrunk(candidates);
  for (Index l = 0; l < candidates; ++l) {
    shrunk(l) = shrink(trunc.singular_values(l), out.aspect);
    if (shrunk(l) > 0.0) rank = l + 1;
  }

  out.rank = rank;
  out.shrunk_values = shrunk.head(rank);
  out.data_values = trunc.singular_values.head(rank);
  out.left_vectors = trunc.left_vectors.leftCols(rank);
  out.right_vectors = trunc.right_vectors.leftCols(rank);
  return out;
}

DenoiseResult denoise_matrix(const Matrix& m) {
  if (!m.allFinite()) throw InputError("denoise: matrix has non-finite entries");
  return denoise_with_spectrum(m, singular_values(m));
}

}  // namespace lscmf

#include "ccsr/detect.hpp"

#include <cmath>
#include <stdexcept>

namespace ccsr {

FixedOrderDetection detect_count_fixed_s(const FourierGrid& grid, const DetectionParams& params,
                                         int half_order) {
  if (half_order < 1) {
    throw std::invalid_argument("detect_count_fixed_s: s must be >= 1");
  }
  const int stride = grid.cutoff() / (2 * half_order);
  if (stride < 1) {
    throw std::invalid_argument("detect_count_fixed_s: stride underflow (2s > cutoff)");
  }
  const FourierGrid shifted = translate(grid, params.translation);
  const CombinedSequence seq = combine_plus(shifted, half_order, stride);
  const SpectralDecomposition dec = decompose(hankel(seq));

  FixedOrderDetection out;
  out.stride = stride;
  out.singular_values = dec.singular_values;
  if (params.noise_level > 0.0) {
    out.threshold = params.threshold_scale * std::pow(4.0, half_order + 1) * params.noise_level / 3.0;
  } else {
    out.threshold = params.zero_noise_floor * dec.singular_values(0);
  }
  int n = 0;
  for (int j = 0; j < dec.singular_values.size(); ++j) {
    if (dec.singular_values(j) >= out.threshold) ++n;
  }
  out.count = n;
  return out;
}

SweepDetection detect_count_sweep(const FourierGrid& grid, const DetectionParams& params) {
  const int s_hi = (grid.cutoff() - 1) / 2;
  if (grid.cutoff() < 5) {
    throw std::invalid_argument("detect_count_sweep: cutoff must be >= 5");
  }
  SweepDetection out;
  out.count = 0;
  out.best_s = 2;
  for (int s = 2; s <= s_hi; ++s) {
    FixedOrderDetection round = detect_count_fixed_s(grid, params, s);
    out.rounds.emplace_back(s, std::move(round));
    const int n = out.rounds.back().second.count;
    if (n > out.count) {
      out.count = n;
      out.best_s = s;
    }
    if (s >= out.best_s + params.sweep_patience) break;
  }
  return out;
}

}  // namespace ccsr

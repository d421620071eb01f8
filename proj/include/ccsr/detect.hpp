#pragma once

#include <utility>
#include <vector>

#include "ccsr/spectral.hpp"

namespace ccsr {

struct DetectionParams {
  Vec2 translation{0.0, kPi / 2};
  double noise_level = 0.0;
  /// Relative floor applied to the top singular value when noise_level == 0
  /// (the paper threshold degenerates to 0 there).
  double zero_noise_floor = 1e-10;
  /// Multiplier on the paper threshold 4^{s+1} sigma / 3; 1.0 is paper-exact.
  double threshold_scale = 1.0;
  /// Non-improving sweep rounds tolerated before the loop breaks.
  int sweep_patience = 2;
};

struct FixedOrderDetection {
  int count = 0;
  int stride = 1;
  double threshold = 0.0;
  Eigen::VectorXd singular_values;
};

/// Singular-value thresholding at a fixed Hankel half order s. Counts the
/// singular values of H(s) at or above 4^{s+1} sigma / 3.
FixedOrderDetection detect_count_fixed_s(const FourierGrid& grid, const DetectionParams& params,
                                         int half_order);

struct SweepDetection {
  int count = 0;   // n_max
  int best_s = 2;  // half order achieving it
  std::vector<std::pair<int, FixedOrderDetection>> rounds;
};

/// Sweeps s = 2 .. floor((cutoff-1)/2), tracking the largest detected count;
/// breaks after `sweep_patience` non-improving rounds.
SweepDetection detect_count_sweep(const FourierGrid& grid, const DetectionParams& params);

}  // namespace ccsr

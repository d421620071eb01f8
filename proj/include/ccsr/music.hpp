#pragma once

#include <stdexcept>
#include <vector>

#include "ccsr/spectral.hpp"

namespace ccsr {

/// Raised when a pipeline stage cannot produce the requested sources
/// (peak shortfall, degenerate root pairs, ...).
struct RecoveryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square lattice of spacing `step` intersected with the closed disk |d| <= radius.
struct TestGrid {
  double radius = 2.0;
  double step = 0.005;

  int half_count() const { return static_cast<int>(radius / step); }
  int side() const { return 2 * half_count() + 1; }
  Complex point(int i, int j) const {
    return Complex{(i - half_count()) * step, (j - half_count()) * step};
  }
  bool in_disk(int i, int j) const { return std::abs(point(i, j)) <= radius; }
};

/// MUSIC imaging functional sampled over a test grid. The noise space is kept
/// so peaks can be refined off-lattice.
struct MusicImage {
  TestGrid grid;
  std::vector<double> values;  // side*side row-major; 0 marks out-of-disk
  Eigen::MatrixXcd noise_space;

  double value_at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.side() + j];
  }
};

/// J(d) = ||Phi(d)|| / ||U2^* Phi(d)|| with Phi(d) = (1, d, ..., d^s)^T.
/// Returns a sentinel maximum when the denominator underflows.
double imaging_functional(const Eigen::MatrixXcd& noise_space, Complex d);

/// Evaluates J over the grid using the Hankel/SVD of the sequence; grid points
/// are independent, so the OpenMP variant is bit-identical to the serial one.
MusicImage music_image(const CombinedSequence& seq, int count, const TestGrid& grid);
MusicImage music_image_serial(const CombinedSequence& seq, int count, const TestGrid& grid);

struct Peak {
  Complex location;
  double value;
};

/// Greedy selection of `count` strict 8-neighborhood maxima in descending J
/// order with pairwise distance >= min_separation, each refined by 3 rounds of
/// 5x5 local grid search (step shrinking x10 per round).
std::vector<Peak> locate_peaks(const MusicImage& image, int count, double min_separation);

}  // namespace ccsr

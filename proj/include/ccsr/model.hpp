#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace ccsr {

using Complex = std::complex<double>;
using Vec2 = std::array<double, 2>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double l1_distance(const Vec2& a, const Vec2& b) {
  return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]);
}

inline double l2_distance(const Vec2& a, const Vec2& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return std::sqrt(dx * dx + dy * dy);
}

/// Axis-aligned box in R^2 (closed).
struct Box {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{kPi / 2, kPi / 2};

  bool contains(const Vec2& p) const {
    return p[0] >= lo[0] && p[0] <= hi[0] && p[1] >= lo[1] && p[1] <= hi[1];
  }
};

struct Source {
  Vec2 location;      // radians
  Complex amplitude;  // nonzero
};

/// Ground-truth collection of point sources. Immutable after construction;
/// the constructor enforces nonzero amplitudes, containment in the region,
/// and pairwise-distinct locations.
class SourceConfiguration {
 public:
  explicit SourceConfiguration(std::vector<Source> sources, Box region = default_region());

  const std::vector<Source>& sources() const { return sources_; }
  const Box& region() const { return region_; }
  int count() const { return static_cast<int>(sources_.size()); }

  /// Smallest amplitude modulus (m_min).
  double min_modulus() const;

  /// Smallest pairwise l1 distance (D_min); +inf for a single source.
  double min_separation_l1() const;

  static Box default_region() { return Box{}; }

 private:
  std::vector<Source> sources_;
  Box region_;
};

/// Complex measurement values on the integer lattice {0..cutoff}^2,
/// stored row-major by (w1, w2).
class FourierGrid {
 public:
  FourierGrid(int cutoff, std::vector<Complex> values, double noise_level = 0.0);

  int cutoff() const { return cutoff_; }
  int side() const { return cutoff_ + 1; }
  double noise_level() const { return noise_level_; }

  const std::vector<Complex>& values() const { return values_; }
  Complex at(int w1, int w2) const { return values_[static_cast<std::size_t>(w1) * side() + w2]; }

 private:
  int cutoff_;
  double noise_level_;
  std::vector<Complex> values_;
};

struct NoiseSpec {
  double level = 0.0;  // sigma >= 0
  std::uint64_t seed = 0;
};

/// Noiseless Fourier data of the configuration: values[w] = sum_j a_j exp(i y_j . w).
FourierGrid forward_measure(const SourceConfiguration& config, int cutoff);

/// Perturbs each value by sigma * u * exp(i phi), u ~ U[0,1), phi ~ U[0,2pi),
/// so the sup modulus of the perturbation is strictly below sigma.
FourierGrid add_noise(const FourierGrid& grid, const NoiseSpec& spec);

/// Pointwise multiplication by exp(i v . w); moduli unchanged.
FourierGrid translate(const FourierGrid& grid, const Vec2& v);

/// Direction components of a plane wave: (sin(elev) cos(azim), sin(elev) sin(azim)).
Vec2 angles_to_location(double azimuth, double elevation);

}  // namespace ccsr

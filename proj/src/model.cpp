#include "ccsr/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccsr/rng.hpp"

namespace ccsr {

SourceConfiguration::SourceConfiguration(std::vector<Source> sources, Box region)
    : sources_(std::move(sources)), region_(region) {
  if (sources_.empty()) {
    throw std::invalid_argument("SourceConfiguration: no sources");
  }
  for (const auto& s : sources_) {
    if (std::abs(s.amplitude) == 0.0) {
      throw std::invalid_argument("SourceConfiguration: zero amplitude");
    }
    if (!region_.contains(s.location)) {
      throw std::invalid_argument("SourceConfiguration: location outside region");
    }
  }
  for (std::size_t i = 0; i < sources_.size(); ++i) {
    for (std::size_t j = i + 1; j < sources_.size(); ++j) {
      if (sources_[i].location == sources_[j].location) {
        throw std::invalid_argument("SourceConfiguration: coincident locations");
      }
    }
  }
}

double SourceConfiguration::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : sources_) m = std::min(m, std::abs(s.amplitude));
  return m;
}

double SourceConfiguration::min_separation_l1() const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sources_.size(); ++i) {
    for (std::size_t j = i + 1; j < sources_.size(); ++j) {
      d = std::min(d, l1_distance(sources_[i].location, sources_[j].location));
    }
  }
  return d;
}

FourierGrid::FourierGrid(int cutoff, std::vector<Complex> values, double noise_level)
    : cutoff_(cutoff), noise_level_(noise_level), values_(std::move(values)) {
  if (cutoff_ < 0) {
    throw std::invalid_argument("FourierGrid: negative cutoff");
  }
  const auto expected = static_cast<std::size_t>(side()) * side();
  if (values_.size() != expected) {
    throw std::invalid_argument("FourierGrid: value count does not match (cutoff+1)^2");
  }
  if (noise_level_ < 0.0) {
    throw std::invalid_argument("FourierGrid: negative noise level");
  }
}

FourierGrid forward_measure(const SourceConfiguration& config, int cutoff) {
  if (cutoff < 0) {
    throw std::invalid_argument("forward_measure: negative cutoff");
  }
  const int side = cutoff + 1;
  std::vector<Complex> values(static_cast<std::size_t>(side) * side, Complex{0.0, 0.0});
  for (const auto& src : config.sources()) {
    std::size_t idx = 0;
    for (int w1 = 0; w1 < side; ++w1) {
      for (int w2 = 0; w2 < side; ++w2, ++idx) {
        const double phase = src.location[0] * w1 + src.location[1] * w2;
        values[idx] += src.amplitude * std::polar(1.0, phase);
      }
    }
  }
  return FourierGrid(cutoff, std::move(values), 0.0);
}

FourierGrid add_noise(const FourierGrid& grid, const NoiseSpec& spec) {
  if (spec.level < 0.0) {
    throw std::invalid_argument("add_noise: negative noise level");
  }
  std::vector<Complex> values = grid.values();
  if (spec.level > 0.0) {
    Rng rng(spec.seed);
    for (auto& v : values) {
      const double u = rng.uniform01();
      const double phi = 2.0 * kPi * rng.uniform01();
      v += spec.level * u * std::polar(1.0, phi);
    }
  }
  return FourierGrid(grid.cutoff(), std::move(values), spec.level);
}

FourierGrid translate(const FourierGrid& grid, const Vec2& v) {
  const int side = grid.side();
  std::vector<Complex> values(grid.values().size());
  std::size_t idx = 0;
  for (int w1 = 0; w1 < side; ++w1) {
    for (int w2 = 0; w2 < side; ++w2, ++idx) {
      values[idx] = grid.values()[idx] * std::polar(1.0, v[0] * w1 + v[1] * w2);
    }
  }
  return FourierGrid(grid.cutoff(), std::move(values), grid.noise_level());
}

Vec2 angles_to_location(double azimuth, double elevation) {
  return Vec2{std::sin(elevation) * std::cos(azimuth), std::sin(elevation) * std::sin(azimuth)};
}

}  // namespace ccsr

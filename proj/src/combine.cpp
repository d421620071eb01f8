#include "ccsr/combine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccsr {

std::vector<std::uint64_t> binomial_row(int t) {
  if (t < 0 || t > 64) {
    throw std::invalid_argument("binomial_row: order must be in [0, 64]");
  }
  std::vector<std::uint64_t> row(static_cast<std::size_t>(t) + 1, 1);
  for (int i = 1; i <= t; ++i) {
    for (int j = i - 1; j >= 1; --j) row[j] += row[j - 1];
  }
  return row;
}

namespace {

CombinedSequence combine_impl(const FourierGrid& grid, int half_order, int stride,
                              SignVariant variant) {
  if (half_order < 1) {
    throw std::invalid_argument("combine: half order s must be positive");
  }
  if (stride < 1) {
    throw std::invalid_argument("combine: stride r must be positive");
  }
  if (static_cast<long>(stride) * 2 * half_order > grid.cutoff()) {
    throw std::invalid_argument("combine: r*2s = " + std::to_string(stride * 2 * half_order) +
                                " exceeds cutoff " + std::to_string(grid.cutoff()));
  }
  CombinedSequence seq;
  seq.half_order = half_order;
  seq.stride = stride;
  seq.variant = variant;
  seq.values.resize(static_cast<std::size_t>(2 * half_order) + 1);
  for (int t = 0; t <= 2 * half_order; ++t) {
    const auto weights = binomial_row(t);
    Complex acc{0.0, 0.0};
    for (int t1 = 0; t1 <= t; ++t1) {
      const int t2 = t - t1;
      double w = static_cast<double>(weights[static_cast<std::size_t>(t1)]);
      if (variant == SignVariant::Minus && (t2 & 1)) w = -w;
      acc += w * grid.at(stride * t1, stride * t2);
    }
    seq.values[static_cast<std::size_t>(t)] = acc;
  }
  return seq;
}

}  // namespace

CombinedSequence combine_plus(const FourierGrid& grid, int half_order, int stride) {
  return combine_impl(grid, half_order, stride, SignVariant::Plus);
}

CombinedSequence combine_minus(const FourierGrid& grid, int half_order) {
  return combine_impl(grid, half_order, 1, SignVariant::Minus);
}

std::vector<double> noise_amplification_bound(int half_order) {
  if (half_order < 0) {
    throw std::invalid_argument("noise_amplification_bound: s must be nonnegative");
  }
  std::vector<double> bound(static_cast<std::size_t>(2 * half_order) + 1);
  for (int t = 0; t <= 2 * half_order; ++t) bound[static_cast<std::size_t>(t)] = std::ldexp(1.0, t);
  return bound;
}

}  // namespace ccsr

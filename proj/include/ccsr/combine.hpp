#pragma once

#include <cstdint>
#include <vector>

#include "ccsr/model.hpp"

namespace ccsr {

enum class SignVariant { Plus, Minus };

/// The 2s+1 scalars D(t) or G(t) obtained by coordinate combination of a
/// (translated) measurement grid.
struct CombinedSequence {
  std::vector<Complex> values;  // indexed t = 0..2s
  int half_order = 0;           // s
  int stride = 1;               // r
  SignVariant variant = SignVariant::Plus;
};

/// Row t of Pascal's triangle, exact in 64-bit (t <= 64).
std::vector<std::uint64_t> binomial_row(int t);

/// D(t) = sum_{t1+t2=t} C(t,t1) X(r t1, r t2), t = 0..2s.
/// For a noiseless grid with sources x_j this equals
/// sum_j a_j (exp(i r x_{j,1}) + exp(i r x_{j,2}))^t exactly.
CombinedSequence combine_plus(const FourierGrid& grid, int half_order, int stride);

/// G(t) = sum_{t1+t2=t} (-1)^{t2} C(t,t1) X(t1, t2); stride fixed at 1.
/// Noiseless value: sum_j a_j (exp(i x_{j,1}) - exp(i x_{j,2}))^t.
CombinedSequence combine_minus(const FourierGrid& grid, int half_order);

/// Bound 2^t on the combined noise term, t = 0..2s.
std::vector<double> noise_amplification_bound(int half_order);

}  // namespace ccsr

#include "ccsr/spectral.hpp"

#include <stdexcept>

namespace ccsr {

HankelMatrix hankel(const CombinedSequence& seq) {
  const int s = seq.half_order;
  if (static_cast<int>(seq.values.size()) != 2 * s + 1) {
    throw std::invalid_argument("hankel: sequence must hold 2s+1 values");
  }
  HankelMatrix H;
  H.entries.resize(s + 1, s + 1);
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= s; ++j) {
      H.entries(i, j) = seq.values[static_cast<std::size_t>(i + j)];
    }
  }
  return H;
}

SpectralDecomposition decompose(const HankelMatrix& H) {
  // JacobiSVD: deterministic for identical input bits, orthonormal to well
  // below 1e-10 at the orders used here (<= 33).
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H.entries, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("decompose: SVD failed to converge");
  }
  SpectralDecomposition dec;
  dec.singular_values = svd.singularValues();
  dec.left_vectors = svd.matrixU();
  dec.right_vectors = svd.matrixV();
  return dec;
}

Eigen::MatrixXcd noise_subspace(const SpectralDecomposition& dec, int count) {
  const int order = static_cast<int>(dec.left_vectors.cols());
  if (count < 0) {
    throw std::invalid_argument("noise_subspace: negative count");
  }
  if (count >= order) {
    throw std::invalid_argument("noise_subspace: count >= s+1 leaves no noise space");
  }
  return dec.left_vectors.rightCols(order - count);
}

}  // namespace ccsr

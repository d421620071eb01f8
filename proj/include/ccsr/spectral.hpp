#pragma once

#include <Eigen/Dense>

#include "ccsr/combine.hpp"

namespace ccsr {

/// (s+1)x(s+1) complex-symmetric Hankel matrix, entries[i][j] = seq[i+j].
struct HankelMatrix {
  Eigen::MatrixXcd entries;
  int order() const { return static_cast<int>(entries.rows()); }
};

HankelMatrix hankel(const CombinedSequence& seq);

/// Full SVD H = U S V^*. Singular values descend; both factors are kept so the
/// reconstruction can be checked (a complex-symmetric matrix has no U S U^*
/// form in general, the two unitary factors differ by conjugation).
struct SpectralDecomposition {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXcd left_vectors;
  Eigen::MatrixXcd right_vectors;
};

SpectralDecomposition decompose(const HankelMatrix& H);

/// Columns count+1 .. s+1 of the left singular vectors.
Eigen::MatrixXcd noise_subspace(const SpectralDecomposition& dec, int count);

}  // namespace ccsr

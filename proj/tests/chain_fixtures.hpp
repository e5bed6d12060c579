#pragma once

#include <Eigen/Dense>

#include "test_util.hpp"
#include "torsionlab/chain_torsion.hpp"

namespace torsionlab::test {

inline Eigen::MatrixXd random_matrix(Draw& d, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d.real(-1.0, 1.0);
  return m;
}

// Well-conditioned random invertible matrix: identity plus a small perturbation.
inline Eigen::MatrixXd random_invertible(Draw& d, int n) {
  return Eigen::MatrixXd::Identity(n, n) + 0.3 * random_matrix(d, n, n);
}

// Standard complex R^1 -> R^3 -> R^3 with e -> e1 and e2 -> f1, e3 -> f2, conjugated by random invertible maps.
// H_0 is spanned by P0 f3 and every other homology group vanishes.
struct RandomComplex {
  chain::FiniteChainComplex complex;
  chain::GradedHomologyBasis h;
};

inline RandomComplex random_complex(Draw& d) {
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(3, 3);
  d1(0, 1) = 1.0;
  d1(1, 2) = 1.0;
  Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(3, 1);
  d2(0, 0) = 1.0;
  const Eigen::MatrixXd p0 = random_invertible(d, 3);
  const Eigen::MatrixXd p1 = random_invertible(d, 3);
  const Eigen::MatrixXd p2 = random_invertible(d, 1);
  RandomComplex out;
  out.complex.lengths = {3, 3, 1};
  out.complex.boundaries = {Eigen::MatrixXd(0, 3), p0 * d1 * p1.inverse(), p1 * d2 * p2.inverse()};
  out.h.per_degree.resize(3);
  out.h.per_degree[0].push_back(p0.col(2));
  return out;
}

// Replaces each lift set b_q by b_q A + K B with A invertible and K spanning ker d_q.
inline chain::LiftSets perturb_lifts(Draw& d, const chain::FiniteChainComplex& cx, const chain::LiftSets& lifts) {
  chain::LiftSets out = lifts;
  for (std::size_t q = 0; q < lifts.size(); ++q) {
    const int r = static_cast<int>(lifts[q].cols());
    if (r == 0) continue;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cx.boundaries[q]);
    const Eigen::MatrixXd kernel = lu.kernel();
    out[q] = lifts[q] * random_invertible(d, r);
    if (kernel.cols() > 0 && kernel.norm() > 0) out[q] += kernel * random_matrix(d, static_cast<int>(kernel.cols()), r);
  }
  return out;
}

}  // namespace torsionlab::test

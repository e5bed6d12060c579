#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "torsionlab/geometry.hpp"

namespace torsionlab::chain {

// C_m → … → C_0 over ℝ with the standard basis in each degree.
struct FiniteChainComplex {
  // dim C_q, q = 0..m.
  std::vector<int> lengths;
  // boundaries[q] : C_q → C_{q−1} is lengths[q−1] × lengths[q]; boundaries[0] is 0 × lengths[0].
  std::vector<Eigen::MatrixXd> boundaries;

  int top_degree() const { return static_cast<int>(lengths.size()) - 1; }
  // Throws DomainError on inconsistent shapes or ∂∘∂ ≠ 0.
  void validate() const;
};

// Per degree, cycle representatives whose classes form a basis of H_q.
struct GradedHomologyBasis {
  std::vector<std::vector<Eigen::VectorXd>> per_degree;
};

// Lift sets b_q, one matrix per degree (columns in C_q); ∂_q b_q must be a basis of B_{q−1}.
using LiftSets = std::vector<Eigen::MatrixXd>;

// Standard-basis lifts chosen by column-pivoted QR of each ∂_q.
LiftSets default_lifts(const FiniteChainComplex& complex);

// log τ = Σ_q (−1)^q log|det(∂_{q+1} b_{q+1}, h_q, b_q)|.
double log_reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h);
double log_reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h,
                                const LiftSets& lifts);
double reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h);

struct ConeComplex {
  FiniteChainComplex complex;
  // Homology basis normalized by the cone volume V.
  std::function<GradedHomologyBasis(double volume)> homology_basis;
};

// One top cell, one n-cell and one 0-cell (absolute); the top cell alone (relative).
ConeComplex cone_cw_complex(int n, BoundaryCondition bc);

// Vol = l^{n+1} sinⁿα · Vol(Sⁿ)/(n+1).
double volume(const ConeGeometry& geom);

// log of the RS torsion: (rank/2) log Vol (absolute), (−1)ⁿ (rank/2) log Vol (relative).
double rs_torsion_closed(const ConeGeometry& geom, BoundaryCondition bc);

}  // namespace torsionlab::chain

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/geometry.hpp"

namespace torsionlab {

enum class Method { ClosedForm, Pipeline };

std::string to_string(Method method);

struct BreakdownTerm {
  std::string name;
  double value = 0.0;
};

// log T with its named additive terms; log_value is their compensated sum.
struct TorsionReport {
  double log_value = 0.0;
  std::vector<BreakdownTerm> breakdown;
  Method method = Method::ClosedForm;
  ConeGeometry geometry;
  BoundaryCondition bc = BoundaryCondition::Absolute;

  double breakdown_sum() const;
  // Value of a named term; throws DomainError if absent.
  double term(const std::string& name) const;
};

// Disc D^m_l with absolute conditions.
TorsionReport analytic_torsion_disc(int m, double l, int rank = 1);
// Cone over the circle; the relative value is the negative of the absolute one.
TorsionReport analytic_torsion_cone_circle(double alpha, double l, BoundaryCondition bc, int rank = 1);
// Cone over S²; identical for both conditions.
TorsionReport analytic_torsion_cone_sphere(double alpha, double l, BoundaryCondition bc, int rank = 1);

// Assembled from simple Bessel zetas and the Z − Ẑ difference.
TorsionReport pipeline_circle(double alpha, double l, BoundaryCondition bc = BoundaryCondition::Absolute, int rank = 1);
// Assembled from simple Bessel zetas at orders ½, 3/2 and the Z₊ − Z₋ difference.
TorsionReport pipeline_sphere(double alpha, double l, BoundaryCondition bc = BoundaryCondition::Absolute, int rank = 1);

// Closed form for any supported geometry: discs of every dimension, cones over S¹ and S².
TorsionReport closed_form_torsion(const ConeGeometry& geom, BoundaryCondition bc);
// Pipeline for cones over S¹ and S² (including D² and D³); nullopt otherwise.
std::optional<TorsionReport> pipeline_torsion(const ConeGeometry& geom, BoundaryCondition bc);

// χ(S^k): 2 for even k, 0 for odd k.
int euler_characteristic_sphere(int k);

// Σ_{n=1}^{k} 1/n and Σ_{j=1}^{k} 1/(2j−1); empty sums are 0.
double harmonic_number(int k);
double odd_harmonic_number(int k);

// Brüning–Ma boundary term of log T − log τ (absolute conditions).
// UnsupportedError for odd m with α < π/2 and for even m ≥ 4 with α < π/2.
double anomaly_bm(int m, double alpha, int rank = 1);
// Dai–Fang boundary term of log T − log τ (absolute conditions).
double anomaly_df(int m, double alpha, int rank = 1);
// (−1)^{p+1}(2p)! Vol(S^{2p−1}_{l sin α}) / ((4π)^p l^{2p−1} p! sin^{2p−2}α) · Σ_k (−1)^k sin^{2k}α C(p−1,k)/(2k+1).
double df_integral(int p, double alpha, double l = 1.0);

struct NormalizationCheck {
  int p = 0;
  // Product c_B · 2^{p−1}/(√π(2p−1)!!) · (−1)^p p(2p−1)!/(2^{p−1}2^p l^{2p−1}) · Vol(S^{2p−1}_l)
  // as rational · π^{pi_half_power/2} · l^{l_power}, with c_B = (−1)^{p(2p−1)} π^{−(2p−1)/2}.
  std::string chain_rational;
  int chain_pi_half_power = 0;
  int chain_l_power = 0;
  bool chain_equals_p = false;
  // The same product with c_B carrying π^{−(2p+1)/2}.
  std::string alt_chain_rational;
  int alt_chain_pi_half_power = 0;
  bool alt_chain_equals_p = false;
  // p(2p−1)!√π / (2^{p−1}(p−1)!√π(2p−1)!!) = p.
  bool simplified_equals_p = false;
  // (2p−1)!/((p−1)!(2p−1)!!) = 2^{p−1}.
  std::string factorial_lhs;
  std::string factorial_rhs;
  bool factorial_identity = false;

  bool holds() const { return chain_equals_p && simplified_equals_p && factorial_identity; }
};

// Exact rational arithmetic; 1 ≤ p ≤ 10.
NormalizationCheck normalization_identity(int p);

struct ConsistencyReport {
  ConeGeometry geometry;
  BoundaryCondition bc = BoundaryCondition::Absolute;
  int m = 0;
  double log_T_closed = 0.0;
  std::optional<double> log_T_pipeline;
  double log_tau = 0.0;
  std::optional<double> bm;
  std::optional<double> df;
  // log T − log τ − anomaly, with log T from the pipeline when available and the closed form otherwise.
  std::optional<double> residual_bm;
  std::optional<double> residual_df;
  std::optional<double> pipeline_minus_closed;
};

// Anomalies for relative conditions carry the duality sign (−1)^{m−1}.
ConsistencyReport consistency_report(const ConeGeometry& geom, BoundaryCondition bc);

}  // namespace torsionlab

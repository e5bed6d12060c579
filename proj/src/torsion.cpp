#include "torsionlab/torsion.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "torsionlab/chain_torsion.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/kahan.hpp"
#include "torsionlab/specfun.hpp"
#include "torsionlab/zeta_engine.hpp"

namespace torsionlab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using specfun::kPi;

constexpr double kHalfPi = 1.5707963267948966;

TorsionReport make_report(std::vector<BreakdownTerm> terms, Method method, const ConeGeometry& geom,
                          BoundaryCondition bc, double sign = 1.0) {
  TorsionReport r;
  for (auto& t : terms) t.value *= sign * geom.rank;
  r.breakdown = std::move(terms);
  r.method = method;
  r.geometry = geom;
  r.bc = bc;
  r.log_value = r.breakdown_sum();
  return r;
}

ConeGeometry cone(int n, double alpha, double l, int rank) {
  ConeGeometry g{n, alpha, l, rank};
  g.validate();
  return g;
}

// log T_rel = (−1)^{m−1} log T_abs on an m-dimensional cone.
double duality_sign(int m, BoundaryCondition bc) {
  return (bc == BoundaryCondition::Relative && m % 2 == 0) ? -1.0 : 1.0;
}

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int double_factorial(int n) {
  cpp_int f = 1;
  for (int i = n; i > 1; i -= 2) f *= i;
  return f;
}

cpp_int pow2(int k) { return cpp_int(1) << k; }

// rational · π^{pi_half/2} · l^{l_power}
struct Symbolic {
  cpp_rational coeff = 1;
  int pi_half = 0;
  int l_power = 0;

  Symbolic operator*(const Symbolic& o) const { return {coeff * o.coeff, pi_half + o.pi_half, l_power + o.l_power}; }
};

std::string to_string(const cpp_rational& q) { return q.str(); }

}  // namespace

std::string to_string(Method method) { return method == Method::ClosedForm ? "closed_form" : "pipeline"; }

double TorsionReport::breakdown_sum() const {
  KahanSum acc;
  for (const auto& t : breakdown) acc += t.value;
  return acc.value();
}

double TorsionReport::term(const std::string& name) const {
  for (const auto& t : breakdown) {
    if (t.name == name) return t.value;
  }
  throw DomainError("TorsionReport has no term named " + name);
}

TorsionReport analytic_torsion_disc(int m, double l, int rank) {
  const ConeGeometry geom = disc_geometry(m, l, rank);
  if (m == 1) {
    return make_report({{"volume", 0.5 * std::log(l)}, {"log2", 0.5 * std::log(2.0)}}, Method::ClosedForm, geom,
                       BoundaryCondition::Absolute);
  }
  const double half_log_vol = 0.5 * std::log(chain::volume(disc_geometry(m, l, 1)));
  if (m % 2 == 1) {
    const int p = (m + 1) / 2;
    return make_report({{"volume", half_log_vol}, {"log2", 0.5 * std::log(2.0)}, {"harmonic_sum", 0.25 * harmonic_number(p - 1)}},
                       Method::ClosedForm, geom, BoundaryCondition::Absolute);
  }
  const int p = m / 2;
  return make_report({{"volume", half_log_vol}, {"boundary", 0.5 * p * odd_harmonic_number(p)}}, Method::ClosedForm, geom,
                     BoundaryCondition::Absolute);
}

TorsionReport analytic_torsion_cone_circle(double alpha, double l, BoundaryCondition bc, int rank) {
  const ConeGeometry geom = cone(1, alpha, l, rank);
  const double a = geom.sin_alpha();
  return make_report({{"volume", 0.5 * std::log(kPi * l * l * a)}, {"boundary", 0.5 * a}}, Method::ClosedForm, geom, bc,
                     duality_sign(2, bc));
}

TorsionReport analytic_torsion_cone_sphere(double alpha, double l, BoundaryCondition bc, int rank) {
  const ConeGeometry geom = cone(2, alpha, l, rank);
  const double a = geom.sin_alpha();
  return make_report({{"scale", 0.5 * std::log(4.0 * l * l * l / 3.0)},
                      {"F_term", -0.5 * zeta::F_zero(geom.nu())},
                      {"boundary", 0.25 * a * a}},
                     Method::ClosedForm, geom, bc, duality_sign(3, bc));
}

TorsionReport pipeline_circle(double alpha, double l, BoundaryCondition bc, int rank) {
  const ConeGeometry geom = cone(1, alpha, l, rank);
  const auto z0 = zeta::simple_bessel_zeta(0.0, 0.0, l);
  const auto z1 = zeta::simple_bessel_zeta(1.0, 0.0, l);
  const auto dz = zeta::circle_Z_difference(geom.nu());
  const double log_l2 = 2.0 * std::log(l);
  return make_report({{"simple_zeta", 0.5 * z0.deriv_at0 - 0.5 * z1.deriv_at0},
                      {"Z0_log_l2", dz.value * log_l2},
                      {"Z_difference", dz.derivative}},
                     Method::Pipeline, geom, bc, duality_sign(2, bc));
}

TorsionReport pipeline_sphere(double alpha, double l, BoundaryCondition bc, int rank) {
  const ConeGeometry geom = cone(2, alpha, l, rank);
  const auto zh = zeta::simple_bessel_zeta(0.5, 0.0, l);
  const auto z3h = zeta::simple_bessel_zeta(1.5, 0.0, l);
  const auto dz = zeta::sphere_Z_difference(geom.nu());
  const double log_l2 = 2.0 * std::log(l);
  return make_report({{"simple_zeta", -0.5 * zh.deriv_at0 - 0.5 * z3h.deriv_at0},
                      {"Z0_log_l2", 0.5 * dz.value * log_l2},
                      {"Z_difference", 0.5 * dz.derivative}},
                     Method::Pipeline, geom, bc, duality_sign(3, bc));
}

TorsionReport closed_form_torsion(const ConeGeometry& geom, BoundaryCondition bc) {
  geom.validate();
  if (geom.n == 1) return analytic_torsion_cone_circle(geom.alpha, geom.l, bc, geom.rank);
  if (geom.n == 2) return analytic_torsion_cone_sphere(geom.alpha, geom.l, bc, geom.rank);
  if (!geom.is_disc()) throw UnsupportedError("closed forms exist for discs and for cones over S^1 and S^2");
  const int m = geom.n + 1;
  TorsionReport r = analytic_torsion_disc(m, geom.l, geom.rank);
  const double sign = duality_sign(m, bc);
  for (auto& t : r.breakdown) t.value *= sign;
  r.log_value = r.breakdown_sum();
  r.bc = bc;
  return r;
}

std::optional<TorsionReport> pipeline_torsion(const ConeGeometry& geom, BoundaryCondition bc) {
  geom.validate();
  if (geom.n == 1) return pipeline_circle(geom.alpha, geom.l, bc, geom.rank);
  if (geom.n == 2) return pipeline_sphere(geom.alpha, geom.l, bc, geom.rank);
  return std::nullopt;
}

int euler_characteristic_sphere(int k) {
  if (k < 0) throw DomainError("sphere dimension must be >= 0");
  return k % 2 == 0 ? 2 : 0;
}

double harmonic_number(int k) {
  KahanSum acc;
  for (int n = 1; n <= k; ++n) acc += 1.0 / n;
  return acc.value();
}

double odd_harmonic_number(int k) {
  KahanSum acc;
  for (int j = 1; j <= k; ++j) acc += 1.0 / (2.0 * j - 1.0);
  return acc.value();
}

double anomaly_bm(int m, double alpha, int rank) {
  if (m < 2) throw DomainError("anomaly_bm: dimension must be >= 2");
  if (rank < 1) throw DomainError("anomaly_bm: rank must be >= 1");
  const ConeGeometry geom = cone(m - 1, alpha, 1.0, rank);
  if (m % 2 == 1) {
    if (!geom.is_disc()) throw UnsupportedError("anomaly_bm: odd dimensions are supported for discs only");
    const int p = (m + 1) / 2;
    return 0.25 * rank * euler_characteristic_sphere(2 * p - 2) * (std::log(2.0) + 0.5 * harmonic_number(p - 1));
  }
  if (m == 2) return 0.5 * rank * geom.sin_alpha();
  if (!geom.is_disc()) throw UnsupportedError("anomaly_bm: even dimensions >= 4 are supported for discs only");
  const int p = m / 2;
  return 0.5 * p * rank * odd_harmonic_number(p);
}

double df_integral(int p, double alpha, double l) {
  if (p < 1) throw DomainError("df_integral: p must be >= 1");
  const ConeGeometry geom = cone(2 * p - 1, alpha, l, 1);
  const double a = geom.sin_alpha();
  const double r = l * a;
  const double vol = 2.0 * std::pow(kPi, p) * std::pow(r, 2 * p - 1) / std::tgamma(static_cast<double>(p));
  const double sign = p % 2 == 1 ? 1.0 : -1.0;
  const double prefactor = sign * std::tgamma(2.0 * p + 1.0) * vol /
                           (std::pow(4.0 * kPi, p) * std::pow(l, 2 * p - 1) * std::tgamma(p + 1.0) * std::pow(a, 2 * p - 2));
  KahanSum sum;
  double binom = 1.0;
  for (int k = 0; k <= p - 1; ++k) {
    sum += (k % 2 == 0 ? 1.0 : -1.0) * std::pow(a, 2 * k) * binom / (2.0 * k + 1.0);
    binom = binom * (p - 1 - k) / (k + 1.0);
  }
  return prefactor * sum.value();
}

double anomaly_df(int m, double alpha, int rank) {
  if (m < 2) throw DomainError("anomaly_df: dimension must be >= 2");
  if (rank < 1) throw DomainError("anomaly_df: rank must be >= 1");
  const ConeGeometry geom = cone(m - 1, alpha, 1.0, rank);
  if (m % 2 == 1) {
    if (!geom.is_disc()) throw UnsupportedError("anomaly_df: odd dimensions are supported for discs only");
    const int p = (m + 1) / 2;
    return 0.25 * rank * euler_characteristic_sphere(2 * p - 2) * std::log(2.0);
  }
  return 0.5 * rank * df_integral(m / 2, alpha);
}

NormalizationCheck normalization_identity(int p) {
  if (p < 1 || p > 10) throw DomainError("normalization_identity: p must lie in 1..10");
  NormalizationCheck out;
  out.p = p;
  const int sign_b = (p * (2 * p - 1)) % 2 == 0 ? 1 : -1;
  const int sign_p = p % 2 == 0 ? 1 : -1;
  const cpp_int dfact = double_factorial(2 * p - 1);
  const cpp_int fact_2p1 = factorial(2 * p - 1);
  const cpp_int fact_p1 = factorial(p - 1);

  const Symbolic factor_norm{cpp_rational(pow2(p - 1), dfact), -1, 0};
  const Symbolic factor_integrand{cpp_rational(sign_p * p * fact_2p1, pow2(p - 1) * pow2(p)), 0, -(2 * p - 1)};
  const Symbolic volume{cpp_rational(cpp_int(2), fact_p1), 2 * p, 2 * p - 1};
  const Symbolic rest = factor_norm * factor_integrand * volume;

  const Symbolic c_b{cpp_rational(sign_b), -(2 * p - 1), 0};
  const Symbolic chain = c_b * rest;
  out.chain_rational = to_string(chain.coeff);
  out.chain_pi_half_power = chain.pi_half;
  out.chain_l_power = chain.l_power;
  out.chain_equals_p = chain.coeff == cpp_rational(p) && chain.pi_half == 0 && chain.l_power == 0;

  const Symbolic c_b_alt{cpp_rational(sign_b), -(2 * p + 1), 0};
  const Symbolic alt = c_b_alt * rest;
  out.alt_chain_rational = to_string(alt.coeff);
  out.alt_chain_pi_half_power = alt.pi_half;
  out.alt_chain_equals_p = alt.coeff == cpp_rational(p) && alt.pi_half == 0 && alt.l_power == 0;

  // The two √π factors cancel symbolically; the rational part must be p.
  const cpp_rational simplified(p * fact_2p1, pow2(p - 1) * fact_p1 * dfact);
  out.simplified_equals_p = simplified == cpp_rational(p);

  const cpp_rational lhs(fact_2p1, fact_p1 * dfact);
  out.factorial_lhs = to_string(lhs);
  out.factorial_rhs = pow2(p - 1).str();
  out.factorial_identity = lhs == cpp_rational(pow2(p - 1));
  return out;
}

ConsistencyReport consistency_report(const ConeGeometry& geom, BoundaryCondition bc) {
  geom.validate();
  ConsistencyReport r;
  r.geometry = geom;
  r.bc = bc;
  r.m = geom.n + 1;
  r.log_T_closed = closed_form_torsion(geom, bc).log_value;
  if (auto pipe = pipeline_torsion(geom, bc)) {
    r.log_T_pipeline = pipe->log_value;
    r.pipeline_minus_closed = pipe->log_value - r.log_T_closed;
  }
  r.log_tau = chain::rs_torsion_closed(geom, bc);
  const double sign = duality_sign(r.m, bc);
  const double log_T = r.log_T_pipeline.value_or(r.log_T_closed);
  if (r.m >= 2) {
    try {
      r.bm = sign * anomaly_bm(r.m, geom.alpha, geom.rank);
      r.residual_bm = log_T - r.log_tau - *r.bm;
    } catch (const UnsupportedError&) {
    }
    try {
      r.df = sign * anomaly_df(r.m, geom.alpha, geom.rank);
      r.residual_df = log_T - r.log_tau - *r.df;
    } catch (const UnsupportedError&) {
    }
  }
  return r;
}

}  // namespace torsionlab

#include "torsionlab/zeta_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <map>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "torsionlab/errors.hpp"
#include "torsionlab/kahan.hpp"
#include "torsionlab/specfun.hpp"
#include "torsionlab/spectrum.hpp"

namespace torsionlab::zeta {

namespace {

using specfun::kEulerGamma;
using specfun::kPi;

// Generalized binomial coefficient C(x, j) for real x.
double binomial(double x, int j) {
  double c = 1.0;
  for (int i = 0; i < j; ++i) c *= (x - i) / (i + 1.0);
  return c;
}

void require_nu(double nu, const char* who) {
  if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError(std::string(who) + ": nu must be >= 1");
}

// 2atanh(x) − 2x, accurate for small x.
double atanh_remainder(double x) {
  if (x >= 0.1) return 2.0 * std::atanh(x) - 2.0 * x;
  const double x2 = x * x;
  KahanSum acc;
  double p = x * x2;
  for (int k = 1; k < 40; ++k) {
    const double t = 2.0 * p / (2.0 * k + 1.0);
    acc += t;
    if (t < 1e-18 * acc.value()) break;
    p *= x2;
  }
  return acc.value();
}

// Σ_{k>K} 1/z_k² ≈ ζ_H(2, K+1+a)/π² for zeros z_k ≈ π(k + a).
double zero_tail_sum(double a, int zero_count) { return specfun::hurwitz_zeta(2.0, zero_count + 1.0 + a) / (kPi * kPi); }

specfun::ZeroFamily family_of(SequenceCase c, double u) {
  switch (c) {
    case SequenceCase::CircleS:
      return {specfun::ZeroKind::JZero, u};
    case SequenceCase::CircleShat:
      return {specfun::ZeroKind::JPrimeZero, u};
    case SequenceCase::SphereSplus:
      return {specfun::ZeroKind::GPlusZero, u};
    case SequenceCase::SphereSminus:
      return {specfun::ZeroKind::GMinusZero, u};
  }
  return {specfun::ZeroKind::JZero, u};
}

// McMahon phase shift a with z_k ≈ π(k + a).
double mcmahon_shift(specfun::ZeroKind kind, double u) {
  return kind == specfun::ZeroKind::JZero ? 0.5 * u - 0.25 : 0.5 * u - 0.75;
}

}  // namespace

void PLambdaExpansion::validate() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!(terms[i].exponent > 0.0) || !std::isfinite(terms[i].exponent)) {
      throw DomainError("PLambdaExpansion: exponents must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (terms[j].exponent == terms[i].exponent) throw DomainError("PLambdaExpansion: repeated exponent");
    }
  }
}

double PLambdaExpansion::evaluate(double lambda) const {
  if (!(lambda < 1.0)) throw DomainError("PLambdaExpansion: evaluation needs lambda < 1");
  KahanSum acc;
  acc += constant;
  for (const auto& t : terms) acc += t.coefficient * std::pow(1.0 - lambda, -t.exponent);
  return acc.value();
}

PLambdaExpansion PLambdaExpansion::operator+(const PLambdaExpansion& other) const {
  std::map<double, double> merged;
  for (const auto& t : terms) merged[t.exponent] += t.coefficient;
  for (const auto& t : other.terms) merged[t.exponent] += t.coefficient;
  PLambdaExpansion out;
  for (const auto& [a, c] : merged) out.terms.push_back({c, a});
  out.constant = constant + other.constant;
  return out;
}

PLambdaExpansion PLambdaExpansion::operator-(const PLambdaExpansion& other) const { return *this + other.scaled(-1.0); }

PLambdaExpansion PLambdaExpansion::scaled(double factor) const {
  PLambdaExpansion out = *this;
  for (auto& t : out.terms) t.coefficient *= factor;
  out.constant *= factor;
  return out;
}

double PhiTransform::operator()(double s) const {
  if (s == 0.0) throw PoleError("Phi has a pole at s = 0");
  KahanSum acc;
  for (const auto& t : expansion.terms) {
    if (t.coefficient == 0.0) continue;
    acc += t.coefficient * std::tgamma(s + t.exponent) / (std::tgamma(t.exponent) * s);
  }
  return acc.value();
}

MeromorphicValue PhiTransform::at_zero() const {
  KahanSum residue;
  KahanSum finite;
  for (const auto& t : expansion.terms) {
    residue += t.coefficient;
    finite += t.coefficient * specfun::digamma(t.exponent);
  }
  return {residue.value(), finite.value(), 0.0};
}

PhiTransform phi_transform(const PLambdaExpansion& phi) {
  phi.validate();
  return PhiTransform{phi};
}

ExpansionPair circle_phi_pair() {
  PLambdaExpansion phi1{{{-1.0 / 8.0, 0.5}, {5.0 / 24.0, 1.5}}, -1.0 / 12.0};
  PLambdaExpansion phi1_hat{{{3.0 / 8.0, 0.5}, {-7.0 / 24.0, 1.5}}, -1.0 / 12.0};
  return {phi1, phi1_hat};
}

ExpansionPair sphere_phi2_pair() {
  PLambdaExpansion plus{{{1.0 / 16.0, 1.0}, {-3.0 / 8.0, 2.0}, {7.0 / 16.0, 3.0}}, -1.0 / 8.0};
  PLambdaExpansion minus{{{9.0 / 16.0, 1.0}, {-7.0 / 8.0, 2.0}, {7.0 / 16.0, 3.0}}, -1.0 / 8.0};
  return {plus, minus};
}

SimpleZetaValues simple_bessel_zeta(double nu, double q, double l) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("simple_bessel_zeta: nu must be >= 0");
  if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("simple_bessel_zeta: q must be >= 0");
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("simple_bessel_zeta: l must be > 0");
  SimpleZetaValues out;
  out.at0 = -0.5 * (nu + 0.5);
  if (q == 0.0) {
    out.deriv_at0 = -(0.5 * std::log(kPi) + (nu + 0.5) * std::log(l) - (nu - 0.5) * std::log(2.0) - specfun::gamma_ln(nu + 1.0));
  } else {
    out.deriv_at0 = -(0.5 * std::log(2.0 * kPi * l) + specfun::log_bessel_i(nu, l * q) - nu * std::log(q));
  }
  return out;
}

double simple_zeta_difference_product(double nu, double q, double q_prime, double l, int zero_count) {
  if (zero_count < 1) throw DomainError("simple_zeta_difference_product: need at least one zero");
  const auto zs = specfun::zeros({specfun::ZeroKind::JZero, nu}, zero_count);
  const double a2 = l * l * q * q;
  const double b2 = l * l * q_prime * q_prime;
  KahanSum acc;
  for (double j : zs) acc += std::log1p(a2 / (j * j)) - std::log1p(b2 / (j * j));
  acc += (a2 - b2) * zero_tail_sum(mcmahon_shift(specfun::ZeroKind::JZero, nu), zero_count);
  return -acc.value();
}

ZetaAtZero assemble_at_zero(const DecompositionConfig& config, const AssemblyTerms& terms) {
  if (!(config.kappa > 0.0)) throw DomainError("assemble_at_zero: kappa must be > 0");
  if (!std::is_sorted(config.sigma.begin(), config.sigma.end())) throw DomainError("assemble_at_zero: sigma must increase");
  if (std::find(config.sigma.begin(), config.sigma.end(), config.pole.location) == config.sigma.end()) {
    throw DomainError("assemble_at_zero: the pole of zeta(s,U) is not among the sigma_h");
  }
  const double ru_phi = terms.phi.residue;
  const double rz_phi = terms.phi.finite_part;
  const double res = config.pole.residue;
  ZetaAtZero out;
  out.value = -terms.a01 + ru_phi * res / config.kappa;
  double tail = 0.0;
  if (ru_phi != 0.0) {
    if (!config.pole.finite_part) {
      throw DomainError("assemble_at_zero: finite part of zeta(s,U) is required when Ru Phi != 0");
    }
    tail = ru_phi * *config.pole.finite_part;
  }
  out.derivative = -terms.a00 - terms.a01_derivative + (kEulerGamma * ru_phi + rz_phi) * res / config.kappa + tail;
  return out;
}

DecompositionConfig circle_decomposition(double nu) {
  require_nu(nu, "circle_decomposition");
  return {2.0, 2, {-1.0, 0.0, 1.0}, {1.0, 1.0 / nu, (kEulerGamma + std::log(nu)) / nu}};
}

DecompositionConfig sphere_decomposition(double nu) {
  require_nu(nu, "sphere_decomposition");
  // The finite part at s = 2 is left unknown; it multiplies Ru(Φ₂,₊ − Φ₂,₋) = 0.
  return {2.0, 3, {-1.0, 0.0, 1.0, 2.0}, {2.0, 2.0 / (nu * nu), std::nullopt}};
}

ZetaAtZero circle_Z_difference(double nu) {
  const auto cfg = circle_decomposition(nu);
  const auto pair = circle_phi_pair();
  AssemblyTerms t;
  t.phi = phi_transform(pair.first - pair.second).at_zero();
  // A₀,₁ − Â₀,₁ = ½ ν^{−2s} ζ(2s); A₀,₀ − Â₀,₀ = 0.
  const auto z0 = specfun::riemann_zeta(0.0);
  t.a00 = 0.0;
  t.a01 = 0.5 * z0.value;
  t.a01_derivative = 0.5 * (-2.0 * std::log(nu) * z0.value + 2.0 * z0.derivative);
  return assemble_at_zero(cfg, t);
}

ZetaAtZero sphere_Z_difference(double nu) {
  const auto cfg = sphere_decomposition(nu);
  const auto pair = sphere_phi2_pair();
  AssemblyTerms t;
  t.phi = phi_transform(pair.first - pair.second).at_zero();
  // A₀,₀,₊ − A₀,₀,₋ = F(s,ν); the A₀,₁ terms coincide.
  t.a00 = F_zero(nu);
  t.a01 = 0.0;
  t.a01_derivative = 0.0;
  return assemble_at_zero(cfg, t);
}

double zeta_sp_sphere(double s) {
  if (s == 1.0) throw PoleError("zeta_sp_sphere: pole at s = 1");
  if (!std::isfinite(s)) throw DomainError("zeta_sp_sphere: s must be finite");
  KahanSum acc;
  double quarter_pow = 1.0;  // (−¼)^j
  for (int j = 0; j < 400; ++j) {
    const double arg = 2.0 * s + 2.0 * j - 1.0;
    double term;
    if (j >= 1 && arg == 1.0) {
      // s = 1 − j: C(−s,j) has the simple zero (−s−j+1) cancelling the pole 1/(2(s−(1−j))).
      double prod = 1.0;
      for (int i = 0; i < j; ++i) {
        if (i != j - 1) prod *= (-s - i);
      }
      prod /= std::tgamma(j + 1.0);
      term = 2.0 * quarter_pow * (-0.5) * prod;
    } else {
      const double c = binomial(-s, j);
      term = c == 0.0 ? 0.0 : 2.0 * c * quarter_pow * specfun::hurwitz_zeta(arg, 1.5);
    }
    acc += term;
    if (j > 2 && std::abs(term) <= 1e-17 * std::max(1.0, std::abs(acc.value()))) break;
    quarter_pow *= -0.25;
  }
  return acc.value();
}

double zeta_sp_sphere_half_plana() {
  auto integrand = [](double y) {
    if (y < 1e-8) return 0.5 / (2.0 * kPi * std::sqrt(2.0));
    const double theta = std::atan2(3.0 * y, 2.0 - y * y);
    const double y2 = y * y;
    const double mod = std::pow(y2 * y2 + 5.0 * y2 + 4.0, -0.25);
    return (6.0 * std::sin(0.5 * theta) - 4.0 * y * std::cos(0.5 * theta)) * mod / std::expm1(2.0 * kPi * y);
  };
  double err = 0.0;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 10.0, 15, 1e-15, &err);
  return -1.25 * std::sqrt(2.0) + integral;
}

double zeta_sp_sphere_direct(double s, int terms) {
  if (!(s > 1.0)) throw DomainError("zeta_sp_sphere_direct: needs s > 1");
  KahanSum acc;
  for (int n = terms; n >= 1; --n) acc += (2.0 * n + 1.0) * std::pow(n * (n + 1.0), -s);
  // Σ_{n>N} 2(n+½)^{1−2s} by the midpoint integral.
  acc += 2.0 * std::pow(terms + 1.0, 2.0 - 2.0 * s) / (2.0 * s - 2.0);
  return acc.value();
}

namespace {

// Double series Σ_{k,j} ν^{−2k−2j−1} C(−k−½,j) ζ(k+j+½,Sp₊) / ((2k+1) 4^{k+j}).
double F_zero_series(double nu, int* used_orders) {
  const double head = zeta_sp_sphere_half_plana();
  KahanSum acc;
  int t = 0;
  for (; t <= 60; ++t) {
    const double zsp = t == 0 ? head : zeta_sp_sphere(t + 0.5);
    const double nu_pow = std::pow(nu, -(2.0 * t + 1.0));
    const double quarter = std::pow(0.25, t);
    KahanSum block;
    for (int k = 0; k <= t; ++k) {
      const int j = t - k;
      block += nu_pow * quarter * binomial(-k - 0.5, j) * zsp / (2.0 * k + 1.0);
    }
    acc += block.value();
    const double bound = (2.0 * t + 1.0) * nu_pow * std::abs(zsp) * quarter;
    if (bound < 1e-13) break;
  }
  if (used_orders) *used_orders = std::min(t, 60) + 1;
  return acc.value();
}

// Remainder Σ(2n+1)[2atanh(1/2μ) − 1/μ] by Richardson extrapolation, plus the continued 1/μ part.
double F_zero_subtraction(double nu) {
  constexpr int kLevels = 6;
  constexpr int kBase = 1000;
  std::array<double, kLevels> partial{};
  KahanSum acc;
  int level = 0;
  const int last = kBase << (kLevels - 1);
  for (int n = 1; n <= last; ++n) {
    const double mu = spectrum::mu_n(nu, n);
    acc += (2.0 * n + 1.0) * atanh_remainder(0.5 / mu);
    if (n == (kBase << level)) partial[level++] = acc.value();
  }
  // Error of the partial sums expands in powers of 1/N.
  for (int m = 1; m < kLevels; ++m) {
    const double f = std::ldexp(1.0, m);
    for (int i = 0; i + m < kLevels; ++i) partial[i] = (f * partial[i + 1] - partial[i]) / (f - 1.0);
  }
  const double remainder = partial[0];
  KahanSum p;
  for (int j = 0; j < 80; ++j) {
    const double term = binomial(-0.5, j) * std::pow(4.0 * nu * nu, -j) * zeta_sp_sphere(0.5 + j);
    p += term;
    if (j > 1 && std::abs(term) < 1e-18) break;
  }
  return remainder + p.value() / nu;
}

}  // namespace

FZeroResult F_zero_detailed(double nu, double tolerance) {
  require_nu(nu, "F_zero");
  int orders = 0;
  auto series = std::async(std::launch::async, [nu, &orders] { return F_zero_series(nu, &orders); });
  auto oracle = std::async(std::launch::async, [nu] { return F_zero_subtraction(nu); });
  FZeroResult r;
  r.subtraction = oracle.get();
  r.series = series.get();
  r.series_terms = orders;
  r.difference = std::abs(r.series - r.subtraction);
  r.value = r.subtraction;
  if (!(r.difference <= tolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "F(0," << nu << "): series " << r.series << " and subtraction " << r.subtraction << " differ by "
       << r.difference;
    throw ConsistencyError(os.str());
  }
  return r;
}

double F_zero(double nu) { return F_zero_detailed(nu).value; }

double F_one_rearranged(double s, FOneForm form) {
  const double a = 1.0 - 2.0 * s;
  const bool derived = form == FOneForm::Derived;
  KahanSum acc;
  acc += a * specfun::riemann_zeta(2.0 * s).derivative;
  for (int k = 1; k < 200; ++k) {
    const double c = binomial(a, 2 * k + 1);
    if (c == 0.0) {
      if (a >= 0.0 && a == std::floor(a)) break;  // polynomial case: all later coefficients vanish
      continue;
    }
    const double term = c * specfun::riemann_zeta(2.0 * s + 2.0 * k).derivative / std::ldexp(1.0, derived ? 2 * k : 2 * k + 1);
    acc += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc.value()))) break;
  }
  return (derived ? 2.0 : 1.0) * acc.value();
}

double F_one_direct(double s, int terms) {
  if (!(s > 1.0)) throw DomainError("F_one_direct: needs s > 1");
  KahanSum acc;
  for (int n = terms; n >= 1; --n) acc += (2.0 * n + 1.0) * std::pow(n + 0.5, -2.0 * s) * std::log1p(1.0 / n);
  // log(1+1/n) ≈ 1/(n+½), so the tail is Σ_{n>N} 2(n+½)^{−2s} by the midpoint integral.
  acc += 2.0 * std::pow(terms + 1.0, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
  return acc.value();
}

std::string to_string(SequenceCase c) {
  switch (c) {
    case SequenceCase::CircleS:
      return "circle_S";
    case SequenceCase::CircleShat:
      return "circle_Shat";
    case SequenceCase::SphereSplus:
      return "sphere_Splus";
    case SequenceCase::SphereSminus:
      return "sphere_Sminus";
  }
  return "?";
}

double sequence_order(SequenceCase c, int n, double nu) {
  require_nu(nu, "sequence_order");
  if (n < 1) throw DomainError("sequence_order: band index must be >= 1");
  return (c == SequenceCase::CircleS || c == SequenceCase::CircleShat) ? nu * n : spectrum::mu_n(nu, n);
}

double log_gamma_sequence(SequenceCase c, int n, double nu, double lambda) {
  if (!(lambda < 0.0)) throw DomainError("log_gamma_sequence: needs lambda < 0");
  const double u = sequence_order(c, n, nu);
  const double r = std::sqrt(-lambda);
  const double z = u * r;
  const double common = u * std::log(u) - u * std::log(2.0);
  switch (c) {
    case SequenceCase::CircleS:
      return -specfun::log_bessel_i(u, z) + u * std::log(r) + common - specfun::gamma_ln(u + 1.0);
    case SequenceCase::CircleShat:
      return -specfun::log_bessel_i(u, z, true) + (u - 1.0) * std::log(r) + common - specfun::gamma_ln(u + 1.0);
    case SequenceCase::SphereSplus:
    case SequenceCase::SphereSminus: {
      const double sign = c == SequenceCase::SphereSplus ? 1.0 : -1.0;
      const double log_i = specfun::log_bessel_i(u, z);
      const double log_ip = specfun::log_bessel_i(u, z, true);
      // H^± = I·(±½ + z I′/I).
      const double log_h = log_i + std::log(sign * 0.5 + z * std::exp(log_ip - log_i));
      return -log_h + u * std::log(r) + common - specfun::gamma_ln(u) + std::log1p(sign / (2.0 * u));
    }
  }
  return 0.0;
}

double log_gamma_sequence_product(SequenceCase c, int n, double nu, double lambda, int zero_count) {
  if (!(lambda < 0.0)) throw DomainError("log_gamma_sequence_product: needs lambda < 0");
  if (zero_count < 1) throw DomainError("log_gamma_sequence_product: need at least one zero");
  const double u = sequence_order(c, n, nu);
  const auto fam = family_of(c, u);
  const auto zs = specfun::zeros(fam, zero_count);
  const double x2 = -lambda * u * u;
  KahanSum acc;
  for (double z : zs) acc += std::log1p(x2 / (z * z));
  acc += x2 * zero_tail_sum(mcmahon_shift(fam.kind, u), zero_count);
  return -acc.value();
}

}  // namespace torsionlab::zeta

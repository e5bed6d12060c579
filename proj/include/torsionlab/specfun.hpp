#pragma once

#include <string>
#include <vector>

namespace torsionlab::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// log Γ(x), x > 0.
double gamma_ln(double x);

// ψ(x) = Γ'(x)/Γ(x), x > 0.
double digamma(double x);

struct ZetaValue {
  double value = 0.0;
  double derivative = 0.0;
};

// Riemann ζ(s) and ζ'(s) on the continuation; throws PoleError at s = 1.
ZetaValue riemann_zeta(double s, bool with_derivative = true);

// Hurwitz ζ_H(s, a) = Σ_{n≥0} (n+a)^{-s}; throws PoleError at s = 1.
double hurwitz_zeta(double s, double a);
ZetaValue hurwitz_zeta_with_derivative(double s, double a);

// J_ν(x) or J'_ν(x) for ν ≥ 0, x ≥ 0.
double bessel_j(double nu, double x, bool derivative = false);

// I_ν(x) or I'_ν(x); throws OverflowError when the value is not representable.
double bessel_i(double nu, double x, bool derivative = false);

// log I_ν(x) or log I'_ν(x), finite for every x > 0 (uniform and large-argument expansions).
double log_bessel_i(double nu, double x, bool derivative = false);

// Ascending power series for J_ν(x); accurate only while x is small against ν + 1.
double bessel_j_series(double nu, double x);

// Closed trigonometric / hyperbolic forms for orders k + 1/2.
double bessel_j_half_integer(int k, double x);
double bessel_i_half_integer(int k, double x);

// Debye polynomials u_k(t), k = 0..count-1, as ascending coefficient lists in t.
const std::vector<std::vector<double>>& debye_polynomials();

enum class ZeroKind { JZero, JPrimeZero, GPlusZero, GMinusZero };

struct ZeroFamily {
  ZeroKind kind = ZeroKind::JZero;
  double order = 0.0;
};

std::string to_string(ZeroKind kind);

// The function whose positive zeros form the family: J_ν, J'_ν, or G^±_ν = ±J_ν/2 + xJ'_ν.
double family_function(const ZeroFamily& family, double x);
double family_function_derivative(const ZeroFamily& family, double x);

// A point below the first positive zero of the family.
double zero_lower_bound(const ZeroFamily& family);

// k-th positive zero, k ≥ 1; strictly increasing in k.
double zero(const ZeroFamily& family, int k);

// First `count` positive zeros in increasing order.
std::vector<double> zeros(const ZeroFamily& family, int count);

// All positive zeros strictly below `bound`, in increasing order.
std::vector<double> zeros_below(const ZeroFamily& family, double bound);

// log of (x/2)^ν/Γ(ν+1) · Π_{k≤K} (1 + x²/j²_{ν,k}), the truncated canonical product for I_ν(x); no tail correction.
double log_bessel_i_product(double nu, double x, int zero_count);

enum class ExpansionKind { I, Iprime, Hplus, Hminus };

// First-order terms U₁ (I) or V₁ (I'); first and second order W₁,±, W₂,± (H^±), as polynomials in p.
std::vector<double> uniform_expansion_coeffs(ExpansionKind kind, double p);

}  // namespace torsionlab::specfun

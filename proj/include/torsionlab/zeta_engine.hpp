#pragma once

#include <optional>
#include <string>
#include <vector>

namespace torsionlab::zeta {

// Σ_a c_a (1−λ)^{−a} + c₀ with distinct exponents a > 0.
struct PLambdaExpansion {
  struct Term {
    double coefficient = 0.0;
    double exponent = 0.0;
  };
  std::vector<Term> terms;
  double constant = 0.0;

  // Throws DomainError on a non-positive or repeated exponent.
  void validate() const;
  double evaluate(double lambda) const;
  // Coefficients with equal exponents are merged; zero coefficients are kept.
  PLambdaExpansion operator+(const PLambdaExpansion& other) const;
  PLambdaExpansion operator-(const PLambdaExpansion& other) const;
  PLambdaExpansion scaled(double factor) const;
};

// Residue and finite part of a function with at most a simple pole at `location`.
struct MeromorphicValue {
  double residue = 0.0;
  double finite_part = 0.0;
  double location = 0.0;
};

// Φ(s) = Σ c_a Γ(s+a)/(Γ(a) s); the constant term contributes nothing.
struct PhiTransform {
  PLambdaExpansion expansion;

  double operator()(double s) const;
  // Residue Σ c_a, finite part Σ c_a ψ(a), at s = 0.
  MeromorphicValue at_zero() const;
};

PhiTransform phi_transform(const PLambdaExpansion& phi);

struct ExpansionPair {
  PLambdaExpansion first;
  PLambdaExpansion second;
};

// (φ₁, φ̂₁) for the circle cone.
ExpansionPair circle_phi_pair();
// (φ₂,₊, φ₂,₋) for the sphere cone.
ExpansionPair sphere_phi2_pair();

struct SimpleZetaValues {
  double at0 = 0.0;
  double deriv_at0 = 0.0;
};

// z(s,ν,q,l) = Σ_k (j²_{ν,k}/l² + q²)^{−s} at s = 0.
SimpleZetaValues simple_bessel_zeta(double nu, double q, double l);

// −Σ_{k≤K} log((j²/l²+q²)/(j²/l²+q′²)) plus the asymptotic tail; oracle for z′(q) − z′(q′).
double simple_zeta_difference_product(double nu, double q, double q_prime, double l, int zero_count);

// Pole data of the base sequence zeta ζ(s,U) at s = s₀.
struct BaseZetaPole {
  double location = 1.0;
  double residue = 0.0;
  // Finite part; absent when it never enters the assembly.
  std::optional<double> finite_part;
};

// Spectral decomposition metadata for one double sequence.
struct DecompositionConfig {
  double kappa = 2.0;
  int length = 0;
  std::vector<double> sigma;
  BaseZetaPole pole;
};

// Inputs of the assembly for a pair of double zetas (the difference form).
struct AssemblyTerms {
  double a00 = 0.0;
  double a01 = 0.0;
  double a01_derivative = 0.0;
  // Φ data for the single σ_h at the pole of ζ(s,U).
  MeromorphicValue phi;
};

struct ZetaAtZero {
  double value = 0.0;
  double derivative = 0.0;
};

// ζ(0) = −A₀,₁(0) + RuΦ·Ru ζ(s,U)/κ;
// ζ′(0) = −A₀,₀(0) − A′₀,₁(0) + (γ RuΦ + RzΦ)·Ru ζ(s,U)/κ + RuΦ·Rz ζ(s,U).
// Throws DomainError when RuΦ ≠ 0 and the finite part of ζ(s,U) is absent.
ZetaAtZero assemble_at_zero(const DecompositionConfig& config, const AssemblyTerms& terms);

// Decomposition data used for the circle pair: κ = 2, pole of ν^{−s}ζ(s) at s = 1.
DecompositionConfig circle_decomposition(double nu);
// Decomposition data used for the sphere pair: κ = 2, pole at s = 2 with residue 2/ν².
DecompositionConfig sphere_decomposition(double nu);

// Z(0) − Ẑ(0) and Z′(0) − Ẑ′(0) for the circle cone of parameter ν.
ZetaAtZero circle_Z_difference(double nu);
// Z₊(0) − Z₋(0) and Z′₊(0) − Z′₋(0) for the sphere cone of parameter ν.
ZetaAtZero sphere_Z_difference(double nu);

// ζ(s, Sp₊Δ⁽⁰⁾_{S²}) = Σ_{n≥1}(2n+1)(n(n+1))^{−s} by the Hurwitz-binomial continuation.
double zeta_sp_sphere(double s);
// The value at s = ½ from the Plana integral representation.
double zeta_sp_sphere_half_plana();
// Σ_{n≥1}(2n+1)(n(n+1))^{−s} summed directly with an integral tail, s > 1.
double zeta_sp_sphere_direct(double s, int terms = 200000);

struct FZeroResult {
  double value = 0.0;
  // Double series in ζ(k+j+½, Sp₊) with the Plana value at ½.
  double series = 0.0;
  // Subtraction route: remainder summed with Richardson extrapolation plus the 1/μ part.
  double subtraction = 0.0;
  double difference = 0.0;
  int series_terms = 0;
};

// F(0,ν); the two methods run concurrently; ConsistencyError beyond the tolerance.
FZeroResult F_zero_detailed(double nu, double tolerance = 5e-7);
double F_zero(double nu);

enum class FOneForm {
  // 2[(1−2s)ζ′(2s) + Σ_{k≥1} C(1−2s,2k+1) ζ′(2s+2k)/2^{2k}]
  Derived,
  // (1−2s)ζ′(2s) + Σ_{k≥1} C(1−2s,2k+1) ζ′(2s+2k)/2^{2k+1}
  Halved,
};

// F(s,1) from a rearrangement in ζ′ values; s must avoid ½ − k.
double F_one_rearranged(double s, FOneForm form);
// Σ_n (2n+1)(n+½)^{−2s} log(1+1/n) summed directly with a tail estimate, s > 1.
double F_one_direct(double s, int terms = 200000);

enum class SequenceCase { CircleS, CircleShat, SphereSplus, SphereSminus };

std::string to_string(SequenceCase c);

// Order u of band n: ν n for the circle, μ_n for the sphere.
double sequence_order(SequenceCase c, int n, double nu);

// log Γ(−λ, S_n/u²) in closed form through I_u, I′_u or H^±_u; λ < 0.
double log_gamma_sequence(SequenceCase c, int n, double nu, double lambda);
// −Σ_{k≤K} log(1 + (−λ)u²/z_k²) minus the asymptotic tail over the zeros of the family.
double log_gamma_sequence_product(SequenceCase c, int n, double nu, double lambda, int zero_count);

}  // namespace torsionlab::zeta

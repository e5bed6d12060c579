#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "torsionlab/geometry.hpp"
#include "torsionlab/specfun.hpp"

namespace torsionlab::spectrum {

enum class ConeSection { Circle, Sphere };

std::string to_string(ConeSection section);

// Bessel order of a band: a constant, ν·n, or μ_n = √(ν²n(n+1) + ¼).
struct OrderExpr {
  enum class Kind { Const, NuTimesN, MuN };
  Kind kind = Kind::Const;
  double constant = 0.0;

  bool indexed() const { return kind != Kind::Const; }
  double eval(double nu, int n) const;
  auto operator<=>(const OrderExpr&) const = default;
};

// Multiplicity of each eigenvalue in a band: factor or factor·(2n+1).
struct MultiplicityExpr {
  enum class Kind { Const, TwoNPlusOne };
  Kind kind = Kind::Const;
  int factor = 1;

  int eval(int n) const { return kind == Kind::Const ? factor : factor * (2 * n + 1); }
  auto operator<=>(const MultiplicityExpr&) const = default;
};

// Eigenvalues zero²/l² over the zeros of one family, for one order (Const) or all n ≥ 1.
struct SpectralBand {
  specfun::ZeroKind kind = specfun::ZeroKind::JZero;
  OrderExpr order;
  MultiplicityExpr multiplicity;

  std::string label() const;
  auto operator<=>(const SpectralBand&) const = default;
};

// Positive spectrum of the form Laplacian in one degree; harmonic forms are excluded.
struct SpectrumDescriptor {
  ConeSection section = ConeSection::Circle;
  int degree = 0;
  BoundaryCondition bc = BoundaryCondition::Absolute;
  double nu = 1.0;
  double l = 1.0;
  std::vector<SpectralBand> bands;
};

double mu_n(double nu, int n);

SpectrumDescriptor cone_circle_spectrum(int q, BoundaryCondition bc, double nu, double l);
SpectrumDescriptor cone_sphere_spectrum(int q, BoundaryCondition bc, double nu, double l);
// Dimension of the cone: 2 for the circle, 3 for the sphere.
int cone_dimension(ConeSection section);
SpectrumDescriptor cone_spectrum(ConeSection section, int q, BoundaryCondition bc, double nu, double l);

// Source of zeros; implementations must be safe for concurrent calls.
class ZeroProvider {
 public:
  virtual ~ZeroProvider() = default;
  virtual std::vector<double> zeros_below(const specfun::ZeroFamily& family, double bound) = 0;
};

// Computes zeros on demand through specfun.
class DirectZeroProvider : public ZeroProvider {
 public:
  std::vector<double> zeros_below(const specfun::ZeroFamily& family, double bound) override;
};

struct EigenRow {
  double value = 0.0;
  int multiplicity = 1;
  specfun::ZeroKind kind = specfun::ZeroKind::JZero;
  double order = 0.0;
  // Band index n (0 for a band with constant order) and zero index k.
  int n = 0;
  int k = 1;
  std::string provenance;
};

// All eigenvalues ≤ cutoff, one row per (band, n, k), sorted by value then family.
std::vector<EigenRow> enumerate_eigenvalues(const SpectrumDescriptor& d, double cutoff,
                                            ZeroProvider* provider = nullptr);

// Symbolic band multiset with signed counts; zero counts are dropped.
using SignedMultiset = std::map<SpectralBand, int>;

SignedMultiset band_multiset(const SpectrumDescriptor& d);
// Σ_q (−1)^q [bands of degree q].
SignedMultiset alternating_multiset(const std::vector<SpectrumDescriptor>& per_degree);
bool same_bands(const SpectrumDescriptor& a, const SpectrumDescriptor& b);

}  // namespace torsionlab::spectrum

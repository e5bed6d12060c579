#include "torsionlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab::spectrum {

namespace {

using specfun::ZeroKind;

SpectralBand fixed(ZeroKind kind, double order) {
  return {kind, {OrderExpr::Kind::Const, order}, {MultiplicityExpr::Kind::Const, 1}};
}

SpectralBand circle_band(ZeroKind kind) {
  return {kind, {OrderExpr::Kind::NuTimesN, 0.0}, {MultiplicityExpr::Kind::Const, 2}};
}

SpectralBand sphere_band(ZeroKind kind) {
  return {kind, {OrderExpr::Kind::MuN, 0.0}, {MultiplicityExpr::Kind::TwoNPlusOne, 1}};
}

void require_parameters(double nu, double l) {
  if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("spectrum: nu = csc(alpha) must be >= 1");
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("spectrum: length must be > 0");
}

std::string format_order(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Rows of one band; bands with indexed orders stop once the family lower bound passes the bound.
std::vector<EigenRow> band_rows(const SpectralBand& band, double nu, double l, double cutoff, ZeroProvider& zp) {
  std::vector<EigenRow> rows;
  const double bound = std::sqrt(cutoff) * l;
  const int n_first = band.order.indexed() ? 1 : 0;
  for (int n = n_first;; ++n) {
    const double order = band.order.eval(nu, n);
    const specfun::ZeroFamily fam{band.kind, order};
    if (specfun::zero_lower_bound(fam) >= bound) break;
    // Lower bounds increase with n, so the first band member past the bound ends the band.
    const auto zs = zp.zeros_below(fam, bound);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      EigenRow r;
      r.value = zs[i] * zs[i] / (l * l);
      if (r.value > cutoff) continue;
      r.multiplicity = band.multiplicity.eval(n);
      r.kind = band.kind;
      r.order = order;
      r.n = n;
      r.k = static_cast<int>(i) + 1;
      std::ostringstream os;
      os << specfun::to_string(band.kind) << "(" << format_order(order) << ")";
      if (band.order.indexed()) os << " n=" << n;
      os << " k=" << r.k;
      r.provenance = os.str();
      rows.push_back(std::move(r));
    }
    if (!band.order.indexed()) break;
  }
  return rows;
}

}  // namespace

std::string to_string(ConeSection section) { return section == ConeSection::Circle ? "circle" : "sphere"; }

double OrderExpr::eval(double nu, int n) const {
  switch (kind) {
    case Kind::Const:
      return constant;
    case Kind::NuTimesN:
      return nu * n;
    case Kind::MuN:
      return mu_n(nu, n);
  }
  return constant;
}

std::string SpectralBand::label() const {
  std::ostringstream os;
  os << (multiplicity.kind == MultiplicityExpr::Kind::Const ? std::to_string(multiplicity.factor)
                                                            : (multiplicity.factor == 1 ? std::string("(2n+1)")
                                                                                        : std::to_string(multiplicity.factor) + "(2n+1)"))
     << ":" << specfun::to_string(kind) << "(";
  switch (order.kind) {
    case OrderExpr::Kind::Const:
      os << format_order(order.constant);
      break;
    case OrderExpr::Kind::NuTimesN:
      os << "nu*n";
      break;
    case OrderExpr::Kind::MuN:
      os << "mu_n";
      break;
  }
  os << ")";
  return os.str();
}

double mu_n(double nu, int n) { return std::sqrt(nu * nu * n * (n + 1.0) + 0.25); }

int cone_dimension(ConeSection section) { return section == ConeSection::Circle ? 2 : 3; }

SpectrumDescriptor cone_circle_spectrum(int q, BoundaryCondition bc, double nu, double l) {
  require_parameters(nu, l);
  if (q < 0 || q > 2) throw DomainError("circle cone spectra exist for degrees 0..2");
  SpectrumDescriptor d{ConeSection::Circle, q, bc, nu, l, {}};
  // Relative conditions in degree q match absolute conditions in degree 2 − q.
  const int qa = bc == BoundaryCondition::Absolute ? q : 2 - q;
  switch (qa) {
    case 0:
      d.bands = {fixed(ZeroKind::JZero, 1.0), circle_band(ZeroKind::JPrimeZero)};
      break;
    case 1:
      d.bands = {fixed(ZeroKind::JZero, 0.0), fixed(ZeroKind::JZero, 1.0), circle_band(ZeroKind::JZero),
                 circle_band(ZeroKind::JPrimeZero)};
      break;
    default:
      d.bands = {fixed(ZeroKind::JZero, 0.0), circle_band(ZeroKind::JZero)};
      break;
  }
  return d;
}

SpectrumDescriptor cone_sphere_spectrum(int q, BoundaryCondition bc, double nu, double l) {
  require_parameters(nu, l);
  if (q < 0 || q > 3) throw DomainError("sphere cone spectra exist for degrees 0..3");
  SpectrumDescriptor d{ConeSection::Sphere, q, bc, nu, l, {}};
  const auto J = ZeroKind::JZero;
  const auto Gp = ZeroKind::GPlusZero;
  const auto Gm = ZeroKind::GMinusZero;
  if (bc == BoundaryCondition::Absolute) {
    switch (q) {
      case 0:
        d.bands = {sphere_band(Gm), fixed(J, 1.5)};
        break;
      case 1:
        d.bands = {fixed(J, 1.5), sphere_band(J), sphere_band(Gp), sphere_band(Gm)};
        break;
      case 2:
        // The J(μ_n) band is listed twice in this degree.
        d.bands = {fixed(J, 0.5), sphere_band(J), sphere_band(Gp), sphere_band(J)};
        break;
      default:
        d.bands = {sphere_band(J), fixed(J, 0.5)};
        break;
    }
  } else {
    switch (q) {
      case 0:
        d.bands = {sphere_band(J), fixed(J, 0.5)};
        break;
      case 1:
        d.bands = {fixed(J, 0.5), sphere_band(J), sphere_band(Gp), sphere_band(J)};
        break;
      case 2:
        d.bands = {fixed(J, 1.5), sphere_band(J), sphere_band(Gp), sphere_band(Gm)};
        break;
      default:
        d.bands = {sphere_band(Gm), fixed(J, 1.5)};
        break;
    }
  }
  return d;
}

SpectrumDescriptor cone_spectrum(ConeSection section, int q, BoundaryCondition bc, double nu, double l) {
  return section == ConeSection::Circle ? cone_circle_spectrum(q, bc, nu, l) : cone_sphere_spectrum(q, bc, nu, l);
}

std::vector<double> DirectZeroProvider::zeros_below(const specfun::ZeroFamily& family, double bound) {
  return specfun::zeros_below(family, bound);
}

std::vector<EigenRow> enumerate_eigenvalues(const SpectrumDescriptor& d, double cutoff, ZeroProvider* provider) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw DomainError("enumerate_eigenvalues: cutoff must be > 0");
  require_parameters(d.nu, d.l);
  DirectZeroProvider direct;
  ZeroProvider& zp = provider ? *provider : direct;
  std::vector<std::future<std::vector<EigenRow>>> jobs;
  jobs.reserve(d.bands.size());
  for (const auto& band : d.bands) {
    jobs.push_back(std::async(std::launch::async, [&, band] {
      try {
        return band_rows(band, d.nu, d.l, cutoff, zp);
      } catch (const ConvergenceError& e) {
        throw ConvergenceError("band " + band.label() + ": " + e.what());
      }
    }));
  }
  std::vector<EigenRow> rows;
  for (auto& j : jobs) {
    auto part = j.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const EigenRow& a, const EigenRow& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.order != b.order) return a.order < b.order;
    return a.k < b.k;
  });
  return rows;
}

SignedMultiset band_multiset(const SpectrumDescriptor& d) {
  SignedMultiset m;
  for (const auto& b : d.bands) ++m[b];
  return m;
}

SignedMultiset alternating_multiset(const std::vector<SpectrumDescriptor>& per_degree) {
  SignedMultiset m;
  for (const auto& d : per_degree) {
    const int sign = d.degree % 2 == 0 ? 1 : -1;
    for (const auto& b : d.bands) m[b] += sign;
  }
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

bool same_bands(const SpectrumDescriptor& a, const SpectrumDescriptor& b) { return band_multiset(a) == band_multiset(b); }

}  // namespace torsionlab::spectrum

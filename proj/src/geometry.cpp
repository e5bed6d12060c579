#include "torsionlab/geometry.hpp"

#include <cmath>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

std::string to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Absolute ? "abs" : "rel"; }

void ConeGeometry::validate() const {
  if (n < 0) throw DomainError("section dimension n must be >= 0");
  if (!(alpha > 0.0 && alpha <= kHalfPi)) throw DomainError("cone angle must lie in (0, pi/2]");
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("cone length must be > 0");
  if (rank < 1) throw DomainError("representation rank must be >= 1");
}

double ConeGeometry::sin_alpha() const { return alpha == kHalfPi ? 1.0 : std::sin(alpha); }

double ConeGeometry::nu() const { return 1.0 / sin_alpha(); }

bool ConeGeometry::is_disc() const { return alpha == kHalfPi; }

ConeGeometry disc_geometry(int m, double l, int rank) {
  if (m < 1) throw DomainError("disc dimension must be >= 1");
  ConeGeometry g;
  g.n = m - 1;
  g.alpha = kHalfPi;
  g.l = l;
  g.rank = rank;
  g.validate();
  return g;
}

}  // namespace torsionlab

#pragma once

#include <string>

namespace torsionlab {

enum class BoundaryCondition { Absolute, Relative };

std::string to_string(BoundaryCondition bc);

// Cone C_α S^n_{l sin α}; the disc D^{n+1}_l is the case α = π/2.
struct ConeGeometry {
  int n = 1;
  double alpha = 1.5707963267948966;
  double l = 1.0;
  int rank = 1;

  // Throws DomainError unless n ≥ 0, 0 < α ≤ π/2, l > 0, rank ≥ 1.
  void validate() const;
  double sin_alpha() const;
  // ν = csc α ≥ 1.
  double nu() const;
  bool is_disc() const;
};

ConeGeometry disc_geometry(int m, double l, int rank = 1);

}  // namespace torsionlab

#include "torsionlab/chain_torsion.hpp"

#include <cmath>
#include <string>

#include "torsionlab/errors.hpp"
#include "torsionlab/specfun.hpp"

namespace torsionlab::chain {

namespace {

// Relative tolerance for rank decisions and cycle checks.
constexpr double kRankTol = 1e-9;
constexpr double kExactnessTol = 1e-12;

double scale_of(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int numerical_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(kRankTol);
  return static_cast<int>(qr.rank());
}

double log_abs_det(const Eigen::MatrixXd& m, int degree) {
  if (m.rows() == 0) return 0.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kRankTol);
  if (lu.rank() < m.rows()) {
    throw RankError(degree, "change-of-basis matrix is singular (homology basis or lifts not independent)");
  }
  double acc = 0.0;
  const auto& packed = lu.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) acc += std::log(std::abs(packed(i, i)));
  return acc;
}

}  // namespace

void FiniteChainComplex::validate() const {
  if (lengths.empty()) throw DomainError("chain complex needs at least degree 0");
  if (boundaries.size() != lengths.size()) throw DomainError("one boundary matrix per degree is required");
  for (std::size_t q = 0; q < lengths.size(); ++q) {
    if (lengths[q] < 0) throw DomainError("negative chain group dimension");
    const Eigen::Index rows = q == 0 ? 0 : lengths[q - 1];
    if (boundaries[q].rows() != rows || boundaries[q].cols() != lengths[q]) {
      throw DomainError("boundary matrix in degree " + std::to_string(q) + " has the wrong shape");
    }
  }
  for (std::size_t q = 2; q < lengths.size(); ++q) {
    const Eigen::MatrixXd comp = boundaries[q - 1] * boundaries[q];
    if (comp.size() == 0) continue;
    const double tol = kExactnessTol * std::max(1.0, scale_of(boundaries[q - 1]) * scale_of(boundaries[q]));
    if (scale_of(comp) > tol) {
      throw DomainError("boundary of boundary is not zero in degree " + std::to_string(q));
    }
  }
}

LiftSets default_lifts(const FiniteChainComplex& complex) {
  complex.validate();
  LiftSets lifts(complex.lengths.size());
  for (std::size_t q = 0; q < complex.lengths.size(); ++q) {
    const Eigen::MatrixXd& d = complex.boundaries[q];
    const int rank = numerical_rank(d);
    lifts[q] = Eigen::MatrixXd::Zero(complex.lengths[q], rank);
    if (rank == 0) continue;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d);
    qr.setThreshold(kRankTol);
    const auto& perm = qr.colsPermutation().indices();
    for (int i = 0; i < rank; ++i) lifts[q](perm(i), i) = 1.0;
  }
  return lifts;
}

double log_reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h,
                                const LiftSets& lifts) {
  complex.validate();
  const int top = complex.top_degree();
  if (static_cast<int>(lifts.size()) != top + 1) throw DomainError("one lift set per degree is required");
  for (int q = 0; q <= top; ++q) {
    const Eigen::MatrixXd& b = lifts[q];
    if (b.rows() != complex.lengths[q]) throw RankError(q, "lift vectors have the wrong length");
    const int rank = numerical_rank(complex.boundaries[q]);
    if (b.cols() != rank) throw RankError(q, "lift set size differs from the rank of the boundary map");
    if (rank > 0 && numerical_rank(complex.boundaries[q] * b) != rank) {
      throw RankError(q, "boundaries of the lift set do not span the image");
    }
  }
  double log_tau = 0.0;
  for (int q = 0; q <= top; ++q) {
    const std::vector<Eigen::VectorXd> empty;
    const auto& hq = q < static_cast<int>(h.per_degree.size()) ? h.per_degree[q] : empty;
    const int dim = complex.lengths[q];
    const Eigen::MatrixXd image =
        q < top ? Eigen::MatrixXd(complex.boundaries[q + 1] * lifts[q + 1]) : Eigen::MatrixXd(dim, 0);
    const int cols = static_cast<int>(image.cols() + hq.size() + lifts[q].cols());
    if (cols != dim) {
      throw RankError(q, "boundaries, homology basis and lifts give " + std::to_string(cols) + " vectors in a space of dimension " +
                             std::to_string(dim));
    }
    Eigen::MatrixXd m(dim, dim);
    int c = 0;
    for (Eigen::Index j = 0; j < image.cols(); ++j) m.col(c++) = image.col(j);
    const Eigen::MatrixXd& dq = complex.boundaries[q];
    for (const auto& v : hq) {
      if (v.size() != dim) throw RankError(q, "homology vector has the wrong length");
      if (dq.rows() > 0) {
        const double tol = kRankTol * std::max(1.0, scale_of(dq) * v.cwiseAbs().maxCoeff());
        if ((dq * v).cwiseAbs().maxCoeff() > tol) throw RankError(q, "homology representative is not a cycle");
      }
      m.col(c++) = v;
    }
    for (Eigen::Index j = 0; j < lifts[q].cols(); ++j) m.col(c++) = lifts[q].col(j);
    const double ld = log_abs_det(m, q);
    log_tau += (q % 2 == 0) ? ld : -ld;
  }
  return log_tau;
}

double log_reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h) {
  return log_reidemeister_torsion(complex, h, default_lifts(complex));
}

double reidemeister_torsion(const FiniteChainComplex& complex, const GradedHomologyBasis& h) {
  return std::exp(log_reidemeister_torsion(complex, h));
}

ConeComplex cone_cw_complex(int n, BoundaryCondition bc) {
  if (n < 0) throw DomainError("cone_cw_complex: n must be >= 0");
  const int top = n + 1;
  ConeComplex out;
  FiniteChainComplex& cx = out.complex;
  cx.lengths.assign(top + 1, 0);
  if (bc == BoundaryCondition::Relative) {
    cx.lengths[top] = 1;
  } else {
    cx.lengths[top] = 1;
    cx.lengths[n] += 1;
    cx.lengths[0] += 1;  // for n = 0 the n-cell and the tip share degree 0
  }
  cx.boundaries.resize(top + 1);
  for (int q = 0; q <= top; ++q) {
    const int rows = q == 0 ? 0 : cx.lengths[q - 1];
    cx.boundaries[q] = Eigen::MatrixXd::Zero(rows, cx.lengths[q]);
  }
  if (bc == BoundaryCondition::Relative) {
    out.homology_basis = [top](double v) {
      GradedHomologyBasis h;
      h.per_degree.resize(top + 1);
      h.per_degree[top].push_back(Eigen::VectorXd::Constant(1, 1.0 / std::sqrt(v)));
      return h;
    };
    return out;
  }
  if (n == 0) {
    // C_0 = ⟨c_n, c_tip⟩, ∂c_1 = c_n − c_tip.
    cx.boundaries[1](0, 0) = 1.0;
    cx.boundaries[1](1, 0) = -1.0;
    out.homology_basis = [](double v) {
      GradedHomologyBasis h;
      h.per_degree.resize(2);
      Eigen::VectorXd tip = Eigen::VectorXd::Zero(2);
      tip(1) = std::sqrt(v);
      h.per_degree[0].push_back(tip);
      return h;
    };
    return out;
  }
  cx.boundaries[top](0, 0) = 1.0;
  out.homology_basis = [top](double v) {
    GradedHomologyBasis h;
    h.per_degree.resize(top + 1);
    h.per_degree[0].push_back(Eigen::VectorXd::Constant(1, std::sqrt(v)));
    return h;
  };
  return out;
}

double volume(const ConeGeometry& geom) {
  geom.validate();
  const double np1 = geom.n + 1.0;
  const double sphere = 2.0 * std::pow(specfun::kPi, 0.5 * np1) / std::tgamma(0.5 * np1);
  return std::pow(geom.l, np1) * std::pow(geom.sin_alpha(), geom.n) * sphere / np1;
}

double rs_torsion_closed(const ConeGeometry& geom, BoundaryCondition bc) {
  const double half_log_vol = 0.5 * geom.rank * std::log(volume(geom));
  if (bc == BoundaryCondition::Absolute) return half_log_vol;
  return (geom.n % 2 == 0) ? half_log_vol : -half_log_vol;
}

}  // namespace torsionlab::chain

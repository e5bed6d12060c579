#include "torsionlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <sstream>

#include "torsionlab/chain_torsion.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/specfun.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/zeta_engine.hpp"

namespace torsionlab::cli {

namespace {

using specfun::kEulerGamma;
using specfun::kPi;
constexpr double kHalfPi = 1.5707963267948966;
const double kLog2 = std::log(2.0);
const double kLog2Pi = std::log(2.0 * kPi);

struct Outcome {
  double measured = 0.0;
  std::string detail;
};

struct Check {
  std::string id;
  std::string suite;
  std::string description;
  Comparison comparison;
  double tolerance;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::vector<Check> specfun_checks() {
  using namespace specfun;
  return {
      {"SF01", "specfun", "log Gamma(7.25) against a 40-digit value", Comparison::AtMost, 1e-13,
       [] { return Outcome{rel_err(gamma_ln(7.25), 7.052185450738539444926), ""}; }},
      {"SF02", "specfun", "digamma(1/2) = -gamma - 2 log 2 and digamma(3) = 3/2 - gamma", Comparison::AtMost, 1e-13,
       [] {
         return Outcome{std::max(std::abs(digamma(0.5) + kEulerGamma + 2 * kLog2), std::abs(digamma(3.0) - 1.5 + kEulerGamma)), ""};
       }},
      {"SF03", "specfun", "zeta(0) = -1/2, zeta'(0) = -log(2 pi)/2, zeta(-1) = -1/12", Comparison::AtMost, 1e-12,
       [] {
         const auto z0 = riemann_zeta(0.0);
         const double e = std::max({std::abs(z0.value + 0.5), std::abs(z0.derivative + 0.5 * kLog2Pi),
                                    std::abs(riemann_zeta(-1.0).value + 1.0 / 12.0)});
         return Outcome{e, ""};
       }},
      {"SF04", "specfun", "Hurwitz zeta(0,a) = 1/2 - a and zeta(2,3/2) = pi^2/2 - 4", Comparison::AtMost, 1e-12,
       [] {
         double e = std::abs(hurwitz_zeta(2.0, 1.5) - (kPi * kPi / 2 - 4));
         for (double a : {0.5, 1.0, 1.5, 2.0}) e = std::max(e, std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)));
         return Outcome{e, ""};
       }},
      {"SF05", "specfun", "J_{3/2}(pi) and I_{1/2}(1) against closed forms", Comparison::AtMost, 1e-12,
       [] {
         const double j = bessel_j(1.5, kPi);
         const double i = bessel_i(0.5, 1.0);
         return Outcome{std::max(rel_err(j, std::sqrt(2.0 / (kPi * kPi))), rel_err(i, std::sqrt(2.0 / kPi) * std::sinh(1.0))), ""};
       }},
      {"SF06", "specfun", "zeros j_{0,1}, j'_{1,1}, j_{100,5}, j'_{2.5,3}, G+_{1.5,1}, G-_{3.5,4} against 40-digit values",
       Comparison::AtMost, 1e-10,
       [] {
         const std::vector<std::pair<double, double>> pairs = {
             {zero({ZeroKind::JZero, 0.0}, 1), 2.404825557695772768622},
             {zero({ZeroKind::JPrimeZero, 1.0}, 1), 1.841183781340659302644},
             {zero({ZeroKind::JZero, 100.0}, 5), 131.8239346539184629705},
             {zero({ZeroKind::JPrimeZero, 2.5}, 3), 10.66356139048200334318},
             {zero({ZeroKind::GPlusZero, 1.5}, 1), 2.743707269992269382561},
             {zero({ZeroKind::GMinusZero, 3.5}, 4), 15.24451382437144353582}};
         double e = 0;
         for (const auto& [got, want] : pairs) e = std::max(e, std::abs(got - want));
         return Outcome{e, ""};
       }},
      {"SF07", "specfun", "interlacing j'_{nu,k} < j_{nu,k} < j'_{nu,k+1} for nu in {0.5,1,2.5,10}, k <= 60",
       Comparison::AtMost, 0.0,
       [] {
         int violations = 0;
         for (double nu : {0.5, 1.0, 2.5, 10.0}) {
           const auto j = zeros({ZeroKind::JZero, nu}, 60);
           const auto jp = zeros({ZeroKind::JPrimeZero, nu}, 61);
           for (int k = 0; k < 60; ++k) violations += !(jp[k] < j[k] && j[k] < jp[k + 1]);
         }
         return Outcome{static_cast<double>(violations), "violations"};
       }},
      {"SF08", "specfun", "G+- vanish at their zeros and G+ zeros approach J' zeros (k >= 50)", Comparison::AtMost, 1e-9,
       [] {
         double e = 0;
         double gap = 0;
         for (double nu : {0.5, 1.5, 5.0}) {
           for (auto kind : {ZeroKind::GPlusZero, ZeroKind::GMinusZero}) {
             const auto zs = zeros({kind, nu}, 60);
             for (double z : zs) e = std::max(e, std::abs(family_function({kind, nu}, z)) / std::max(1.0, z));
           }
           const auto gp = zeros({ZeroKind::GPlusZero, nu}, 60);
           const auto jp = zeros({ZeroKind::JPrimeZero, nu}, 60);
           for (int k = 49; k < 60; ++k) gap = std::max(gap, std::abs(gp[k] - jp[k]));
         }
         if (gap > 0.1) e = std::max(e, gap);
         return Outcome{e, "max G+ - J' gap for k >= 50: " + fmt(gap)};
       }},
      {"SF09", "specfun", "U1(1) = -1/12, W1+(1) = 5/12, coefficients vanish at p = 0", Comparison::AtMost, 1e-15,
       [] {
         double e = std::abs(uniform_expansion_coeffs(ExpansionKind::I, 1.0)[0] + 1.0 / 12.0);
         e = std::max(e, std::abs(uniform_expansion_coeffs(ExpansionKind::Hplus, 1.0)[0] - 5.0 / 12.0));
         for (auto k : {ExpansionKind::I, ExpansionKind::Iprime, ExpansionKind::Hplus, ExpansionKind::Hminus}) {
           for (double c : uniform_expansion_coeffs(k, 0.0)) e = std::max(e, std::abs(c));
         }
         return Outcome{e, ""};
       }},
      {"SF10", "specfun", "I_10(5), log I_50(800), log I_500(1000), J_100(120) against 40-digit values", Comparison::AtMost, 1e-11,
       [] {
         const double e = std::max({rel_err(bessel_i(10.0, 5.0), 0.004580044419176051261186),
                                    rel_err(log_bessel_i(50.0, 800.0), 794.1759440036775890543),
                                    rel_err(log_bessel_i(500.0, 1000.0), 872.9995486951398001914),
                                    rel_err(bessel_j(100.0, 120.0), 0.07573717913001070144717)});
         return Outcome{e, ""};
       }},
  };
}

std::vector<Check> spectra_checks() {
  using namespace spectrum;
  return {
      {"SP01", "spectra", "Poincare duality: abs degree q equals rel degree dim-q as band multisets", Comparison::AtMost, 0.0,
       [] {
         int bad = 0;
         for (auto sec : {ConeSection::Circle, ConeSection::Sphere}) {
           const int dim = cone_dimension(sec);
           for (int q = 0; q <= dim; ++q) {
             bad += !same_bands(cone_spectrum(sec, q, BoundaryCondition::Absolute, 2.0, 1.0),
                                cone_spectrum(sec, dim - q, BoundaryCondition::Relative, 2.0, 1.0));
           }
         }
         return Outcome{static_cast<double>(bad), "mismatched degrees"};
       }},
      {"SP02", "spectra", "alternating band multiset cancels for both cones and both conditions", Comparison::AtMost, 0.0,
       [] {
         std::size_t left = 0;
         for (auto sec : {ConeSection::Circle, ConeSection::Sphere}) {
           for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
             std::vector<SpectrumDescriptor> per;
             for (int q = 0; q <= cone_dimension(sec); ++q) per.push_back(cone_spectrum(sec, q, bc, 2.0, 1.0));
             left += alternating_multiset(per).size();
           }
         }
         return Outcome{static_cast<double>(left), "surviving bands"};
       }},
      {"SP03", "spectra", "circle q=2 abs, nu=1, cutoff 30: j_{0,1}^2 once and j_{1,1}^2 twice", Comparison::AtMost, 1e-10,
       [] {
         const auto rows = enumerate_eigenvalues(cone_circle_spectrum(2, BoundaryCondition::Absolute, 1.0, 1.0), 30.0);
         const double j01 = 2.404825557695772768622;
         const double j11 = 3.831705970207512315614;
         double e = rows.size() >= 2 ? 0.0 : 1.0;
         if (rows.size() >= 2) {
           e = std::max(std::abs(rows[0].value - j01 * j01), std::abs(rows[1].value - j11 * j11));
           if (rows[0].multiplicity != 1 || rows[1].multiplicity != 2) e = 1.0;
         }
         return Outcome{e, std::to_string(rows.size()) + " rows"};
       }},
      {"SP04", "spectra", "Weyl law: circle q=0 abs, nu=1, N(4000) within 25% of area/(4 pi) * 4000", Comparison::AtMost, 0.25,
       [] {
         long n = 0;
         for (const auto& r : enumerate_eigenvalues(cone_circle_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0), 4000.0)) {
           n += r.multiplicity;
         }
         const double expected = 0.25 * 4000.0;
         return Outcome{std::abs(n - expected) / expected, "N = " + std::to_string(n)};
       }},
      {"SP05", "spectra", "enumeration is sorted and doubling the cutoff only appends rows", Comparison::AtMost, 0.0,
       [] {
         int bad = 0;
         for (auto sec : {ConeSection::Circle, ConeSection::Sphere}) {
           const auto d = cone_spectrum(sec, 1, BoundaryCondition::Absolute, 1.5, 1.0);
           const auto a = enumerate_eigenvalues(d, 200.0);
           const auto b = enumerate_eigenvalues(d, 400.0);
           bad += !std::is_sorted(b.begin(), b.end(), [](const EigenRow& x, const EigenRow& y) { return x.value < y.value; });
           if (a.size() > b.size()) {
             ++bad;
             continue;
           }
           for (std::size_t i = 0; i < a.size(); ++i) bad += a[i].value != b[i].value || a[i].provenance != b[i].provenance;
         }
         return Outcome{static_cast<double>(bad), "violations"};
       }},
      {"SP06", "spectra", "sphere orders at nu = 1 are n + 1/2", Comparison::AtMost, 1e-15,
       [] {
         double e = 0;
         for (int n = 1; n <= 200; ++n) e = std::max(e, std::abs(mu_n(1.0, n) - (n + 0.5)));
         return Outcome{e, ""};
       }},
  };
}

std::vector<Check> engine_checks() {
  using namespace zeta;
  return {
      {"EN01", "engine", "Phi_1: residue 1/12, finite part (5-gamma)/12 - log2/6", Comparison::AtMost, 1e-12,
       [] {
         const auto v = phi_transform(circle_phi_pair().first).at_zero();
         return Outcome{std::max(std::abs(v.residue - 1.0 / 12), std::abs(v.finite_part - ((5 - kEulerGamma) / 12 - kLog2 / 6))), ""};
       }},
      {"EN02", "engine", "hat Phi_1: residue 1/12, finite part -(7+gamma)/12 - log2/6", Comparison::AtMost, 1e-12,
       [] {
         const auto v = phi_transform(circle_phi_pair().second).at_zero();
         return Outcome{std::max(std::abs(v.residue - 1.0 / 12), std::abs(v.finite_part - (-(7 + kEulerGamma) / 12 - kLog2 / 6))), ""};
       }},
      {"EN03", "engine", "Phi_{2,+} - Phi_{2,-}: residue 0, finite part 1/2, equals Gamma(s+1)/2", Comparison::AtMost, 1e-12,
       [] {
         const auto pair = sphere_phi2_pair();
         const auto phi = phi_transform(pair.first - pair.second);
         const auto v = phi.at_zero();
         double e = std::max(std::abs(v.residue), std::abs(v.finite_part - 0.5));
         for (double s : {0.3, 1.7, 2.5}) e = std::max(e, std::abs(phi(s) - 0.5 * std::tgamma(s + 1)));
         return Outcome{e, ""};
       }},
      {"EN04", "engine", "circle Z - hat Z: value 1/4, derivative -log(nu)/2 + log(2 pi)/2 + 1/(2 nu)", Comparison::AtMost, 1e-12,
       [] {
         double e = 0;
         for (double nu : {1.0, 2.0, 1.0 / std::sin(kPi / 3)}) {
           const auto d = circle_Z_difference(nu);
           e = std::max({e, std::abs(d.value - 0.25), std::abs(d.derivative - (-0.5 * std::log(nu) + 0.5 * kLog2Pi + 0.5 / nu))});
         }
         return Outcome{e, ""};
       }},
      {"EN05", "engine", "zeta(1/2, Sp S^2): Plana integral against Hurwitz-binomial continuation", Comparison::AtMost, 1e-6,
       [] {
         const double plana = zeta_sp_sphere_half_plana();
         const double hb = zeta_sp_sphere(0.5);
         return Outcome{std::abs(plana - hb), "plana " + fmt(plana) + ", hurwitz-binomial " + fmt(hb)};
       }},
      {"EN06", "engine", "zeta(s, Sp S^2) continuation against direct sums at s = 2, 3 and -2/3 at s = 0", Comparison::AtMost, 1e-12,
       [] {
         const double e = std::max({rel_err(zeta_sp_sphere(2.0), zeta_sp_sphere_direct(2.0)),
                                    rel_err(zeta_sp_sphere(3.0), zeta_sp_sphere_direct(3.0)),
                                    std::abs(zeta_sp_sphere(0.0) + 2.0 / 3.0)});
         return Outcome{e, ""};
       }},
      {"EN07", "engine", "F(0,1) by the subtraction route equals -log(2 pi)", Comparison::AtMost, 1e-8,
       [] {
         const auto r = F_zero_detailed(1.0);
         return Outcome{std::abs(r.subtraction + kLog2Pi), "F(0,1) = " + fmt(r.subtraction)};
       }},
      {"EN08", "engine", "F(0,nu) double series agrees with the subtraction route for nu in {1,1.5,2,5}", Comparison::AtMost, 5e-7,
       [] {
         double e = 0;
         for (double nu : {1.0, 1.5, 2.0, 5.0}) e = std::max(e, F_zero_detailed(nu, 1.0).difference);
         return Outcome{e, ""};
       }},
      {"EN09", "engine", "derived F(s,1) rearrangement: -log(2 pi) at s = 0 and the direct sum at s = 3", Comparison::AtMost, 1e-12,
       [] {
         const double e = std::max(std::abs(F_one_rearranged(0.0, FOneForm::Derived) + kLog2Pi),
                                   rel_err(F_one_rearranged(3.0, FOneForm::Derived), F_one_direct(3.0)));
         return Outcome{e, ""};
       }},
      {"EN10", "engine", "halved F(s,1) rearrangement (no factor 2, 2^(2k+1) weights) disagrees with the continuation (discrepancy detected)",
       Comparison::AtLeast, 0.1,
       [] {
         const double halved = F_one_rearranged(0.0, FOneForm::Halved);
         const double oracle = F_zero_detailed(1.0).subtraction;
         return Outcome{std::abs(halved - oracle), "halved series gives " + fmt(halved) + " (-log(2 pi)/2 = " +
                                                        fmt(-0.5 * kLog2Pi) + "), continuation gives " + fmt(oracle) +
                                                        "; at s = 3 halved " + fmt(F_one_rearranged(3.0, FOneForm::Halved)) +
                                                        " vs direct " + fmt(F_one_direct(3.0))};
       }},
      {"EN11", "engine", "z(0,nu,q,l) = -(nu+1/2)/2 exactly on a grid", Comparison::AtMost, 0.0,
       [] {
         double e = 0;
         for (double nu : {0.0, 0.5, 1.0, 2.5})
           for (double q : {0.0, 0.5, 2.0})
             for (double l : {0.5, 1.0, 3.0}) e = std::max(e, std::abs(simple_bessel_zeta(nu, q, l).at0 + 0.5 * (nu + 0.5)));
         return Outcome{e, ""};
       }},
      {"EN12", "engine", "z'(0) differences against the canonical product over 10^4 zeros", Comparison::AtMost, 1e-5,
       [] {
         double e = 0;
         for (double nu : {0.5, 1.0, 2.5}) {
           for (auto [q, qp] : {std::pair{2.0, 0.5}, std::pair{1.0, 0.0}, std::pair{3.0, 1.0}}) {
             const double closed = simple_bessel_zeta(nu, q, 1.5).deriv_at0 - simple_bessel_zeta(nu, qp, 1.5).deriv_at0;
             e = std::max(e, std::abs(closed - simple_zeta_difference_product(nu, q, qp, 1.5, 10000)));
           }
         }
         return Outcome{e, ""};
       }},
      {"EN13", "engine", "log Gamma(-lambda, S_n) closed forms against truncated products (K = 1000)", Comparison::AtMost, 1e-6,
       [] {
         double e = 0;
         for (auto c : {SequenceCase::CircleS, SequenceCase::CircleShat, SequenceCase::SphereSplus, SequenceCase::SphereSminus}) {
           for (int n : {1, 3}) {
             for (double nu : {1.0, 2.0}) {
               e = std::max(e, std::abs(log_gamma_sequence(c, n, nu, -1.0) - log_gamma_sequence_product(c, n, nu, -1.0, 1000)));
             }
           }
         }
         return Outcome{e, ""};
       }},
  };
}

std::vector<Check> torsion_checks() {
  return {
      {"TO01", "torsion", "D^2: closed form and pipeline equal log(pi)/2 + 1/2", Comparison::AtMost, 1e-10,
       [] {
         const double want = 0.5 * std::log(kPi) + 0.5;
         return Outcome{std::max(std::abs(analytic_torsion_disc(2, 1.0).log_value - want),
                                 std::abs(pipeline_circle(kHalfPi, 1.0).log_value - want)),
                        ""};
       }},
      {"TO02", "torsion", "circle cone: pipeline equals closed form on a grid, abs + rel = 0", Comparison::AtMost, 1e-10,
       [] {
         double e = 0;
         for (double a : {kPi / 6, kPi / 4, kPi / 3, kHalfPi}) {
           for (double l : {1.0, 3.0}) {
             const double closed = analytic_torsion_cone_circle(a, l, BoundaryCondition::Absolute).log_value;
             const double rel = analytic_torsion_cone_circle(a, l, BoundaryCondition::Relative).log_value;
             e = std::max({e, std::abs(pipeline_circle(a, l).log_value - closed), std::abs(closed + rel)});
           }
         }
         return Outcome{e, ""};
       }},
      {"TO03", "torsion", "D^3: sphere pipeline equals log(4 pi/3)/2 + log(2)/2 + 1/4", Comparison::AtMost, 1e-7,
       [] {
         const double want = 0.5 * std::log(4 * kPi / 3) + 0.5 * kLog2 + 0.25;
         return Outcome{std::abs(pipeline_sphere(kHalfPi, 1.0).log_value - want), ""};
       }},
      {"TO04", "torsion", "sphere cone: pipeline equals closed form, abs = rel", Comparison::AtMost, 1e-7,
       [] {
         double e = 0;
         for (auto [a, l] : {std::pair{kPi / 4, 1.0}, std::pair{kPi / 3, 2.0}, std::pair{kPi / 6, 0.5}}) {
           const double closed = analytic_torsion_cone_sphere(a, l, BoundaryCondition::Absolute).log_value;
           const double rel = analytic_torsion_cone_sphere(a, l, BoundaryCondition::Relative).log_value;
           e = std::max({e, std::abs(pipeline_sphere(a, l).log_value - closed), std::abs(closed - rel)});
         }
         return Outcome{e, ""};
       }},
      {"TO05", "torsion", "BM residual log T - log tau - anomaly vanishes on D^2, D^3 and circle cones", Comparison::AtMost, 1e-10,
       [] {
         double e = 0;
         std::vector<ConeGeometry> geoms = {disc_geometry(2, 1.0), disc_geometry(3, 1.0)};
         for (double a : {kPi / 6, kPi / 4, kPi / 3}) geoms.push_back(ConeGeometry{1, a, 2.0, 1});
         for (const auto& g : geoms) {
           for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
             e = std::max(e, std::abs(consistency_report(g, bc).residual_bm.value()));
           }
         }
         return Outcome{e, ""};
       }},
      {"TO06", "torsion", "D^3: DF residual equals 1/4 (the DF formula misses the harmonic term)", Comparison::AtMost, 1e-10,
       [] {
         const auto r = consistency_report(disc_geometry(3, 1.0), BoundaryCondition::Absolute);
         return Outcome{std::abs(r.residual_df.value() - 0.25), "DF residual " + fmt(r.residual_df.value())};
       }},
      {"TO07", "torsion", "D^2: BM and DF anomalies agree", Comparison::AtMost, 1e-10,
       [] { return Outcome{std::abs(anomaly_bm(2, kHalfPi) - anomaly_df(2, kHalfPi)), ""}; }},
      {"TO08", "torsion", "normalization chain and (2p-1)!/((p-1)!(2p-1)!!) = 2^(p-1) hold exactly, p = 1..10",
       Comparison::AtMost, 0.0,
       [] {
         int bad = 0;
         for (int p = 1; p <= 10; ++p) bad += !normalization_identity(p).holds();
         return Outcome{static_cast<double>(bad), "failing p values"};
       }},
      {"TO09", "torsion", "DF integral reduces to (-1)^(p+1) at sin(alpha) = 1 and to sin(alpha) at p = 1", Comparison::AtMost, 1e-12,
       [] {
         double e = 0;
         for (int p = 1; p <= 10; ++p) e = std::max(e, std::abs(df_integral(p, kHalfPi) - (p % 2 ? 1.0 : -1.0)));
         for (double a : {kPi / 6, kPi / 4, kPi / 3}) e = std::max(e, std::abs(df_integral(1, a) - std::sin(a)));
         return Outcome{e, ""};
       }},
      {"TO10", "torsion", "Reidemeister torsion of the cone CW complexes equals the closed form", Comparison::AtMost, 1e-12,
       [] {
         double e = 0;
         for (int n = 0; n <= 3; ++n) {
           for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
             const ConeGeometry g{n, kPi / 3, 1.7, 1};
             const auto cx = chain::cone_cw_complex(n, bc);
             const double got = chain::log_reidemeister_torsion(cx.complex, cx.homology_basis(chain::volume(g)));
             e = std::max(e, std::abs(got - chain::rs_torsion_closed(g, bc)));
           }
         }
         return Outcome{e, ""};
       }},
      {"TO11", "torsion", "log-torsions are linear in the rank", Comparison::AtMost, 1e-12,
       [] {
         double e = 0;
         for (int m = 1; m <= 6; ++m) e = std::max(e, std::abs(analytic_torsion_disc(m, 2.0, 3).log_value - 3 * analytic_torsion_disc(m, 2.0, 1).log_value));
         e = std::max(e, std::abs(pipeline_circle(kPi / 5, 2.0, BoundaryCondition::Absolute, 4).log_value -
                                  4 * pipeline_circle(kPi / 5, 2.0).log_value));
         return Outcome{e, ""};
       }},
  };
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> v;
    for (auto part : {specfun_checks(), spectra_checks(), engine_checks(), torsion_checks()}) {
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  }();
  return checks;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "spectra", "engine", "torsion", "all"};
  return names;
}

bool is_check_id(const std::string& id) {
  const auto& checks = all_checks();
  return std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
}

SuiteResult run_suite(const std::string& suite, const Tolerances& overrides) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw DomainError("unknown verify suite: " + suite);
  std::vector<const Check*> selected;
  for (const auto& c : all_checks()) {
    if (suite == "all" || c.suite == suite) selected.push_back(&c);
  }
  std::vector<std::future<CheckResult>> jobs;
  for (const Check* c : selected) {
    const auto it = overrides.find(c->id);
    const double tol = it == overrides.end() ? c->tolerance : it->second;
    jobs.push_back(std::async(std::launch::async, [c, tol] {
      CheckResult r{c->id, c->suite, c->description, c->comparison, 0.0, tol, false, ""};
      try {
        const Outcome o = c->run();
        r.measured = o.measured;
        r.detail = o.detail;
        r.passed = c->comparison == Comparison::AtMost ? o.measured <= tol : o.measured >= tol;
      } catch (const std::exception& e) {
        r.measured = std::numeric_limits<double>::quiet_NaN();
        r.detail = std::string("exception: ") + e.what();
      }
      return r;
    }));
  }
  SuiteResult out{suite, {}};
  for (auto& j : jobs) out.checks.push_back(j.get());
  std::sort(out.checks.begin(), out.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

}  // namespace torsionlab::cli

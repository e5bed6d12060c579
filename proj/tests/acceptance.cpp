// Acceptance run: one PASS/FAIL line per criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chain_fixtures.hpp"
#include "test_util.hpp"
#include "torsionlab/chain_torsion.hpp"
#include "torsionlab/specfun.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/verify.hpp"
#include "torsionlab/zeta_engine.hpp"

using namespace torsionlab;
using specfun::kEulerGamma;
using specfun::kPi;

namespace {

constexpr double kHalfPi = 1.5707963267948966;
const double kLog2 = std::log(2.0);
const double kLog2Pi = std::log(2.0 * kPi);

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  // Wall-clock budget in seconds; 0 means unbudgeted.
  double budget;
  std::function<Verdict()> run;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Verdict d2_torsion() {
  const double want = 0.5 * std::log(kPi) + 0.5;
  const double closed = analytic_torsion_disc(2, 1.0).log_value;
  const double pipe = pipeline_circle(kHalfPi, 1.0).log_value;
  const double e = std::max(std::abs(closed - want), std::abs(pipe - want));
  return {e <= 1e-10, "closed " + sci(closed - want) + ", pipeline " + sci(pipe - want)};
}

Verdict circle_cone() {
  double e = 0.0;
  bool antisymmetric = true;
  for (double a : {kPi / 6, kPi / 4, kPi / 3}) {
    for (double l : {1.0, 3.0}) {
      const double closed = analytic_torsion_cone_circle(a, l, BoundaryCondition::Absolute).log_value;
      const double rel = analytic_torsion_cone_circle(a, l, BoundaryCondition::Relative).log_value;
      e = std::max(e, std::abs(pipeline_circle(a, l).log_value - closed));
      e = std::max(e, std::abs(pipeline_circle(a, l, BoundaryCondition::Relative).log_value - rel));
      antisymmetric = antisymmetric && closed + rel == 0.0;
    }
  }
  return {e <= 1e-10 && antisymmetric, "max |pipeline - closed| " + sci(e) + (antisymmetric ? ", abs + rel = 0" : ", abs + rel != 0")};
}

Verdict d3_torsion() {
  const double want = 0.5 * std::log(4.0 * kPi / 3.0) + 0.5 * kLog2 + 0.25;
  const double got = pipeline_sphere(kHalfPi, 1.0).log_value;
  return {std::abs(got - want) <= 1e-7, "pipeline " + std::to_string(got) + ", error " + sci(got - want)};
}

Verdict f_zero_one() {
  const auto r = zeta::F_zero_detailed(1.0);
  const double e_oracle = std::abs(r.subtraction + kLog2Pi);
  const auto engine = cli::run_suite("engine");
  bool detected = false;
  for (const auto& c : engine.checks) {
    if (c.id == "EN10") detected = c.passed;
  }
  const bool ok = e_oracle <= 1e-8 && r.difference <= 5e-7 && detected;
  return {ok, "oracle " + sci(e_oracle) + ", series vs oracle " + sci(r.difference) +
                  (detected ? ", halved-form discrepancy reported by verify engine" : ", halved-form discrepancy NOT reported")};
}

Verdict zeta_sp_half() {
  const double plana = zeta::zeta_sp_sphere_half_plana();
  const double hb = zeta::zeta_sp_sphere(0.5);
  return {std::abs(plana - hb) <= 1e-6, "|plana - hurwitz-binomial| " + sci(std::abs(plana - hb))};
}

Verdict phi_values() {
  const auto pair = zeta::circle_phi_pair();
  const auto p1 = zeta::phi_transform(pair.first).at_zero();
  const auto ph = zeta::phi_transform(pair.second).at_zero();
  const auto sp = zeta::sphere_phi2_pair();
  const auto p2 = zeta::phi_transform(sp.first - sp.second).at_zero();
  const double e = std::max({std::abs(p1.residue - 1.0 / 12), std::abs(p1.finite_part - ((5 - kEulerGamma) / 12 - kLog2 / 6)),
                             std::abs(ph.residue - 1.0 / 12), std::abs(ph.finite_part - (-(7 + kEulerGamma) / 12 - kLog2 / 6)),
                             std::abs(p2.residue), std::abs(p2.finite_part - 0.5)});
  return {e <= 1e-12, "max error " + sci(e)};
}

Verdict bessel_product() {
  double worst = 0.0;
  bool monotone = true;
  for (double nu : {0.0, 0.5, 1.0, 2.5, 5.0}) {
    for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double exact = specfun::log_bessel_i(nu, x);
      double prev = INFINITY;
      for (int k : {10, 100, 1000, 10000}) {
        const double rel = std::abs(std::expm1(specfun::log_bessel_i_product(nu, x, k) - exact));
        monotone = monotone && rel < prev;
        prev = rel;
      }
      worst = std::max(worst, prev);
    }
  }
  return {worst <= 1e-3 && monotone, "max relative error at K = 10^4: " + sci(worst) + (monotone ? ", monotone in K" : ", NOT monotone")};
}

Verdict spectrum_structure() {
  int bad = 0;
  for (auto sec : {spectrum::ConeSection::Circle, spectrum::ConeSection::Sphere}) {
    const int dim = spectrum::cone_dimension(sec);
    for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
      std::vector<spectrum::SpectrumDescriptor> per;
      for (int q = 0; q <= dim; ++q) per.push_back(spectrum::cone_spectrum(sec, q, bc, 1.9, 1.0));
      bad += !spectrum::alternating_multiset(per).empty();
    }
    for (int q = 0; q <= dim; ++q) {
      bad += !spectrum::same_bands(spectrum::cone_spectrum(sec, q, BoundaryCondition::Absolute, 1.9, 1.0),
                                   spectrum::cone_spectrum(sec, dim - q, BoundaryCondition::Relative, 1.9, 1.0));
    }
  }
  return {bad == 0, std::to_string(bad) + " violations"};
}

Verdict normalization_identities() {
  int bad = 0;
  for (int p = 1; p <= 10; ++p) bad += !normalization_identity(p).holds();
  return {bad == 0, std::to_string(bad) + " failing p"};
}

Verdict anomalies() {
  double bm = 0.0;
  std::vector<ConeGeometry> geoms = {disc_geometry(2, 1.0), disc_geometry(3, 1.0)};
  for (double a : {kPi / 6, kPi / 4, kPi / 3}) geoms.push_back(ConeGeometry{1, a, 1.0, 1});
  for (const auto& g : geoms) bm = std::max(bm, std::abs(consistency_report(g, BoundaryCondition::Absolute).residual_bm.value()));
  const double df3 = consistency_report(disc_geometry(3, 1.0), BoundaryCondition::Absolute).residual_df.value();
  const double d2 = std::abs(anomaly_bm(2, kHalfPi) - anomaly_df(2, kHalfPi));
  const bool ok = bm <= 1e-10 && std::abs(df3 - 0.25) <= 1e-10 && d2 <= 1e-10;
  return {ok, "BM residual " + sci(bm) + ", DF residual on D^3 " + std::to_string(df3) + ", |BM - DF| on D^2 " + sci(d2)};
}

Verdict reidemeister() {
  double e = 0.0;
  for (int n = 0; n <= 3; ++n) {
    for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
      for (double a : {kPi / 5, kHalfPi}) {
        const ConeGeometry g{n, a, 1.7, 1};
        const auto cx = chain::cone_cw_complex(n, bc);
        const double v = chain::volume(g);
        const double tau = chain::reidemeister_torsion(cx.complex, cx.homology_basis(v));
        const double want = (bc == BoundaryCondition::Absolute || n % 2 == 0) ? std::sqrt(v) : 1.0 / std::sqrt(v);
        e = std::max(e, std::abs(tau - want) / want);
      }
    }
  }
  test::Draw d;
  double lift = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto rc = test::random_complex(d);
    const auto base = chain::default_lifts(rc.complex);
    const double ref = chain::log_reidemeister_torsion(rc.complex, rc.h, base);
    lift = std::max(lift, std::abs(chain::log_reidemeister_torsion(rc.complex, rc.h, test::perturb_lifts(d, rc.complex, base)) - ref));
  }
  return {e <= 1e-12 && lift <= 1e-10, "Vol^(+-1/2) error " + sci(e) + ", lift variation over 100 trials " + sci(lift)};
}

Verdict simple_zeta() {
  bool exact = true;
  for (double nu : {0.0, 0.5, 1.0, 2.5, 7.0})
    for (double q : {0.0, 0.5, 2.0})
      for (double l : {0.5, 1.0, 3.0}) exact = exact && zeta::simple_bessel_zeta(nu, q, l).at0 == -0.5 * (nu + 0.5);
  double e = 0.0;
  for (double nu : {0.5, 1.0, 2.5}) {
    for (auto [q, qp] : {std::pair{2.0, 0.5}, std::pair{1.0, 0.0}, std::pair{3.0, 1.0}}) {
      const double closed = zeta::simple_bessel_zeta(nu, q, 1.5).deriv_at0 - zeta::simple_bessel_zeta(nu, qp, 1.5).deriv_at0;
      e = std::max(e, std::abs(closed - zeta::simple_zeta_difference_product(nu, q, qp, 1.5, 10000)));
    }
  }
  return {exact && e <= 1e-5, std::string(exact ? "z(0) exact" : "z(0) NOT exact") + ", z' difference error " + sci(e)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "D^2 torsion, closed form and pipeline", 1.0, d2_torsion},
      {2, "circle cone, pipeline vs closed form, abs + rel = 0", 0.0, circle_cone},
      {3, "D^3 torsion via the sphere pipeline", 30.0, d3_torsion},
      {4, "F(0,1) = -log 2pi, series agreement, halved-form discrepancy", 0.0, f_zero_one},
      {5, "zeta(1/2) of the sphere spectrum, Plana vs Hurwitz-binomial", 5.0, zeta_sp_half},
      {6, "Phi residues and finite parts", 0.0, phi_values},
      {7, "Bessel canonical product reproduces I_nu", 0.0, bessel_product},
      {8, "spectral duality and alternating cancellation", 0.0, spectrum_structure},
      {9, "normalization chain and factorial identity, p = 1..10", 0.0, normalization_identities},
      {10, "anomaly residuals: BM, DF on D^3, BM = DF on D^2", 0.0, anomalies},
      {11, "Reidemeister torsion of cone complexes and lift invariance", 0.0, reidemeister},
      {12, "simple Bessel zeta at zero and derivative identity", 0.0, simple_zeta},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = v.passed;
    std::string timing = sci(secs) + " s";
    if (c.budget > 0.0) {
      timing += " (budget " + sci(c.budget) + " s)";
      ok = ok && secs < c.budget;
    }
    failures += !ok;
    std::printf("%s criterion %2d: %s [%s; %s]\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), v.detail.c_str(), timing.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

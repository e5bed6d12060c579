#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/specfun.hpp"

using namespace torsionlab;
using namespace torsionlab::specfun;
using torsionlab::test::Draw;
using torsionlab::test::rel_err;

TEST_CASE("log Gamma and digamma against high-precision values") {
  CHECK(rel_err(gamma_ln(7.25), 7.052185450738539444926) < 1e-14);
  CHECK(std::abs(gamma_ln(1.0)) < 1e-15);
  CHECK(std::abs(gamma_ln(0.5) - 0.5 * std::log(kPi)) < 1e-14);
  CHECK(std::abs(digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) < 1e-14);
  CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-14);
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x on random points") {
  Draw d;
  for (int i = 0; i < 200; ++i) {
    const double x = d.real(0.05, 60.0);
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12 * std::max(1.0, 1.0 / x));
  }
}

TEST_CASE("Riemann zeta values and derivatives") {
  const auto z0 = riemann_zeta(0.0);
  CHECK(std::abs(z0.value + 0.5) < 1e-14);
  CHECK(std::abs(z0.derivative + 0.5 * std::log(2.0 * kPi)) < 1e-13);
  CHECK(std::abs(riemann_zeta(2.0).value - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::abs(riemann_zeta(-1.0).value + 1.0 / 12.0) < 1e-14);
  // zeta'(-1) = 1/12 - log A, A the Glaisher constant.
  CHECK(std::abs(riemann_zeta(-1.0).derivative - (1.0 / 12.0 - 0.2487544770337842625)) < 1e-12);
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
}

TEST_CASE("Hurwitz zeta closed forms and recurrence") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.5) - (kPi * kPi / 2.0 - 4.0)) < 1e-13);
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6.0) < 1e-14);
  for (double a : {0.25, 0.5, 1.0, 3.7}) CHECK(std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)) < 1e-13);
  // d/ds zeta_H(s,a) at s = 0 equals log Gamma(a) - log(2 pi)/2.
  for (double a : {0.5, 1.0, 2.5}) {
    CHECK(std::abs(hurwitz_zeta_with_derivative(0.0, a).derivative - (gamma_ln(a) - 0.5 * std::log(2.0 * kPi))) < 1e-12);
  }
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), PoleError);

  Draw d;
  for (int i = 0; i < 200; ++i) {
    const double s = d.real(-3.0, 40.0);
    if (std::abs(s - 1.0) < 1e-3) continue;
    const double a = d.real(0.1, 5.0);
    const double lhs = hurwitz_zeta(s, a);
    const double rhs = std::pow(a, -s) + hurwitz_zeta(s, a + 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Bessel functions against high-precision values") {
  CHECK(rel_err(bessel_i(1.0, 1.0), 0.5651591039924850272077) < 1e-14);
  CHECK(rel_err(bessel_i(10.0, 5.0), 0.004580044419176051261186) < 1e-13);
  CHECK(rel_err(log_bessel_i(50.0, 800.0), 794.1759440036775890543) < 1e-13);
  CHECK(rel_err(log_bessel_i(500.0, 1000.0), 872.9995486951398001914) < 1e-13);
  CHECK(std::abs(bessel_j(100.0, 120.0) - 0.07573717913001070144717) < 1e-13);
  CHECK(std::abs(bessel_j(20.0, 10.0) / 0.0000115133692478133977833 - 1.0) < 1e-12);
  CHECK(std::abs(bessel_j(30.0, 35.0, true) + 0.08596885304024045591137) < 1e-13);
  CHECK(std::abs(bessel_j(1.5, kPi) - std::sqrt(2.0 / (kPi * kPi))) < 1e-14);
  CHECK_THROWS_AS(bessel_i(0.0, 1000.0), OverflowError);
}

TEST_CASE("half-integer Bessel closed forms agree with the general evaluators") {
  Draw d;
  for (int i = 0; i < 100; ++i) {
    const int k = d.integer(0, 4);
    const double x = d.real(0.2, 20.0);
    CHECK(std::abs(bessel_j_half_integer(k, x) - bessel_j(k + 0.5, x)) < 1e-12);
    CHECK(rel_err(bessel_i_half_integer(k, x), bessel_i(k + 0.5, x)) < 1e-11);
  }
}

TEST_CASE("power series for J agrees for small arguments") {
  Draw d;
  for (int i = 0; i < 100; ++i) {
    const double nu = d.real(0.0, 10.0);
    const double x = d.real(0.0, 1.0);
    CHECK(std::abs(bessel_j_series(nu, x) - bessel_j(nu, x)) < 1e-14);
  }
}

TEST_CASE("log I is consistent with I where both are representable") {
  Draw d;
  for (int i = 0; i < 200; ++i) {
    const double nu = d.real(0.0, 40.0);
    const double x = d.real(0.01, 300.0);
    const double direct = std::log(bessel_i(nu, x));
    CHECK(std::abs(log_bessel_i(nu, x) - direct) < 1e-11 * std::max(1.0, std::abs(direct)));
    const double dprime = std::log(bessel_i(nu, x, true));
    if (std::isfinite(dprime)) CHECK(std::abs(log_bessel_i(nu, x, true) - dprime) < 1e-10 * std::max(1.0, std::abs(dprime)));
  }
}

TEST_CASE("zeros against high-precision values") {
  CHECK(std::abs(zero({ZeroKind::JZero, 0.0}, 1) - 2.404825557695772768622) < 1e-13);
  CHECK(std::abs(zero({ZeroKind::JZero, 1.0}, 1) - 3.831705970207512315614) < 1e-13);
  CHECK(std::abs(zero({ZeroKind::JPrimeZero, 1.0}, 1) - 1.841183781340659302644) < 1e-13);
  CHECK(std::abs(zero({ZeroKind::JZero, 2.5}, 3) - 12.32294097056658205197) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::JPrimeZero, 2.5}, 3) - 10.66356139048200334318) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::JZero, 10.0}, 1) - 14.47550068655454123845) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::JPrimeZero, 10.0}, 1) - 11.77087667495558193196) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::JZero, 100.0}, 1) - 108.8361658984097743631) < 1e-10);
  CHECK(std::abs(zero({ZeroKind::JPrimeZero, 100.0}, 1) - 103.7683776825422687072) < 1e-10);
  CHECK(std::abs(zero({ZeroKind::JZero, 100.0}, 5) - 131.8239346539184629705) < 1e-10);
  CHECK(std::abs(zero({ZeroKind::JPrimeZero, 100.0}, 5) - 129.3586843053673469496) < 1e-10);
  CHECK(std::abs(zero({ZeroKind::GPlusZero, 1.5}, 1) - 2.743707269992269382561) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::GMinusZero, 1.5}, 1) - 2.081575977818100610538) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::GPlusZero, 2.5}, 2) - 7.443087053954457971792) < 1e-12);
  CHECK(std::abs(zero({ZeroKind::GMinusZero, 3.5}, 4) - 15.24451382437144353582) < 1e-12);
  CHECK_THROWS_AS(zero({ZeroKind::JZero, 1.0}, 0), DomainError);
}

TEST_CASE("zeros are roots, increasing, above the lower bound, and interlace") {
  Draw d;
  for (int i = 0; i < 30; ++i) {
    const double nu = d.real(0.0, 30.0);
    const auto j = zeros({ZeroKind::JZero, nu}, 40);
    const auto jp = zeros({ZeroKind::JPrimeZero, nu}, 41);
    CHECK(j.front() > zero_lower_bound({ZeroKind::JZero, nu}));
    for (int k = 0; k < 40; ++k) {
      CHECK(std::abs(bessel_j(nu, j[k])) < 1e-12);
      if (k > 0) CHECK(j[k] > j[k - 1]);
      if (nu > 0.0) CHECK(jp[k] < j[k]);
      CHECK(j[k] < jp[k + 1]);
    }
    for (auto kind : {ZeroKind::GPlusZero, ZeroKind::GMinusZero}) {
      const ZeroFamily fam{kind, nu + 0.5};
      const auto g = zeros(fam, 20);
      CHECK(g.front() > zero_lower_bound(fam));
      for (int k = 0; k < 20; ++k) {
        CHECK(std::abs(family_function(fam, g[k])) < 1e-10 * std::max(1.0, g[k]));
        if (k > 0) CHECK(g[k] > g[k - 1]);
      }
    }
  }
}

TEST_CASE("zeros_below returns exactly the zeros under the bound") {
  Draw d;
  for (int i = 0; i < 30; ++i) {
    const ZeroFamily fam{static_cast<ZeroKind>(d.integer(0, 3)), d.real(0.5, 20.0)};
    const double bound = d.real(5.0, 120.0);
    const auto below = zeros_below(fam, bound);
    const auto first = zeros(fam, static_cast<int>(below.size()) + 1);
    for (std::size_t k = 0; k < below.size(); ++k) CHECK(below[k] == doctest::Approx(first[k]).epsilon(1e-14));
    CHECK(first.back() >= bound);
  }
}

TEST_CASE("uniform expansion coefficients") {
  CHECK(std::abs(uniform_expansion_coeffs(ExpansionKind::I, 1.0)[0] + 1.0 / 12.0) < 1e-16);
  CHECK(std::abs(uniform_expansion_coeffs(ExpansionKind::Iprime, 1.0)[0] + 1.0 / 12.0) < 1e-16);
  CHECK(std::abs(uniform_expansion_coeffs(ExpansionKind::Hplus, 1.0)[0] - 5.0 / 12.0) < 1e-16);
  CHECK(std::abs(uniform_expansion_coeffs(ExpansionKind::Hminus, 1.0)[0] + 7.0 / 12.0) < 1e-15);
  // W2,- carries -23/128 in p^2, so W2,+ - W2,- = p^2/8 - 5p^4/24.
  const double p = 0.3;
  const auto hp = uniform_expansion_coeffs(ExpansionKind::Hplus, p);
  const auto hm = uniform_expansion_coeffs(ExpansionKind::Hminus, p);
  CHECK(std::abs((hp[1] - hm[1]) - (16.0 / 128.0 * p * p - 40.0 / 192.0 * std::pow(p, 4))) < 1e-15);
  CHECK_THROWS_AS(uniform_expansion_coeffs(ExpansionKind::I, 1.5), DomainError);
}

TEST_CASE("Debye polynomials start with u0 = 1 and u1 = (3t - 5t^3)/24") {
  const auto& u = debye_polynomials();
  REQUIRE(u.size() >= 2);
  CHECK(u[0] == std::vector<double>{1.0});
  CHECK(u[1][1] == doctest::Approx(3.0 / 24.0));
  CHECK(u[1][3] == doctest::Approx(-5.0 / 24.0));
}

TEST_CASE("truncated canonical product converges to log I") {
  for (double nu : {0.0, 1.0, 2.5}) {
    for (double x : {0.5, 2.0, 5.0}) {
      double prev = 1e300;
      for (int k : {10, 100, 1000}) {
        const double e = std::abs(log_bessel_i_product(nu, x, k) - log_bessel_i(nu, x));
        CHECK(e <= prev);
        prev = e;
      }
      CHECK(prev < 1e-2);
    }
  }
}

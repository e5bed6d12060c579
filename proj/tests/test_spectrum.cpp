#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>

#include "test_util.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/spectrum.hpp"

using namespace torsionlab;
using namespace torsionlab::spectrum;
using specfun::ZeroKind;
using torsionlab::test::Draw;

namespace {

// Counts calls and forwards to the direct provider.
class CountingProvider : public ZeroProvider {
 public:
  std::vector<double> zeros_below(const specfun::ZeroFamily& family, double bound) override {
    ++calls;
    return direct.zeros_below(family, bound);
  }
  std::atomic<int> calls{0};
  DirectZeroProvider direct;
};

}  // namespace

TEST_CASE("mu_n closed form and half-integer values at nu = 1") {
  for (int n = 1; n <= 50; ++n) CHECK(mu_n(1.0, n) == doctest::Approx(n + 0.5).epsilon(1e-15));
  CHECK(mu_n(2.0, 1) == doctest::Approx(std::sqrt(8.25)));
}

TEST_CASE("Poincare duality between absolute and relative spectra") {
  Draw d;
  for (int i = 0; i < 20; ++i) {
    const double nu = d.real(1.0, 6.0);
    const double l = d.real(0.2, 4.0);
    for (auto sec : {ConeSection::Circle, ConeSection::Sphere}) {
      const int dim = cone_dimension(sec);
      for (int q = 0; q <= dim; ++q) {
        CHECK(same_bands(cone_spectrum(sec, q, BoundaryCondition::Absolute, nu, l),
                         cone_spectrum(sec, dim - q, BoundaryCondition::Relative, nu, l)));
      }
    }
  }
}

TEST_CASE("alternating band multiset cancels") {
  for (auto sec : {ConeSection::Circle, ConeSection::Sphere}) {
    for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
      std::vector<SpectrumDescriptor> per;
      for (int q = 0; q <= cone_dimension(sec); ++q) per.push_back(cone_spectrum(sec, q, bc, 1.7, 1.0));
      CHECK(alternating_multiset(per).empty());
      // Dropping one degree breaks the cancellation.
      per.pop_back();
      CHECK_FALSE(alternating_multiset(per).empty());
    }
  }
}

TEST_CASE("circle q = 0 absolute at nu = 1: first row is j'_{1,1}^2 with multiplicity 2") {
  const auto rows = enumerate_eigenvalues(cone_circle_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0), 40.0);
  REQUIRE_FALSE(rows.empty());
  const double jp11 = 1.841183781340659302644;
  CHECK(rows.front().value == doctest::Approx(jp11 * jp11).epsilon(1e-13));
  CHECK(rows.front().multiplicity == 2);
  CHECK(rows.front().kind == ZeroKind::JPrimeZero);
  CHECK(rows.front().value == doctest::Approx(3.39).epsilon(1e-3));
}

TEST_CASE("circle q = 2 absolute at nu = 1 starts with j_{0,1}^2 then j_{1,1}^2 twice") {
  const auto rows = enumerate_eigenvalues(cone_circle_spectrum(2, BoundaryCondition::Absolute, 1.0, 1.0), 30.0);
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0].value == doctest::Approx(2.404825557695772768622 * 2.404825557695772768622).epsilon(1e-13));
  CHECK(rows[0].multiplicity == 1);
  CHECK(rows[1].value == doctest::Approx(3.831705970207512315614 * 3.831705970207512315614).epsilon(1e-13));
  CHECK(rows[1].multiplicity == 2);
}

TEST_CASE("sphere q = 0 absolute at nu = 1 has a G- band of order mu_1 = 3/2") {
  const auto d = cone_sphere_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0);
  const bool found = std::any_of(d.bands.begin(), d.bands.end(), [](const SpectralBand& b) {
    return b.kind == ZeroKind::GMinusZero && b.order.kind == OrderExpr::Kind::MuN &&
           b.order.eval(1.0, 1) == doctest::Approx(1.5) && b.multiplicity.eval(1) == 3;
  });
  CHECK(found);
  const auto rows = enumerate_eigenvalues(d, 60.0);
  const auto g = std::find_if(rows.begin(), rows.end(), [](const EigenRow& r) { return r.kind == ZeroKind::GMinusZero; });
  REQUIRE(g != rows.end());
  CHECK(g->order == doctest::Approx(1.5));
  CHECK(g->n == 1);
}

TEST_CASE("tiny cutoff gives an empty table") {
  CHECK(enumerate_eigenvalues(cone_circle_spectrum(0, BoundaryCondition::Absolute, 1.0, 1.0), 0.1).empty());
}

TEST_CASE("enumeration is sorted, respects the cutoff and scales with l^-2") {
  Draw d;
  for (int i = 0; i < 10; ++i) {
    const double nu = d.real(1.0, 4.0);
    const double l = d.real(0.5, 2.0);
    const auto sec = d.integer(0, 1) ? ConeSection::Sphere : ConeSection::Circle;
    const int q = d.integer(0, cone_dimension(sec));
    const double cutoff = d.real(20.0, 200.0);
    const auto a = enumerate_eigenvalues(cone_spectrum(sec, q, BoundaryCondition::Absolute, nu, 1.0), cutoff);
    const auto b = enumerate_eigenvalues(cone_spectrum(sec, q, BoundaryCondition::Absolute, nu, l), cutoff / (l * l));
    CHECK(std::is_sorted(a.begin(), a.end(), [](const EigenRow& x, const EigenRow& y) { return x.value < y.value; }));
    for (const auto& r : a) CHECK(r.value <= cutoff);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k].value * l * l == doctest::Approx(a[k].value).epsilon(1e-12));
  }
}

TEST_CASE("a custom zero provider gives identical rows") {
  CountingProvider counting;
  const auto d = cone_sphere_spectrum(1, BoundaryCondition::Relative, 1.3, 1.0);
  const auto a = enumerate_eigenvalues(d, 150.0);
  const auto b = enumerate_eigenvalues(d, 150.0, &counting);
  CHECK(counting.calls > 0);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].value == b[k].value);
    CHECK(a[k].provenance == b[k].provenance);
  }
}

TEST_CASE("invalid degrees are rejected") {
  CHECK_THROWS_AS(cone_circle_spectrum(3, BoundaryCondition::Absolute, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cone_sphere_spectrum(-1, BoundaryCondition::Absolute, 1.0, 1.0), DomainError);
}

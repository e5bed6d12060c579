#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "chain_fixtures.hpp"
#include "test_util.hpp"
#include "torsionlab/chain_torsion.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/specfun.hpp"

using namespace torsionlab;
using namespace torsionlab::chain;
using torsionlab::test::Draw;
using torsionlab::test::perturb_lifts;
using torsionlab::test::random_complex;

TEST_CASE("two-term acyclic complex with matching bases has torsion 1") {
  FiniteChainComplex cx;
  cx.lengths = {1, 1};
  cx.boundaries = {Eigen::MatrixXd(0, 1), Eigen::MatrixXd::Identity(1, 1)};
  GradedHomologyBasis h;
  h.per_degree.resize(2);
  CHECK(reidemeister_torsion(cx, h) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("scaling the boundary map scales the torsion") {
  FiniteChainComplex cx;
  cx.lengths = {1, 1};
  cx.boundaries = {Eigen::MatrixXd(0, 1), Eigen::MatrixXd::Constant(1, 1, 4.0)};
  GradedHomologyBasis h;
  h.per_degree.resize(2);
  CHECK(std::abs(log_reidemeister_torsion(cx, h) - std::log(4.0)) < 1e-14);
}

TEST_CASE("cone complexes reproduce Vol^(+-1/2)") {
  Draw d;
  for (int n = 0; n <= 4; ++n) {
    for (auto bc : {BoundaryCondition::Absolute, BoundaryCondition::Relative}) {
      for (int i = 0; i < 10; ++i) {
        const ConeGeometry g{n, d.real(0.05, specfun::kPi / 2), d.real(0.1, 5.0), 1};
        const auto cx = cone_cw_complex(n, bc);
        const double v = volume(g);
        const double got = log_reidemeister_torsion(cx.complex, cx.homology_basis(v));
        CHECK(std::abs(got - rs_torsion_closed(g, bc)) < 1e-12);
        const double expected = (bc == BoundaryCondition::Absolute || n % 2 == 0) ? 0.5 * std::log(v) : -0.5 * std::log(v);
        CHECK(std::abs(got - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("volumes of discs and cones") {
  CHECK(volume(disc_geometry(2, 1.0)) == doctest::Approx(specfun::kPi).epsilon(1e-15));
  CHECK(volume(disc_geometry(3, 2.0)) == doctest::Approx(4.0 * specfun::kPi / 3.0 * 8.0).epsilon(1e-15));
  const ConeGeometry c{1, specfun::kPi / 6, 3.0, 1};
  CHECK(volume(c) == doctest::Approx(specfun::kPi * 9.0 * 0.5).epsilon(1e-14));
}

TEST_CASE("torsion is independent of the lift sets (100 random trials)") {
  Draw d;
  for (int trial = 0; trial < 100; ++trial) {
    const auto rc = random_complex(d);
    const auto base = default_lifts(rc.complex);
    const double reference = log_reidemeister_torsion(rc.complex, rc.h, base);
    const double perturbed = log_reidemeister_torsion(rc.complex, rc.h, perturb_lifts(d, rc.complex, base));
    CHECK(std::abs(perturbed - reference) < 1e-10);
  }
}

TEST_CASE("changing the homology basis by a factor changes the torsion by that factor") {
  Draw d;
  for (int trial = 0; trial < 20; ++trial) {
    auto rc = random_complex(d);
    const double before = log_reidemeister_torsion(rc.complex, rc.h);
    const double c = d.real(0.2, 5.0);
    rc.h.per_degree[0][0] *= c;
    CHECK(std::abs(log_reidemeister_torsion(rc.complex, rc.h) - before - std::log(c)) < 1e-10);
  }
}

TEST_CASE("invalid complexes and bases are rejected") {
  FiniteChainComplex bad;
  bad.lengths = {1, 1, 1};
  bad.boundaries = {Eigen::MatrixXd(0, 1), Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Ones(1, 1)};
  CHECK_THROWS_AS(bad.validate(), DomainError);

  FiniteChainComplex shape;
  shape.lengths = {2, 1};
  shape.boundaries = {Eigen::MatrixXd(0, 2), Eigen::MatrixXd::Ones(1, 1)};
  CHECK_THROWS_AS(shape.validate(), DomainError);

  // Missing homology vector leaves degree 0 short of a basis.
  const auto cx = cone_cw_complex(1, BoundaryCondition::Absolute);
  GradedHomologyBasis empty;
  empty.per_degree.resize(3);
  CHECK_THROWS_AS(log_reidemeister_torsion(cx.complex, empty), RankError);

  // A non-cycle as homology representative.
  FiniteChainComplex two;
  two.lengths = {1, 1};
  two.boundaries = {Eigen::MatrixXd(0, 1), Eigen::MatrixXd::Zero(1, 1)};
  GradedHomologyBasis h;
  h.per_degree.resize(2);
  h.per_degree[0].push_back(Eigen::VectorXd::Ones(1));
  h.per_degree[1].push_back(Eigen::VectorXd::Ones(1));
  CHECK_NOTHROW(log_reidemeister_torsion(two, h));
  // With d_1 = 1 the complex is acyclic in degree 0, and the degree-1 vector is no longer a cycle.
  two.boundaries[1](0, 0) = 1.0;
  h.per_degree[0].clear();
  try {
    log_reidemeister_torsion(two, h);
    FAIL("expected RankError");
  } catch (const RankError& e) {
    CHECK(e.degree() == 1);
  }
  CHECK_THROWS_AS(cone_cw_complex(-1, BoundaryCondition::Absolute), DomainError);
}

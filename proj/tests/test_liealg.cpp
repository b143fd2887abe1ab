#include <doctest.h>

#include <cmath>

#include "cad/errors.hpp"
#include "cad/liealg.hpp"

using namespace cad;

namespace {

// Brute-force oracle over all basis triples, written against the raw arrays
// so it stays independent of validate_algebra.
double oracle_jacobi(const StructureConstants& c) {
  int n = c.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          for (int m = 0; m < n; ++m)
            v += c.at(j, k, m) * c.at(i, m, l) - c.at(i, j, m) * c.at(m, k, l) -
                 c.at(i, k, m) * c.at(j, m, l);
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

double oracle_ad_invariance(const StructureConstants& c, const Mat& B) {
  int n = c.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        for (int m = 0; m < n; ++m) v += c.at(i, j, m) * B(m, k) + c.at(i, k, m) * B(j, m);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

}  // namespace

TEST_CASE("abelian double of dimension 2 validates") {
  QuadraticLieAlgebra a;
  a.dim = 2;
  a.c = sc_abelian(2);
  a.B = Mat::Zero(2, 2);
  a.B(0, 1) = a.B(1, 0) = 1.0;
  ValidationReport r = validate_algebra(a);
  CHECK(r.antisymmetry == 0.0);
  CHECK(r.jacobi == 0.0);
  CHECK(r.ad_invariance == 0.0);
  CHECK(r.symmetry == 0.0);
  CHECK(r.nondegenerate);
  CHECK(r.passes());
}

TEST_CASE("degenerate pairing fails nondegeneracy only") {
  QuadraticLieAlgebra a;
  a.dim = 2;
  a.c = sc_abelian(2);
  a.B = Mat::Zero(2, 2);
  a.B(0, 0) = 1.0;
  ValidationReport r = validate_algebra(a);
  CHECK_FALSE(r.nondegenerate);
  CHECK(r.det_b == 0.0);
  CHECK_FALSE(r.passes());
}

TEST_CASE("semiabelian double of su(2) validates against the brute-force oracle") {
  ManinTriple t = build_semiabelian_double(sc_su2());
  CHECK(t.algebra().dim == 6);
  ValidationReport r = validate_algebra(t.algebra());
  CHECK(r.passes(1e-12));
  CHECK(oracle_jacobi(t.algebra().c) <= 1e-12);
  CHECK(oracle_ad_invariance(t.algebra().c, t.algebra().B) <= 1e-12);
}

TEST_CASE("semiabelian double of the 2-dim solvable algebra") {
  ManinTriple t = build_semiabelian_double(sc_solv2());
  CHECK(t.algebra().dim == 4);
  CHECK(validate_algebra(t.algebra()).passes(1e-12));
  // g* is an abelian Lagrangian subalgebra
  CHECK(t.gprime_isotropy_residual() == 0.0);
  CHECK(t.gprime_closure_residual() <= 1e-13);
  // and the bracket of g* with itself vanishes outright
  Vec f1 = Vec::Zero(4), f2 = Vec::Zero(4);
  f1(2) = 1.0;
  f2(3) = 1.0;
  CHECK(t.algebra().bracket(f1, f2).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("one-dimensional abelian input gives the hyperbolic plane") {
  ManinTriple t = build_semiabelian_double(sc_abelian(1));
  CHECK(t.algebra().dim == 2);
  Mat expect = Mat::Zero(2, 2);
  expect(0, 1) = expect(1, 0) = 1.0;
  CHECK((t.algebra().B - expect).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("manin pair and triple invariants") {
  ManinTriple t = build_semiabelian_double(sc_su2());
  CHECK(t.pair.isotropy_residual() == 0.0);
  CHECK(t.pair.closure_residual() <= 1e-13);
  CHECK(t.pair.half_dimensional());
  CHECK(t.transversality_sigma() > 0.9);
}

TEST_CASE("jacobi failure is rejected") {
  StructureConstants bad = StructureConstants::zeros(3);
  // antisymmetric but violating Jacobi
  bad.set_antisym(0, 1, 2, 1.0);
  bad.set_antisym(1, 2, 2, 1.0);
  bad.set_antisym(0, 2, 1, 1.0);
  REQUIRE(oracle_jacobi(bad) > 1e-3);
  CHECK_THROWS_AS(build_semiabelian_double(bad), InvalidInput);
}

TEST_CASE("validate_algebra rejects dimension mismatch") {
  QuadraticLieAlgebra a;
  a.dim = 3;
  a.c = sc_abelian(2);
  a.B = Mat::Identity(3, 3);
  CHECK_THROWS_AS(validate_algebra(a), StructuralError);
}

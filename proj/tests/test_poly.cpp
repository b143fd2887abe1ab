#include <doctest.h>

#include <cmath>
#include <random>

#include "cad/errors.hpp"
#include "cad/poly.hpp"

using cad::Poly;

namespace {

Poly random_poly(std::mt19937& rng, int nvars, int degree, int terms) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly mono = Poly::constant(coef(rng));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) mono = mono * Poly::var(static_cast<std::uint32_t>(var(rng)));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("constant and variable basics") {
  Poly c = Poly::constant(2.5);
  CHECK(c.is_constant());
  CHECK(c.constant_value() == 2.5);
  CHECK(Poly::constant(0.0).is_zero());

  Poly x = Poly::var(0);
  Poly y = Poly::var(1);
  Poly p = x * y + Poly::constant(3.0) * x;
  double v = p.eval(std::array{2.0, 5.0});
  CHECK(v == doctest::Approx(2.0 * 5.0 + 3.0 * 2.0));
  CHECK(p.degree() == 2);
}

TEST_CASE("addition cancels exactly") {
  Poly x = Poly::var(0);
  Poly p = x * x + 2.0 * x;
  Poly q = p - p;
  CHECK(q.is_zero());
}

TEST_CASE("product against hand expansion") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = (x + y) * (x - y);
  Poly expect = x * x - y * y;
  CHECK(cad::coef_distance(p, expect) == 0.0);
}

TEST_CASE("derivative matches calculus on monomials") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = x.pow(3) * y.pow(2) * 4.0;
  Poly dx = p.derivative(0);
  Poly expect = x.pow(2) * y.pow(2) * 12.0;
  CHECK(cad::coef_distance(dx, expect) == 0.0);
  CHECK(p.derivative(2).is_zero());
}

TEST_CASE("derivative is a derivation (randomized)") {
  std::mt19937 rng(91);
  for (int rep = 0; rep < 20; ++rep) {
    Poly a = random_poly(rng, 3, 3, 5);
    Poly b = random_poly(rng, 3, 3, 5);
    for (std::uint32_t v = 0; v < 3; ++v) {
      Poly lhs = (a * b).derivative(v);
      Poly rhs = a.derivative(v) * b + a * b.derivative(v);
      CHECK(cad::coef_distance(lhs, rhs) < 1e-14);
    }
  }
}

TEST_CASE("compose substitutes polynomials") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = x * x + y;
  std::vector<Poly> subs = {Poly::var(0) + Poly::constant(1.0), Poly::var(0) * Poly::var(1)};
  Poly q = p.compose(subs);
  // (t+1)^2 + t s
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 10; ++rep) {
    double t = u(rng), s = u(rng);
    double expect = (t + 1.0) * (t + 1.0) + t * s;
    CHECK(q.eval(std::array{t, s}) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("eval agrees with horner-style reference (randomized)") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int rep = 0; rep < 10; ++rep) {
    Poly p = random_poly(rng, 4, 4, 12);
    std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
    double ref = 0.0;
    for (const auto& t : p.terms()) {
      double v = t.coef;
      for (const auto& ve : t.mono)
        for (std::uint32_t e = 0; e < ve.exp; ++e) v *= x[ve.var];
      ref += v;
    }
    CHECK(p.eval(x) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("constant_value rejects non-constants") {
  Poly x = Poly::var(0);
  CHECK_THROWS_AS((void)x.constant_value(), cad::StructuralError);
}

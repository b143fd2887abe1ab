#include <doctest.h>

#include <functional>
#include <random>

#include "cad/forms.hpp"
#include "cad/poly.hpp"

using cad::Chart;
using cad::Form;
using cad::Poly;
using cad::VecField;

namespace {

Poly rand_poly(std::mt19937& rng, int nvars, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Poly mono = Poly::constant(coef(rng));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) mono = mono * Poly::var(static_cast<std::uint32_t>(var(rng)));
    p += mono;
  }
  return p;
}

Form rand_form(std::mt19937& rng, int n, int k, int degree = 2) {
  Form f(n, k);
  std::vector<int> idx(static_cast<std::size_t>(k));
  // iterate increasing tuples
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      f.set_component(idx, rand_poly(rng, n, degree));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return f;
}

VecField rand_vf(std::mt19937& rng, int n, int degree = 2) {
  VecField u = VecField::zero(n);
  for (int i = 0; i < n; ++i) u.comp[static_cast<std::size_t>(i)] = rand_poly(rng, n, degree);
  return u;
}

}  // namespace

TEST_CASE("d of a function then d again vanishes") {
  std::mt19937 rng(11);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k <= n - 1; ++k) {
      Form w = rand_form(rng, n, k);
      Form dd = w.d().d();
      CHECK(dd.max_abs_coef() < 1e-13);
    }
  }
}

TEST_CASE("wedge is graded commutative") {
  std::mt19937 rng(13);
  int n = 4;
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Form a = rand_form(rng, n, p);
      Form b = rand_form(rng, n, q);
      Form lhs = a.wedge(b);
      Form rhs = b.wedge(a) * ((p * q) % 2 == 0 ? 1.0 : -1.0);
      CHECK(cad::coef_distance(lhs, rhs) < 1e-13);
    }
}

TEST_CASE("leibniz rule for d over wedge") {
  std::mt19937 rng(17);
  int n = 4;
  for (int p = 0; p <= 2; ++p) {
    Form a = rand_form(rng, n, p);
    Form b = rand_form(rng, n, 1);
    Form lhs = a.wedge(b).d();
    Form rhs = a.d().wedge(b) + a.wedge(b.d()) * (p % 2 == 0 ? 1.0 : -1.0);
    CHECK(cad::coef_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937 rng(19);
  int n = 4;
  VecField u = rand_vf(rng, n);
  for (int p = 1; p <= 2; ++p) {
    Form a = rand_form(rng, n, p);
    Form b = rand_form(rng, n, 1);
    Form lhs = a.wedge(b).interior(u);
    Form rhs = a.interior(u).wedge(b) + a.wedge(b.interior(u)) * (p % 2 == 0 ? 1.0 : -1.0);
    CHECK(cad::coef_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("i_u i_u = 0") {
  std::mt19937 rng(23);
  VecField u = rand_vf(rng, 4);
  Form w = rand_form(rng, 4, 3);
  CHECK(w.interior(u).interior(u).max_abs_coef() < 1e-13);
}

TEST_CASE("cartan formula evaluates like the flow derivative of a pullback") {
  // L_u w for w = x1 dx2, u = e1 should be dx2; matches d i_u + i_u d.
  int n = 2;
  Form w(n, 1);
  w.set_component({1}, Poly::var(0));
  VecField e1 = VecField::basis(n, 0);
  Form lw = w.lie(e1);
  Form expect(n, 1);
  expect.set_component({1}, Poly::constant(1.0));
  CHECK(cad::coef_distance(lw, expect) == 0.0);
}

TEST_CASE("lie derivative commutes with d (randomized)") {
  std::mt19937 rng(29);
  int n = 3;
  VecField u = rand_vf(rng, n);
  Form w = rand_form(rng, n, 1);
  CHECK(cad::coef_distance(w.lie(u).d(), w.d().lie(u)) < 1e-12);
}

TEST_CASE("vf_bracket against hand example") {
  // u = x2 e1, v = e2 -> [u, v] = -e1
  int n = 2;
  VecField u = VecField::zero(n);
  u.comp[0] = Poly::var(1);
  VecField v = VecField::basis(n, 1);
  VecField b = cad::vf_bracket(u, v);
  CHECK(cad::coef_distance(b.comp[0], Poly::constant(-1.0)) == 0.0);
  CHECK(b.comp[1].is_zero());
}

TEST_CASE("pullback commutes with d") {
  std::mt19937 rng(31);
  // phi : R^2 -> R^3 polynomial
  std::vector<Poly> phi = {Poly::var(0) * Poly::var(1), Poly::var(0) + Poly::var(1),
                           Poly::var(1) * Poly::var(1)};
  for (int k = 0; k <= 2; ++k) {
    Form w = rand_form(rng, 3, k);
    Form lhs = w.pullback(phi, 2).d();
    Form rhs = w.d().pullback(phi, 2);
    CHECK(cad::coef_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("evaluation with determinant convention") {
  // dx0 ^ dx1 on (e0, e1) = 1, on (e1, e0) = -1
  Form w(2, 2);
  w.set_component({0, 1}, Poly::constant(1.0));
  std::vector<double> x{0.0, 0.0};
  CHECK(w.eval(x, {{1.0, 0.0}, {0.0, 1.0}}) == 1.0);
  CHECK(w.eval(x, {{0.0, 1.0}, {1.0, 0.0}}) == -1.0);
}

TEST_CASE("chart sampling stays in the box") {
  Chart c = Chart::cube(3, 0.75);
  auto pts = c.sample_points(64);
  CHECK(pts.size() == 64);
  for (const auto& p : pts)
    for (double v : p) {
      CHECK(v <= 0.75);
      CHECK(v >= -0.75);
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cad {

// Sparse multivariate polynomial with double coefficients.
//
// Monomials are kept as sorted (variable, exponent) lists and the term list
// is kept sorted, so equal polynomials have identical representations and
// differentiation is an exact coefficient operation. This is the carrier for
// every field on a chart; nothing in the chart calculus uses finite
// differences.
class Poly {
 public:
  struct VarExp {
    std::uint32_t var = 0;
    std::uint32_t exp = 0;
    friend auto operator<=>(const VarExp&, const VarExp&) = default;
  };
  using Mono = std::vector<VarExp>;  // sorted by var, exps > 0
  struct Term {
    Mono mono;
    double coef = 0.0;
  };

  Poly() = default;

  static Poly constant(double c);
  static Poly var(std::uint32_t v, std::uint32_t e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  double constant_value() const;  // 0 if zero, throws if degree > 0

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;
  std::uint32_t num_vars() const;  // max var index + 1 over all terms
  double max_abs_coef() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= -1.0; }

  bool same_terms(const Poly& o) const;

  // Exact partial derivative (coefficient shifting).
  Poly derivative(std::uint32_t v) const;

  double eval(std::span<const double> x) const;

  // Substitutes subs[v] for variable v. Variables past subs.size() are
  // rejected.
  Poly compose(std::span<const Poly> subs) const;

  Poly pow(std::uint32_t e) const;

  // Drops terms with |coef| <= eps. eps = 0 drops exact zeros only.
  Poly pruned(double eps) const;

 private:
  std::vector<Term> terms_;
  void normalize();
  friend class PolyBuilder;
};

// Accumulates terms then normalizes once; used by the heavier products.
class PolyBuilder {
 public:
  void add(const Poly::Mono& m, double c);
  Poly take();

 private:
  std::vector<Poly::Term> terms_;
};

// max |coef| of (a - b); exact-zero means identical polynomials up to
// floating point cancellation.
double coef_distance(const Poly& a, const Poly& b);

}  // namespace cad

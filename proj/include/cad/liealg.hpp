#pragma once

#include <string>
#include <vector>

#include "cad/linalg.hpp"

namespace cad {

// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k,
// stored dense (dimensions stay small).
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(int dim, std::vector<double> flat);
  static StructureConstants zeros(int dim);

  int dim() const { return dim_; }
  double at(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  void set(int i, int j, int k, double v);
  // sets both orientations, c[i][j][k] = v and c[j][i][k] = -v
  void set_antisym(int i, int j, int k, double v);

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;  // matrix of ad_x
  const std::vector<double>& flat() const { return c_; }

 private:
  int dim_ = 0;
  std::vector<double> c_;
  std::size_t idx(int i, int j, int k) const;
};

struct QuadraticLieAlgebra {
  int dim = 0;
  StructureConstants c;
  Mat B;  // pairing matrix, symmetric

  Vec bracket(const Vec& x, const Vec& y) const { return c.bracket(x, y); }
  double pair(const Vec& x, const Vec& y) const { return x.dot(B * y); }
};

struct ValidationReport {
  double antisymmetry = 0.0;
  double jacobi = 0.0;
  double ad_invariance = 0.0;
  double symmetry = 0.0;
  double det_b = 0.0;
  bool nondegenerate = false;
  bool passes(double tol = 1e-12) const;
  std::string summary() const;
};

// Per-invariant max residuals over all basis triples.
ValidationReport validate_algebra(const QuadraticLieAlgebra& a);

// Subspace given by basis vectors (columns, coefficients in the d basis).
struct ManinPair {
  QuadraticLieAlgebra algebra;
  Mat g_basis;

  double isotropy_residual() const;
  double closure_residual() const;
  bool half_dimensional() const;
};

struct ManinTriple {
  ManinPair pair;
  Mat gprime_basis;

  const QuadraticLieAlgebra& algebra() const { return pair.algebra; }
  const Mat& g_basis() const { return pair.g_basis; }
  double gprime_isotropy_residual() const;
  double gprime_closure_residual() const;
  // smallest singular value of [g | g']; > 0 means direct sum.
  double transversality_sigma() const;
};

// d = g + g* with the coadjoint bracket and the hyperbolic pairing
// <x + xi, y + eta> = xi(y) + eta(x). Input must satisfy Jacobi.
ManinTriple build_semiabelian_double(const StructureConstants& g_constants, double tol = 1e-12);

// Common small algebras used by the presets and tests.
StructureConstants sc_abelian(int dim);
StructureConstants sc_su2();             // [e_i, e_j] = eps_ijk e_k
StructureConstants sc_solv2();           // [e_1, e_2] = e_2
StructureConstants sc_heisenberg3();     // [e_1, e_2] = e_3

// Abelian double of dimension 2n with hyperbolic pairing.
ManinTriple build_abelian_double(int n);

}  // namespace cad

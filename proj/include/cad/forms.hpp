#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "cad/poly.hpp"

namespace cad {

// Coordinate chart: open box in R^n used as the sampling domain.
struct Chart {
  int dim = 0;
  std::vector<std::array<double, 2>> box;  // per-coordinate bounds

  static Chart cube(int n, double r);
  std::vector<std::vector<double>> sample_points(int count, int skip = 0) const;
};

// Vector field with polynomial components u = comp[i] d/dx_i.
struct VecField {
  int n = 0;
  std::vector<Poly> comp;

  static VecField zero(int n);
  static VecField basis(int n, int i);
  std::vector<double> eval(std::span<const double> x) const;
};

// Jacobi-Lie bracket [u, v]^i = u^j d_j v^i - v^j d_j u^i.
VecField vf_bracket(const VecField& u, const VecField& v);

// Index tuple combinatorics shared by chart forms and invariant-frame forms.
// merge_indices returns the sign of sorting (a, b) into an increasing tuple,
// or 0 when an index repeats.
int merge_indices(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out);
int insert_index(int i, const std::vector<int>& rest, std::vector<int>& out);

// Differential k-form on a chart; components over strictly increasing index
// tuples, each a Poly. k = 0 is a scalar field.
class Form {
 public:
  Form() = default;
  Form(int n, int k);

  static Form scalar(int n, Poly p);
  static Form covector(int n, int i);  // dx_i
  static Form from_components(int n, int k, std::map<std::vector<int>, Poly> comp);

  int dim() const { return n_; }
  int deg() const { return k_; }
  bool is_zero() const;
  double max_abs_coef() const;

  const std::map<std::vector<int>, Poly>& components() const { return comp_; }
  const Poly& component(const std::vector<int>& idx) const;  // increasing idx
  void set_component(std::vector<int> idx, Poly p);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(double s) const;
  Form scale(const Poly& f) const;

  Form wedge(const Form& o) const;
  Form d() const;
  Form interior(const VecField& u) const;
  Form lie(const VecField& u) const;  // Cartan formula

  // Numeric evaluation on k constant tangent vectors at a point.
  double eval(std::span<const double> x, const std::vector<std::vector<double>>& vecs) const;

  // Pullback along the polynomial map phi : R^m -> R^n, x = phi(y).
  Form pullback(const std::vector<Poly>& phi, int src_dim) const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::map<std::vector<int>, Poly> comp_;
};

double coef_distance(const Form& a, const Form& b);

}  // namespace cad

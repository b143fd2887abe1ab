#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cad/forms.hpp"

namespace cad {

// Section of (T + T*)M on a chart: a vector field and a 1-form, both with
// exact polynomial coefficients.
struct GenSection {
  VecField u;
  Form alpha;  // 1-form

  static GenSection make(VecField u, Form alpha);
  static GenSection vector(const VecField& u);
  static GenSection covector(const Form& alpha);
  int dim() const { return u.n; }

  GenSection operator+(const GenSection& o) const;
  GenSection operator-(const GenSection& o) const;
  GenSection scale(const Poly& f) const;
  GenSection operator*(double s) const;

  // Component norm at a point (infinity norm over 2n slots).
  double eval_norm(std::span<const double> x) const;
};

// <(u,a),(v,b)> = a(v) + b(u)
Poly pairing(const GenSection& s, const GenSection& t);

// a^t of a 1-form: the section (0, alpha).
GenSection anchor_transpose(const Form& alpha);

// Closed 3-form wrapper; construction verifies dH = 0 at the coefficient
// level (exact differentiation, so closure failures are structural).
class ClosedThreeForm {
 public:
  explicit ClosedThreeForm(Form h, bool bypass_check = false);
  const Form& form() const { return h_; }
  int dim() const { return h_.dim(); }
  bool closure_checked() const { return checked_; }

 private:
  Form h_;
  bool checked_ = false;
};

// ([u,v], L_u beta - i_v d alpha)
GenSection std_bracket(const GenSection& s, const GenSection& t);

// ([u,v], L_u beta - i_v d alpha + H(u,v,.))
GenSection twisted_bracket(const GenSection& s, const GenSection& t, const ClosedThreeForm& h);

struct AxiomReport {
  double jacobi = 0.0;        // A
  double anchor = 0.0;        // B
  double leibniz = 0.0;       // C
  double invariance = 0.0;    // D
  double antisymmetry = 0.0;  // E
  double max() const;
};

// Residuals of the five axioms for the H-twisted bracket, evaluated at the
// sample points. All derivatives are exact; residuals are float roundoff
// when dH = 0.
AxiomReport axiom_residuals(const ClosedThreeForm& h, const GenSection& s, const GenSection& t,
                            const GenSection& u, const Poly& f,
                            const std::vector<std::vector<double>>& pts);

// Lagrangian frame: k pointwise-isotropic sections spanning a subbundle.
struct LagrangianFrame {
  std::vector<GenSection> sections;

  int size() const { return static_cast<int>(sections.size()); }
  int dim() const { return sections.empty() ? 0 : sections[0].dim(); }

  // max |<s_i, s_j>| over sample points.
  double isotropy_residual(const std::vector<std::vector<double>>& pts) const;
  // min over points of the smallest singular value of the (2n x k) component
  // matrix; 0 means rank drop.
  double min_rank_sigma(const std::vector<std::vector<double>>& pts) const;

  static LagrangianFrame tangent(int n);                      // (e_i, 0)
  static LagrangianFrame graph_of_two_form(const Form& omega);  // (e_i, i_{e_i} omega)
};

// Non-involutivity tensors of an isotropic frame. H_L[i][j][k] is the exact
// polynomial <[s_i,s_j], s_k>; F_L is the same data read as a map
// /\^2 L -> L* through the pairing identification, so it shares storage.
struct NonInvolutivity {
  int k = 0;
  std::vector<Poly> h;  // flattened [i][j][k]
  const Poly& at(int i, int j, int l) const;
  double eval_max(const std::vector<std::vector<double>>& pts) const;
};

NonInvolutivity noninvolutivity(const LagrangianFrame& frame, const ClosedThreeForm& h,
                                const std::vector<std::vector<double>>& isotropy_pts,
                                double isotropy_tol = 1e-10);

// Curvature of a splitting frame sigma (anchor must be the coordinate
// frame): the closed 3-form H with H_{ijk} = <[sigma_i, sigma_j], sigma_k>.
ClosedThreeForm connection_curvature(const LagrangianFrame& sigma, const ClosedThreeForm& ambient_h);

// (tau + sigma)(v) = sigma(v) + a^t(i_v tau)
LagrangianFrame shift_splitting(const LagrangianFrame& sigma, const Form& tau);

// Embedded leaf with polynomial parametrization phi : R^m -> R^n.
struct Leaf {
  int src_dim = 0;
  std::vector<Poly> phi;  // n components in m variables
  std::vector<std::array<double, 2>> box;
};

// max over sample points on the leaf of |d beta - H|_N| coefficients
// evaluated pointwise; beta is a 2-form in leaf coordinates. Throws when the
// leaf is not tangent to a(L).
double dirac_leaf_check(const LagrangianFrame& l, const ClosedThreeForm& h, const Leaf& leaf,
                        const Form& beta, int samples = 64, double tangency_tol = 1e-9);

}  // namespace cad

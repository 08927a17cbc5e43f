#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "geom/form.hpp"
#include "lie/presentation.hpp"

namespace ssp {

/// Rank-3 tensor on the frame, dense; used for torsion and difference
/// tensors (n <= 15 in the catalogue).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), a_(static_cast<size_t>(n) * n * n, 0.0) {}

  int n() const { return n_; }
  double& operator()(int i, int j, int k) { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
  double operator()(int i, int j, int k) const {
    return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }

  double max_abs() const;
  double norm() const;
  static double inner(const Tensor3& a, const Tensor3& b);

  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(double s, Tensor3 t);

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Invariant metric connection at the origin: one skew matrix per frame
/// direction.
struct NomizuMap {
  std::vector<MatrixXd> lam;

  int dim() const { return static_cast<int>(lam.size()); }
  const MatrixXd& operator()(int i) const { return lam.at(i); }
  /// Lambda evaluated on an arbitrary direction vector.
  MatrixXd at(const VectorXd& x) const;
};

NomizuMap nomizu_zero(int dim);  // the canonical connection
NomizuMap nomizu_levi_civita(const ReductiveDecomposition& d);

/// T(X,Y) = Lambda(X)Y - Lambda(Y)X - [X,Y]_m, as T(i,j,k) = g(T(e_i,e_j),e_k).
Tensor3 torsion_at_origin(const NomizuMap& nm, const ReductiveDecomposition& d);

/// R_o(X,Y) = [Lambda(X),Lambda(Y)] - Lambda([X,Y]_m) - ad([X,Y]_h), skew on m.
MatrixXd curvature_at_origin(const NomizuMap& nm, const ReductiveDecomposition& d,
                             const VectorXd& x, const VectorXd& y);

/// A(X,Y,Z) = (T(X,Y,Z) - T(Y,Z,X) + T(Z,X,Y)) / 2 and its inverse.
Tensor3 torsion_to_difference(const Tensor3& t);
Tensor3 difference_to_torsion(const Tensor3& a);

struct TorsionClasses {
  Tensor3 vectorial;
  Tensor3 skew;
  Tensor3 cyclic_traceless;
  std::string label;  // e.g. "skew+ct", "zero"
  double norm_vec = 0, norm_skew = 0, norm_ct = 0;
};

/// Orthogonal decomposition of a torsion tensor into the three O(n) classes.
/// Requires n >= 3.
TorsionClasses torsion_class_decompose(const Tensor3& t, double tol = 1e-9);

/// Totally skew part as a 3-form (coefficients T(e_i,e_j,e_k), i<j<k).
Form tensor_to_form3(const Tensor3& t);
Tensor3 form3_to_tensor(const Form& f);

/// Exterior derivative of an invariant form via d = sum_i e_i ^ nabla_{e_i}.
/// Throws if the form is not h-invariant.
Form exterior_derivative_invariant(const Form& f, const NomizuMap& lc,
                                   const ReductiveDecomposition& d, double tol = 1e-8);

/// Largest h-action residual of the form (0 for invariant forms).
double form_invariance_residual(const Form& f, const ReductiveDecomposition& d);

/// Naturally reductive predicate g([X,Y]_m,Z) + g(Y,[X,Z]_m) = 0, as the
/// largest violation over the frame.
double naturally_reductive_residual(const ReductiveDecomposition& d);

}  // namespace ssp

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "geom/connection.hpp"
#include "geom/form.hpp"
#include "lie/presentation.hpp"
#include "spinor/spinor.hpp"

namespace ssp {

/// Spin lift of a skew matrix: sum_{i<j} w_ij (1/2) e_i e_j acting on the
/// spin module, where w_ij is the coefficient on e_i ^ e_j.
MatrixXcd spin_lift(const MatrixXd& skew, const SpinorSpace& sp, double skew_tol = 1e-10);

/// Clifford action of a real form: sum_I c_I e_{i1}...e_{ik}.
Spinor clifford_form_apply(const Form& f, const Spinor& psi);
MatrixXcd clifford_form_matrix(const Form& f, const SpinorSpace& sp);

/// Clifford action of a tangent vector given by frame coefficients.
Spinor clifford_vector_apply(const VectorXd& v, const Spinor& psi);

/// Spinor module attached to a case decomposition (its dimension and the
/// ordering convention of the catalogue).
SpinorSpace spinor_space_of(const ReductiveDecomposition& d);

/// Joint kernel of the lifted isotropy operators. With trivial isotropy the
/// whole module is returned on its standard basis.
std::vector<Spinor> invariant_spinors(const ReductiveDecomposition& d, const SpinorSpace& sp,
                                      double tol);

/// nabla_{e_i} psi at the origin for the connection given by the Nomizu map.
Spinor spinor_covariant_derivative(const NomizuMap& nm, const SpinorSpace& sp, int i,
                                   const Spinor& psi);

enum class GKSMode { PerSummandScalar, FullSymmetric };

/// Least-squares fit of nabla^g psi = A(X).psi over the chosen endomorphism
/// block structure. Failure is reported in the result, not thrown.
struct GKSFit {
  bool success = false;
  std::vector<double> eigenvalues;  // one per summand in scalar mode
  MatrixXd endomorphism;            // full matrix on m
  double max_residual = 0;
  int worst_direction = -1;
};

GKSFit fit_generalized_killing(const ReductiveDecomposition& d, const NomizuMap& lc,
                               const SpinorSpace& sp, const Spinor& psi,
                               GKSMode mode = GKSMode::PerSummandScalar,
                               double rel_tol = 1e-7);

/// Same fit for a connection with totally skew torsion T:
/// nabla^s_X = nabla^g_X + (1/4) (X -| T) with Clifford action of the 2-form.
Spinor skew_torsion_spinor_derivative(const NomizuMap& lc, const SpinorSpace& sp, const Form& t,
                                      int i, const Spinor& psi);
GKSFit fit_generalized_killing_with_torsion(const ReductiveDecomposition& d, const NomizuMap& lc,
                                            const SpinorSpace& sp, const Form& t, const Spinor& psi,
                                            double rel_tol = 1e-7);

/// Friedrich-Kath space: joint kernel of
/// X -> (sign*2 phi(X) + xi.X - X.xi) . psi over the frame.
std::vector<Spinor> friedrich_kath_space(const ReductiveDecomposition& d, const SpinorSpace& sp,
                                         const VectorXd& xi, const MatrixXd& phi, int sign,
                                         double tol);

enum class SquaringNormalization { Plain, MinusTwo };

/// k-form from a unit spinor: w_(k)(e_I) = Re<e_I.psi, psi> (plain) or the
/// -2<.,.> convention for the distinguished 3-form.
Form squaring_form(const SpinorSpace& sp, const Spinor& psi, int k,
                   SquaringNormalization norm = SquaringNormalization::Plain);

/// G2-structure analysis of a unit generalized Killing spinor in dimension 7.
struct G2Report {
  Form omega;        // defining 3-form <X.Y.Z.psi, psi>
  Form star_omega;   // Hodge dual
  Form d_omega;      // exterior derivative
  Form d_star_omega;
  bool cocalibrated = false;
  bool nearly_parallel = false;
  double nearly_parallel_factor = 0;  // c with d omega = c * (star omega), if any
  Form characteristic_torsion;        // -(1/6)<d omega, *omega> omega + *d omega
  Tensor3 intrinsic_torsion;          // Gamma = -(2/3) A -| omega
  double char_connection_residual = 0;   // ||nabla^c psi|| over directions
  double intrinsic_parallel_residual = 0;  // ||(nabla^g - Gamma) psi||
  GKSFit fit;
};

G2Report g2_analysis(const ReductiveDecomposition& d, const NomizuMap& lc, const SpinorSpace& sp,
                     const Spinor& psi, double tol = 1e-8);

}  // namespace ssp

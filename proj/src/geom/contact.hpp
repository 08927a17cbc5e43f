#pragma once

#include <Eigen/Dense>

#include "geom/connection.hpp"
#include "geom/form.hpp"
#include "lie/presentation.hpp"

namespace ssp {

/// Almost contact metric structure data on the frame: Reeb vector,
/// endomorphism phi, fundamental 2-form Phi = g(.,phi .), dual 1-form eta.
struct AlmostContactReport {
  double metric_compat_residual = 0;   // g(phiX,phiY) = g(X,Y) - eta(X)eta(Y)
  double phi_square_residual = 0;      // phi^2 = -Id + eta (x) xi
  double normality_residual = 0;       // [phi,phi] + 2 d eta (x) xi = 0
  double alpha_contact_residual = 0;   // d eta = 2 alpha Phi
  double alpha_k_contact_residual = 0; // nabla^g xi = -alpha phi
  bool metric_compatible = false;
  bool normal = false;
  bool alpha_contact = false;
  bool alpha_k_contact = false;
  Form d_eta;
  Form Phi;
};

/// Verifies the almost contact conditions for a candidate (xi, phi, alpha).
/// xi must be a unit frame vector with phi(xi) = 0.
AlmostContactReport almost_contact_report(const ReductiveDecomposition& d, const NomizuMap& lc,
                                          const VectorXd& xi, const MatrixXd& phi, double alpha,
                                          double tol = 1e-8);

}  // namespace ssp

#include "geom/contact.hpp"

#include <stdexcept>

namespace ssp {

AlmostContactReport almost_contact_report(const ReductiveDecomposition& d, const NomizuMap& lc,
                                          const VectorXd& xi, const MatrixXd& phi, double alpha,
                                          double tol) {
  const int n = d.dim_m();
  if (xi.size() != n || phi.rows() != n || phi.cols() != n)
    throw std::invalid_argument("almost_contact_report: shape mismatch");
  if (std::abs(xi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("almost_contact_report: xi must be a unit vector");
  if ((phi * xi).norm() > 1e-9)
    throw std::invalid_argument("almost_contact_report: phi(xi) must vanish");

  AlmostContactReport rep;
  const MatrixXd id = MatrixXd::Identity(n, n);

  rep.metric_compat_residual = (phi.transpose() * phi - (id - xi * xi.transpose())).cwiseAbs().maxCoeff();
  rep.phi_square_residual = (phi * phi + id - xi * xi.transpose()).cwiseAbs().maxCoeff();

  // eta and Phi as forms; Phi(X,Y) = g(X, phi Y).
  Form eta(n, 1);
  for (int i = 0; i < n; ++i)
    if (xi(i) != 0.0) eta.add(1u << i, xi(i));
  Form Phi(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (phi(i, j) != 0.0) Phi.add((1u << i) | (1u << j), phi(i, j));
  rep.Phi = Phi;

  rep.d_eta = exterior_derivative_invariant(eta, lc, d);
  rep.alpha_contact_residual = (rep.d_eta - 2.0 * alpha * Phi).norm();

  for (int i = 0; i < n; ++i)
    rep.alpha_k_contact_residual =
        std::max(rep.alpha_k_contact_residual, (lc(i) * xi + alpha * phi.col(i)).norm());

  // Nijenhuis tensor via the torsion-free connection:
  // N(X,Y) = (nabla_{phiX} phi)Y - (nabla_{phiY} phi)X
  //          + phi (nabla_Y phi)X - phi (nabla_X phi)Y,
  // with (nabla_Z phi) = [Lambda(Z), phi] at the origin.
  std::vector<MatrixXd> dphi(n);  // [Lambda(e_i), phi]
  for (int i = 0; i < n; ++i) dphi[i] = lc(i) * phi - phi * lc(i);
  auto dphi_at = [&](const VectorXd& z) {
    MatrixXd m = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (z(i) != 0.0) m += z(i) * dphi[i];
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const VectorXd phi_ei = phi.col(i), phi_ej = phi.col(j);
      VectorXd nij = dphi_at(phi_ei) * id.col(j) - dphi_at(phi_ej) * id.col(i) +
                     phi * (dphi[j] * id.col(i)) - phi * (dphi[i] * id.col(j));
      // d eta here carries no 1/2 normalization, so it enters the normality
      // tensor with coefficient one.
      nij += rep.d_eta.eval({i + 1, j + 1}) * xi;
      rep.normality_residual = std::max(rep.normality_residual, nij.norm());
    }

  rep.metric_compatible = rep.metric_compat_residual < tol;
  rep.normal = rep.normality_residual < tol;
  rep.alpha_contact = rep.alpha_contact_residual < tol;
  rep.alpha_k_contact = rep.alpha_k_contact_residual < tol;
  return rep;
}

}  // namespace ssp

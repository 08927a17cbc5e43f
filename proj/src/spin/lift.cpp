#include "spin/lift.hpp"

#include <bit>
#include <stdexcept>

#include "core/kernel.hpp"

namespace ssp {

MatrixXcd spin_lift(const MatrixXd& skew, const SpinorSpace& sp, double skew_tol) {
  const int n = sp.n();
  if (skew.rows() != n || skew.cols() != n) throw std::invalid_argument("spin_lift: shape mismatch");
  const double scale = std::max(1.0, skew.cwiseAbs().maxCoeff());
  if ((skew + skew.transpose()).cwiseAbs().maxCoeff() > skew_tol * scale)
    throw std::invalid_argument("spin_lift: matrix is not skew");

  const int dim = sp.dim();
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double w = skew(j - 1, i - 1);  // coefficient on e_i ^ e_j
      if (w == 0.0) continue;
      for (uint32_t s = 0; s < static_cast<uint32_t>(dim); ++s) {
        auto [s1, c1] = clifford_basis_action(sp, j, s);
        auto [s2, c2] = clifford_basis_action(sp, i, s1);
        out(s2, s) += 0.5 * w * c1 * c2;
      }
    }
  return out;
}

Spinor clifford_form_apply(const Form& f, const Spinor& psi) {
  const SpinorSpace& sp = psi.space;
  if (f.n() != sp.n()) throw std::invalid_argument("clifford_form_apply: frame mismatch");
  Spinor out(sp);
  for (const auto& [mask, v] : f.terms()) {
    for (uint32_t s = 0; s < static_cast<uint32_t>(sp.dim()); ++s) {
      if (psi.coeffs(s) == cplx(0.0)) continue;
      uint32_t cur = s;
      cplx c = v * psi.coeffs(s);
      for (int i = f.n(); i >= 1; --i) {
        if (!(mask & (1u << (i - 1)))) continue;
        auto [nxt, ci] = clifford_basis_action(sp, i, cur);
        cur = nxt;
        c *= ci;
      }
      out.coeffs(cur) += c;
    }
  }
  return out;
}

MatrixXcd clifford_form_matrix(const Form& f, const SpinorSpace& sp) {
  const int dim = sp.dim();
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (const auto& [mask, v] : f.terms()) {
    for (uint32_t s = 0; s < static_cast<uint32_t>(dim); ++s) {
      uint32_t cur = s;
      cplx c = v;
      for (int i = f.n(); i >= 1; --i) {
        if (!(mask & (1u << (i - 1)))) continue;
        auto [nxt, ci] = clifford_basis_action(sp, i, cur);
        cur = nxt;
        c *= ci;
      }
      out(cur, s) += c;
    }
  }
  return out;
}

Spinor clifford_vector_apply(const VectorXd& v, const Spinor& psi) {
  const SpinorSpace& sp = psi.space;
  if (v.size() != sp.n()) throw std::invalid_argument("clifford_vector_apply: frame mismatch");
  Spinor out(sp);
  for (int i = 1; i <= sp.n(); ++i) {
    if (v(i - 1) == 0.0) continue;
    for (uint32_t s = 0; s < static_cast<uint32_t>(sp.dim()); ++s) {
      if (psi.coeffs(s) == cplx(0.0)) continue;
      auto [t, c] = clifford_basis_action(sp, i, s);
      out.coeffs(t) += v(i - 1) * c * psi.coeffs(s);
    }
  }
  return out;
}

SpinorSpace spinor_space_of(const ReductiveDecomposition& d) {
  return SpinorSpace(d.dim_m(), d.ordering);
}

std::vector<Spinor> invariant_spinors(const ReductiveDecomposition& d, const SpinorSpace& sp,
                                      double tol) {
  if (sp.n() != d.dim_m()) throw std::invalid_argument("invariant_spinors: dimension mismatch");
  std::vector<Spinor> out;
  if (d.dim_h() == 0) {  // trivial isotropy: the whole module
    for (int s = 0; s < sp.dim(); ++s) out.push_back(Spinor::basis(sp, s));
    return out;
  }
  std::vector<LinearMap> ops;
  ops.reserve(d.dim_h());
  for (int a = 0; a < d.dim_h(); ++a)
    ops.push_back(LinearMap::from_dense(spin_lift(d.isotropy_matrix(a), sp)));
  for (const auto& v : joint_kernel(ops, tol)) out.emplace_back(sp, v);
  return out;
}

Spinor spinor_covariant_derivative(const NomizuMap& nm, const SpinorSpace& sp, int i,
                                   const Spinor& psi) {
  return Spinor(sp, spin_lift(nm(i), sp) * psi.coeffs);
}

namespace {

GKSFit fit_from_derivatives(const ReductiveDecomposition& d, const SpinorSpace& sp,
                            const std::vector<VectorXcd>& derivs, const Spinor& psi, GKSMode mode,
                            double rel_tol) {
  const int n = d.dim_m();
  const int dim = sp.dim();
  std::vector<VectorXcd> cl(n);  // e_i . psi
  for (int i = 0; i < n; ++i) {
    VectorXcd w = VectorXcd::Zero(dim);
    for (uint32_t s = 0; s < static_cast<uint32_t>(dim); ++s) {
      if (psi.coeffs(s) == cplx(0.0)) continue;
      auto [t, c] = clifford_basis_action(sp, i + 1, s);
      w(t) += c * psi.coeffs(s);
    }
    cl[i] = w;
  }

  GKSFit fit;
  fit.endomorphism = MatrixXd::Zero(n, n);
  if (mode == GKSMode::PerSummandScalar) {
    for (size_t s = 0; s < d.summands.size(); ++s) {
      auto [b, e] = d.summands[s];
      double num = 0, den = 0;
      for (int i = b; i < e; ++i) {
        num += cl[i].dot(derivs[i]).real();
        den += cl[i].squaredNorm();
      }
      const double lambda = den > 0 ? num / den : 0.0;
      fit.eigenvalues.push_back(lambda);
      for (int i = b; i < e; ++i) fit.endomorphism(i, i) = lambda;
    }
  } else {
    // Least squares over symmetric A: sum_u A(u,i) e_u.psi = derivs[i].
    const int nu = n * (n + 1) / 2;
    auto unk = [n](int u, int v) {
      if (u > v) std::swap(u, v);
      return u * n - u * (u - 1) / 2 + (v - u);
    };
    MatrixXd lhs = MatrixXd::Zero(2 * dim * n, nu);
    VectorXd rhs(2 * dim * n);
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < dim; ++s) {
        rhs(2 * (i * dim + s)) = derivs[i](s).real();
        rhs(2 * (i * dim + s) + 1) = derivs[i](s).imag();
      }
      for (int u = 0; u < n; ++u)
        for (int s = 0; s < dim; ++s) {
          lhs(2 * (i * dim + s), unk(u, i)) += cl[u](s).real();
          lhs(2 * (i * dim + s) + 1, unk(u, i)) += cl[u](s).imag();
        }
    }
    VectorXd sol = lhs.colPivHouseholderQr().solve(rhs);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) fit.endomorphism(u, v) = sol(unk(u, v));
  }

  for (int i = 0; i < n; ++i) {
    VectorXcd model = VectorXcd::Zero(dim);
    for (int u = 0; u < n; ++u)
      if (fit.endomorphism(u, i) != 0.0) model += fit.endomorphism(u, i) * cl[u];
    const double r = (model - derivs[i]).norm();
    if (r > fit.max_residual) {
      fit.max_residual = r;
      fit.worst_direction = i;
    }
  }
  fit.success = fit.max_residual < rel_tol * psi.norm();
  return fit;
}

}  // namespace

GKSFit fit_generalized_killing(const ReductiveDecomposition& d, const NomizuMap& lc,
                               const SpinorSpace& sp, const Spinor& psi, GKSMode mode,
                               double rel_tol) {
  if (psi.norm() == 0.0) throw std::invalid_argument("fit_generalized_killing: zero spinor");
  std::vector<VectorXcd> derivs(d.dim_m());
  for (int i = 0; i < d.dim_m(); ++i) derivs[i] = spin_lift(lc(i), sp) * psi.coeffs;
  return fit_from_derivatives(d, sp, derivs, psi, mode, rel_tol);
}

Spinor skew_torsion_spinor_derivative(const NomizuMap& lc, const SpinorSpace& sp, const Form& t,
                                      int i, const Spinor& psi) {
  if (t.degree() != 3) throw std::invalid_argument("skew torsion must be a 3-form");
  Spinor out = spinor_covariant_derivative(lc, sp, i, psi);
  Form it = interior(i + 1, t);
  Spinor corr = clifford_form_apply(it, psi);
  out.coeffs += 0.25 * corr.coeffs;
  return out;
}

GKSFit fit_generalized_killing_with_torsion(const ReductiveDecomposition& d, const NomizuMap& lc,
                                            const SpinorSpace& sp, const Form& t, const Spinor& psi,
                                            double rel_tol) {
  if (psi.norm() == 0.0) throw std::invalid_argument("fit: zero spinor");
  std::vector<VectorXcd> derivs(d.dim_m());
  for (int i = 0; i < d.dim_m(); ++i)
    derivs[i] = skew_torsion_spinor_derivative(lc, sp, t, i, psi).coeffs;
  return fit_from_derivatives(d, sp, derivs, psi, GKSMode::PerSummandScalar, rel_tol);
}

std::vector<Spinor> friedrich_kath_space(const ReductiveDecomposition& d, const SpinorSpace& sp,
                                         const VectorXd& xi, const MatrixXd& phi, int sign,
                                         double tol) {
  const int n = d.dim_m();
  if (std::abs(xi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("friedrich_kath_space: xi must be a unit vector");
  if ((phi * xi).norm() > 1e-9)
    throw std::invalid_argument("friedrich_kath_space: phi(xi) must vanish");
  const int dim = sp.dim();

  // Clifford matrices of the frame and of xi.
  std::vector<MatrixXcd> cl(n);
  for (int i = 0; i < n; ++i) cl[i] = clifford_matrix(sp, i + 1);
  MatrixXcd cxi = MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < n; ++i)
    if (xi(i) != 0.0) cxi += xi(i) * cl[i];

  std::vector<LinearMap> ops;
  ops.reserve(n);
  for (int j = 0; j < n; ++j) {
    MatrixXcd phi_x = MatrixXcd::Zero(dim, dim);
    for (int u = 0; u < n; ++u)
      if (phi(u, j) != 0.0) phi_x += phi(u, j) * cl[u];
    MatrixXcd op = 2.0 * sign * phi_x + cxi * cl[j] - cl[j] * cxi;
    ops.push_back(LinearMap::from_dense(std::move(op)));
  }
  std::vector<Spinor> out;
  for (const auto& v : joint_kernel(ops, tol)) out.emplace_back(sp, v);
  return out;
}

Form squaring_form(const SpinorSpace& sp, const Spinor& psi, int k, SquaringNormalization norm) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("squaring_form: spinor must have unit norm");
  const int n = sp.n();
  Form out(n, k);
  const double factor = (norm == SquaringNormalization::MinusTwo) ? -2.0 : 1.0;
  for (uint32_t mask : form_basis_masks(n, k)) {
    // e_I . psi accumulated monomial-by-monomial.
    VectorXcd w = psi.coeffs;
    for (int i = n; i >= 1; --i) {
      if (!(mask & (1u << (i - 1)))) continue;
      VectorXcd nxt = VectorXcd::Zero(sp.dim());
      for (uint32_t s = 0; s < static_cast<uint32_t>(sp.dim()); ++s) {
        if (w(s) == cplx(0.0)) continue;
        auto [t, c] = clifford_basis_action(sp, i, s);
        nxt(t) += c * w(s);
      }
      w.swap(nxt);
    }
    const double v = factor * psi.coeffs.dot(w).real();
    // <e_I psi, psi> = conj(<psi, e_I psi>); the real part is symmetric.
    if (v != 0.0) out.add(mask, v);
  }
  return out.prune(1e-12);
}

G2Report g2_analysis(const ReductiveDecomposition& d, const NomizuMap& lc, const SpinorSpace& sp,
                     const Spinor& psi, double tol) {
  if (d.dim_m() != 7) throw std::invalid_argument("g2_analysis: needs dimension 7");
  G2Report rep;
  rep.fit = fit_generalized_killing(d, lc, sp, psi, GKSMode::PerSummandScalar);
  if (!rep.fit.success) throw std::invalid_argument("g2_analysis: spinor is not generalized Killing");

  rep.omega = squaring_form(sp, psi, 3);
  rep.star_omega = hodge_star(rep.omega);
  rep.d_omega = exterior_derivative_invariant(rep.omega, lc, d);
  rep.d_star_omega = exterior_derivative_invariant(rep.star_omega, lc, d);

  const double scale = std::max(1.0, rep.omega.norm());
  rep.cocalibrated = rep.d_star_omega.norm() < tol * scale;
  const double denom = Form::inner(rep.star_omega, rep.star_omega);
  const double c = denom > 0 ? Form::inner(rep.d_omega, rep.star_omega) / denom : 0.0;
  Form residual = rep.d_omega - c * rep.star_omega;
  rep.nearly_parallel = residual.norm() < tol * std::max(1.0, rep.d_omega.norm()) && std::abs(c) > tol;
  rep.nearly_parallel_factor = c;

  rep.characteristic_torsion =
      (-Form::inner(rep.d_omega, rep.star_omega) / 6.0) * rep.omega + hodge_star(rep.d_omega);
  rep.characteristic_torsion.prune();

  // Gamma(X,Y,Z) = -(2/3) omega(A X, Y, Z)
  const MatrixXd& A = rep.fit.endomorphism;
  Tensor3 gamma(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        double s = 0;
        for (int u = 0; u < 7; ++u)
          if (A(u, i) != 0.0) s += A(u, i) * rep.omega.eval({u + 1, j + 1, k + 1});
        gamma(i, j, k) = -2.0 / 3.0 * s;
      }
  rep.intrinsic_torsion = gamma;

  double worst_n = 0, worst_c = 0;
  for (int i = 0; i < 7; ++i) {
    MatrixXd gi(7, 7);
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) gi(k, j) = gamma(i, j, k);
    Spinor nabla_n = spinor_covariant_derivative(lc, sp, i, psi);
    nabla_n.coeffs -= spin_lift(gi, sp) * psi.coeffs;
    worst_n = std::max(worst_n, nabla_n.norm());
    worst_c = std::max(
        worst_c, skew_torsion_spinor_derivative(lc, sp, rep.characteristic_torsion, i, psi).norm());
  }
  rep.intrinsic_parallel_residual = worst_n;
  rep.char_connection_residual = worst_c;
  return rep;
}

}  // namespace ssp

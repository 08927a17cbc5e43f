#include "geom/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace ssp {

double Tensor3::max_abs() const {
  double m = 0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Tensor3::norm() const {
  double s = 0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Tensor3::inner(const Tensor3& a, const Tensor3& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Tensor3: shape mismatch");
  double s = 0;
  for (size_t i = 0; i < a.a_.size(); ++i) s += a.a_[i] * b.a_[i];
  return s;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 t = *this;
  for (double& v : t.a_) v = -v;
  return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (n_ != o.n_) throw std::invalid_argument("Tensor3: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (n_ != o.n_) throw std::invalid_argument("Tensor3: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3 operator*(double s, Tensor3 t) {
  for (double& v : t.a_) v *= s;
  return t;
}

MatrixXd NomizuMap::at(const VectorXd& x) const {
  const int n = dim();
  if (x.size() != n) throw std::invalid_argument("NomizuMap: direction dimension mismatch");
  MatrixXd m = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (x(i) != 0.0) m += x(i) * lam[i];
  return m;
}

NomizuMap nomizu_zero(int dim) {
  NomizuMap nm;
  nm.lam.assign(dim, MatrixXd::Zero(dim, dim));
  return nm;
}

NomizuMap nomizu_levi_civita(const ReductiveDecomposition& d) {
  const int n = d.dim_m();
  NomizuMap nm;
  nm.lam.reserve(n);
  // g(Lambda(e_i)e_j, e_k) = c(i,j,k)/2 + (c(k,i,j) + c(k,j,i))/2
  for (int i = 0; i < n; ++i) {
    MatrixXd m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m(k, j) = 0.5 * (d.c_m(i, j, k) + d.c_m(k, i, j) + d.c_m(k, j, i));
    nm.lam.push_back(std::move(m));
  }
  return nm;
}

Tensor3 torsion_at_origin(const NomizuMap& nm, const ReductiveDecomposition& d) {
  const int n = d.dim_m();
  if (nm.dim() != n) throw std::invalid_argument("torsion_at_origin: dimension mismatch");
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = nm(i)(k, j) - nm(j)(k, i) - d.c_m(i, j, k);
  return t;
}

MatrixXd curvature_at_origin(const NomizuMap& nm, const ReductiveDecomposition& d,
                             const VectorXd& x, const VectorXd& y) {
  const int n = d.dim_m();
  MatrixXd lx = nm.at(x), ly = nm.at(y);
  VectorXd br_m = VectorXd::Zero(n);
  VectorXd br_h = VectorXd::Zero(std::max(d.dim_h(), 1));
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    br_m += x(i) * (d.bracket_m_matrix(i) * y);
    if (d.dim_h())
      for (int j = 0; j < n; ++j)
        if (y(j) != 0.0) br_h += x(i) * y(j) * d.bracket_h_coeff(i, j);
  }
  MatrixXd r = lx * ly - ly * lx - nm.at(br_m);
  for (int a = 0; a < d.dim_h(); ++a)
    if (br_h(a) != 0.0) r -= br_h(a) * d.isotropy_matrix(a);
  return r;
}

Tensor3 torsion_to_difference(const Tensor3& t) {
  const int n = t.n();
  Tensor3 a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a(i, j, k) = 0.5 * (t(i, j, k) - t(j, k, i) + t(k, i, j));
  return a;
}

Tensor3 difference_to_torsion(const Tensor3& a) {
  const int n = a.n();
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = a(i, j, k) - a(j, i, k);
  return t;
}

TorsionClasses torsion_class_decompose(const Tensor3& t, double tol) {
  const int n = t.n();
  if (n < 3) throw std::invalid_argument("torsion_class_decompose: needs dimension >= 3");
  const Tensor3 a = torsion_to_difference(t);

  VectorXd phi = VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += a(i, i, k);
    phi(k) = s / (n - 1);
  }
  Tensor3 a_vec(n), a_skew(n), a_ct(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        a_vec(i, j, k) = (i == j ? phi(k) : 0.0) - (i == k ? phi(j) : 0.0);
        a_skew(i, j, k) = (a(i, j, k) + a(j, k, i) + a(k, i, j)) / 3.0;
        a_ct(i, j, k) = a(i, j, k) - a_vec(i, j, k) - a_skew(i, j, k);
      }

  TorsionClasses out;
  out.vectorial = difference_to_torsion(a_vec);
  out.skew = difference_to_torsion(a_skew);
  out.cyclic_traceless = difference_to_torsion(a_ct);
  out.norm_vec = out.vectorial.norm();
  out.norm_skew = out.skew.norm();
  out.norm_ct = out.cyclic_traceless.norm();

  const double scale = std::max(t.norm(), 1.0);
  std::string label;
  if (out.norm_vec > tol * scale) label += "vec";
  if (out.norm_skew > tol * scale) label += label.empty() ? "skew" : "+skew";
  if (out.norm_ct > tol * scale) label += label.empty() ? "ct" : "+ct";
  out.label = label.empty() ? "zero" : label;
  return out;
}

Form tensor_to_form3(const Tensor3& t) {
  const int n = t.n();
  Form f(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double v = t(i, j, k);
        if (v != 0.0) f.add((1u << i) | (1u << j) | (1u << k), v);
      }
  return f;
}

Tensor3 form3_to_tensor(const Form& f) {
  if (f.degree() != 3) throw std::invalid_argument("form3_to_tensor: degree must be 3");
  Tensor3 t(f.n());
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f.n(); ++j)
      for (int k = 0; k < f.n(); ++k) {
        if (i == j || j == k || i == k) continue;
        t(i, j, k) = f.eval({i + 1, j + 1, k + 1});
      }
  return t;
}

double form_invariance_residual(const Form& f, const ReductiveDecomposition& d) {
  double worst = 0;
  for (int a = 0; a < d.dim_h(); ++a)
    worst = std::max(worst, form_action_apply(d.isotropy_matrix(a), f).norm());
  return worst;
}

Form exterior_derivative_invariant(const Form& f, const NomizuMap& lc,
                                   const ReductiveDecomposition& d, double tol) {
  if (f.n() != d.dim_m()) throw std::invalid_argument("exterior_derivative: frame mismatch");
  const double inv_res = form_invariance_residual(f, d);
  if (inv_res > tol * std::max(1.0, f.norm()))
    throw std::invalid_argument("exterior_derivative_invariant: form is not invariant");
  Form out(f.n(), f.degree() + 1);
  for (int i = 0; i < d.dim_m(); ++i) {
    Form ei(f.n(), 1);
    ei.add(1u << i, 1.0);
    out += wedge(ei, form_action_apply(lc(i), f));
  }
  return out.prune();
}

double naturally_reductive_residual(const ReductiveDecomposition& d) {
  const int n = d.dim_m();
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(d.c_m(i, j, k) + d.c_m(i, k, j)));
  return worst;
}

}  // namespace ssp

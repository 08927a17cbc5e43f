#include "lie/elements.hpp"

#include <stdexcept>

namespace ssp {

QMatrix elementary(int i, int j, int n, ElementaryKind kind, std::optional<Quat> lambda) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("elementary: index out of range");
  ScalarKind sk = ScalarKind::Real;
  if (lambda) {
    if (!lambda->is_real()) sk = lambda->is_complex() ? ScalarKind::Complex : ScalarKind::Quaternion;
  }
  QMatrix m(n, n, sk);
  const Quat s = lambda.value_or(Quat(1.0));
  if (kind == ElementaryKind::E) {
    if (i == j) throw std::invalid_argument("elementary: E_{i,i} undefined");
    m(i - 1, j - 1) = -s;
    m(j - 1, i - 1) = s;
  } else {
    if (i == j) {
      m(i - 1, i - 1) = s;
    } else {
      m(i - 1, j - 1) = s;
      m(j - 1, i - 1) = s;
    }
  }
  return m;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return {commutator(a.primary, b.primary), commutator(a.aux, b.aux)};
}

double kappa_product(const AlgebraElement& a, const AlgebraElement& b) {
  const int n = a.primary.rows();
  return -4.0 * (n + 1) * b0_form(a.primary, b.primary) + 8.0 * (a.aux * b.aux).re();
}

Eigen::VectorXd flatten(const AlgebraElement& a) {
  const int n = a.primary.rows(), m = a.primary.cols();
  Eigen::VectorXd v(4 * n * m + 4);
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Quat& q = a.primary(i, j);
      v(t++) = q.w;
      v(t++) = q.x;
      v(t++) = q.y;
      v(t++) = q.z;
    }
  v(t++) = a.aux.w;
  v(t++) = a.aux.x;
  v(t++) = a.aux.y;
  v(t++) = a.aux.z;
  return v;
}

}  // namespace ssp

#include "core/qmatrix.hpp"

#include <algorithm>
#include <ostream>

#include "core/quaternion.hpp"

namespace ssp {

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  os << q.w;
  if (q.x) os << (q.x > 0 ? "+" : "") << q.x << "i";
  if (q.y) os << (q.y > 0 ? "+" : "") << q.y << "j";
  if (q.z) os << (q.z > 0 ? "+" : "") << q.z << "k";
  return os;
}

Scalar quaternion_mul(const Scalar& p, const Scalar& q) {
  if (p.kind != ScalarKind::Quaternion || q.kind != ScalarKind::Quaternion)
    throw std::invalid_argument("quaternion_mul: kind mismatch");
  return {ScalarKind::Quaternion, p.value * q.value};
}

QMatrix QMatrix::operator-() const {
  QMatrix r = *this;
  for (auto& q : r.a_) q = -q;
  return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("QMatrix: dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("QMatrix: dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

QMatrix operator*(double s, QMatrix m) {
  for (auto& q : m.a_) q = s * q;
  return m;
}

QMatrix operator*(const Quat& s, QMatrix m) {
  for (auto& q : m.a_) q = s * q;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.rows_, b.cols_, std::max(a.kind_, b.kind_));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Quat& aik = a(i, k);
      if (aik.norm2() == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

QMatrix QMatrix::conj_transpose() const {
  QMatrix r(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

Quat QMatrix::trace() const {
  Quat t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : a_) m = std::max(m, q.norm());
  return m;
}

double QMatrix::dist(const QMatrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("QMatrix: dimension mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, (a_[i] - o.a_[i]).norm());
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  if (!a.same_shape(b) || a.rows() != a.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

double b0_form(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("b0_form: dimension mismatch");
  // -Re tr(AB) without forming AB.
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) s += (a(i, k) * b(k, i)).re();
  return -s;
}

}  // namespace ssp

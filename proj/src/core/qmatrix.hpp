#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "core/quaternion.hpp"

namespace ssp {

/// Dense matrix with quaternion entries and a declared scalar kind.
/// Real and complex matrices are stored in the same container; the kind tag
/// is used to reject mixed-kind arithmetic at the API boundary.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols, ScalarKind kind = ScalarKind::Real)
      : rows_(rows), cols_(cols), kind_(kind), a_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("QMatrix: non-positive dimension");
  }

  static QMatrix zero(int n, ScalarKind kind = ScalarKind::Real) { return QMatrix(n, n, kind); }
  static QMatrix identity(int n, ScalarKind kind = ScalarKind::Real) {
    QMatrix m(n, n, kind);
    for (int i = 0; i < n; ++i) m(i, i) = Quat(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ScalarKind kind() const { return kind_; }

  Quat& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Quat& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool same_shape(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(double s, QMatrix m);
  friend QMatrix operator*(const Quat& s, QMatrix m);  // left scalar multiple
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  QMatrix transpose() const;
  QMatrix conj_transpose() const;

  Quat trace() const;
  double max_abs() const;

  /// Largest entry magnitude of (this - o); matrices must share shape.
  double dist(const QMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  ScalarKind kind_ = ScalarKind::Real;
  std::vector<Quat> a_;
};

/// AB - BA; dimensions and kinds must agree.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// B_0(A,B) = -Re tr(AB), the symmetric real pairing used throughout.
double b0_form(const QMatrix& a, const QMatrix& b);

}  // namespace ssp

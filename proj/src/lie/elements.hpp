#pragma once

#include <Eigen/Dense>
#include <optional>

#include "core/qmatrix.hpp"

namespace ssp {

enum class ElementaryKind { E, F };

/// Elementary skew matrix E_{i,j} (entry (i,j) = -1, (j,i) = +1) or symmetric
/// F_{i,j} (both entries +1; F_{i,i} is the diagonal unit). Indices 1-based.
/// An optional scalar factor lambda produces e.g. the quaternionic iF_{p,q}.
QMatrix elementary(int i, int j, int n, ElementaryKind kind,
                   std::optional<Quat> lambda = std::nullopt);

/// Lie algebra element of one of the transitive sphere groups. For the
/// product groups Sp(n)Sp(1) and Sp(n)U(1) the second factor is carried as
/// an imaginary quaternion next to the matrix part; plain groups leave it 0.
struct AlgebraElement {
  QMatrix primary;
  Quat aux{};

  AlgebraElement() = default;
  explicit AlgebraElement(QMatrix m) : primary(std::move(m)) {}
  AlgebraElement(QMatrix m, Quat z) : primary(std::move(m)), aux(z) {}

  AlgebraElement operator-() const { return {-primary, -aux}; }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.primary + b.primary, a.aux + b.aux};
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.primary - b.primary, a.aux - b.aux};
  }
  friend AlgebraElement operator*(double s, const AlgebraElement& a) {
    return {s * a.primary, s * a.aux};
  }
  double max_abs() const { return std::max(primary.max_abs(), aux.norm()); }
};

/// Componentwise bracket ([A,A'], zz' - z'z).
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// kappa((A,z),(A',z')) = -4(n+1) B_0(A,A') + 8 Re(zz') with n the matrix
/// size; the Killing form of sp(n) + sp(1).
double kappa_product(const AlgebraElement& a, const AlgebraElement& b);

/// Real coordinates (4 per matrix entry plus 4 for the aux part); used to
/// expand elements in a chosen basis of the ambient algebra.
Eigen::VectorXd flatten(const AlgebraElement& a);

}  // namespace ssp

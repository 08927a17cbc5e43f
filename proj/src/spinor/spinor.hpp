#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace ssp {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cplx = std::complex<double>;

enum class BasisOrdering { Standard, Reordered };

/// Complex spin module Sigma = Lambda^* L' for R^n, realized on coefficient
/// vectors indexed by subsets of {1..l}, l = floor(n/2): bit j-1 set means
/// y_j is present in the wedge monomial (indices ascending).
///
/// Standard ordering pairs (e_{2j-1}, e_{2j}) into (x_j, y_j) and, for odd n,
/// sends the last vector e_n to the scalar u_0 = i e_n. Reordered pairs
/// (e_{2j}, e_{2j+1}) and uses u_0 = i e_1; it applies to all odd-dimensional
/// cases in the catalogue. u0_sign = -1 keeps the default action
/// u_0 = -Id on even / +Id on odd degrees; +1 selects the opposite
/// irreducible representation.
class SpinorSpace {
 public:
  SpinorSpace(int n, BasisOrdering ordering, int u0_sign = -1);

  int n() const { return n_; }
  int l() const { return l_; }
  int dim() const { return 1 << l_; }
  bool odd() const { return n_ % 2 == 1; }
  BasisOrdering ordering() const { return ordering_; }
  int u0_sign() const { return u0_sign_; }

  bool operator==(const SpinorSpace& o) const {
    return n_ == o.n_ && ordering_ == o.ordering_ && u0_sign_ == o.u0_sign_;
  }

 private:
  int n_, l_;
  BasisOrdering ordering_;
  int u0_sign_;
};

/// Element of the spin module as a coefficient vector over the subset basis.
struct Spinor {
  SpinorSpace space;
  VectorXcd coeffs;

  explicit Spinor(const SpinorSpace& sp) : space(sp), coeffs(VectorXcd::Zero(sp.dim())) {}
  Spinor(const SpinorSpace& sp, VectorXcd c);

  /// Basis monomial y_{j1}^...^y_{jp} from a bitmask (bit j-1 <-> y_j).
  static Spinor basis(const SpinorSpace& sp, uint32_t mask, cplx coeff = 1.0);

  double norm() const { return coeffs.norm(); }
  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(cplx s, Spinor a) { a.coeffs *= s; return a; }
};

enum class IsotropicKind { XInterior, YWedge, U0 };

/// Sign (+1/-1) picked up when inserting or removing y_j at bit j-1 of mask:
/// parity of the set bits below j-1.
int wedge_sign(uint32_t mask, int bit);

/// Exterior product of coefficient vectors (used to build reference spinors
/// such as powers of the symplectic 2-form).
VectorXcd exterior_mul(int l, const VectorXcd& a, const VectorXcd& b);

/// Action of the isotropic generators: x_j.psi = i sqrt2 x_j -| psi,
/// y_j.psi = i sqrt2 y_j ^ psi, u_0 = -Id|even + Id|odd (default sign).
Spinor clifford_isotropic(const SpinorSpace& sp, IsotropicKind kind, int j, const Spinor& psi);

/// Clifford action of the real orthonormal basis vector e_i, 1 <= i <= n.
Spinor clifford_real(const SpinorSpace& sp, int i, const Spinor& psi);

/// In-place form on raw coefficient vectors (hot path for operator assembly).
void clifford_real_apply(const SpinorSpace& sp, int i, const VectorXcd& in, VectorXcd& out);

/// Matrix of e_i in the tensor-product realization (standard ordering only);
/// agrees entrywise with clifford_real on the subset basis.
MatrixXcd kronecker_matrix(const SpinorSpace& sp, int i);

/// Hermitian inner product, conjugate-linear in the first slot.
cplx hermitian_inner(const Spinor& a, const Spinor& b);

/// Left-to-right Clifford product e_{i1}...e_{ik}.psi for a strictly
/// increasing index set.
Spinor multivector_apply(const SpinorSpace& sp, const std::vector<int>& idx, const Spinor& psi);

/// Dense matrix of the Clifford action of e_i.
MatrixXcd clifford_matrix(const SpinorSpace& sp, int i);

/// Action of e_i on a single basis monomial; every generator maps a monomial
/// to exactly one monomial. Returns the target mask and coefficient.
std::pair<uint32_t, cplx> clifford_basis_action(const SpinorSpace& sp, int i, uint32_t mask);

}  // namespace ssp

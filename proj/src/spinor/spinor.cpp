#include "spinor/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace ssp {

namespace {
constexpr cplx I{0.0, 1.0};
const double SQRT2 = std::sqrt(2.0);
}  // namespace

SpinorSpace::SpinorSpace(int n, BasisOrdering ordering, int u0_sign)
    : n_(n), l_(n / 2), ordering_(ordering), u0_sign_(u0_sign) {
  if (n < 1) throw std::invalid_argument("SpinorSpace: dimension must be positive");
  if (ordering == BasisOrdering::Reordered && n % 2 == 0)
    throw std::invalid_argument("SpinorSpace: reordered basis needs odd dimension");
  if (u0_sign != 1 && u0_sign != -1) throw std::invalid_argument("SpinorSpace: u0_sign must be +-1");
}

Spinor::Spinor(const SpinorSpace& sp, VectorXcd c) : space(sp), coeffs(std::move(c)) {
  if (coeffs.size() != sp.dim()) throw std::invalid_argument("Spinor: coefficient length mismatch");
}

Spinor Spinor::basis(const SpinorSpace& sp, uint32_t mask, cplx coeff) {
  if (mask >= (1u << sp.l())) throw std::invalid_argument("Spinor: basis mask out of range");
  Spinor s(sp);
  s.coeffs(mask) = coeff;
  return s;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  if (!(space == o.space)) throw std::invalid_argument("Spinor: space mismatch");
  coeffs += o.coeffs;
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  if (!(space == o.space)) throw std::invalid_argument("Spinor: space mismatch");
  coeffs -= o.coeffs;
  return *this;
}

int wedge_sign(uint32_t mask, int bit) {
  uint32_t below = mask & ((1u << bit) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

VectorXcd exterior_mul(int l, const VectorXcd& a, const VectorXcd& b) {
  const int dim = 1 << l;
  VectorXcd out = VectorXcd::Zero(dim);
  for (int sa = 0; sa < dim; ++sa) {
    if (a(sa) == cplx(0.0)) continue;
    for (int sb = 0; sb < dim; ++sb) {
      if (b(sb) == cplx(0.0) || (sa & sb)) continue;
      // Sign of merging sb past sa: count inversions between the two masks.
      int inv = 0;
      for (int bit = 0; bit < l; ++bit)
        if (sb & (1 << bit)) inv += std::popcount(static_cast<uint32_t>(sa) >> (bit + 1));
      out(sa | sb) += ((inv & 1) ? -1.0 : 1.0) * a(sa) * b(sb);
    }
  }
  return out;
}

namespace {

// out += c * (x_j -| in)
void interior_acc(int l, int j, cplx c, const VectorXcd& in, VectorXcd& out) {
  const int bit = j - 1;
  const int dim = 1 << l;
  for (int s = 0; s < dim; ++s) {
    if (!(s & (1 << bit))) continue;
    if (in(s) == cplx(0.0)) continue;
    out(s & ~(1 << bit)) += c * double(wedge_sign(s, bit)) * in(s);
  }
}

// out += c * (y_j ^ in)
void wedge_acc(int l, int j, cplx c, const VectorXcd& in, VectorXcd& out) {
  const int bit = j - 1;
  const int dim = 1 << l;
  for (int s = 0; s < dim; ++s) {
    if (s & (1 << bit)) continue;
    if (in(s) == cplx(0.0)) continue;
    out(s | (1 << bit)) += c * double(wedge_sign(s, bit)) * in(s);
  }
}

// out += c_even/c_odd * in, split by degree parity
void parity_acc(int l, cplx c_even, cplx c_odd, const VectorXcd& in, VectorXcd& out) {
  const int dim = 1 << l;
  for (int s = 0; s < dim; ++s)
    out(s) += ((std::popcount(static_cast<uint32_t>(s)) & 1) ? c_odd : c_even) * in(s);
}

}  // namespace

Spinor clifford_isotropic(const SpinorSpace& sp, IsotropicKind kind, int j, const Spinor& psi) {
  if (!(psi.space == sp)) throw std::invalid_argument("clifford_isotropic: space mismatch");
  Spinor out(sp);
  switch (kind) {
    case IsotropicKind::XInterior:
      if (j < 1 || j > sp.l()) throw std::invalid_argument("clifford_isotropic: index out of range");
      interior_acc(sp.l(), j, I * SQRT2, psi.coeffs, out.coeffs);
      break;
    case IsotropicKind::YWedge:
      if (j < 1 || j > sp.l()) throw std::invalid_argument("clifford_isotropic: index out of range");
      wedge_acc(sp.l(), j, I * SQRT2, psi.coeffs, out.coeffs);
      break;
    case IsotropicKind::U0: {
      if (!sp.odd()) throw std::invalid_argument("clifford_isotropic: u0 needs odd dimension");
      const double s = sp.u0_sign();
      parity_acc(sp.l(), cplx(s), cplx(-s), psi.coeffs, out.coeffs);
      break;
    }
  }
  return out;
}

void clifford_real_apply(const SpinorSpace& sp, int i, const VectorXcd& in, VectorXcd& out) {
  if (i < 1 || i > sp.n()) throw std::invalid_argument("clifford_real: index out of range");
  const int l = sp.l();
  bool scalar_slot;
  int j = 0;
  bool first_of_pair = false;
  if (sp.ordering() == BasisOrdering::Standard) {
    scalar_slot = sp.odd() && i == sp.n();
    if (!scalar_slot) {
      j = (i + 1) / 2;
      first_of_pair = (i % 2 == 1);
    }
  } else {
    scalar_slot = (i == 1);
    if (!scalar_slot) {
      j = i / 2;
      first_of_pair = (i % 2 == 0);
    }
  }
  if (scalar_slot) {
    // e = -i u_0: +i on even, -i on odd degrees for the default u0_sign.
    const cplx c = -I * cplx(double(sp.u0_sign()));
    parity_acc(l, c, -c, in, out);
  } else if (first_of_pair) {
    // i (x_j -| + y_j ^)
    interior_acc(l, j, I, in, out);
    wedge_acc(l, j, I, in, out);
  } else {
    // y_j ^ - x_j -|
    wedge_acc(l, j, 1.0, in, out);
    interior_acc(l, j, -1.0, in, out);
  }
}

Spinor clifford_real(const SpinorSpace& sp, int i, const Spinor& psi) {
  if (!(psi.space == sp)) throw std::invalid_argument("clifford_real: space mismatch");
  Spinor out(sp);
  clifford_real_apply(sp, i, psi.coeffs, out.coeffs);
  return out;
}

MatrixXcd clifford_matrix(const SpinorSpace& sp, int i) {
  const int dim = sp.dim();
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  VectorXcd in = VectorXcd::Zero(dim), out(dim);
  for (int s = 0; s < dim; ++s) {
    in(s) = 1.0;
    out.setZero();
    clifford_real_apply(sp, i, in, out);
    m.col(s) = out;
    in(s) = 0.0;
  }
  return m;
}

MatrixXcd kronecker_matrix(const SpinorSpace& sp, int i) {
  if (sp.ordering() != BasisOrdering::Standard)
    throw std::invalid_argument("kronecker_matrix: standard ordering only");
  if (i < 1 || i > sp.n()) throw std::invalid_argument("kronecker_matrix: index out of range");
  const int l = sp.l();
  const int dim = sp.dim();

  // 2x2 factors per tensor slot; slot j acts on bit j-1.
  using M2 = Eigen::Matrix2cd;
  M2 H, Id2, P, Q;
  H << 1, 0, 0, -1;
  Id2.setIdentity();
  P << 0, 1, 1, 0;   // e_{2j-1} block, scaled by i below
  Q << 0, -1, 1, 0;  // e_{2j} block

  std::vector<M2> factor(l, Id2);
  cplx scale = 1.0;
  if (sp.odd() && i == sp.n()) {
    for (int m = 0; m < l; ++m) factor[m] = H;
    scale = cplx(0, -double(sp.u0_sign()));  // e_n = -i u_0, u_0 -> u0_sign * H^{otimes l}
  } else {
    const int j = (i + 1) / 2;
    for (int m = 0; m < j - 1; ++m) factor[m] = H;
    if (i % 2 == 1) {
      factor[j - 1] = P;
      scale = cplx(0, 1);
    } else {
      factor[j - 1] = Q;
    }
  }

  MatrixXcd out(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      cplx v = scale;
      for (int m = 0; m < l && v != cplx(0.0); ++m) v *= factor[m]((r >> m) & 1, (c >> m) & 1);
      out(r, c) = v;
    }
  return out;
}

cplx hermitian_inner(const Spinor& a, const Spinor& b) {
  if (!(a.space == b.space)) throw std::invalid_argument("hermitian_inner: space mismatch");
  return a.coeffs.dot(b.coeffs);  // Eigen dot conjugates the first argument
}

std::pair<uint32_t, cplx> clifford_basis_action(const SpinorSpace& sp, int i, uint32_t mask) {
  if (i < 1 || i > sp.n()) throw std::invalid_argument("clifford_basis_action: index out of range");
  bool scalar_slot;
  int j = 0;
  bool first_of_pair = false;
  if (sp.ordering() == BasisOrdering::Standard) {
    scalar_slot = sp.odd() && i == sp.n();
    if (!scalar_slot) {
      j = (i + 1) / 2;
      first_of_pair = (i % 2 == 1);
    }
  } else {
    scalar_slot = (i == 1);
    if (!scalar_slot) {
      j = i / 2;
      first_of_pair = (i % 2 == 0);
    }
  }
  if (scalar_slot) {
    const bool odd_degree = std::popcount(mask) & 1;
    const cplx c = -I * cplx(double(sp.u0_sign()));
    return {mask, odd_degree ? -c : c};
  }
  const int bit = j - 1;
  const double sgn = wedge_sign(mask, bit);
  if (first_of_pair) {  // i (x_j -| + y_j ^)
    if (mask & (1u << bit)) return {mask & ~(1u << bit), I * sgn};
    return {mask | (1u << bit), I * sgn};
  }
  // y_j ^ - x_j -|
  if (mask & (1u << bit)) return {mask & ~(1u << bit), cplx(-sgn)};
  return {mask | (1u << bit), cplx(sgn)};
}

Spinor multivector_apply(const SpinorSpace& sp, const std::vector<int>& idx, const Spinor& psi) {
  for (size_t t = 1; t < idx.size(); ++t)
    if (idx[t] <= idx[t - 1])
      throw std::invalid_argument("multivector_apply: indices must be strictly increasing");
  Spinor out = psi;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) out = clifford_real(sp, *it, out);
  return out;
}

}  // namespace ssp

#pragma once

#include <vector>

#include "lie/elements.hpp"

namespace ssp {

/// Real 8x8 generators rho(eps_1)..rho(eps_7) of the Clifford action on the
/// real spinor module R^8: they anticommute and square to -Id.
QMatrix appendix_rho(int i);

/// B_0-orthonormal bases assembled from products rho(eps_i) rho(eps_j):
///   nu[0..13]        basis of g_2 (first 8 spanning su(3)),
///   nu_spin7[0..6]   completion nu'_15..nu'_21 to spin(7) inside so(8),
///   nu_spin9[0..14]  completion nu'_22..nu'_36 to spin(9) inside so(9),
/// where the so(8) elements are embedded into so(9) as the lower right block.
struct ExceptionalBases {
  std::vector<QMatrix> nu;        // 14, 8x8
  std::vector<QMatrix> nu_spin7;  // 7, 8x8
  std::vector<QMatrix> nu_spin9;  // 15, 9x9
};

const ExceptionalBases& build_exceptional_bases();

/// Lower-right block embedding of an 8x8 matrix into 9x9.
QMatrix iota9(const QMatrix& m);

}  // namespace ssp

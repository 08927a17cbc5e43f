#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

namespace ssp {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using SparseD = Eigen::SparseMatrix<double>;

/// Linear map given either densely or as a sparse matrix; both act on the
/// same domain dimension. Used to feed mixed operator lists to the kernel
/// solver.
struct LinearMap {
  int domain_dim = 0;
  int codomain_dim = 0;
  MatrixXcd dense;  // used when sparse is empty
  SparseD sparse;   // real sparse alternative
  bool is_sparse = false;

  static LinearMap from_dense(MatrixXcd m);
  static LinearMap from_sparse(SparseD m);

  VectorXcd apply(const VectorXcd& v) const;
  double op_norm_estimate() const;  // max column norm, cheap upper-type estimate
};

/// Orthonormal basis of the joint kernel of the given operators. Kernel
/// membership is decided by singular values of the stacked operator below
/// tol relative to the largest singular value.
/// Throws on an empty operator list, mismatched domains or non-finite entries.
std::vector<VectorXcd> joint_kernel(const std::vector<LinearMap>& ops, double tol);

/// Real joint kernel of sparse real operators. The stacked operator is
/// split into independent column blocks along its sparsity pattern and each
/// block is solved by a dense symmetric eigendecomposition of its Gram
/// matrix; columns never touched by any row are kernel vectors outright.
std::vector<VectorXd> joint_kernel_sparse(const std::vector<SparseD>& ops, double tol);

/// Residual max_i ||op_i v|| over the list; v need not be normalized.
double joint_residual(const std::vector<LinearMap>& ops, const VectorXcd& v);

/// Gram-Schmidt orthonormalization, dropping near-dependent vectors.
std::vector<VectorXcd> orthonormalize(const std::vector<VectorXcd>& vs, double tol = 1e-12);
std::vector<VectorXd> orthonormalize(const std::vector<VectorXd>& vs, double tol = 1e-12);

/// Largest distance from any vector of a to the span of b (both orthonormal
/// families are formed internally). Returns +inf on dimension mismatch.
double span_distance(const std::vector<VectorXcd>& a, const std::vector<VectorXcd>& b);

}  // namespace ssp

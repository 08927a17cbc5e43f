#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <map>
#include <vector>

namespace ssp {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using SparseD = Eigen::SparseMatrix<double>;

/// Antisymmetric k-form on an n-dimensional oriented orthonormal frame,
/// stored sparsely on sorted index sets (bitmask, bit i-1 <-> e_i).
class Form {
 public:
  Form() = default;
  Form(int n, int k);

  int n() const { return n_; }
  int degree() const { return k_; }
  const std::map<uint32_t, double>& terms() const { return c_; }

  double coeff(uint32_t mask) const;
  void set(uint32_t mask, double v);
  void add(uint32_t mask, double v);
  /// Coefficient on the sorted monomial e_{i1}^..^e_{ik} (1-based indices).
  double coeff_sorted(std::initializer_list<int> idx) const;
  void set_sorted(std::initializer_list<int> idx, double v);

  /// Evaluation on an arbitrary index tuple, with the permutation sign.
  double eval(const std::vector<int>& idx) const;

  double norm() const;
  double dist(const Form& o) const;
  Form& prune(double eps = 1e-13);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(double s, Form f);

  /// L2 pairing over sorted monomials (orthonormal frame convention).
  static double inner(const Form& a, const Form& b);

 private:
  int n_ = 0, k_ = 0;
  std::map<uint32_t, double> c_;
};

Form wedge(const Form& a, const Form& b);
Form hodge_star(const Form& f);
/// e_i -| f (1-based index).
Form interior(int i, const Form& f);
/// Projection onto monomials with exactly i indices in [1, split] and the
/// remaining k-i above; split is the size of the first index block.
Form block_projection(const Form& f, int split, int i);

/// Derivation action of a matrix on a form:
/// (M.w)(X_1..X_k) = -sum_j w(X_1,..,M X_j,..,X_k).
Form form_action_apply(const MatrixXd& op, const Form& f);

/// All sorted k-subsets of {1..n} as masks, ascending.
std::vector<uint32_t> form_basis_masks(int n, int k);

/// Sparse matrix of the derivation action on the full Lambda^k basis.
SparseD form_action_operator(const MatrixXd& op, int n, int k);

VectorXd form_to_vector(const Form& f, const std::vector<uint32_t>& basis);
Form form_from_vector(int n, int k, const std::vector<uint32_t>& basis, const VectorXd& v);

}  // namespace ssp

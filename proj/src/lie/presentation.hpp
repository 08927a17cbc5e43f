#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "lie/elements.hpp"
#include "spinor/spinor.hpp"

namespace ssp {

enum class CaseTag { SO, U, SU, Sp, SpSp1, SpU1, G2, Spin7, Spin9 };

CaseTag parse_case(const std::string& name);
std::string case_name(CaseTag tag);

/// Named metric parameters of a case family. Sp accepts either the diagonal
/// parameters a1..a4 or the contact pair alpha,delta.
struct MetricSpec {
  CaseTag tag = CaseTag::SO;
  std::map<std::string, double> params;

  double at(const std::string& key) const;
  bool has(const std::string& key) const { return params.count(key) != 0; }
  void validate() const;  // known names, positivity, alpha*delta > 0
};

std::vector<std::string> metric_param_names(CaseTag tag);
MetricSpec default_metric(CaseTag tag);
MetricSpec make_metric(CaseTag tag, const std::map<std::string, double>& params);

/// Reductive decomposition g = h + m with the catalogue's exact ordered
/// orthonormal basis of m. Structure constants and isotropy operators are
/// precomputed at construction.
class ReductiveDecomposition {
 public:
  CaseTag tag;
  int n = 0;  // family index; 0 for the exceptional cases
  MetricSpec metric;
  std::vector<AlgebraElement> h_basis;
  std::vector<AlgebraElement> m_onb;
  std::vector<std::pair<int, int>> summands;  // [begin,end) ranges into m_onb
  BasisOrdering ordering = BasisOrdering::Standard;

  int dim_m() const { return static_cast<int>(m_onb.size()); }
  int dim_h() const { return static_cast<int>(h_basis.size()); }
  int dim_g() const { return dim_m() + dim_h(); }
  int summand_of(int i) const;

  /// Coordinates of an element in the basis h_basis + m_onb (least squares
  /// over the flattened matrix entries). Throws if the residual exceeds the
  /// span tolerance unless residual_out captures it.
  Eigen::VectorXd coords(const AlgebraElement& x, double* residual_out = nullptr) const;

  /// Split [X,Y] into m- and h-coefficients.
  void bracket_projections(const AlgebraElement& x, const AlgebraElement& y,
                           Eigen::VectorXd& m_coeff, Eigen::VectorXd& h_coeff,
                           double* residual_out = nullptr) const;

  /// g([e_i,e_j]_m, e_k)
  double c_m(int i, int j, int k) const { return cm_[i](k, j); }
  /// m-part of [e_i, .] as a matrix: column j holds [e_i,e_j]_m coefficients.
  const Eigen::MatrixXd& bracket_m_matrix(int i) const { return cm_[i]; }
  /// h-coefficients of [e_i,e_j].
  Eigen::VectorXd bracket_h_coeff(int i, int j) const;

  /// Matrix of ad(h_a)|_m in the orthonormal basis (column action).
  const Eigen::MatrixXd& isotropy_matrix(int h_index) const;

  /// Case ambient pairing: B_0 on the plain groups, -kappa on the product
  /// groups (where kappa is the Killing form of sp(n)+sp(1)).
  double ambient(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Metric coefficient of summand s against the ambient pairing.
  double metric_weight(int s) const;

  void finalize();  // builds the QR, structure constants, isotropy matrices

 private:
  Eigen::MatrixXd basis_flat_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
  std::vector<Eigen::MatrixXd> cm_;       // per i: (k,j) -> g([e_i,e_j]_m, e_k)
  std::vector<Eigen::MatrixXd> ch_;       // per i: (a,j) -> h-coeff a of [e_i,e_j]
  std::vector<Eigen::MatrixXd> iso_ops_;  // per h index
};

/// Construct the case presentation with the catalogue basis. n is the family
/// index (SO(n+1), U(n+1)/SU(n+1), Sp(n)...); it is ignored for G2, Spin7,
/// Spin9. Throws on non-positive parameters or an unsupported n.
ReductiveDecomposition build_presentation(CaseTag tag, int n, const MetricSpec& metric);

/// Cartan elements tau_1..tau_n of the special unitary case; tau_k for
/// k < n lie in the complexified isotropy algebra, tau_n = i sqrt(a) e_1.
QMatrix su_cartan_tau(int n, int k, double a);

}  // namespace ssp

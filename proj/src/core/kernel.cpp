#include "core/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ssp {

LinearMap LinearMap::from_dense(MatrixXcd m) {
  LinearMap lm;
  lm.domain_dim = static_cast<int>(m.cols());
  lm.codomain_dim = static_cast<int>(m.rows());
  lm.dense = std::move(m);
  return lm;
}

LinearMap LinearMap::from_sparse(SparseD m) {
  LinearMap lm;
  lm.domain_dim = static_cast<int>(m.cols());
  lm.codomain_dim = static_cast<int>(m.rows());
  lm.sparse = std::move(m);
  lm.is_sparse = true;
  return lm;
}

VectorXcd LinearMap::apply(const VectorXcd& v) const {
  if (v.size() != domain_dim) throw std::invalid_argument("LinearMap: domain mismatch");
  if (is_sparse) {
    VectorXcd out = VectorXcd::Zero(codomain_dim);
    for (int k = 0; k < sparse.outerSize(); ++k)
      for (SparseD::InnerIterator it(sparse, k); it; ++it) out(it.row()) += it.value() * v(k);
    return out;
  }
  return dense * v;
}

double LinearMap::op_norm_estimate() const {
  double m = 0.0;
  if (is_sparse) {
    for (int k = 0; k < sparse.outerSize(); ++k) {
      double c = 0.0;
      for (SparseD::InnerIterator it(sparse, k); it; ++it) c += it.value() * it.value();
      m = std::max(m, c);
    }
    return std::sqrt(m);
  }
  for (int j = 0; j < dense.cols(); ++j) m = std::max(m, dense.col(j).norm());
  return m;
}

std::vector<VectorXcd> joint_kernel(const std::vector<LinearMap>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("joint_kernel: empty operator list");
  if (tol <= 0) throw std::invalid_argument("joint_kernel: tol must be positive");
  const int d = ops.front().domain_dim;
  int rows = 0;
  for (const auto& op : ops) {
    if (op.domain_dim != d) throw std::invalid_argument("joint_kernel: domain mismatch");
    rows += op.codomain_dim;
  }
  MatrixXcd stacked(rows, d);
  int r0 = 0;
  for (const auto& op : ops) {
    if (op.is_sparse) {
      MatrixXcd blk = MatrixXcd::Zero(op.codomain_dim, d);
      for (int k = 0; k < op.sparse.outerSize(); ++k)
        for (SparseD::InnerIterator it(op.sparse, k); it; ++it) blk(it.row(), k) = it.value();
      stacked.middleRows(r0, op.codomain_dim) = blk;
    } else {
      stacked.middleRows(r0, op.codomain_dim) = op.dense;
    }
    r0 += op.codomain_dim;
  }
  if (!stacked.allFinite()) throw std::invalid_argument("joint_kernel: non-finite entries");

  // JacobiSVD: the domains here are small (<= a few hundred columns) and it
  // is robust where BDCSVD is not.
  Eigen::JacobiSVD<MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  std::vector<VectorXcd> basis;
  for (int j = 0; j < d; ++j) {
    const double s = j < sv.size() ? sv(j) : 0.0;
    if (s <= tol * smax) basis.push_back(svd.matrixV().col(j));
  }
  return basis;
}

double joint_residual(const std::vector<LinearMap>& ops, const VectorXcd& v) {
  double r = 0.0;
  for (const auto& op : ops) r = std::max(r, op.apply(v).norm());
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<VectorXd> joint_kernel_sparse(const std::vector<SparseD>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("joint_kernel_sparse: empty operator list");
  if (tol <= 0) throw std::invalid_argument("joint_kernel_sparse: tol must be positive");
  const int d = static_cast<int>(ops.front().cols());
  for (const auto& op : ops)
    if (op.cols() != d) throw std::invalid_argument("joint_kernel_sparse: domain mismatch");

  // Columns sharing a row form one elimination block.
  UnionFind uf(d);
  for (const auto& op : ops) {
    std::vector<std::vector<int>> row_cols(op.rows());
    for (int k = 0; k < op.outerSize(); ++k)
      for (SparseD::InnerIterator it(op, k); it; ++it)
        if (it.value() != 0.0) row_cols[it.row()].push_back(k);
    for (const auto& cols : row_cols)
      for (size_t i = 1; i < cols.size(); ++i) uf.unite(cols[0], cols[i]);
  }
  std::vector<std::vector<int>> comps;
  {
    std::vector<int> comp_of(d, -1);
    for (int c = 0; c < d; ++c) {
      int r = uf.find(c);
      if (comp_of[r] < 0) {
        comp_of[r] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[comp_of[r]].push_back(c);
    }
  }

  // Per-block Gram matrices of the stacked operator.
  std::vector<MatrixXd> grams;
  grams.reserve(comps.size());
  std::vector<int> col_local(d, -1);
  for (const auto& comp : comps) {
    for (size_t i = 0; i < comp.size(); ++i) col_local[comp[i]] = static_cast<int>(i);
    MatrixXd g = MatrixXd::Zero(comp.size(), comp.size());
    for (const auto& op : ops) {
      std::vector<std::vector<std::pair<int, double>>> rows(op.rows());
      for (int k : comp)
        for (SparseD::InnerIterator it(op, k); it; ++it)
          rows[it.row()].push_back({col_local[k], it.value()});
      for (const auto& row : rows)
        for (auto [i, vi] : row)
          for (auto [j, vj] : row) g(i, j) += vi * vj;
    }
    grams.push_back(std::move(g));
    for (int c : comp) col_local[c] = -1;
  }

  double lam_max = 0.0;
  std::vector<Eigen::SelfAdjointEigenSolver<MatrixXd>> eigs(comps.size());
  for (size_t b = 0; b < comps.size(); ++b) {
    eigs[b].compute(grams[b]);
    if (eigs[b].eigenvalues().size())
      lam_max = std::max(lam_max, eigs[b].eigenvalues().maxCoeff());
  }
  const double smax = std::sqrt(std::max(lam_max, 0.0));
  // The Gram spectrum only resolves squared singular values down to machine
  // noise relative to lam_max, so near-zero eigenvectors are candidates that
  // must pass a direct residual check against the operators themselves.
  const double candidate_thresh = std::max(tol * tol, 1e-12) * lam_max;

  auto residual = [&](const VectorXd& v) {
    double r = 0.0;
    for (const auto& op : ops) r = std::max(r, (op * v).norm());
    return r;
  };

  std::vector<VectorXd> basis;
  for (size_t b = 0; b < comps.size(); ++b) {
    const auto& comp = comps[b];
    const auto& ev = eigs[b].eigenvalues();
    for (int j = 0; j < ev.size(); ++j) {
      if (ev(j) > candidate_thresh) continue;
      VectorXd v = VectorXd::Zero(d);
      for (size_t i = 0; i < comp.size(); ++i) v(comp[i]) = eigs[b].eigenvectors()(i, j);
      if (smax == 0.0 || residual(v) <= tol * smax) basis.push_back(std::move(v));
    }
  }
  return basis;
}

std::vector<VectorXcd> orthonormalize(const std::vector<VectorXcd>& vs, double tol) {
  std::vector<VectorXcd> out;
  for (VectorXcd v : vs) {
    for (const auto& u : out) v -= u.dot(v) * u;
    double n = v.norm();
    if (n > tol) out.push_back(v / n);
  }
  return out;
}

std::vector<VectorXd> orthonormalize(const std::vector<VectorXd>& vs, double tol) {
  std::vector<VectorXd> out;
  for (VectorXd v : vs) {
    for (const auto& u : out) v -= u.dot(v) * u;
    double n = v.norm();
    if (n > tol) out.push_back(v / n);
  }
  return out;
}

double span_distance(const std::vector<VectorXcd>& a, const std::vector<VectorXcd>& b) {
  auto ua = orthonormalize(a);
  auto ub = orthonormalize(b);
  if (ua.size() != ub.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& v : ua) {
    VectorXcd r = v;
    for (const auto& u : ub) r -= u.dot(v) * u;
    worst = std::max(worst, r.norm());
  }
  for (const auto& v : ub) {
    VectorXcd r = v;
    for (const auto& u : ua) r -= u.dot(v) * u;
    worst = std::max(worst, r.norm());
  }
  return worst;
}

}  // namespace ssp

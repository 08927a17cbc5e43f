#include "lie/presentation.hpp"

#include <cmath>
#include <stdexcept>

#include "lie/exceptional.hpp"

namespace ssp {

namespace {

constexpr double kSpanTol = 1e-8;

QMatrix EF(int i, int j, int n, ElementaryKind k, Quat lam = Quat(1.0)) {
  return elementary(i, j, n, k, lam);
}

}  // namespace

CaseTag parse_case(const std::string& name) {
  if (name == "so") return CaseTag::SO;
  if (name == "u") return CaseTag::U;
  if (name == "su") return CaseTag::SU;
  if (name == "sp") return CaseTag::Sp;
  if (name == "spsp1") return CaseTag::SpSp1;
  if (name == "spu1") return CaseTag::SpU1;
  if (name == "g2") return CaseTag::G2;
  if (name == "spin7") return CaseTag::Spin7;
  if (name == "spin9") return CaseTag::Spin9;
  throw std::invalid_argument("unknown case: " + name);
}

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::SO: return "so";
    case CaseTag::U: return "u";
    case CaseTag::SU: return "su";
    case CaseTag::Sp: return "sp";
    case CaseTag::SpSp1: return "spsp1";
    case CaseTag::SpU1: return "spu1";
    case CaseTag::G2: return "g2";
    case CaseTag::Spin7: return "spin7";
    case CaseTag::Spin9: return "spin9";
  }
  return "?";
}

std::vector<std::string> metric_param_names(CaseTag tag) {
  switch (tag) {
    case CaseTag::SO:
    case CaseTag::G2:
    case CaseTag::Spin7: return {"a"};
    case CaseTag::U:
    case CaseTag::SU:
    case CaseTag::SpSp1:
    case CaseTag::Spin9: return {"a", "b"};
    case CaseTag::SpU1: return {"a", "b", "c"};
    case CaseTag::Sp: return {"a1", "a2", "a3", "a4", "alpha", "delta"};
  }
  return {};
}

MetricSpec default_metric(CaseTag tag) {
  MetricSpec m;
  m.tag = tag;
  switch (tag) {
    case CaseTag::SO:
    case CaseTag::G2:
    case CaseTag::Spin7: m.params = {{"a", 1.0}}; break;
    case CaseTag::U:
    case CaseTag::SU:
    case CaseTag::SpSp1:
    case CaseTag::Spin9: m.params = {{"a", 1.0}, {"b", 1.0}}; break;
    case CaseTag::SpU1: m.params = {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}}; break;
    case CaseTag::Sp: m.params = {{"a1", 1.0}, {"a2", 1.0}, {"a3", 1.0}, {"a4", 1.0}}; break;
  }
  return m;
}

MetricSpec make_metric(CaseTag tag, const std::map<std::string, double>& params) {
  MetricSpec m;
  m.tag = tag;
  m.params = params;
  m.validate();
  return m;
}

double MetricSpec::at(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("metric parameter missing: " + key + " for case " + case_name(tag));
  return it->second;
}

void MetricSpec::validate() const {
  const auto names = metric_param_names(tag);
  for (const auto& [k, v] : params) {
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw std::invalid_argument("unknown metric parameter '" + k + "' for case " + case_name(tag));
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite metric parameter " + k);
  }
  if (tag == CaseTag::Sp) {
    const bool contact = has("alpha") || has("delta");
    const bool diag = has("a1") || has("a2") || has("a3") || has("a4");
    if (contact && diag)
      throw std::invalid_argument("sp metric: give either a1..a4 or alpha,delta, not both");
    if (contact) {
      if (at("alpha") * at("delta") <= 0)
        throw std::invalid_argument("sp metric: alpha*delta must be positive");
      return;
    }
    for (const char* k : {"a1", "a2", "a3", "a4"})
      if (at(k) <= 0) throw std::invalid_argument(std::string("metric parameter not positive: ") + k);
    return;
  }
  for (const auto& name : names)
    if (at(name) <= 0) throw std::invalid_argument("metric parameter not positive: " + name);
}

int ReductiveDecomposition::summand_of(int i) const {
  for (size_t s = 0; s < summands.size(); ++s)
    if (i >= summands[s].first && i < summands[s].second) return static_cast<int>(s);
  throw std::out_of_range("summand_of: index outside m basis");
}

Eigen::VectorXd ReductiveDecomposition::coords(const AlgebraElement& x, double* residual_out) const {
  Eigen::VectorXd rhs = flatten(x);
  Eigen::VectorXd sol = qr_.solve(rhs);
  const double res = (basis_flat_ * sol - rhs).norm();
  if (residual_out) {
    *residual_out = res;
  } else if (res > kSpanTol * std::max(1.0, rhs.norm())) {
    throw std::invalid_argument("element outside span of g");
  }
  return sol;
}

void ReductiveDecomposition::bracket_projections(const AlgebraElement& x, const AlgebraElement& y,
                                                 Eigen::VectorXd& m_coeff, Eigen::VectorXd& h_coeff,
                                                 double* residual_out) const {
  const AlgebraElement z = bracket(x, y);
  Eigen::VectorXd c = coords(z, residual_out);
  h_coeff = c.head(dim_h());
  m_coeff = c.tail(dim_m());
}

Eigen::VectorXd ReductiveDecomposition::bracket_h_coeff(int i, int j) const {
  return ch_[i].col(j);
}

const Eigen::MatrixXd& ReductiveDecomposition::isotropy_matrix(int h_index) const {
  return iso_ops_.at(h_index);
}

double ReductiveDecomposition::ambient(const AlgebraElement& x, const AlgebraElement& y) const {
  if (tag == CaseTag::SpSp1 || tag == CaseTag::SpU1) return -kappa_product(x, y);
  return b0_form(x.primary, y.primary);
}

double ReductiveDecomposition::metric_weight(int s) const {
  switch (tag) {
    case CaseTag::SO:
    case CaseTag::G2:
    case CaseTag::Spin7: return metric.at("a");
    case CaseTag::U:
    case CaseTag::SU:
    case CaseTag::Spin9:
    case CaseTag::SpSp1: return s == 0 ? metric.at("a") : metric.at("b");
    case CaseTag::SpU1: return s == 0 ? metric.at("a") : (s == 1 ? metric.at("b") : metric.at("c"));
    case CaseTag::Sp: {
      if (metric.has("alpha")) {
        const double alpha = metric.at("alpha"), delta = metric.at("delta");
        return s < 3 ? 1.0 / (delta * delta) : 1.0 / (2 * alpha * delta);
      }
      return metric.at("a" + std::to_string(s + 1));
    }
  }
  return 1.0;
}

void ReductiveDecomposition::finalize() {
  const int dm = dim_m(), dh = dim_h();
  const int D = static_cast<int>(flatten(m_onb.at(0)).size());
  basis_flat_.resize(D, dh + dm);
  for (int a = 0; a < dh; ++a) basis_flat_.col(a) = flatten(h_basis[a]);
  for (int i = 0; i < dm; ++i) basis_flat_.col(dh + i) = flatten(m_onb[i]);
  qr_.compute(basis_flat_);
  if (qr_.rank() < dh + dm) throw std::runtime_error("presentation basis is numerically dependent");

  cm_.assign(dm, Eigen::MatrixXd::Zero(dm, dm));
  ch_.assign(dm, Eigen::MatrixXd::Zero(std::max(dh, 1), dm));
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) {
      if (j < i) {  // antisymmetry
        cm_[i].col(j) = -cm_[j].col(i);
        if (dh) ch_[i].col(j) = -ch_[j].col(i);
        continue;
      }
      if (j == i) continue;
      Eigen::VectorXd mc, hc;
      bracket_projections(m_onb[i], m_onb[j], mc, hc);
      cm_[i].col(j) = mc;
      if (dh) ch_[i].col(j) = hc;
    }

  iso_ops_.clear();
  iso_ops_.reserve(dh);
  for (int a = 0; a < dh; ++a) {
    Eigen::MatrixXd op(dm, dm);
    for (int i = 0; i < dm; ++i) {
      Eigen::VectorXd mc, hc;
      bracket_projections(h_basis[a], m_onb[i], mc, hc);
      op.col(i) = mc;
    }
    iso_ops_.push_back(std::move(op));
  }
}

namespace {

void check_n(CaseTag tag, int n, int min_n) {
  if (n < min_n)
    throw std::invalid_argument("case " + case_name(tag) + ": n must be >= " + std::to_string(min_n));
}

ReductiveDecomposition build_so(int n, const MetricSpec& metric) {
  check_n(CaseTag::SO, n, 2);
  const int N = n + 1;
  const double a = metric.at("a");
  ReductiveDecomposition d;
  d.tag = CaseTag::SO;
  d.n = n;
  d.metric = metric;
  for (int i = 2; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) d.h_basis.emplace_back(EF(i, j, N, ElementaryKind::E));
  for (int j = 2; j <= N; ++j)
    d.m_onb.emplace_back((1.0 / std::sqrt(2 * a)) * EF(1, j, N, ElementaryKind::E));
  d.summands = {{0, n}};
  d.ordering = (n % 2 == 1) ? BasisOrdering::Reordered : BasisOrdering::Standard;
  return d;
}

ReductiveDecomposition build_u(int n, const MetricSpec& metric) {
  check_n(CaseTag::U, n, 1);
  const int N = n + 1;
  const double a = metric.at("a"), b = metric.at("b");
  const Quat qi = Quat::i();
  ReductiveDecomposition d;
  d.tag = CaseTag::U;
  d.n = n;
  d.metric = metric;
  for (int j = 2; j <= N; ++j)
    for (int k = j + 1; k <= N; ++k) d.h_basis.emplace_back(EF(j, k, N, ElementaryKind::E));
  for (int p = 2; p <= N; ++p)
    for (int q = p; q <= N; ++q) d.h_basis.emplace_back(EF(p, q, N, ElementaryKind::F, qi));
  d.m_onb.emplace_back((1.0 / std::sqrt(a)) * EF(1, 1, N, ElementaryKind::F, qi));
  for (int j = 1; j <= n; ++j) {
    d.m_onb.emplace_back((1.0 / std::sqrt(2 * b)) * EF(1, j + 1, N, ElementaryKind::E));
    d.m_onb.emplace_back((1.0 / std::sqrt(2 * b)) * EF(1, j + 1, N, ElementaryKind::F, qi));
  }
  d.summands = {{0, 1}, {1, 2 * n + 1}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

ReductiveDecomposition build_su(int n, const MetricSpec& metric) {
  check_n(CaseTag::SU, n, 1);
  const int N = n + 1;
  const double a = metric.at("a"), b = metric.at("b");
  const Quat qi = Quat::i();
  ReductiveDecomposition d;
  d.tag = CaseTag::SU;
  d.n = n;
  d.metric = metric;
  for (int p = 2; p <= N; ++p)
    for (int q = p + 1; q <= N; ++q) {
      d.h_basis.emplace_back(EF(p, q, N, ElementaryKind::F, qi));
      d.h_basis.emplace_back(EF(p, q, N, ElementaryKind::E));
    }
  for (int r = 2; r <= n; ++r) {
    QMatrix t = EF(r, r, N, ElementaryKind::F, qi) - EF(r + 1, r + 1, N, ElementaryKind::F, qi);
    d.h_basis.emplace_back((1.0 / std::sqrt(2.0)) * t);  // normalized Cartan direction
  }
  {
    QMatrix e1 = (-double(n)) * EF(1, 1, N, ElementaryKind::F, qi);
    for (int l = 2; l <= N; ++l) e1 += EF(l, l, N, ElementaryKind::F, qi);
    d.m_onb.emplace_back((1.0 / std::sqrt(a * n * (n + 1))) * e1);
  }
  for (int p = 1; p <= n; ++p) {
    d.m_onb.emplace_back((1.0 / std::sqrt(2 * b)) * EF(1, p + 1, N, ElementaryKind::E));
    d.m_onb.emplace_back((1.0 / std::sqrt(2 * b)) * EF(1, p + 1, N, ElementaryKind::F, qi));
  }
  d.summands = {{0, 1}, {1, 2 * n + 1}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

void append_sp_horizontal(std::vector<AlgebraElement>& out, int n, double scale, bool with_aux) {
  const Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
  for (int p = 1; p <= n - 1; ++p) {
    QMatrix mj = EF(1, p + 1, n, ElementaryKind::F, qj);
    QMatrix mk = EF(1, p + 1, n, ElementaryKind::F, qk);
    QMatrix mi = EF(1, p + 1, n, ElementaryKind::F, qi);
    QMatrix me = EF(1, p + 1, n, ElementaryKind::E);
    if (with_aux) {
      out.emplace_back(scale * mj, Quat());
      out.emplace_back(scale * mk, Quat());
      out.emplace_back(scale * mi, Quat());
      out.emplace_back(scale * me, Quat());
    } else {
      out.emplace_back(scale * mj);
      out.emplace_back(scale * mk);
      out.emplace_back(scale * mi);
      out.emplace_back(scale * me);
    }
  }
}

void append_spn_isotropy(std::vector<AlgebraElement>& h, int n, bool with_aux) {
  const Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
  auto push = [&](QMatrix m) {
    if (with_aux)
      h.emplace_back(std::move(m), Quat());
    else
      h.emplace_back(std::move(m));
  };
  for (int p = 2; p <= n; ++p) {
    push(EF(p, p, n, ElementaryKind::F, qi));
    push(EF(p, p, n, ElementaryKind::F, qj));
    push(EF(p, p, n, ElementaryKind::F, qk));
  }
  for (int r = 2; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      push(EF(r, s, n, ElementaryKind::F, qi));
      push(EF(r, s, n, ElementaryKind::F, qj));
      push(EF(r, s, n, ElementaryKind::F, qk));
      push(EF(r, s, n, ElementaryKind::E));
    }
}

ReductiveDecomposition build_sp(int n, const MetricSpec& metric) {
  check_n(CaseTag::Sp, n, 2);
  const Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
  ReductiveDecomposition d;
  d.tag = CaseTag::Sp;
  d.n = n;
  d.metric = metric;
  append_spn_isotropy(d.h_basis, n, false);

  if (metric.has("alpha")) {
    const double alpha = metric.at("alpha"), delta = metric.at("delta");
    const double h = std::sqrt(alpha * delta);
    d.m_onb.emplace_back(delta * EF(1, 1, n, ElementaryKind::F, qi));
    d.m_onb.emplace_back((-delta) * EF(1, 1, n, ElementaryKind::F, qk));
    d.m_onb.emplace_back(delta * EF(1, 1, n, ElementaryKind::F, qj));
    append_sp_horizontal(d.m_onb, n, h, false);
  } else {
    const double a1 = metric.at("a1"), a2 = metric.at("a2"), a3 = metric.at("a3"),
                 a4 = metric.at("a4");
    d.m_onb.emplace_back((1.0 / std::sqrt(a1)) * EF(1, 1, n, ElementaryKind::F, qi));
    d.m_onb.emplace_back((-1.0 / std::sqrt(a2)) * EF(1, 1, n, ElementaryKind::F, qk));
    d.m_onb.emplace_back((1.0 / std::sqrt(a3)) * EF(1, 1, n, ElementaryKind::F, qj));
    append_sp_horizontal(d.m_onb, n, 1.0 / std::sqrt(2 * a4), false);
  }
  d.summands = {{0, 1}, {1, 2}, {2, 3}, {3, 4 * n - 1}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

ReductiveDecomposition build_spsp1(int n, const MetricSpec& metric) {
  check_n(CaseTag::SpSp1, n, 2);
  const double a = metric.at("a"), b = metric.at("b");
  const Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
  ReductiveDecomposition d;
  d.tag = CaseTag::SpSp1;
  d.n = n;
  d.metric = metric;
  append_spn_isotropy(d.h_basis, n, true);
  d.h_basis.emplace_back(EF(1, 1, n, ElementaryKind::F, qi), qi);
  d.h_basis.emplace_back(EF(1, 1, n, ElementaryKind::F, qj), qj);
  d.h_basis.emplace_back(EF(1, 1, n, ElementaryKind::F, qk), qk);

  const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
  const double half_np1 = 0.5 * (n + 1);
  d.m_onb.emplace_back((1.0 / omega) * EF(1, 1, n, ElementaryKind::F, qi), (-half_np1 / omega) * qi);
  d.m_onb.emplace_back((-1.0 / omega) * EF(1, 1, n, ElementaryKind::F, qk), (half_np1 / omega) * qk);
  d.m_onb.emplace_back((1.0 / omega) * EF(1, 1, n, ElementaryKind::F, qj), (-half_np1 / omega) * qj);
  append_sp_horizontal(d.m_onb, n, 1.0 / (2 * std::sqrt(2 * b * (n + 1))), true);
  d.summands = {{0, 3}, {3, 4 * n - 1}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

ReductiveDecomposition build_spu1(int n, const MetricSpec& metric) {
  check_n(CaseTag::SpU1, n, 2);
  const double a = metric.at("a"), b = metric.at("b"), c = metric.at("c");
  const Quat qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
  ReductiveDecomposition d;
  d.tag = CaseTag::SpU1;
  d.n = n;
  d.metric = metric;
  append_spn_isotropy(d.h_basis, n, true);
  d.h_basis.emplace_back(EF(1, 1, n, ElementaryKind::F, qi), qi);

  const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
  const double half_np1 = 0.5 * (n + 1);
  d.m_onb.emplace_back((1.0 / omega) * EF(1, 1, n, ElementaryKind::F, qi), (-half_np1 / omega) * qi);
  d.m_onb.emplace_back((-1.0 / (2 * std::sqrt(b * (n + 1)))) * EF(1, 1, n, ElementaryKind::F, qk),
                       Quat());
  d.m_onb.emplace_back((1.0 / (2 * std::sqrt(b * (n + 1)))) * EF(1, 1, n, ElementaryKind::F, qj),
                       Quat());
  append_sp_horizontal(d.m_onb, n, 1.0 / (2 * std::sqrt(2 * c * (n + 1))), true);
  d.summands = {{0, 1}, {1, 3}, {3, 4 * n - 1}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

ReductiveDecomposition build_g2(const MetricSpec& metric) {
  const double a = metric.at("a");
  const auto& eb = build_exceptional_bases();
  ReductiveDecomposition d;
  d.tag = CaseTag::G2;
  d.n = 0;
  d.metric = metric;
  for (int i = 0; i < 8; ++i) d.h_basis.emplace_back(eb.nu[i]);
  const double s = 1.0 / std::sqrt(a);
  // e_3 and e_5 flip sign so that the basis is adapted to the invariant
  // almost complex structure.
  d.m_onb.emplace_back(s * eb.nu[8]);
  d.m_onb.emplace_back(s * eb.nu[9]);
  d.m_onb.emplace_back((-s) * eb.nu[10]);
  d.m_onb.emplace_back(s * eb.nu[11]);
  d.m_onb.emplace_back((-s) * eb.nu[12]);
  d.m_onb.emplace_back(s * eb.nu[13]);
  d.summands = {{0, 6}};
  d.ordering = BasisOrdering::Standard;
  return d;
}

ReductiveDecomposition build_spin7(const MetricSpec& metric) {
  const double a = metric.at("a");
  const auto& eb = build_exceptional_bases();
  ReductiveDecomposition d;
  d.tag = CaseTag::Spin7;
  d.n = 0;
  d.metric = metric;
  for (const auto& nu : eb.nu) d.h_basis.emplace_back(nu);
  for (const auto& np : eb.nu_spin7) d.m_onb.emplace_back((1.0 / std::sqrt(a)) * np);
  d.summands = {{0, 7}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

ReductiveDecomposition build_spin9(const MetricSpec& metric) {
  const double a = metric.at("a"), b = metric.at("b");
  const auto& eb = build_exceptional_bases();
  ReductiveDecomposition d;
  d.tag = CaseTag::Spin9;
  d.n = 0;
  d.metric = metric;
  for (const auto& nu : eb.nu) d.h_basis.emplace_back(iota9(nu));
  for (const auto& np : eb.nu_spin7) d.h_basis.emplace_back(iota9(np));
  for (int i = 0; i < 15; ++i)
    d.m_onb.emplace_back((1.0 / std::sqrt(i < 7 ? a : b)) * eb.nu_spin9[i]);
  d.summands = {{0, 7}, {7, 15}};
  d.ordering = BasisOrdering::Reordered;
  return d;
}

}  // namespace

ReductiveDecomposition build_presentation(CaseTag tag, int n, const MetricSpec& metric) {
  if (metric.tag != tag) throw std::invalid_argument("metric/case tag mismatch");
  metric.validate();
  ReductiveDecomposition d;
  switch (tag) {
    case CaseTag::SO: d = build_so(n, metric); break;
    case CaseTag::U: d = build_u(n, metric); break;
    case CaseTag::SU: d = build_su(n, metric); break;
    case CaseTag::Sp: d = build_sp(n, metric); break;
    case CaseTag::SpSp1: d = build_spsp1(n, metric); break;
    case CaseTag::SpU1: d = build_spu1(n, metric); break;
    case CaseTag::G2: d = build_g2(metric); break;
    case CaseTag::Spin7: d = build_spin7(metric); break;
    case CaseTag::Spin9: d = build_spin9(metric); break;
  }
  d.finalize();
  return d;
}

QMatrix su_cartan_tau(int n, int k, double a) {
  if (k < 1 || k > n) throw std::invalid_argument("su_cartan_tau: k out of range");
  const int N = n + 1;
  if (k == n) {
    // i sqrt(a) e_1 expands to a real diagonal matrix.
    QMatrix t = double(n) * EF(1, 1, N, ElementaryKind::F);
    for (int l = 2; l <= N; ++l) t -= EF(l, l, N, ElementaryKind::F);
    (void)a;
    return (1.0 / std::sqrt(n * (n + 1))) * t;
  }
  QMatrix t(N, N, ScalarKind::Real);
  for (int p = 2; p <= k + 1; ++p) t += EF(p, p, N, ElementaryKind::F);
  t -= double(k) * EF(k + 2, k + 2, N, ElementaryKind::F);
  return (1.0 / std::sqrt(double(k) * (k + 1))) * t;
}

}  // namespace ssp

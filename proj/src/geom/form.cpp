#include "geom/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ssp {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

// Parity sign of the bits of mask strictly below the given bit.
int bits_below_sign(uint32_t mask, int bit) {
  return (std::popcount(mask & ((1u << bit) - 1u)) & 1) ? -1 : 1;
}

// Sign of merging the monomial of mask b past the monomial of mask a
// (a and b disjoint, both sorted ascending).
int merge_sign(uint32_t a, uint32_t b, int n) {
  int inv = 0;
  for (int bit = 0; bit < n; ++bit)
    if (b & (1u << bit)) inv += std::popcount(a >> (bit + 1));
  return (inv & 1) ? -1 : 1;
}

uint32_t mask_of(std::initializer_list<int> idx) {
  uint32_t m = 0;
  int prev = 0;
  for (int i : idx) {
    if (i <= prev) throw std::invalid_argument("Form: indices must be strictly increasing");
    prev = i;
    m |= 1u << (i - 1);
  }
  return m;
}

}  // namespace

Form::Form(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("Form: bad degree");
}

double Form::coeff(uint32_t mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? 0.0 : it->second;
}

void Form::set(uint32_t mask, double v) {
  if (popcount(mask) != k_) throw std::invalid_argument("Form: mask degree mismatch");
  if (v == 0.0)
    c_.erase(mask);
  else
    c_[mask] = v;
}

void Form::add(uint32_t mask, double v) {
  if (popcount(mask) != k_) throw std::invalid_argument("Form: mask degree mismatch");
  double& slot = c_[mask];
  slot += v;
  if (slot == 0.0) c_.erase(mask);
}

double Form::coeff_sorted(std::initializer_list<int> idx) const { return coeff(mask_of(idx)); }
void Form::set_sorted(std::initializer_list<int> idx, double v) { set(mask_of(idx), v); }

double Form::eval(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != k_) throw std::invalid_argument("Form: arity mismatch");
  std::vector<int> s(idx);
  int sign = 1;
  for (size_t i = 0; i < s.size(); ++i)  // insertion sort, tracking parity
    for (size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
      std::swap(s[j], s[j - 1]);
      sign = -sign;
    }
  uint32_t m = 0;
  for (int i : s) {
    if (i < 1 || i > n_) throw std::invalid_argument("Form: index out of range");
    if (m & (1u << (i - 1))) return 0.0;  // repeated index
    m |= 1u << (i - 1);
  }
  return sign * coeff(m);
}

double Form::norm() const {
  double s = 0;
  for (const auto& [m, v] : c_) s += v * v;
  return std::sqrt(s);
}

double Form::dist(const Form& o) const {
  Form d = *this;
  d -= o;
  return d.norm();
}

Form& Form::prune(double eps) {
  for (auto it = c_.begin(); it != c_.end();)
    it = std::abs(it->second) < eps ? c_.erase(it) : std::next(it);
  return *this;
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, v] : f.c_) v = -v;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("Form: shape mismatch");
  for (const auto& [m, v] : o.c_) add(m, v);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("Form: shape mismatch");
  for (const auto& [m, v] : o.c_) add(m, -v);
  return *this;
}

Form operator*(double s, Form f) {
  for (auto& [m, v] : f.c_) v *= s;
  if (s == 0.0) f.c_.clear();
  return f;
}

double Form::inner(const Form& a, const Form& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("Form: shape mismatch");
  double s = 0;
  for (const auto& [m, v] : a.c_) s += v * b.coeff(m);
  return s;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: frame mismatch");
  Form out(a.n(), a.degree() + b.degree());
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      if (ma & mb) continue;
      out.add(ma | mb, va * vb * merge_sign(ma, mb, a.n()));
    }
  return out;
}

Form hodge_star(const Form& f) {
  const int n = f.n();
  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  Form out(n, n - f.degree());
  for (const auto& [m, v] : f.terms()) {
    const uint32_t comp = full & ~m;
    out.add(comp, v * merge_sign(m, comp, n));
  }
  return out;
}

Form interior(int i, const Form& f) {
  if (i < 1 || i > f.n()) throw std::invalid_argument("interior: index out of range");
  if (f.degree() == 0) return Form(f.n(), 0);
  const uint32_t bit = 1u << (i - 1);
  Form out(f.n(), f.degree() - 1);
  for (const auto& [m, v] : f.terms()) {
    if (!(m & bit)) continue;
    out.add(m & ~bit, v * bits_below_sign(m, i - 1));
  }
  return out;
}

Form block_projection(const Form& f, int split, int i) {
  const uint32_t low = (1u << split) - 1u;
  Form out(f.n(), f.degree());
  for (const auto& [m, v] : f.terms())
    if (popcount(m & low) == i) out.add(m, v);
  return out;
}

Form form_action_apply(const MatrixXd& op, const Form& f) {
  const int n = f.n();
  if (op.rows() != n || op.cols() != n) throw std::invalid_argument("form_action: shape mismatch");
  Form out(n, f.degree());
  for (const auto& [mk, v] : f.terms()) {
    for (int u = 0; u < n; ++u) {
      if (!(mk & (1u << u))) continue;
      const uint32_t rest = mk & ~(1u << u);
      const int su = bits_below_sign(rest, u);
      for (int t = 0; t < n; ++t) {
        const double entry = op(u, t);
        if (entry == 0.0 || (rest & (1u << t))) continue;
        out.add(rest | (1u << t), -entry * su * bits_below_sign(rest, t) * v);
      }
    }
  }
  return out;
}

std::vector<uint32_t> form_basis_masks(int n, int k) {
  std::vector<uint32_t> out;
  const uint32_t lim = 1u << n;
  for (uint32_t m = 0; m < lim; ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

SparseD form_action_operator(const MatrixXd& op, int n, int k) {
  const auto basis = form_basis_masks(n, k);
  std::unordered_map<uint32_t, int> index;
  index.reserve(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  std::vector<Eigen::Triplet<double>> trips;
  for (size_t col = 0; col < basis.size(); ++col) {
    const uint32_t mk = basis[col];
    for (int u = 0; u < n; ++u) {
      if (!(mk & (1u << u))) continue;
      const uint32_t rest = mk & ~(1u << u);
      const int su = bits_below_sign(rest, u);
      for (int t = 0; t < n; ++t) {
        const double entry = op(u, t);
        if (entry == 0.0 || (rest & (1u << t))) continue;
        const uint32_t dst = rest | (1u << t);
        trips.emplace_back(index.at(dst), static_cast<int>(col),
                           -entry * su * bits_below_sign(rest, t));
      }
    }
  }
  SparseD m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

VectorXd form_to_vector(const Form& f, const std::vector<uint32_t>& basis) {
  VectorXd v = VectorXd::Zero(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) v(i) = f.coeff(basis[i]);
  return v;
}

Form form_from_vector(int n, int k, const std::vector<uint32_t>& basis, const VectorXd& v) {
  Form f(n, k);
  for (size_t i = 0; i < basis.size(); ++i)
    if (v(i) != 0.0) f.add(basis[i], v(i));
  return f;
}

}  // namespace ssp

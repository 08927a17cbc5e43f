#include "catalog/expected.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ssp::expected {

namespace {

uint32_t mask4(int i, int j, int k, int l = 0) {
  uint32_t m = (1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1));
  if (l) m |= 1u << (l - 1);
  return m;
}

// The quaternionic fundamental 2-form patterns on the frame
// (xi_1,xi_2,xi_3,e_4..e_{4n-1}); identical index patterns serve all three
// quaternionic families.
Form phi_pattern(int dm, int p) {
  const int n1 = (dm + 1) / 4;  // number of horizontal blocks + 1
  Form f(dm, 2);
  auto quad = [&](int r, int s, double v) { f.add((1u << (r - 1)) | (1u << (s - 1)), v); };
  switch (p) {
    case 1:
      quad(2, 3, -1);
      for (int q = 1; q <= n1 - 1; ++q) {
        quad(4 * q, 4 * q + 1, -1);
        quad(4 * q + 2, 4 * q + 3, -1);
      }
      break;
    case 2:
      quad(1, 3, 1);
      for (int q = 1; q <= n1 - 1; ++q) {
        quad(4 * q, 4 * q + 2, -1);
        quad(4 * q + 1, 4 * q + 3, 1);
      }
      break;
    case 3:
      quad(1, 2, -1);
      for (int q = 1; q <= n1 - 1; ++q) {
        quad(4 * q, 4 * q + 3, -1);
        quad(4 * q + 1, 4 * q + 2, -1);
      }
      break;
    default: throw std::invalid_argument("phi_pattern: p in 1..3");
  }
  return f;
}

}  // namespace

int spinor_dim(CaseTag tag, int n) {
  switch (tag) {
    case CaseTag::SO: return 0;
    case CaseTag::U: return 0;
    case CaseTag::SU: return 2;
    case CaseTag::Sp: return 2 * n;
    case CaseTag::SpSp1: return n == 2 ? 1 : 0;
    case CaseTag::SpU1: return n % 2 == 0 ? 2 : 0;
    case CaseTag::G2: return 2;
    case CaseTag::Spin7: return 1;
    case CaseTag::Spin9: return 1;
  }
  return 0;
}

Tensor3 canonical_torsion(const ReductiveDecomposition& d) {
  const int dm = d.dim_m();
  const int n = d.n;
  Tensor3 t(dm);
  auto set2 = [&](int i, int j, int k, double v) {
    t(i - 1, j - 1, k - 1) = v;
    t(j - 1, i - 1, k - 1) = -v;
  };
  switch (d.tag) {
    case CaseTag::SO: break;  // symmetric space
    case CaseTag::U: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      for (int j = 1; j <= n; ++j) {
        set2(1, 2 * j, 2 * j + 1, 1 / std::sqrt(a));
        set2(1, 2 * j + 1, 2 * j, -1 / std::sqrt(a));
        set2(2 * j, 2 * j + 1, 1, std::sqrt(a) / b);
      }
      break;
    }
    case CaseTag::SU: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double c1 = std::sqrt((n + 1) / (a * n));
      const double c2 = std::sqrt(a * (n + 1)) / (b * std::sqrt(double(n)));
      for (int p = 1; p <= n; ++p) {
        set2(1, 2 * p, 2 * p + 1, -c1);
        set2(1, 2 * p + 1, 2 * p, c1);
        set2(2 * p, 2 * p + 1, 1, -c2);
      }
      break;
    }
    case CaseTag::Sp: {
      double a1, a2, a3, a4;
      if (d.metric.has("alpha")) {
        const double alpha = d.metric.at("alpha"), delta = d.metric.at("delta");
        a1 = a2 = a3 = 1 / (delta * delta);
        a4 = 1 / (2 * alpha * delta);
      } else {
        a1 = d.metric.at("a1");
        a2 = d.metric.at("a2");
        a3 = d.metric.at("a3");
        a4 = d.metric.at("a4");
      }
      const double sa[4] = {std::sqrt(a1), std::sqrt(a2), std::sqrt(a3), 0};
      set2(1, 2, 3, -2 * sa[2] / (sa[0] * sa[1]));
      set2(1, 3, 2, 2 * sa[1] / (sa[0] * sa[2]));
      set2(2, 3, 1, -2 * sa[0] / (sa[1] * sa[2]));
      // vertical-horizontal part: T(xi_r, X) = (1/sqrt(a_r)) Phi_r(X,.)|_H
      for (int r = 1; r <= 3; ++r) {
        Form phi = phi_pattern(dm, r);
        for (int x = 4; x <= dm; ++x)
          for (int y = 4; y <= dm; ++y) {
            const double v = phi.eval({x, y}) / sa[r - 1];
            t(r - 1, x - 1, y - 1) = v;
            t(x - 1, r - 1, y - 1) = -v;
          }
      }
      for (int p = 1; p <= n - 1; ++p)
        for (int q = 1; q <= n - 1; ++q) {
          if (p != q) continue;
          set2(4 * p, 4 * q + 1, 1, -sa[0] / a4);
          set2(4 * p, 4 * q + 2, 2, -sa[1] / a4);
          set2(4 * p, 4 * q + 3, 3, -sa[2] / a4);
          set2(4 * p + 1, 4 * q + 2, 3, -sa[2] / a4);
          set2(4 * p + 1, 4 * q + 3, 2, sa[1] / a4);
          set2(4 * p + 2, 4 * q + 3, 1, -sa[0] / a4);
        }
      break;
    }
    case CaseTag::SpSp1: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
      set2(1, 2, 3, (n - 1) / omega);
      set2(1, 3, 2, -(n - 1) / omega);
      set2(2, 3, 1, (n - 1) / omega);
      for (int r = 1; r <= 3; ++r) {
        Form phi = phi_pattern(dm, r);
        for (int x = 4; x <= dm; ++x)
          for (int y = 4; y <= dm; ++y) {
            const double v = phi.eval({x, y}) / omega;
            t(r - 1, x - 1, y - 1) = v;
            t(x - 1, r - 1, y - 1) = -v;
          }
      }
      const double c = a / (b * omega);
      for (int p = 1; p <= n - 1; ++p) {
        set2(4 * p, 4 * p + 1, 1, -c);
        set2(4 * p, 4 * p + 2, 2, -c);
        set2(4 * p, 4 * p + 3, 3, -c);
        set2(4 * p + 1, 4 * p + 2, 3, -c);
        set2(4 * p + 1, 4 * p + 3, 2, c);
        set2(4 * p + 2, 4 * p + 3, 1, -c);
      }
      break;
    }
    case CaseTag::SpU1: {
      const double a = d.metric.at("a"), b = d.metric.at("b"), c = d.metric.at("c");
      const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
      const double sb = 2 * std::sqrt(b * (n + 1));
      set2(1, 2, 3, -2 / omega);
      set2(1, 3, 2, 2 / omega);
      set2(2, 3, 1, -2 * a / (b * omega));
      const double vh[3] = {1 / omega, 1 / sb, 1 / sb};
      for (int r = 1; r <= 3; ++r) {
        Form phi = phi_pattern(dm, r);
        for (int x = 4; x <= dm; ++x)
          for (int y = 4; y <= dm; ++y) {
            const double v = phi.eval({x, y}) * vh[r - 1];
            t(r - 1, x - 1, y - 1) = v;
            t(x - 1, r - 1, y - 1) = -v;
          }
      }
      const double c1 = a / (c * omega), c2 = std::sqrt(b) / (2 * c * std::sqrt(n + 1.0));
      for (int p = 1; p <= n - 1; ++p) {
        set2(4 * p, 4 * p + 1, 1, -c1);
        set2(4 * p, 4 * p + 2, 2, -c2);
        set2(4 * p, 4 * p + 3, 3, -c2);
        set2(4 * p + 1, 4 * p + 2, 3, -c2);
        set2(4 * p + 1, 4 * p + 3, 2, c2);
        set2(4 * p + 2, 4 * p + 3, 1, -c1);
      }
      break;
    }
    case CaseTag::G2: {
      const double s = 1.0 / std::sqrt(3 * d.metric.at("a"));
      Form f(6, 3);
      f.add(mask4(1, 3, 6), -s);
      f.add(mask4(1, 4, 5), -s);
      f.add(mask4(2, 3, 5), -s);
      f.add(mask4(2, 4, 6), s);
      t = form3_to_tensor(f);
      break;
    }
    case CaseTag::Spin7: {
      const double s = 1.0 / std::sqrt(6 * d.metric.at("a"));
      Form f(7, 3);
      f.add(mask4(1, 2, 3), -s);
      f.add(mask4(1, 4, 5), -s);
      f.add(mask4(1, 6, 7), -s);
      f.add(mask4(2, 4, 7), s);
      f.add(mask4(2, 5, 6), s);
      f.add(mask4(3, 4, 6), s);
      f.add(mask4(3, 5, 7), -s);
      t = form3_to_tensor(f);
      break;
    }
    case CaseTag::Spin9: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      Form w = s15_omega();
      const double cf = 1 / (2 * std::sqrt(2 * a));
      const double cb = std::sqrt(a) / (2 * b * std::sqrt(2.0));
      for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 15; ++j)
          for (int k = 1; k <= 15; ++k) {
            const double v = cf * w.eval({i, j, k});
            t(i - 1, j - 1, k - 1) = v;
          }
      for (int i = 8; i <= 15; ++i)
        for (int j = 1; j <= 15; ++j)
          for (int k = 1; k <= 15; ++k) {
            if (j == k) continue;
            t(i - 1, j - 1, k - 1) = (j < k ? cf : cb) * w.eval({i, j, k});
          }
      break;
    }
  }
  return t;
}

Form canonical_torsion_skew(const ReductiveDecomposition& d) {
  const int dm = d.dim_m();
  const int n = d.n;
  Form f(dm, 3);
  switch (d.tag) {
    case CaseTag::SO: break;
    case CaseTag::U: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double c = (a + 2 * b) / (3 * b * std::sqrt(a));
      for (int j = 1; j <= n; ++j) f.add(mask4(1, 2 * j, 2 * j + 1), c);
      break;
    }
    case CaseTag::SU: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double c = -(a + 2 * b) * std::sqrt(n + 1.0) / (3 * b * std::sqrt(a * n));
      for (int p = 1; p <= n; ++p) f.add(mask4(1, 2 * p, 2 * p + 1), c);
      break;
    }
    case CaseTag::Sp: {
      double a1, a2, a3, a4;
      if (d.metric.has("alpha")) {
        const double alpha = d.metric.at("alpha"), delta = d.metric.at("delta");
        a1 = a2 = a3 = 1 / (delta * delta);
        a4 = 1 / (2 * alpha * delta);
      } else {
        a1 = d.metric.at("a1");
        a2 = d.metric.at("a2");
        a3 = d.metric.at("a3");
        a4 = d.metric.at("a4");
      }
      f.add(mask4(1, 2, 3), -2.0 / 3.0 * (a1 + a2 + a3) / std::sqrt(a1 * a2 * a3));
      const double aa[3] = {a1, a2, a3};
      for (int r = 1; r <= 3; ++r) {
        Form er(dm, 1);
        er.add(1u << (r - 1), 1.0);
        const Form pat = phi_pattern(dm, r);
        Form hh(dm, 2);  // horizontal part of the fundamental 2-form
        for (const auto& [m, v] : pat.terms())
          if (!(m & 0b111)) hh.add(m, v);
        f += (aa[r - 1] + 2 * a4) / (3 * a4 * std::sqrt(aa[r - 1])) * wedge(er, hh);
      }
      break;
    }
    case CaseTag::SpSp1: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
      f.add(mask4(1, 2, 3), (n - 1.0) / omega);
      const double c = (2 / omega + a / (b * omega)) / 3.0;
      for (int r = 1; r <= 3; ++r) {
        Form er(dm, 1);
        er.add(1u << (r - 1), 1.0);
        const Form pat = phi_pattern(dm, r);
        Form hh(dm, 2);
        for (const auto& [m, v] : pat.terms())
          if (!(m & 0b111)) hh.add(m, v);
        f += c * wedge(er, hh);
      }
      break;
    }
    case CaseTag::SpU1: {
      const double a = d.metric.at("a"), b = d.metric.at("b"), c = d.metric.at("c");
      const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
      f.add(mask4(1, 2, 3), -(2 * a + 4 * b) / (3 * b * omega));
      const double coef[3] = {(a + 2 * c) / (3 * c * omega),
                              (b + 2 * c) / (6 * c * std::sqrt(b * (n + 1.0))),
                              (b + 2 * c) / (6 * c * std::sqrt(b * (n + 1.0)))};
      for (int r = 1; r <= 3; ++r) {
        Form er(dm, 1);
        er.add(1u << (r - 1), 1.0);
        const Form pat = phi_pattern(dm, r);
        Form hh(dm, 2);
        for (const auto& [m, v] : pat.terms())
          if (!(m & 0b111)) hh.add(m, v);
        f += coef[r - 1] * wedge(er, hh);
      }
      break;
    }
    case CaseTag::G2:
    case CaseTag::Spin7:
      return tensor_to_form3(canonical_torsion(d));  // already totally skew
    case CaseTag::Spin9: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      f = ((a + 2 * b) / (6 * b * std::sqrt(2 * a))) * s15_omega();
      break;
    }
  }
  return f;
}

bool naturally_reductive_params(const MetricSpec& m) {
  auto eq = [](double x, double y) { return std::abs(x - y) < 1e-12; };
  switch (m.tag) {
    case CaseTag::SO:
    case CaseTag::G2:
    case CaseTag::Spin7: return true;  // irreducible isotropy, normal metrics
    case CaseTag::U:
    case CaseTag::SU:
    case CaseTag::SpSp1:
    case CaseTag::Spin9: return eq(m.at("a"), m.at("b"));
    case CaseTag::SpU1: return eq(m.at("a"), m.at("b")) && eq(m.at("b"), m.at("c"));
    case CaseTag::Sp: {
      if (m.has("alpha")) return eq(m.at("delta"), 2 * m.at("alpha"));
      return eq(m.at("a1"), m.at("a2")) && eq(m.at("a2"), m.at("a3")) && eq(m.at("a3"), m.at("a4"));
    }
  }
  return false;
}

std::vector<std::vector<double>> gks_eigenvalues(const ReductiveDecomposition& d) {
  const int n = d.n;
  switch (d.tag) {
    case CaseTag::SU: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      const double l1 = (2 * b - a) * std::sqrt(n * (n + 1.0)) / (4 * b * std::sqrt(a));
      const double l2 = std::sqrt(a * (n + 1.0)) / (4 * b * std::sqrt(double(n)));
      const double s = (n % 2 == 1) ? 1.0 : -1.0;
      return {{l1, l2}, {s * l1, s * l2}};
    }
    case CaseTag::Sp: {
      if (n != 2) return {};
      double b[5];
      if (d.metric.has("alpha")) {
        const double alpha = d.metric.at("alpha"), delta = d.metric.at("delta");
        b[1] = b[2] = b[3] = 1 / (delta * delta);
        b[4] = 1 / (alpha * delta);
      } else {
        b[1] = d.metric.at("a1");
        b[2] = d.metric.at("a2");
        b[3] = d.metric.at("a3");
        b[4] = 2 * d.metric.at("a4");
      }
      auto TH = [&](int l, int m, int p) { return std::sqrt(b[l] / (b[m] * b[p])); };
      auto m3 = [](int p) { return (p - 1) % 3 + 1; };
      std::vector<std::vector<double>> out(4, std::vector<double>(4));
      for (int p = 1; p <= 3; ++p) {
        const double base = 0.5 * (-TH(p, m3(p + 1), m3(p + 2)) + TH(m3(p + 1), p, m3(p + 2)) +
                                   TH(m3(p + 2), p, m3(p + 1)));
        const double tail = TH(4, p, 4) - TH(p, 4, 4);
        out[0][p - 1] = base - tail;
        for (int k = 1; k <= 3; ++k) out[k][p - 1] = (k == p) ? base - tail : base + tail;
      }
      out[0][3] = -0.5 * (TH(1, 4, 4) + TH(2, 4, 4) + TH(3, 4, 4));
      for (int k = 1; k <= 3; ++k)
        out[k][3] = 0.5 * (-TH(k, 4, 4) + TH(m3(k + 1), 4, 4) + TH(m3(k + 2), 4, 4));
      return out;
    }
    case CaseTag::SpSp1: {
      if (n != 2) return {};
      const double a = d.metric.at("a"), b = d.metric.at("b");
      return {{(2 * a - 5 * b) / (4 * b * std::sqrt(30 * a)),
               -std::sqrt(3 * a) / (4 * b * std::sqrt(10.0))}};
    }
    case CaseTag::SpU1: {
      if (n != 2) return {};
      const double a = d.metric.at("a"), b = d.metric.at("b"), c = d.metric.at("c");
      const double omega = std::sqrt(2 * a * (n + 1) * (n + 3));
      const double m1 = a / (2 * omega) * (1 / c - 1 / b);
      const double m2a = a / (2 * b * omega);
      const double m2b = (1 - b / (2 * c)) / (2 * std::sqrt((n + 1) * b));
      const double m3a = -a / (4 * c * omega);
      const double m3b = std::sqrt(b) / (4 * c * std::sqrt(n + 1.0));
      return {{m1, m2a - m2b, m3a - m3b}, {m1, m2a + m2b, m3a + m3b}};
    }
    case CaseTag::G2: {
      const double l = 1 / (2 * std::sqrt(3 * d.metric.at("a")));
      return {{l}, {-l}};
    }
    case CaseTag::Spin7: {
      return {{std::sqrt(3.0) / (4 * std::sqrt(2 * d.metric.at("a")))}};
    }
    default: return {};
  }
}

std::optional<double> sasakian_alpha(const ReductiveDecomposition& d) {
  switch (d.tag) {
    case CaseTag::SU: {
      const double a = d.metric.at("a"), b = d.metric.at("b");
      return std::sqrt(a * (d.n + 1)) / (2 * b * std::sqrt(double(d.n)));
    }
    case CaseTag::SpU1: {
      const double a = d.metric.at("a"), b = d.metric.at("b"), c = d.metric.at("c");
      if (std::abs(b - 2 * c) > 1e-12) return std::nullopt;  // locus b = 2c
      const double omega = std::sqrt(2 * a * (d.n + 1) * (d.n + 3));
      return a / (b * omega);
    }
    default: return std::nullopt;
  }
}

std::vector<int> invariant_form_dims(CaseTag tag, int n) {
  if (tag == CaseTag::SpSp1 && n == 2) return {1, 0, 0, 2};
  if (tag == CaseTag::SpU1) return {1, 1, 2, 4};
  if (tag == CaseTag::Spin9) return {1, 0, 0, 1, 2, 1, 0, 4};
  return {};
}

namespace {

struct T4 { int s, i, j, k, l; };
struct T5 { int s, i, j, k, l, m; };

Form form_from_triples(int n, const std::vector<std::array<int, 4>>& rows) {
  Form f(n, 3);
  for (const auto& r : rows) f.add(mask4(r[1], r[2], r[3]), r[0]);
  return f;
}

}  // namespace

Form s15_omega() {
  static const std::vector<std::array<int, 4>> rows = {
      {-1, 1, 8, 9},   {+1, 1, 10, 11}, {+1, 1, 12, 13}, {-1, 1, 14, 15},
      {-1, 2, 8, 10},  {-1, 2, 9, 11},  {+1, 2, 12, 14}, {+1, 2, 13, 15},
      {-1, 3, 8, 11},  {+1, 3, 9, 10},  {+1, 3, 12, 15}, {-1, 3, 13, 14},
      {-1, 4, 8, 12},  {-1, 4, 9, 13},  {-1, 4, 10, 14}, {-1, 4, 11, 15},
      {-1, 5, 8, 13},  {+1, 5, 9, 12},  {-1, 5, 10, 15}, {+1, 5, 11, 14},
      {-1, 6, 8, 14},  {+1, 6, 9, 15},  {+1, 6, 10, 12}, {-1, 6, 11, 13},
      {-1, 7, 8, 15},  {-1, 7, 9, 14},  {+1, 7, 10, 13}, {+1, 7, 11, 12}};
  return form_from_triples(15, rows);
}

Form s15_Psi() {
  static const std::vector<T4> rows = {
      {+1, 8, 9, 10, 11},  {+1, 8, 9, 12, 13},  {-1, 8, 9, 14, 15},  {+1, 8, 10, 12, 14},
      {+1, 8, 10, 13, 15}, {+1, 8, 11, 12, 15}, {-1, 8, 11, 13, 14}, {-1, 9, 10, 12, 15},
      {+1, 9, 10, 13, 14}, {+1, 9, 11, 12, 14}, {+1, 9, 11, 13, 15}, {-1, 10, 11, 12, 13},
      {+1, 10, 11, 14, 15}, {+1, 12, 13, 14, 15}};
  Form f(15, 4);
  for (const auto& r : rows) f.add(mask4(r.i, r.j, r.k, r.l), r.s);
  return f;
}

Form s15_domega(double a, double b) {
  // sqrt(a/2) d omega = (mixed part) - (3a/2b) Psi; returned unnormalized.
  static const std::vector<T4> mixed = {
      {+1, 1, 2, 8, 11},  {-1, 1, 2, 9, 10},  {+1, 1, 2, 12, 15}, {-1, 1, 2, 13, 14},
      {-1, 1, 3, 8, 10},  {-1, 1, 3, 9, 11},  {-1, 1, 3, 12, 14}, {-1, 1, 3, 13, 15},
      {+1, 1, 4, 8, 13},  {-1, 1, 4, 9, 12},  {-1, 1, 4, 10, 15}, {+1, 1, 4, 11, 14},
      {-1, 1, 5, 8, 12},  {-1, 1, 5, 9, 13},  {+1, 1, 5, 10, 14}, {+1, 1, 5, 11, 15},
      {-1, 1, 6, 8, 15},  {-1, 1, 6, 9, 14},  {-1, 1, 6, 10, 13}, {-1, 1, 6, 11, 12},
      {+1, 1, 7, 8, 14},  {-1, 1, 7, 9, 15},  {+1, 1, 7, 10, 12}, {-1, 1, 7, 11, 13},
      {+1, 2, 3, 8, 9},   {-1, 2, 3, 10, 11}, {+1, 2, 3, 12, 13}, {-1, 2, 3, 14, 15},
      {+1, 2, 4, 8, 14},  {+1, 2, 4, 9, 15},  {-1, 2, 4, 10, 12}, {-1, 2, 4, 11, 13},
      {+1, 2, 5, 8, 15},  {-1, 2, 5, 9, 14},  {-1, 2, 5, 10, 13}, {+1, 2, 5, 11, 12},
      {-1, 2, 6, 8, 12},  {+1, 2, 6, 9, 13},  {-1, 2, 6, 10, 14}, {+1, 2, 6, 11, 15},
      {-1, 2, 7, 8, 13},  {-1, 2, 7, 9, 12},  {-1, 2, 7, 10, 15}, {-1, 2, 7, 11, 14},
      {+1, 3, 4, 8, 15},  {-1, 3, 4, 9, 14},  {+1, 3, 4, 10, 13}, {-1, 3, 4, 11, 12},
      {-1, 3, 5, 8, 14},  {-1, 3, 5, 9, 15},  {-1, 3, 5, 10, 12}, {-1, 3, 5, 11, 13},
      {+1, 3, 6, 8, 13},  {+1, 3, 6, 9, 12},  {-1, 3, 6, 10, 15}, {-1, 3, 6, 11, 14},
      {-1, 3, 7, 8, 12},  {+1, 3, 7, 9, 13},  {+1, 3, 7, 10, 14}, {-1, 3, 7, 11, 15},
      {+1, 4, 5, 8, 9},   {+1, 4, 5, 10, 11}, {-1, 4, 5, 12, 13}, {-1, 4, 5, 14, 15},
      {+1, 4, 6, 8, 10},  {-1, 4, 6, 9, 11},  {-1, 4, 6, 12, 14}, {+1, 4, 6, 13, 15},
      {+1, 4, 7, 8, 11},  {+1, 4, 7, 9, 10},  {-1, 4, 7, 12, 15}, {-1, 4, 7, 13, 14},
      {-1, 5, 6, 8, 11},  {-1, 5, 6, 9, 10},  {-1, 5, 6, 12, 15}, {-1, 5, 6, 13, 14},
      {+1, 5, 7, 8, 10},  {-1, 5, 7, 9, 11},  {+1, 5, 7, 12, 14}, {-1, 5, 7, 13, 15},
      {-1, 6, 7, 8, 9},   {-1, 6, 7, 10, 11}, {-1, 6, 7, 12, 13}, {-1, 6, 7, 14, 15}};
  Form f(15, 4);
  for (const auto& r : mixed) f.add(mask4(r.i, r.j, r.k, r.l), r.s);
  f += (-3 * a / (2 * b)) * s15_Psi();
  return std::sqrt(2 / a) * f;
}

Form s15_dPsi(double a) {
  // sqrt(a/2) d Psi has unit coefficients; returned unnormalized.
  static const std::vector<T5> rows = {
      {+1, 1, 8, 10, 12, 15}, {-1, 1, 8, 10, 13, 14}, {-1, 1, 8, 11, 12, 14},
      {-1, 1, 8, 11, 13, 15}, {+1, 1, 9, 10, 12, 14}, {+1, 1, 9, 10, 13, 15},
      {+1, 1, 9, 11, 12, 15}, {-1, 1, 9, 11, 13, 14}, {-1, 2, 8, 9, 12, 15},
      {+1, 2, 8, 9, 13, 14},  {+1, 2, 8, 11, 12, 13}, {-1, 2, 8, 11, 14, 15},
      {-1, 2, 9, 10, 12, 13}, {+1, 2, 9, 10, 14, 15}, {+1, 2, 10, 11, 12, 15},
      {-1, 2, 10, 11, 13, 14}, {+1, 3, 8, 9, 12, 14}, {+1, 3, 8, 9, 13, 15},
      {-1, 3, 8, 10, 12, 13}, {+1, 3, 8, 10, 14, 15}, {-1, 3, 9, 11, 12, 13},
      {+1, 3, 9, 11, 14, 15}, {-1, 3, 10, 11, 12, 14}, {-1, 3, 10, 11, 13, 15},
      {+1, 4, 8, 9, 10, 15},  {-1, 4, 8, 9, 11, 14},  {+1, 4, 8, 10, 11, 13},
      {-1, 4, 8, 13, 14, 15}, {-1, 4, 9, 10, 11, 12}, {+1, 4, 9, 12, 14, 15},
      {-1, 4, 10, 12, 13, 15}, {+1, 4, 11, 12, 13, 14}, {-1, 5, 8, 9, 10, 14},
      {-1, 5, 8, 9, 11, 15},  {-1, 5, 8, 10, 11, 12},  {+1, 5, 8, 12, 14, 15},
      {-1, 5, 9, 10, 11, 13}, {+1, 5, 9, 13, 14, 15},  {+1, 5, 10, 12, 13, 14},
      {+1, 5, 11, 12, 13, 15}, {+1, 6, 8, 9, 10, 13}, {+1, 6, 8, 9, 11, 12},
      {-1, 6, 8, 10, 11, 15}, {-1, 6, 8, 12, 13, 15}, {-1, 6, 9, 10, 11, 14},
      {-1, 6, 9, 12, 13, 14}, {+1, 6, 10, 13, 14, 15}, {+1, 6, 11, 12, 14, 15},
      {-1, 7, 8, 9, 10, 12},  {+1, 7, 8, 9, 11, 13},  {+1, 7, 8, 10, 11, 14},
      {+1, 7, 8, 12, 13, 14}, {-1, 7, 9, 10, 11, 15}, {-1, 7, 9, 12, 13, 15},
      {-1, 7, 10, 12, 14, 15}, {+1, 7, 11, 13, 14, 15}};
  Form f(15, 5);
  for (const auto& r : rows) {
    uint32_t m = (1u << (r.i - 1)) | (1u << (r.j - 1)) | (1u << (r.k - 1)) | (1u << (r.l - 1)) |
                 (1u << (r.m - 1));
    f.add(m, r.s);
  }
  return std::sqrt(2 / a) * f;
}

Spinor s15_psi(const SpinorSpace& sp) {
  if (sp.n() != 15 || sp.ordering() != BasisOrdering::Reordered)
    throw std::invalid_argument("s15_psi: expects the reordered 15-dimensional module");
  VectorXcd c = VectorXcd::Zero(128);
  const double s = 1 / (2 * std::sqrt(2.0));
  // The reference expression enumerates the isotropic slots from the top
  // frame pair down, so its slot j is slot 8-j here; reversing each sorted
  // monomial contributes the parity sign below.
  auto y = [](std::initializer_list<int> js) {
    uint32_t m = 0;
    int k = 0;
    for (int j : js) {
      m |= 1u << (8 - j - 1);
      ++k;
    }
    return std::pair<uint32_t, double>{m, (k * (k - 1) / 2) % 2 ? -1.0 : 1.0};
  };
  const cplx I{0, 1};
  auto put = [&](std::pair<uint32_t, double> ms, cplx v) { c(ms.first) = ms.second * v; };
  put(y({1, 5}), -I * s);
  put(y({1, 2, 3}), s);
  put(y({2, 5, 7}), s);
  put(y({3, 5, 6}), -s);
  put(y({1, 2, 4, 7}), I * s);
  put(y({1, 3, 4, 6}), -I * s);
  put(y({4, 5, 6, 7}), -I * s);
  put(y({2, 3, 4, 6, 7}), s);
  return {sp, c};
}

double s15_squaring_c4(double a) { return -std::sqrt(a) / (2 * std::sqrt(2.0)); }

std::array<double, 4> s15_squaring_c7(double a, double b) {
  return {-b * std::sqrt(2.0) / (18 * std::sqrt(a)), std::sqrt(a) / (6 * std::sqrt(2.0)),
          -std::sqrt(a) / (8 * std::sqrt(2.0)), -1.0 / 14};
}

}  // namespace ssp::expected

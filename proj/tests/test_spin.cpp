#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/kernel.hpp"
#include "spin/lift.hpp"

using namespace ssp;

namespace {

std::mt19937 rng(99);

MatrixXd random_skew(int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u(rng);
  return m - m.transpose().eval();
}

MatrixXd wedge_matrix(int n, int i, int j) {
  MatrixXd m = MatrixXd::Zero(n, n);
  m(j - 1, i - 1) = 1.0;
  m(i - 1, j - 1) = -1.0;
  return m;
}

// omega = y_2^y_3 + y_4^y_5 + ... + y_{2(n-1)}^y_{2n-1} on l = 2n-1 slots.
VectorXcd omega_coeffs(int l, int n) {
  VectorXcd w = VectorXcd::Zero(1 << l);
  for (int i = 1; i <= n - 1; ++i) w((1u << (2 * i - 1)) | (1u << (2 * i))) = 1.0;
  return w;
}

VectorXcd vacuum(int l) {
  VectorXcd v = VectorXcd::Zero(1 << l);
  v(0) = 1.0;
  return v;
}

VectorXcd wedge_pow(int l, const VectorXcd& a, int p) {
  VectorXcd out = vacuum(l);
  for (int i = 0; i < p; ++i) out = exterior_mul(l, out, a);
  return out;
}

std::vector<VectorXcd> coeff_list(const std::vector<Spinor>& sp) {
  std::vector<VectorXcd> out;
  for (const auto& s : sp) out.push_back(s.coeffs);
  return out;
}

// Canonical spinors of the 7-dimensional quaternionic spheres:
// psi_0 = (omega + i y_1)/sqrt2 and psi_r = xi_r . psi_0.
Spinor psi0_dim7(const SpinorSpace& sp) {
  VectorXcd c = VectorXcd::Zero(8);
  c(0b110) = 1.0 / std::sqrt(2.0);
  c(0b001) = cplx(0, 1) / std::sqrt(2.0);
  return {sp, c};
}

struct Expect47 {
  double l1, l2, l3, l4;
};

// Eigenvalues of the four endomorphisms on the plain quaternionic 7-sphere,
// in terms of Theta^l_{m,n} = sqrt(b_l/(b_m b_n)), b = (a1,a2,a3,2 a4).
std::vector<Expect47> sp2_expected_eigenvalues(double a1, double a2, double a3, double a4) {
  const double b[5] = {0, a1, a2, a3, 2 * a4};
  auto TH = [&](int l, int m, int n) { return std::sqrt(b[l] / (b[m] * b[n])); };
  auto m3 = [](int p) { return (p - 1) % 3 + 1; };
  std::vector<Expect47> out(4);
  auto vertical = [&](int p) {
    return 0.5 * (-TH(p, m3(p + 1), m3(p + 2)) + TH(m3(p + 1), p, m3(p + 2)) +
                  TH(m3(p + 2), p, m3(p + 1)));
  };
  for (int p = 1; p <= 3; ++p) {
    const double base = vertical(p);
    const double tail = TH(4, p, 4) - TH(p, 4, 4);
    out[0].*(p == 1 ? &Expect47::l1 : p == 2 ? &Expect47::l2 : &Expect47::l3) = base - tail;
    for (int k = 1; k <= 3; ++k) {
      const double v = (k == p) ? base - tail : base + tail;
      out[k].*(p == 1 ? &Expect47::l1 : p == 2 ? &Expect47::l2 : &Expect47::l3) = v;
    }
  }
  out[0].l4 = -0.5 * (TH(1, 4, 4) + TH(2, 4, 4) + TH(3, 4, 4));
  for (int k = 1; k <= 3; ++k)
    out[k].l4 = 0.5 * (-TH(k, 4, 4) + TH(m3(k + 1), 4, 4) + TH(m3(k + 2), 4, 4));
  return out;
}

}  // namespace

TEST_CASE("spin lift basics") {
  SpinorSpace sp2(2, BasisOrdering::Standard);
  CHECK(spin_lift(MatrixXd::Zero(2, 2), sp2).cwiseAbs().maxCoeff() == 0.0);

  MatrixXcd l12 = spin_lift(wedge_matrix(2, 1, 2), sp2);
  CHECK(std::abs(l12(0, 0) - cplx(0, 0.5)) < 1e-14);
  CHECK(std::abs(l12(1, 1) + cplx(0, 0.5)) < 1e-14);
  CHECK(std::abs(l12(0, 1)) + std::abs(l12(1, 0)) < 1e-14);

  MatrixXd notskew = MatrixXd::Identity(3, 3);
  SpinorSpace sp3(3, BasisOrdering::Standard);
  CHECK_THROWS_AS(spin_lift(notskew, sp3), std::invalid_argument);
}

TEST_CASE("spin lift is a bracket-preserving anti-hermitian representation") {
  for (int n : {6, 7, 8}) {
    for (auto ord : {BasisOrdering::Standard, BasisOrdering::Reordered}) {
      if (ord == BasisOrdering::Reordered && n % 2 == 0) continue;
      SpinorSpace sp(n, ord);
      for (int t = 0; t < 34; ++t) {
        MatrixXd a = random_skew(n), b = random_skew(n);
        MatrixXcd la = spin_lift(a, sp), lb = spin_lift(b, sp);
        MatrixXcd lhs = la * lb - lb * la;
        MatrixXcd rhs = spin_lift((a * b - b * a).eval(), sp);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((la + la.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("invariant spinor dimensions across the catalogue") {
  auto dim_of = [](CaseTag tag, int n, const MetricSpec& m) {
    auto d = build_presentation(tag, n, m);
    auto sp = spinor_space_of(d);
    return invariant_spinors(d, sp, 1e-9).size();
  };
  for (double s : {1.0, 0.5}) {
    for (int n : {3, 4, 5, 6})
      CHECK(dim_of(CaseTag::SO, n, make_metric(CaseTag::SO, {{"a", s}})) == 0);
    for (int n : {1, 2, 3})
      CHECK(dim_of(CaseTag::U, n, make_metric(CaseTag::U, {{"a", s}, {"b", 1.0}})) == 0);
    for (int n : {1, 2, 3, 4})
      CHECK(dim_of(CaseTag::SU, n, make_metric(CaseTag::SU, {{"a", s}, {"b", 1.3}})) == 2);
    for (int n : {2, 3})
      CHECK(dim_of(CaseTag::Sp, n,
                   make_metric(CaseTag::Sp, {{"a1", s}, {"a2", 1.0}, {"a3", 0.7}, {"a4", 1.2}})) ==
            size_t(2 * n));
    CHECK(dim_of(CaseTag::SpSp1, 2, make_metric(CaseTag::SpSp1, {{"a", s}, {"b", 0.8}})) == 1);
    CHECK(dim_of(CaseTag::SpSp1, 3, make_metric(CaseTag::SpSp1, {{"a", s}, {"b", 0.8}})) == 0);
    CHECK(dim_of(CaseTag::SpU1, 2, make_metric(CaseTag::SpU1, {{"a", s}, {"b", 1.5}, {"c", 0.9}})) ==
          2);
    CHECK(dim_of(CaseTag::SpU1, 3, make_metric(CaseTag::SpU1, {{"a", s}, {"b", 1.5}, {"c", 0.9}})) ==
          0);
    CHECK(dim_of(CaseTag::SpU1, 4, make_metric(CaseTag::SpU1, {{"a", s}, {"b", 1.5}, {"c", 0.9}})) ==
          2);
    CHECK(dim_of(CaseTag::G2, 0, make_metric(CaseTag::G2, {{"a", s}})) == 2);
    CHECK(dim_of(CaseTag::Spin7, 0, make_metric(CaseTag::Spin7, {{"a", s}})) == 1);
    CHECK(dim_of(CaseTag::Spin9, 0, make_metric(CaseTag::Spin9, {{"a", s}, {"b", 0.6}})) == 1);
  }
}

TEST_CASE("invariant spinor spans match the closed forms") {
  // special unitary: span{1, y_1^...^y_n}
  for (int n : {2, 3}) {
    auto d = build_presentation(CaseTag::SU, n, default_metric(CaseTag::SU));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    std::vector<VectorXcd> expect{vacuum(sp.l())};
    VectorXcd vol = vacuum(sp.l());
    for (int j = 1; j <= n; ++j) {
      VectorXcd yj = VectorXcd::Zero(1 << sp.l());
      yj(1u << (j - 1)) = 1.0;
      vol = exterior_mul(sp.l(), vol, yj);
    }
    expect.push_back(vol);
    CHECK(span_distance(coeff_list(inv), expect) < 1e-8);
  }

  // plain quaternionic: span{omega^j, y_1 ^ omega^j}
  for (int n : {2, 3}) {
    auto d = build_presentation(CaseTag::Sp, n, default_metric(CaseTag::Sp));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    const int l = sp.l();
    VectorXcd om = omega_coeffs(l, n);
    VectorXcd y1 = VectorXcd::Zero(1 << l);
    y1(1) = 1.0;
    std::vector<VectorXcd> expect;
    for (int j = 0; j <= n - 1; ++j) {
      expect.push_back(wedge_pow(l, om, j));
      expect.push_back(exterior_mul(l, y1, wedge_pow(l, om, j)));
    }
    CHECK(span_distance(coeff_list(inv), expect) < 1e-8);
  }

  // doubly twisted 7-sphere: span{psi_0}
  {
    auto d = build_presentation(CaseTag::SpSp1, 2, default_metric(CaseTag::SpSp1));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    REQUIRE(inv.size() == 1);
    CHECK(span_distance(coeff_list(inv), {psi0_dim7(sp).coeffs}) < 1e-8);
  }

  // circle twisted: span{omega^{n/2}, y_1 ^ omega^{(n-2)/2}}
  for (int n : {2, 4}) {
    auto d = build_presentation(CaseTag::SpU1, n, default_metric(CaseTag::SpU1));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    const int l = sp.l();
    VectorXcd om = omega_coeffs(l, n);
    VectorXcd y1 = VectorXcd::Zero(1 << l);
    y1(1) = 1.0;
    std::vector<VectorXcd> expect{wedge_pow(l, om, n / 2),
                                  exterior_mul(l, y1, wedge_pow(l, om, (n - 2) / 2))};
    CHECK(span_distance(coeff_list(inv), expect) < 1e-8);
  }

  // hexadimensional exceptional sphere: span{1, y_123}
  {
    auto d = build_presentation(CaseTag::G2, 0, default_metric(CaseTag::G2));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    std::vector<VectorXcd> expect{vacuum(3)};
    VectorXcd y123 = VectorXcd::Zero(8);
    y123(0b111) = 1.0;
    expect.push_back(y123);
    CHECK(span_distance(coeff_list(inv), expect) < 1e-8);
  }

  // seven-sphere over the octonions: span{-1 + y_123}
  {
    auto d = build_presentation(CaseTag::Spin7, 0, default_metric(CaseTag::Spin7));
    auto sp = spinor_space_of(d);
    auto inv = invariant_spinors(d, sp, 1e-9);
    VectorXcd psi = VectorXcd::Zero(8);
    psi(0) = -1.0;
    psi(0b111) = 1.0;
    CHECK(span_distance(coeff_list(inv), {psi}) < 1e-8);
  }
}

TEST_CASE("killing spinors on the exceptional spheres") {
  // G2/SU(3): nabla psi_pm = +- 1/(2 sqrt 3) X . psi_pm
  auto d = build_presentation(CaseTag::G2, 0, default_metric(CaseTag::G2));
  auto sp = spinor_space_of(d);
  auto lc = nomizu_levi_civita(d);
  for (int sgn : {1, -1}) {
    VectorXcd c = vacuum(3);
    c(0b111) = sgn;
    Spinor psi(sp, c);
    const double lambda = sgn / (2 * std::sqrt(3.0));
    for (int i = 0; i < 6; ++i) {
      Spinor lhs = spinor_covariant_derivative(lc, sp, i, psi);
      VectorXd dir = VectorXd::Zero(6);
      dir(i) = 1.0;
      Spinor rhs = clifford_vector_apply(dir, psi);
      CHECK((lhs.coeffs - lambda * rhs.coeffs).norm() < 1e-10);
    }
    auto fit = fit_generalized_killing(d, lc, sp, psi);
    CHECK(fit.success);
    REQUIRE(fit.eigenvalues.size() == 1);
    CHECK(fit.eigenvalues[0] == doctest::Approx(lambda).epsilon(1e-9));
  }

  // Spin(7)/G2: nabla psi = sqrt3/(4 sqrt2) X . psi
  auto d7 = build_presentation(CaseTag::Spin7, 0, default_metric(CaseTag::Spin7));
  auto sp7 = spinor_space_of(d7);
  auto lc7 = nomizu_levi_civita(d7);
  VectorXcd c7 = VectorXcd::Zero(8);
  c7(0) = -1.0;
  c7(0b111) = 1.0;
  Spinor psi7(sp7, c7);
  auto fit7 = fit_generalized_killing(d7, lc7, sp7, psi7);
  CHECK(fit7.success);
  CHECK(fit7.eigenvalues[0] == doctest::Approx(std::sqrt(3.0) / (4 * std::sqrt(2.0))).epsilon(1e-9));
}

TEST_CASE("generalized killing spinors of the special unitary spheres") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {0.5, 2}, {1.9, 0.7}}) {
    for (int n : {2, 3, 4}) {
      auto d = build_presentation(CaseTag::SU, n, make_metric(CaseTag::SU, {{"a", a}, {"b", b}}));
      auto sp = spinor_space_of(d);
      auto lc = nomizu_levi_civita(d);
      const double l1 = (2 * b - a) * std::sqrt(n * (n + 1.0)) / (4 * b * std::sqrt(a));
      const double l2 = std::sqrt(a * (n + 1.0)) / (4 * b * std::sqrt(double(n)));

      Spinor psip(sp, vacuum(sp.l()));
      // direction e_1 acts with eigenvalue lambda_1
      Spinor d1 = spinor_covariant_derivative(lc, sp, 0, psip);
      VectorXd e1 = VectorXd::Zero(d.dim_m());
      e1(0) = 1.0;
      CHECK((d1.coeffs - l1 * clifford_vector_apply(e1, psip).coeffs).norm() < 1e-10);

      auto fitp = fit_generalized_killing(d, lc, sp, psip);
      CHECK(fitp.success);
      CHECK(fitp.eigenvalues[0] == doctest::Approx(l1).epsilon(1e-9));
      CHECK(fitp.eigenvalues[1] == doctest::Approx(l2).epsilon(1e-9));

      VectorXcd vol = vacuum(sp.l());
      for (int j = 1; j <= n; ++j) {
        VectorXcd yj = VectorXcd::Zero(1 << sp.l());
        yj(1u << (j - 1)) = 1.0;
        vol = exterior_mul(sp.l(), vol, yj);
      }
      auto fitm = fit_generalized_killing(d, lc, sp, Spinor(sp, vol));
      CHECK(fitm.success);
      const double sign = (n % 2 == 1) ? 1.0 : -1.0;
      CHECK(fitm.eigenvalues[0] == doctest::Approx(sign * l1).epsilon(1e-9));
      CHECK(fitm.eigenvalues[1] == doctest::Approx(sign * l2).epsilon(1e-9));

      // Killing locus a = 2bn/(n+1)
      const bool killing = std::abs(a - 2 * b * n / (n + 1.0)) < 1e-12;
      CHECK((std::abs(l1 - l2) < 1e-12) == killing);
      if (killing) CHECK(l1 == doctest::Approx(1 / (2 * std::sqrt(2 * b))));
    }
  }
  // the Killing locus parameters themselves
  for (int n : {2, 3}) {
    const double b = 0.8, a = 2 * b * n / (n + 1.0);
    auto d = build_presentation(CaseTag::SU, n, make_metric(CaseTag::SU, {{"a", a}, {"b", b}}));
    auto sp = spinor_space_of(d);
    auto lc = nomizu_levi_civita(d);
    auto fit = fit_generalized_killing(d, lc, sp, Spinor(sp, vacuum(sp.l())));
    CHECK(fit.success);
    CHECK(fit.eigenvalues[0] == doctest::Approx(1 / (2 * std::sqrt(2 * b))).epsilon(1e-9));
    CHECK(fit.eigenvalues[1] == doctest::Approx(1 / (2 * std::sqrt(2 * b))).epsilon(1e-9));
  }
}

TEST_CASE("four-eigenvalue generalized killing spinors in dimension seven") {
  struct P { double a1, a2, a3, a4; };
  for (P p : {P{1, 1, 1, 1}, P{0.5, 0.9, 1.4, 0.7}, P{2.0, 0.6, 1.1, 1.7}}) {
    auto d = build_presentation(
        CaseTag::Sp, 2,
        make_metric(CaseTag::Sp, {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}, {"a4", p.a4}}));
    auto sp = spinor_space_of(d);
    auto lc = nomizu_levi_civita(d);
    auto expect = sp2_expected_eigenvalues(p.a1, p.a2, p.a3, p.a4);

    Spinor psi0 = psi0_dim7(sp);
    std::vector<Spinor> psis{psi0};
    for (int r = 0; r < 3; ++r) {
      VectorXd xi = VectorXd::Zero(7);
      xi(r) = 1.0;
      psis.push_back(clifford_vector_apply(xi, psi0));  // psi_r = xi_r . psi_0
    }
    for (int i = 0; i < 4; ++i) {
      auto fit = fit_generalized_killing(d, lc, sp, psis[i]);
      CAPTURE(i);
      CHECK(fit.success);
      REQUIRE(fit.eigenvalues.size() == 4);
      CHECK(fit.eigenvalues[0] == doctest::Approx(expect[i].l1).epsilon(1e-8));
      CHECK(fit.eigenvalues[1] == doctest::Approx(expect[i].l2).epsilon(1e-8));
      CHECK(fit.eigenvalues[2] == doctest::Approx(expect[i].l3).epsilon(1e-8));
      CHECK(fit.eigenvalues[3] == doctest::Approx(expect[i].l4).epsilon(1e-8));
    }
  }

  // generic parameters give four distinct eigenvalues
  auto d = build_presentation(
      CaseTag::Sp, 2,
      make_metric(CaseTag::Sp, {{"a1", 0.53}, {"a2", 0.97}, {"a3", 1.41}, {"a4", 0.71}}));
  auto sp = spinor_space_of(d);
  auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi0_dim7(sp));
  CHECK(fit.success);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(std::abs(fit.eigenvalues[i] - fit.eigenvalues[j]) > 1e-6);
}

TEST_CASE("contact-pair metrics recover the two-block derivative pattern") {
  // With parameters (alpha,delta): -3alpha/2 horizontally, (2alpha-delta)/2
  // vertically for psi_0; the second Einstein scaling delta = 5 alpha makes
  // psi_0 a Killing spinor.
  for (auto [alpha, delta] : std::vector<std::pair<double, double>>{{1, 1}, {0.4, 2.0}, {0.6, 3.0}}) {
    auto d = build_presentation(CaseTag::Sp, 2,
                                make_metric(CaseTag::Sp, {{"alpha", alpha}, {"delta", delta}}));
    auto sp = spinor_space_of(d);
    auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi0_dim7(sp));
    CHECK(fit.success);
    CHECK(fit.eigenvalues[0] == doctest::Approx((2 * alpha - delta) / 2).epsilon(1e-9));
    CHECK(fit.eigenvalues[1] == doctest::Approx((2 * alpha - delta) / 2).epsilon(1e-9));
    CHECK(fit.eigenvalues[2] == doctest::Approx((2 * alpha - delta) / 2).epsilon(1e-9));
    CHECK(fit.eigenvalues[3] == doctest::Approx(-1.5 * alpha).epsilon(1e-9));
  }
  const double alpha = 0.3, delta = 5 * alpha;
  auto d = build_presentation(CaseTag::Sp, 2,
                              make_metric(CaseTag::Sp, {{"alpha", alpha}, {"delta", delta}}));
  auto sp = spinor_space_of(d);
  auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi0_dim7(sp));
  CHECK(fit.success);
  for (double l : fit.eigenvalues) CHECK(l == doctest::Approx(-1.5 * alpha).epsilon(1e-9));
}

TEST_CASE("deformed killing spinors beyond dimension seven") {
  // psi = 1 + y_1 ^ omega^{n-1} on the n = 3 sphere: generalized Killing
  // precisely when b2 = b3 = b4.
  auto make = [](double a1, double a2, double a3, double a4) {
    return build_presentation(
        CaseTag::Sp, 3,
        make_metric(CaseTag::Sp, {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"a4", a4}}));
  };
  auto psi_e1 = [](const SpinorSpace& sp, int n) {
    VectorXcd y1 = VectorXcd::Zero(1 << sp.l());
    y1(1) = 1.0;
    VectorXcd c = vacuum(sp.l()) + exterior_mul(sp.l(), y1, wedge_pow(sp.l(), omega_coeffs(sp.l(), n), n - 1));
    return Spinor(sp, c);
  };

  {  // b2 = b3 = b4 = t means a2 = a3 = t, a4 = t/2
    const double a1 = 0.7, t = 1.3;
    auto d = make(a1, t, t, t / 2);
    auto sp = spinor_space_of(d);
    auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi_e1(sp, 3));
    CHECK(fit.success);
    const int n = 3;
    const double th122 = std::sqrt(a1 / (t * t));
    const double th212 = std::sqrt(t / (a1 * t));
    const double lam1 = 0.5 * ((1 - 2 * n) * th122 + 2 * n * th212);
    CHECK(fit.eigenvalues[0] == doctest::Approx(lam1).epsilon(1e-8));
    for (int s : {1, 2, 3})
      CHECK(fit.eigenvalues[s] == doctest::Approx(0.5 * th122).epsilon(1e-8));
  }
  {  // b2 != b4 breaks the fit
    auto d = make(0.7, 1.3, 1.3, 1.0);
    auto sp = spinor_space_of(d);
    auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi_e1(sp, 3));
    CHECK(!fit.success);
    CHECK(fit.max_residual > 1e-3);
  }
}

TEST_CASE("generalized killing spinor of the doubly twisted 7-sphere") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {0.5, 1.2}, {2.2, 0.6}}) {
    auto d = build_presentation(CaseTag::SpSp1, 2, make_metric(CaseTag::SpSp1, {{"a", a}, {"b", b}}));
    auto sp = spinor_space_of(d);
    auto fit = fit_generalized_killing(d, nomizu_levi_civita(d), sp, psi0_dim7(sp));
    CHECK(fit.success);
    REQUIRE(fit.eigenvalues.size() == 2);
    CHECK(fit.eigenvalues[0] ==
          doctest::Approx((2 * a - 5 * b) / (4 * b * std::sqrt(30 * a))).epsilon(1e-8));
    CHECK(fit.eigenvalues[1] ==
          doctest::Approx(-std::sqrt(3 * a) / (4 * b * std::sqrt(10.0))).epsilon(1e-8));
    // Killing precisely at a = b
    const bool killing = std::abs(fit.eigenvalues[0] - fit.eigenvalues[1]) < 1e-10;
    CHECK(killing == (a == b));
  }
}

TEST_CASE("three-eigenvalue generalized killing spinors of the circle-twisted 7-sphere") {
  for (auto [a, b, c] :
       std::vector<std::array<double, 3>>{{1, 1, 1}, {0.8, 1.3, 0.5}, {2.0, 0.7, 1.1}}) {
    auto d = build_presentation(CaseTag::SpU1, 2,
                                make_metric(CaseTag::SpU1, {{"a", a}, {"b", b}, {"c", c}}));
    auto sp = spinor_space_of(d);
    auto lc = nomizu_levi_civita(d);
    const double omega = std::sqrt(2 * a * 3 * 5);
    const double m1 = a / (2 * omega) * (1 / c - 1 / b);
    const double m2a = a / (2 * b * omega), m2b = (1 - b / (2 * c)) / (2 * std::sqrt(3 * b));
    const double m3a = -a / (4 * c * omega), m3b = std::sqrt(b) / (4 * c * std::sqrt(3.0));

    Spinor psi0 = psi0_dim7(sp);
    VectorXd xi1 = VectorXd::Zero(7);
    xi1(0) = 1.0;
    Spinor psi1 = clifford_vector_apply(xi1, psi0);

    auto fit0 = fit_generalized_killing(d, lc, sp, psi0);
    CHECK(fit0.success);
    CHECK(fit0.eigenvalues[0] == doctest::Approx(m1).epsilon(1e-8));
    CHECK(fit0.eigenvalues[1] == doctest::Approx(m2a - m2b).epsilon(1e-8));
    CHECK(fit0.eigenvalues[2] == doctest::Approx(m3a - m3b).epsilon(1e-8));

    auto fit1 = fit_generalized_killing(d, lc, sp, psi1);
    CHECK(fit1.success);
    CHECK(fit1.eigenvalues[0] == doctest::Approx(m1).epsilon(1e-8));
    CHECK(fit1.eigenvalues[1] == doctest::Approx(m2a + m2b).epsilon(1e-8));
    CHECK(fit1.eigenvalues[2] == doctest::Approx(m3a + m3b).epsilon(1e-8));
  }
}

TEST_CASE("friedrich-kath spaces of the quaternionic spheres") {
  for (int n : {2, 3}) {
    const double alpha = 0.8, delta = 1.9;
    auto d = build_presentation(CaseTag::Sp, n,
                                make_metric(CaseTag::Sp, {{"alpha", alpha}, {"delta", delta}}));
    auto sp = spinor_space_of(d);
    const int dm = d.dim_m();

    // phi_1 = (1/2delta) ad(xi_1)|_V + (1/delta) ad(xi_1)|_H
    MatrixXd phi = MatrixXd::Zero(dm, dm);
    for (int i = 0; i < dm; ++i) {
      Eigen::VectorXd mc, hc;
      d.bracket_projections(d.m_onb[0], d.m_onb[i], mc, hc);
      phi.col(i) = (i < 3 ? 1 / (2 * delta) : 1 / delta) * mc;
    }
    VectorXd xi = VectorXd::Zero(dm);
    xi(0) = 1.0;

    auto em = friedrich_kath_space(d, sp, xi, phi, -1, 1e-9);
    CHECK(em.size() == 2);
    VectorXcd y1 = VectorXcd::Zero(1 << sp.l());
    y1(1) = 1.0;
    std::vector<VectorXcd> expect{
        vacuum(sp.l()), exterior_mul(sp.l(), y1, wedge_pow(sp.l(), omega_coeffs(sp.l(), n), n - 1))};
    CHECK(span_distance(coeff_list(em), expect) < 1e-8);

    CHECK(friedrich_kath_space(d, sp, xi, phi, +1, 1e-9).empty());

    // global sign flip of (xi, phi) preserves the dimension
    auto em_flip = friedrich_kath_space(d, sp, (-xi).eval(), (-phi).eval(), -1, 1e-9);
    CHECK(em_flip.size() == 2);
  }
}

TEST_CASE("circle-twisted sphere: E_1^- meets the invariants trivially") {
  const double a = 1.1, b = 0.9, c = 1.4;
  auto d =
      build_presentation(CaseTag::SpU1, 2, make_metric(CaseTag::SpU1, {{"a", a}, {"b", b}, {"c", c}}));
  auto sp = spinor_space_of(d);
  const int dm = d.dim_m();
  const double omega = std::sqrt(2 * a * 3 * 5);
  MatrixXd phi = MatrixXd::Zero(dm, dm);
  for (int i = 1; i < dm; ++i) {
    Eigen::VectorXd mc, hc;
    d.bracket_projections(d.m_onb[0], d.m_onb[i], mc, hc);
    phi.col(i) = (i < 3 ? omega / 2 : omega) * mc;
  }
  VectorXd xi = VectorXd::Zero(dm);
  xi(0) = 1.0;
  auto em = friedrich_kath_space(d, sp, xi, phi, -1, 1e-9);
  CHECK(em.size() == 2);
  auto inv = invariant_spinors(d, sp, 1e-9);
  REQUIRE(inv.size() == 2);

  // intersection of the two spans is trivial: stacked projections have no
  // common direction
  MatrixXcd basis(8, 4);
  auto e1 = orthonormalize(coeff_list(em));
  auto i1 = orthonormalize(coeff_list(inv));
  basis << e1[0], e1[1], i1[0], i1[1];
  Eigen::JacobiSVD<MatrixXcd> svd(basis);
  CHECK(svd.singularValues().minCoeff() > 1e-6);  // 4 independent directions
}

TEST_CASE("derivatives with skew torsion") {
  const int n = 4;
  const double eps = -1.0, s = 0.37;
  const double a = -n * eps / (n + 1.0), b = 0.5;
  auto d = build_presentation(CaseTag::SU, n, make_metric(CaseTag::SU, {{"a", a}, {"b", b}}));
  auto sp = spinor_space_of(d);
  auto lc = nomizu_levi_civita(d);

  // T = -2 eps s Phi ^ eta with Phi = -sum e_{2p} ^ e_{2p+1}
  Form Phi(d.dim_m(), 2);
  for (int p = 1; p <= n; ++p) Phi.set_sorted({2 * p, 2 * p + 1}, -1.0);
  Form eta(d.dim_m(), 1);
  eta.set_sorted({1}, 1.0);
  Form T = (-2 * eps * s) * wedge(Phi, eta);

  // zero torsion reduces to the Riemannian derivative
  Spinor psi(sp, vacuum(sp.l()));
  Form zero(d.dim_m(), 3);
  for (int i = 0; i < d.dim_m(); ++i) {
    Spinor with = skew_torsion_spinor_derivative(lc, sp, zero, i, psi);
    Spinor without = spinor_covariant_derivative(lc, sp, i, psi);
    CHECK((with.coeffs - without.coeffs).norm() < 1e-14);
  }

  // in the Reeb direction the torsion contribution is -(eps s/2) Phi . psi
  Form i1t = interior(1, T);
  CHECK((i1t - (-2 * eps * s) * Phi).norm() < 1e-12);
  Spinor corr = clifford_form_apply(i1t, psi);
  Spinor direct = clifford_form_apply(Phi, psi);
  CHECK((0.25 * corr.coeffs - (-0.5 * eps * s) * direct.coeffs).norm() < 1e-12);

  // the torsion family preserves the generalized Killing property with
  // two shifted eigenvalues
  auto fit = fit_generalized_killing_with_torsion(d, lc, sp, T, psi);
  CHECK(fit.success);
  const double l1 = (2 * b - a) * std::sqrt(n * (n + 1.0)) / (4 * b * std::sqrt(a));
  const double l2 = std::sqrt(a * (n + 1.0)) / (4 * b * std::sqrt(double(n)));
  CHECK(fit.eigenvalues[0] == doctest::Approx(l1 + eps * s * n / 2).epsilon(1e-8));
  CHECK(fit.eigenvalues[1] == doctest::Approx(l2 + eps * s / 2).epsilon(1e-8));
}

TEST_CASE("squaring construction") {
  auto d = build_presentation(CaseTag::SpSp1, 2, make_metric(CaseTag::SpSp1, {{"a", 1.0}, {"b", 1.0}}));
  auto sp = spinor_space_of(d);
  Spinor psi0 = psi0_dim7(sp);

  Form w0 = squaring_form(sp, psi0, 0);
  CHECK(w0.coeff(0) == doctest::Approx(1.0));

  Form w = squaring_form(sp, psi0, 3);
  CHECK(w.coeff_sorted({1, 2, 3}) == doctest::Approx(-1));
  CHECK(w.coeff_sorted({1, 4, 5}) == doctest::Approx(1));
  CHECK(w.coeff_sorted({1, 6, 7}) == doctest::Approx(1));
  CHECK(w.coeff_sorted({2, 4, 6}) == doctest::Approx(1));
  CHECK(w.coeff_sorted({2, 5, 7}) == doctest::Approx(-1));
  CHECK(w.coeff_sorted({3, 4, 7}) == doctest::Approx(1));
  CHECK(w.coeff_sorted({3, 5, 6}) == doctest::Approx(1));
  CHECK(w.terms().size() == 7);

  Form w2 = squaring_form(sp, psi0, 3, SquaringNormalization::MinusTwo);
  CHECK((w2 + 2.0 * w).norm() < 1e-12);

  Spinor notunit(sp, 2.0 * psi0.coeffs);
  CHECK_THROWS_AS(squaring_form(sp, notunit, 3), std::invalid_argument);
}

TEST_CASE("G2 structure analysis of the doubly twisted 7-sphere") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {0.7, 1.4}, {2.0, 0.8}}) {
    auto d = build_presentation(CaseTag::SpSp1, 2, make_metric(CaseTag::SpSp1, {{"a", a}, {"b", b}}));
    auto sp = spinor_space_of(d);
    auto lc = nomizu_levi_civita(d);
    auto rep = g2_analysis(d, lc, sp, psi0_dim7(sp));

    CHECK(rep.cocalibrated);
    CHECK(rep.nearly_parallel == (a == b));

    // characteristic torsion matches the closed form
    Form expect = (-a / (b * std::sqrt(30 * a))) * rep.omega;
    Form e123(7, 3);
    e123.set_sorted({1, 2, 3}, 1.0);
    expect += (-(5 * a - 5 * b) / (b * std::sqrt(30 * a))) * e123;
    CHECK(rep.characteristic_torsion.dist(expect) < 1e-8);

    CHECK(rep.char_connection_residual < 1e-8);
    CHECK(rep.intrinsic_parallel_residual < 1e-8);

    if (a == b) {
      Form t = (-1 / std::sqrt(30 * a)) * rep.omega;
      CHECK(rep.characteristic_torsion.dist(t) < 1e-8);
    }
  }
}

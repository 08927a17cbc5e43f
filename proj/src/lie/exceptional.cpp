#include "lie/exceptional.hpp"

#include <cmath>
#include <stdexcept>

namespace ssp {

namespace {

QMatrix E8(int i, int j) { return elementary(i, j, 8, ElementaryKind::E); }

}  // namespace

QMatrix appendix_rho(int i) {
  switch (i) {
    case 1: return E8(1, 8) + E8(2, 7) - E8(3, 6) - E8(4, 5);
    case 2: return -E8(1, 7) + E8(2, 8) + E8(3, 5) - E8(4, 6);
    case 3: return -E8(1, 6) + E8(2, 5) - E8(3, 8) + E8(4, 7);
    case 4: return -E8(1, 5) - E8(2, 6) - E8(3, 7) - E8(4, 8);
    case 5: return -E8(1, 3) - E8(2, 4) + E8(5, 7) + E8(6, 8);
    case 6: return E8(1, 4) - E8(2, 3) - E8(5, 8) + E8(6, 7);
    case 7: return E8(1, 2) - E8(3, 4) - E8(5, 6) + E8(7, 8);
    default: throw std::invalid_argument("appendix_rho: index out of range");
  }
}

QMatrix iota9(const QMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("iota9: expects 8x8");
  QMatrix out(9, 9, m.kind());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out(i + 1, j + 1) = m(i, j);
  return out;
}

const ExceptionalBases& build_exceptional_bases() {
  static const ExceptionalBases bases = [] {
    ExceptionalBases b;
    std::vector<QMatrix> r;
    r.reserve(8);
    r.emplace_back(QMatrix::zero(8));  // 1-based access
    for (int i = 1; i <= 7; ++i) r.push_back(appendix_rho(i));
    auto rr = [&](int i, int j) { return r[i] * r[j]; };

    const double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    b.nu = {
        0.25 * (rr(1, 2) - rr(5, 6)),
        0.25 * (rr(3, 5) + rr(4, 6)),
        0.25 * (rr(3, 6) - rr(4, 5)),
        0.25 * (rr(1, 3) + rr(2, 4)),
        0.25 * (rr(1, 4) - rr(2, 3)),
        0.25 * (rr(1, 5) + rr(2, 6)),
        0.25 * (rr(1, 6) - rr(2, 5)),
        (-1.0 / (4 * s3)) * (rr(1, 2) - 2.0 * rr(3, 4) + rr(5, 6)),
        (1.0 / (4 * s3)) * (2.0 * rr(1, 7) - rr(3, 6) - rr(4, 5)),
        (1.0 / (4 * s3)) * (2.0 * rr(2, 7) - rr(3, 5) + rr(4, 6)),
        (1.0 / (4 * s3)) * (rr(1, 3) - rr(2, 4) - 2.0 * rr(6, 7)),
        (1.0 / (4 * s3)) * (rr(1, 4) + rr(2, 3) - 2.0 * rr(5, 7)),
        (1.0 / (4 * s3)) * (rr(1, 5) - rr(2, 6) + 2.0 * rr(4, 7)),
        (1.0 / (4 * s3)) * (rr(1, 6) + rr(2, 5) + 2.0 * rr(3, 7)),
    };
    b.nu_spin7 = {
        (1.0 / (2 * s6)) * (rr(1, 2) + rr(3, 4) + rr(5, 6)),
        (1.0 / (2 * s6)) * (rr(1, 3) - rr(2, 4) + rr(6, 7)),
        (1.0 / (2 * s6)) * (rr(1, 4) + rr(2, 3) + rr(5, 7)),
        (1.0 / (2 * s6)) * (-rr(1, 5) + rr(2, 6) + rr(4, 7)),
        (-1.0 / (2 * s6)) * (rr(1, 6) + rr(2, 5) - rr(3, 7)),
        (1.0 / (2 * s6)) * (rr(1, 7) + rr(3, 6) + rr(4, 5)),
        (-1.0 / (2 * s6)) * (rr(2, 7) + rr(3, 5) - rr(4, 6)),
    };

    auto E9 = [](int i, int j) { return elementary(i, j, 9, ElementaryKind::E); };
    const double s2 = std::sqrt(2.0), c = std::sqrt(1.5);
    const auto& n7 = b.nu_spin7;
    b.nu_spin9 = {
        s2 * (E9(2, 3) - c * iota9(n7[0])),
        s2 * (E9(2, 4) + c * iota9(n7[1])),
        s2 * (E9(2, 5) + c * iota9(n7[2])),
        s2 * (E9(2, 6) - c * iota9(n7[4])),
        s2 * (E9(2, 7) + c * iota9(n7[3])),
        s2 * (E9(2, 8) - c * iota9(n7[5])),
        s2 * (E9(2, 9) + c * iota9(n7[6])),
    };
    for (int i = 1; i <= 8; ++i) b.nu_spin9.push_back((1.0 / s2) * E9(1, 1 + i));
    return b;
  }();
  return bases;
}

}  // namespace ssp

#include "twistorlab/chern.hpp"

#include <cmath>
#include <numbers>

namespace twistorlab {

const char* to_string(DefinitenessClass cls) {
  switch (cls) {
    case DefinitenessClass::PositiveDefinite:
      return "positive_definite";
    case DefinitenessClass::NegativeDefinite:
      return "negative_definite";
    case DefinitenessClass::Semidefinite:
      return "semidefinite";
    case DefinitenessClass::Indefinite:
      return "indefinite";
  }
  return "?";
}

Eigen::Matrix3d fine_panov_operator(const CurvatureBlocks& blocks) {
  return blocks.A * blocks.A - blocks.B.transpose() * blocks.B;
}

DefinitenessResult classify_definiteness(const Eigen::Matrix3d& d, double tol) {
  DefinitenessResult res;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (d + d.transpose()));
  res.eigenvalues = es.eigenvalues();
  const double tau =
      tol * std::max(1.0, res.eigenvalues.cwiseAbs().maxCoeff());
  int pos = 0, neg = 0, zero = 0;
  for (int i = 0; i < 3; ++i) {
    if (res.eigenvalues[i] > tau) ++pos;
    else if (res.eigenvalues[i] < -tau) ++neg;
    else ++zero;
  }
  if (pos == 3) res.cls = DefinitenessClass::PositiveDefinite;
  else if (neg == 3) res.cls = DefinitenessClass::NegativeDefinite;
  else if (pos > 0 && neg > 0) res.cls = DefinitenessClass::Indefinite;
  else res.cls = DefinitenessClass::Semidefinite;
  return res;
}

double one_one_defect(const CurvatureBlocks& blocks) {
  return std::hypot(blocks.A(0, 1), blocks.A(0, 2));
}

double wedge_square_coeff(const Riemann4& r) {
  auto f = [&](int c, int d) { return r.c[0][1][c][d] + r.c[2][3][c][d]; };
  return 2.0 * (f(0, 1) * f(2, 3) - f(0, 2) * f(1, 3) + f(0, 3) * f(1, 2));
}

ChernTraceTable connection_curvature_trace(const Riemann4& r) {
  ChernTraceTable table;
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      table.f(c, d) = r.c[0][1][c][d] + r.c[2][3][c][d];
  table.fiber_coeff = 4.0 / (2.0 * std::numbers::pi);
  table.horizontal_scale = 1.0 / (2.0 * std::numbers::pi);
  return table;
}

ChernData chern_data(const CurvatureBlocks& blocks, const Riemann4& r,
                     double tol) {
  ChernData data;
  data.d_operator = fine_panov_operator(blocks);
  data.definiteness = classify_definiteness(data.d_operator, tol);
  data.one_one_defect = one_one_defect(blocks);
  data.wedge_square_coeff = wedge_square_coeff(r);
  data.c1_fiber_coeff = 4.0 / (2.0 * std::numbers::pi);
  return data;
}

}  // namespace twistorlab

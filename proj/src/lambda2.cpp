#include "twistorlab/lambda2.hpp"

#include <cmath>
#include <stdexcept>

namespace twistorlab {

double form2_inner(const Form2& f, const Form2& g) {
  return 0.5 * f.cwiseProduct(g).sum();
}

namespace {

Form2 wedge_pair(int i, int j) {
  Form2 f = Form2::Zero();
  f(i, j) = 1.0;
  f(j, i) = -1.0;
  return f;
}

std::array<Form2, 3> make_basis(double sign) {
  const double n = 1.0 / std::sqrt(2.0);
  // E1 = (e1^e2 +- e3^e4)/sqrt2, E2 = (e1^e3 +- e4^e2)/sqrt2,
  // E3 = (e1^e4 +- e2^e3)/sqrt2.
  std::array<Form2, 3> basis;
  basis[0] = n * (wedge_pair(0, 1) + sign * wedge_pair(2, 3));
  basis[1] = n * (wedge_pair(0, 2) + sign * wedge_pair(3, 1));
  basis[2] = n * (wedge_pair(0, 3) + sign * wedge_pair(1, 2));
  return basis;
}

}  // namespace

const std::array<Form2, 3>& eplus_basis() {
  static const std::array<Form2, 3> basis = make_basis(+1.0);
  return basis;
}

const std::array<Form2, 3>& eminus_basis() {
  static const std::array<Form2, 3> basis = make_basis(-1.0);
  return basis;
}

Form2 rhat_apply(const Riemann4& r, const Form2& f) {
  Form2 out = Form2::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) v += r.c[a][b][c][d] * f(c, d);
      out(a, b) = 0.5 * v;
    }
  return out;
}

Form2 rotate_form2(const Eigen::Matrix4d& a, const Form2& f) {
  return a * f * a.transpose();
}

CurvatureBlocks blocks_from_frame_curvature(const Riemann4& frame_curv) {
  const double norm = frame_curv.frobenius_norm();
  const double defect = curvature_symmetry_defect(frame_curv);
  if (defect > 1e-7 * std::max(1.0, norm))
    throw std::domain_error("frame curvature violates tensor symmetries");

  const auto& ep = eplus_basis();
  const auto& em = eminus_basis();
  CurvatureBlocks blocks;
  for (int n = 0; n < 3; ++n) {
    const Form2 rp = rhat_apply(frame_curv, ep[n]);
    const Form2 rm = rhat_apply(frame_curv, em[n]);
    for (int m = 0; m < 3; ++m) {
      blocks.A(m, n) = form2_inner(ep[m], rp);
      blocks.B(m, n) = form2_inner(em[m], rp);
      blocks.C(m, n) = form2_inner(em[m], rm);
    }
  }
  return blocks;
}

Riemann4 frame_curvature_from_blocks(const CurvatureBlocks& blocks) {
  const auto& ep = eplus_basis();
  const auto& em = eminus_basis();
  // R_abcd = sum over basis pairs of M_{uv} (E_u)_ab (E_v)_cd with
  // M = [[A, B^T], [B, C]].
  Riemann4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              v += blocks.A(m, n) * ep[m](a, b) * ep[n](c, d);
              v += blocks.B(m, n) * em[m](a, b) * ep[n](c, d);
              v += blocks.B(m, n) * ep[n](a, b) * em[m](c, d);
              v += blocks.C(m, n) * em[m](a, b) * em[n](c, d);
            }
          r.c[a][b][c][d] = v;
        }
  return r;
}

CurvatureBlocks orientation_flip(const CurvatureBlocks& blocks) {
  CurvatureBlocks out;
  out.A = blocks.C;
  out.B = blocks.B.transpose();
  out.C = blocks.A;
  return out;
}

So4Split so4_split(const Eigen::Matrix4d& a) {
  if ((a.transpose() * a - Eigen::Matrix4d::Identity()).norm() > 1e-10 ||
      a.determinant() < 0.0)
    throw std::domain_error("so4_split: input is not in SO(4)");
  const auto& ep = eplus_basis();
  const auto& em = eminus_basis();
  So4Split s;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      s.plus(m, n) = form2_inner(ep[m], rotate_form2(a, ep[n]));
      s.minus(m, n) = form2_inner(em[m], rotate_form2(a, em[n]));
    }
  return s;
}

CurvatureBlocks rotate_blocks(const CurvatureBlocks& blocks,
                              const Eigen::Matrix4d& a) {
  const So4Split s = so4_split(a);
  CurvatureBlocks out;
  out.A = s.plus.transpose() * blocks.A * s.plus;
  out.B = s.minus.transpose() * blocks.B * s.plus;
  out.C = s.minus.transpose() * blocks.C * s.minus;
  return out;
}

Eigen::Matrix4d random_so4(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(m);
  Eigen::Matrix4d q = qr.householderQ();
  const Eigen::Matrix4d r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the sign ambiguity of QR so the distribution is Haar.
  for (int j = 0; j < 4; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  if (q.determinant() < 0.0) q.col(3) = -q.col(3);
  return q;
}

double asd_defect(const CurvatureBlocks& blocks) {
  return blocks.wplus().norm();
}

double einstein_defect(const CurvatureBlocks& blocks) {
  return blocks.B.norm();
}

bool is_zero_defect(double defect, double scale, double tol) {
  return defect < tol * std::max(1.0, scale);
}

}  // namespace twistorlab

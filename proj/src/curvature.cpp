#include "twistorlab/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace twistorlab {

double Riemann4::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) sum += c[i][j][k][l] * c[i][j][k][l];
  return std::sqrt(sum);
}

Christoffels christoffel(const MetricJets& jets) {
  const Eigen::Matrix4d g = jets.value();
  Eigen::FullPivLU<Eigen::Matrix4d> lu(g);
  if (!lu.isInvertible()) throw std::domain_error("singular metric");
  const Eigen::Matrix4d ginv = lu.inverse();

  std::array<Eigen::Matrix4d, 4> dg;
  for (int k = 0; k < 4; ++k) dg[k] = jets.d(k);
  // d_m g^{-1} = -g^{-1} (d_m g) g^{-1}
  std::array<Eigen::Matrix4d, 4> dginv;
  for (int m = 0; m < 4; ++m) dginv[m] = -ginv * dg[m] * ginv;

  Christoffels ch;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        double sum = 0.0;
        for (int l = 0; l < 4; ++l)
          sum += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        ch.G[k][i][j] = 0.5 * sum;
        ch.G[k][j][i] = ch.G[k][i][j];
      }

  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          double sum = 0.0;
          for (int l = 0; l < 4; ++l) {
            sum += dginv[m](k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
            sum += ginv(k, l) * (jets.dd(m, i)(j, l) + jets.dd(m, j)(i, l) -
                                 jets.dd(m, l)(i, j));
          }
          ch.dG[m][k][i][j] = 0.5 * sum;
          ch.dG[m][k][j][i] = ch.dG[m][k][i][j];
        }

  return ch;
}

Riemann4 riemann_coord(const Christoffels& ch, const MetricJets& jets) {
  const Eigen::Matrix4d g = jets.value();
  // R^m_{jkl} = d_k G^m_{lj} - d_l G^m_{kj} + G^m_{k mu} G^mu_{lj}
  //           - G^m_{l mu} G^mu_{kj}, then lower with g_{im}.
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> up{};
  for (int m = 0; m < 4; ++m)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = ch.dG[k][m][l][j] - ch.dG[l][m][k][j];
          for (int mu = 0; mu < 4; ++mu)
            v += ch.G[m][k][mu] * ch.G[mu][l][j] -
                 ch.G[m][l][mu] * ch.G[mu][k][j];
          up[m][j][k][l] = v;
        }

  Riemann4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int m = 0; m < 4; ++m) v += g(i, m) * up[m][j][k][l];
          r.c[i][j][k][l] = v;
        }
  return r;
}

double scalar_curvature_coord(const Riemann4& r, const Eigen::Matrix4d& g) {
  const Eigen::Matrix4d ginv = g.inverse();
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          s += ginv(i, k) * ginv(j, l) * r.c[i][j][k][l];
  return s;
}

namespace {

// Metric Gram-Schmidt over any scalar supporting +,-,*,/ and sqrt.
template <typename S>
std::array<std::array<S, 4>, 4> gram_schmidt(
    const std::array<std::array<S, 4>, 4>& g) {
  using std::sqrt;
  std::array<std::array<S, 4>, 4> e{};  // e[i][a]: component i of frame a
  for (int a = 0; a < 4; ++a) {
    std::array<S, 4> v{};
    for (int i = 0; i < 4; ++i) v[i] = S(0.0);
    v[a] = S(1.0);
    for (int b = 0; b < a; ++b) {
      S c = S(0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c = c + e[i][b] * g[i][j] * v[j];
      for (int i = 0; i < 4; ++i) v[i] = v[i] - c * e[i][b];
    }
    S n2 = S(0.0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) n2 = n2 + v[i] * g[i][j] * v[j];
    if (scalar_value(n2) <= 0.0)
      throw std::domain_error(
          "metric lost positive definiteness during frame construction");
    const S n = sqrt(n2);
    for (int i = 0; i < 4; ++i) e[i][a] = v[i] / n;
  }
  return e;
}

}  // namespace

Eigen::Matrix4d build_frame(const Eigen::Matrix4d& g, Orientation orientation) {
  std::array<std::array<double, 4>, 4> gs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gs[i][j] = g(i, j);
  const auto e = gram_schmidt<double>(gs);
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 4; ++a) m(i, a) = e[i][a];
  const double det = m.determinant();
  const bool flip = (orientation == Orientation::Standard && det < 0.0) ||
                    (orientation == Orientation::Reversed && det > 0.0);
  if (flip) m.col(3) = -m.col(3);
  return m;
}

FrameWithDerivatives build_frame_with_derivatives(const MetricJets& jets,
                                                  Orientation orientation) {
  std::array<std::array<Dual4, 4>, 4> gd;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      gd[i][j] = Dual4(jets.g[i][j].value(), jets.g[i][j].grad());
  const auto e = gram_schmidt<Dual4>(gd);

  FrameWithDerivatives out;
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 4; ++a) {
      out.e(i, a) = e[i][a].v;
      for (int k = 0; k < 4; ++k) out.de[k](i, a) = e[i][a].g[k];
    }
  const double det = out.e.determinant();
  const bool flip = (orientation == Orientation::Standard && det < 0.0) ||
                    (orientation == Orientation::Reversed && det > 0.0);
  if (flip) {
    out.e.col(3) = -out.e.col(3);
    for (int k = 0; k < 4; ++k) out.de[k].col(3) = -out.de[k].col(3);
  }
  return out;
}

Riemann4 frame_curvature(const Riemann4& coord, const Eigen::Matrix4d& frame) {
  // Contract one index per pass.
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> t1{}, t2{},
      t3{};
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int i = 0; i < 4; ++i) v += coord.c[i][j][k][l] * frame(i, a);
          t1[a][j][k][l] = v;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int j = 0; j < 4; ++j) v += t1[a][j][k][l] * frame(j, b);
          t2[a][b][k][l] = v;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int l = 0; l < 4; ++l) {
          double v = 0.0;
          for (int k = 0; k < 4; ++k) v += t2[a][b][k][l] * frame(k, c);
          t3[a][b][c][l] = v;
        }
  Riemann4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          for (int l = 0; l < 4; ++l) v += t3[a][b][c][l] * frame(l, d);
          r.c[a][b][c][d] = v;
        }
  return r;
}

double scalar_curvature_frame(const Riemann4& frame) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) s += 2.0 * frame.c[a][b][a][b];
  return s;
}

double curvature_symmetry_defect(const Riemann4& r) {
  double defect = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          defect = std::max(defect,
                            std::abs(r.c[i][j][k][l] + r.c[j][i][k][l]));
          defect = std::max(defect,
                            std::abs(r.c[i][j][k][l] + r.c[i][j][l][k]));
          defect = std::max(defect,
                            std::abs(r.c[i][j][k][l] - r.c[k][l][i][j]));
          defect = std::max(
              defect, std::abs(r.c[i][j][k][l] + r.c[i][k][l][j] +
                               r.c[i][l][j][k]));
        }
  return defect;
}

PointCurvature curvature_at(const MetricSpec& spec, const Eigen::Vector4d& x) {
  PointCurvature pc;
  pc.x = x;
  const MetricJets jets = eval_jet2(spec, x);
  pc.g = jets.value();
  const Christoffels ch = christoffel(jets);
  pc.coord = riemann_coord(ch, jets);
  pc.frame = build_frame(pc.g, spec.orientation);
  pc.in_frame = frame_curvature(pc.coord, pc.frame);
  pc.s = scalar_curvature_frame(pc.in_frame);
  return pc;
}

}  // namespace twistorlab

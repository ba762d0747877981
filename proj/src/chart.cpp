#include "twistorlab/chart.hpp"

#include <cmath>
#include <stdexcept>

namespace twistorlab {

namespace {

constexpr Complex kI(0.0, 1.0);

Eigen::Matrix4d antisymmetrized(const Eigen::Matrix4d& m, const char* what) {
  const Eigen::Matrix4d sym = 0.5 * (m + m.transpose());
  if (sym.norm() > 1e-7 * std::max(1.0, m.norm()))
    throw std::domain_error(std::string(what) +
                            ": connection matrix is not antisymmetric");
  return 0.5 * (m - m.transpose());
}

}  // namespace

Eigen::Vector4d quat_mult(const Eigen::Vector4d& q, const Eigen::Vector4d& p) {
  // Components (real, i, j, k).
  return {q[0] * p[0] - q[1] * p[1] - q[2] * p[2] - q[3] * p[3],
          q[0] * p[1] + q[1] * p[0] + q[2] * p[3] - q[3] * p[2],
          q[0] * p[2] - q[1] * p[3] + q[2] * p[0] + q[3] * p[1],
          q[0] * p[3] + q[1] * p[2] - q[2] * p[1] + q[3] * p[0]};
}

Eigen::Matrix4d quat_left_matrix(const Eigen::Vector4d& q) {
  Eigen::Matrix4d m;
  m << q[0], -q[1], -q[2], -q[3],
       q[1],  q[0], -q[3],  q[2],
       q[2],  q[3],  q[0], -q[1],
       q[3], -q[2],  q[1],  q[0];
  return m;
}

Eigen::Matrix4d quaternion_lift(const Eigen::Vector3d& n) {
  const double w = 1.0 + n[0];
  if (w < 1e-12)
    throw std::domain_error(
        "quaternion_lift: input is at (or too near) the excluded antipode");
  Eigen::Vector4d q(w, 0.0, -n[2], n[1]);
  q /= std::sqrt(2.0 * w);
  return quat_left_matrix(q);
}

Eigen::Vector3d fiber_direction(const Eigen::Vector2d& y, int chart) {
  const double rho = y.squaredNorm();
  Eigen::Vector3d n((1.0 - rho) / (1.0 + rho), 2.0 * y[0] / (1.0 + rho),
                    2.0 * y[1] / (1.0 + rho));
  return chart == 0 ? n : Eigen::Vector3d(-n);
}

Eigen::Vector2d fiber_transition(const Eigen::Vector2d& y) {
  const double rho = y.squaredNorm();
  if (rho < 1e-300)
    throw std::domain_error("fiber_transition: chart origin is not covered "
                            "by the other chart");
  return -y / rho;
}

namespace {

struct FiberLift {
  Eigen::Matrix4d a;
  std::array<Eigen::Matrix4d, 2> da;
};

// Section quaternion on chart 0: q(y) = (1, 0, -y2, y1)/sqrt(1+|y|^2);
// chart 1 composes with a constant right factor j so the lifted fiber
// direction is the antipodal one.
FiberLift fiber_lift(const Eigen::Vector2d& y, int chart) {
  const double rho = y.squaredNorm();
  const double norm = std::sqrt(1.0 + rho);
  const Eigen::Vector4d w(1.0, 0.0, -y[1], y[0]);
  const Eigen::Vector4d q = w / norm;

  const Eigen::Vector4d e_y0(0.0, 0.0, 0.0, 1.0);
  const Eigen::Vector4d e_y1(0.0, 0.0, -1.0, 0.0);
  const double norm3 = norm * norm * norm;
  std::array<Eigen::Vector4d, 2> dq = {e_y0 / norm - w * (y[0] / norm3),
                                       e_y1 / norm - w * (y[1] / norm3)};

  FiberLift lift;
  if (chart == 0) {
    lift.a = quat_left_matrix(q);
    lift.da = {quat_left_matrix(dq[0]), quat_left_matrix(dq[1])};
  } else {
    const Eigen::Vector4d j(0.0, 0.0, 1.0, 0.0);
    lift.a = quat_left_matrix(quat_mult(q, j));
    lift.da = {quat_left_matrix(quat_mult(dq[0], j)),
               quat_left_matrix(quat_mult(dq[1], j))};
  }
  return lift;
}

}  // namespace

CMatrix6 SectionFrame::phi_coframe() const {
  CMatrix6 m;
  m.row(0) = phi1.transpose();
  m.row(1) = phi2.transpose();
  m.row(2) = phi3.transpose();
  m.row(3) = phi1.conjugate().transpose();
  m.row(4) = phi2.conjugate().transpose();
  m.row(5) = phi3.conjugate().transpose();
  return m;
}

Eigen::Matrix<double, 6, 6> SectionFrame::gt_coframe(double t) const {
  Eigen::Matrix<double, 6, 6> s;
  for (int a = 0; a < 4; ++a) s.row(a) = theta[a].transpose();
  s.row(4) = 2.0 * t * theta5.transpose();
  s.row(5) = 2.0 * t * theta6.transpose();
  return s;
}

Eigen::Matrix<double, 6, 6> SectionFrame::gt_metric(double t) const {
  const auto s = gt_coframe(t);
  return s.transpose() * s;
}

Eigen::Matrix<double, 6, 6> SectionFrame::j_matrix(double t, JSign sign) const {
  // In the orthonormal co-frame the structure rotates the pairs (1,2),
  // (3,4) and (5,6), the last one backwards for J-.
  Eigen::Matrix<double, 6, 6> j0 = Eigen::Matrix<double, 6, 6>::Zero();
  auto rot = [&j0](int a, int b, double sg) {
    j0(a, b) = -sg;
    j0(b, a) = sg;
  };
  rot(0, 1, 1.0);
  rot(2, 3, 1.0);
  rot(4, 5, sign == JSign::Plus ? 1.0 : -1.0);
  const auto s = gt_coframe(t);
  return s.inverse() * j0 * s;
}

SectionFrame section_frame(const MetricSpec& spec, const TwistorChartPoint& p,
                           const SectionOptions& opts) {
  SectionFrame sf;
  sf.p = p;

  const MetricJets jets = eval_jet2(spec, p.x);
  const Christoffels ch = christoffel(jets);
  const FrameWithDerivatives fd =
      build_frame_with_derivatives(jets, spec.orientation);
  const Eigen::Matrix4d einv = fd.e.inverse();

  // Base part of the connection in the moving frame e(x).
  std::array<Eigen::Matrix4d, 4> omega_base;
  for (int j = 0; j < 4; ++j) {
    Eigen::Matrix4d gj;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) gj(i, k) = ch.G[i][j][k];
    omega_base[j] =
        antisymmetrized(einv * (fd.de[j] + gj * fd.e), "section_frame");
  }

  const FiberLift lift = fiber_lift(p.y, p.fiber_chart);
  const Eigen::Matrix4d& a = lift.a;
  sf.frame = fd.e * a;
  for (int j = 0; j < 4; ++j) sf.dframe[j] = fd.de[j] * a;
  for (int m = 0; m < 2; ++m) sf.dframe[4 + m] = fd.e * lift.da[m];

  const Riemann4 coord = riemann_coord(ch, jets);
  sf.curvature = frame_curvature(coord, sf.frame);
  sf.blocks = blocks_from_frame_curvature(sf.curvature);

  const Eigen::Matrix4d uinv = a.transpose() * einv;
  for (int alpha = 0; alpha < 4; ++alpha) {
    sf.theta[alpha].setZero();
    for (int j = 0; j < 4; ++j) sf.theta[alpha][j] = uinv(alpha, j);
  }

  // omega(d_j) = a^T omega_e(d_j) a on base directions, a^T da on fiber
  // directions.
  std::array<Eigen::Matrix4d, 6> om;
  for (int j = 0; j < 4; ++j) om[j] = a.transpose() * omega_base[j] * a;
  for (int m = 0; m < 2; ++m)
    om[4 + m] =
        antisymmetrized(a.transpose() * lift.da[m], "section_frame fiber");
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be)
      for (int dir = 0; dir < 6; ++dir) sf.omega[al][be][dir] = om[dir](al, be);

  if (opts.corrupt_frame) {
    // Position-dependent defect in theta^1; the structure equations can
    // no longer hold.
    sf.theta[0][0] += 0.3 * p.x[1];
  }

  sf.theta5 = 0.5 * (sf.omega[0][2] - sf.omega[1][3]);
  sf.theta6 = 0.5 * (sf.omega[0][3] + sf.omega[1][2]);
  for (int dir = 0; dir < 6; ++dir) {
    sf.psi3[dir] = 0.5 * Complex(sf.omega[0][2][dir] + sf.omega[1][3][dir],
                                 sf.omega[1][2][dir] - sf.omega[0][3][dir]);
    sf.phi1[dir] = Complex(sf.theta[0][dir], sf.theta[1][dir]);
    sf.phi2[dir] = Complex(sf.theta[2][dir], sf.theta[3][dir]);
    sf.phi3[dir] = Complex(sf.theta5[dir], sf.theta6[dir]);
  }
  return sf;
}

AltForm kform(const SectionFrame& sf, JSign sign, double t) {
  const double sg = sign == JSign::Plus ? 1.0 : -1.0;
  const AltForm f1 = AltForm::covector(sf.phi1);
  const AltForm f2 = AltForm::covector(sf.phi2);
  const AltForm f3 = AltForm::covector(sf.phi3);
  AltForm k(2);
  k += wedge(f1, conj_coeffs(f1));
  k += wedge(f2, conj_coeffs(f2));
  k += (sg * 4.0 * t * t) * wedge(f3, conj_coeffs(f3));
  return (kI * 0.5) * k;
}

AltForm curvature_two_form(const SectionFrame& sf, int a, int b) {
  AltForm om(2);
  std::array<AltForm, 4> th = {
      AltForm::covector(sf.theta[0].cast<Complex>()),
      AltForm::covector(sf.theta[1].cast<Complex>()),
      AltForm::covector(sf.theta[2].cast<Complex>()),
      AltForm::covector(sf.theta[3].cast<Complex>())};
  for (int c = 0; c < 4; ++c)
    for (int d = c + 1; d < 4; ++d)
      om += sf.curvature.c[a][b][c][d] * wedge(th[c], th[d]);
  return om;
}

AltForm rho_two_form(const SectionFrame& sf) {
  AltForm rho(2);
  rho += 0.5 * curvature_two_form(sf, 0, 2);
  rho -= 0.5 * curvature_two_form(sf, 1, 3);
  rho += (0.5 * kI) * curvature_two_form(sf, 1, 2);
  rho += (0.5 * kI) * curvature_two_form(sf, 0, 3);
  return rho;
}

ChartStencil::ChartStencil(const MetricSpec& spec, const TwistorChartPoint& p,
                           double h, const SectionOptions& opts)
    : center_(section_frame(spec, p, opts)), h_(h) {
  for (int dir = 0; dir < 6; ++dir) {
    plus_[dir] = section_frame(spec, p.displaced(dir, h), opts);
    minus_[dir] = section_frame(spec, p.displaced(dir, -h), opts);
  }
}

AltForm ChartStencil::d(const FormField& field) const {
  const AltForm at_center = field(center_);
  const int k = at_center.degree();
  std::array<AltForm, 6> partial{AltForm(k), AltForm(k), AltForm(k),
                                 AltForm(k), AltForm(k), AltForm(k)};
  for (int dir = 0; dir < 6; ++dir) {
    AltForm diff = field(plus_[dir]);
    diff -= field(minus_[dir]);
    diff *= Complex(1.0 / (2.0 * h_), 0.0);
    partial[dir] = diff;
  }

  AltForm out(k + 1);
  for (int rank = 0; rank < out.size(); ++rank) {
    const auto idx = subset_unrank(k + 1, rank);
    Complex v(0.0, 0.0);
    double sign = 1.0;
    for (int pos = 0; pos <= k; ++pos, sign = -sign) {
      std::vector<int> rest;
      rest.reserve(k);
      for (int q = 0; q <= k; ++q)
        if (q != pos) rest.push_back(idx[q]);
      v += sign * partial[idx[pos]][subset_rank(rest)];
    }
    out[rank] = v;
  }
  return out;
}

AltForm type_project(const AltForm& chart_form, const SectionFrame& sf,
                     JSign sign, int p, int q) {
  const CMatrix6 m = sf.phi_coframe();
  const AltForm in_frame = to_coframe(chart_form, m);
  const auto one_zero = sign == JSign::Plus ? kOneZeroPlus : kOneZeroMinus;
  return from_coframe(project_type(in_frame, one_zero, p, q), m);
}

DkComparison compare_dk(const MetricSpec& spec, const TwistorChartPoint& p,
                        double t, JSign sign, double h,
                        const SectionOptions& opts) {
  const ChartStencil stencil(spec, p, h, opts);
  const AltForm numeric = stencil.d(
      [&](const SectionFrame& sf) { return kform(sf, sign, t); });

  const LambdaSet lambda = lambda_from_blocks(stencil.center().blocks, t);
  const AltForm predicted = from_coframe(dk_coefficients(lambda, sign),
                                         stencil.center().phi_coframe());

  DkComparison cmp;
  cmp.residual = (numeric - predicted).max_abs();
  cmp.numeric_scale = numeric.max_abs();
  return cmp;
}

StructureReport verify_structure_equations(const MetricSpec& spec,
                                           const TwistorChartPoint& p,
                                           double t, double h,
                                           const SectionOptions& opts) {
  const ChartStencil stencil(spec, p, h, opts);
  const SectionFrame& sf = stencil.center();
  StructureReport rep;

  auto theta_form = [](const SectionFrame& s, int alpha) {
    return AltForm::covector(s.theta[alpha].cast<Complex>());
  };
  auto omega_form = [](const SectionFrame& s, int a, int b) {
    return AltForm::covector(s.omega[a][b].cast<Complex>());
  };

  for (int alpha = 0; alpha < 4; ++alpha) {
    AltForm res = stencil.d(
        [&](const SectionFrame& s) { return theta_form(s, alpha); });
    for (int beta = 0; beta < 4; ++beta)
      res += wedge(omega_form(sf, alpha, beta), theta_form(sf, beta));
    rep.dtheta_residual = std::max(rep.dtheta_residual, res.max_abs());
  }

  {
    AltForm res = stencil.d(
        [](const SectionFrame& s) { return AltForm::covector(s.phi3); });
    const AltForm trace =
        AltForm::covector((sf.omega[0][1] + sf.omega[2][3]).cast<Complex>());
    res -= kI * wedge(trace, AltForm::covector(sf.phi3));
    res -= rho_two_form(sf);
    rep.dphi3_residual = res.max_abs();
  }

  {
    AltForm res = stencil.d([&](const SectionFrame& s) {
      return omega_form(s, 0, 1) + omega_form(s, 2, 3);
    });
    res -= 4.0 * wedge(AltForm::covector(sf.theta5.cast<Complex>()),
                       AltForm::covector(sf.theta6.cast<Complex>()));
    res -= curvature_two_form(sf, 0, 1);
    res -= curvature_two_form(sf, 2, 3);
    rep.c1_trace_residual = res.max_abs();
  }

  {
    const auto s_rows = sf.gt_coframe(t);
    const auto gt = sf.gt_metric(t);
    const Eigen::Matrix<double, 6, 6> gram =
        s_rows * gt.inverse() * s_rows.transpose();
    rep.gram_residual =
        (gram - Eigen::Matrix<double, 6, 6>::Identity()).cwiseAbs().maxCoeff();
  }

  return rep;
}

DdbarMeasurement measure_ddbar_k_plus(const MetricSpec& spec,
                                      const TwistorChartPoint& p, double t,
                                      double h) {
  // dbar K+ measured at a chart point: (1,2) part of the numerical dK+.
  // The inner derivative is Richardson-extrapolated (steps h and h/2) so
  // its truncation error does not pollute the outer difference.
  auto dbar_k = [&](const TwistorChartPoint& q) {
    const auto field = [&](const SectionFrame& s) {
      return kform(s, JSign::Plus, t);
    };
    const ChartStencil coarse(spec, q, h);
    const ChartStencil fine(spec, q, h / 2.0);
    AltForm dk = Complex(4.0 / 3.0, 0.0) * fine.d(field);
    dk -= Complex(1.0 / 3.0, 0.0) * coarse.d(field);
    return type_project(dk, coarse.center(), JSign::Plus, 1, 2);
  };

  // Outer derivative of the measured field, also Richardson-extrapolated.
  auto outer_d = [&](double step) {
    std::array<AltForm, 6> partial{AltForm(3), AltForm(3), AltForm(3),
                                   AltForm(3), AltForm(3), AltForm(3)};
    for (int dir = 0; dir < 6; ++dir) {
      AltForm diff = dbar_k(p.displaced(dir, step));
      diff -= dbar_k(p.displaced(dir, -step));
      diff *= Complex(1.0 / (2.0 * step), 0.0);
      partial[dir] = diff;
    }
    AltForm out(4);
    for (int rank = 0; rank < out.size(); ++rank) {
      const auto idx = subset_unrank(4, rank);
      Complex v(0.0, 0.0);
      double sign = 1.0;
      for (int pos = 0; pos < 4; ++pos, sign = -sign) {
        std::vector<int> rest;
        for (int q = 0; q < 4; ++q)
          if (q != pos) rest.push_back(idx[q]);
        v += sign * partial[idx[pos]][subset_rank(rest)];
      }
      out[rank] = v;
    }
    return out;
  };
  AltForm d_dbar = Complex(4.0 / 3.0, 0.0) * outer_d(h / 2.0);
  d_dbar -= Complex(1.0 / 3.0, 0.0) * outer_d(h);

  const SectionFrame center = section_frame(spec, p);
  DdbarMeasurement out;
  out.measured = type_project(d_dbar, center, JSign::Plus, 2, 2);
  out.predicted = from_coframe(ddbar_k_plus_from_blocks(center.blocks, t),
                               center.phi_coframe());
  out.residual = (out.measured - out.predicted).max_abs();
  return out;
}

double wedge_square_chart(const SectionFrame& sf) {
  const AltForm traced = curvature_two_form(sf, 0, 1) +
                         curvature_two_form(sf, 2, 3);
  const AltForm square = wedge(traced, traced);
  // Express in the co-frame with t = 1/2 so rows 5,6 are exactly theta5,
  // theta6; the theta^1..theta^4 coefficient is t-independent.
  const CMatrix6 rows = sf.gt_coframe(0.5).cast<Complex>();
  const AltForm in_frame = to_coframe(square, rows);
  return in_frame.coeff({0, 1, 2, 3}).real();
}

}  // namespace twistorlab

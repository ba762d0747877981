#pragma once

#include "twistorlab/conditions.hpp"
#include "twistorlab/curvature.hpp"
#include "twistorlab/forms.hpp"

#include <Eigen/Dense>

#include <functional>

namespace twistorlab {

/// Point of the 6-dimensional twistor chart: base coordinates x and
/// stereographic fiber coordinates y on the sphere of self-dual forms.
/// Chart 0 excludes the antipode of the E1+ direction, chart 1 excludes
/// E1+ itself.
struct TwistorChartPoint {
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  Eigen::Vector2d y = Eigen::Vector2d::Zero();
  int fiber_chart = 0;

  TwistorChartPoint displaced(int dir, double delta) const {
    TwistorChartPoint q = *this;
    if (dir < 4) q.x[dir] += delta;
    else q.y[dir - 4] += delta;
    return q;
  }
};

Eigen::Vector4d quat_mult(const Eigen::Vector4d& q, const Eigen::Vector4d& p);

/// Matrix of x -> q x under the quaternion identification of R^4.
Eigen::Matrix4d quat_left_matrix(const Eigen::Vector4d& q);

/// SO(4) lift of a unit 3-vector: the left multiplication by the
/// half-angle quaternion rotating (1,0,0) to n, so that the self-dual
/// factor of so4_split maps E1+ to n. Undefined at n = (-1,0,0).
Eigen::Matrix4d quaternion_lift(const Eigen::Vector3d& n);

/// Inverse stereographic image of the fiber coordinates.
Eigen::Vector3d fiber_direction(const Eigen::Vector2d& y, int chart);

/// Coordinates of the same fiber point in the other chart: y -> -y/|y|^2.
Eigen::Vector2d fiber_transition(const Eigen::Vector2d& y);

struct SectionOptions {
  /// Corrupt the pulled-back canonical form (negative control for the
  /// structure-equation oracle).
  bool corrupt_frame = false;
};

/// The moving frame u(x,y) = e(x) a(y) evaluated at one chart point, with
/// every pulled-back 1-form written out on the six coordinate directions.
struct SectionFrame {
  TwistorChartPoint p;
  Eigen::Matrix4d frame;  // u = e a, columns in the coordinate basis
  std::array<Eigen::Matrix4d, 6> dframe;  // d(u) along the chart directions

  std::array<Covector6, 4> theta;
  std::array<std::array<Covector6, 4>, 4> omega;
  Covector6 theta5, theta6;
  CCovector6 phi1, phi2, phi3, psi3;

  Riemann4 curvature;  // frame components at u
  CurvatureBlocks blocks;

  /// Rows phi1, phi2, phi3, conj phi1, conj phi2, conj phi3.
  CMatrix6 phi_coframe() const;

  /// Rows theta1..theta4, 2t theta5, 2t theta6 (orthonormal for g_t).
  Eigen::Matrix<double, 6, 6> gt_coframe(double t) const;

  /// Chart matrix of g_t (the sum of squares of the co-frame rows).
  Eigen::Matrix<double, 6, 6> gt_metric(double t) const;

  /// Chart matrix of the almost complex structure J_sign.
  Eigen::Matrix<double, 6, 6> j_matrix(double t, JSign sign) const;
};

SectionFrame section_frame(const MetricSpec& spec, const TwistorChartPoint& p,
                           const SectionOptions& opts = {});

/// Fundamental 2-form of (g_t, J_sign) as a chart form.
AltForm kform(const SectionFrame& sf, JSign sign, double t);

/// Curvature 2-form Omega^a_b = (1/2) R_abcd theta^c ^ theta^d at the frame.
AltForm curvature_two_form(const SectionFrame& sf, int a, int b);

/// rho(Omega) = (1/2)[Omega^1_3 - Omega^2_4 + i (Omega^2_3 + Omega^1_4)].
AltForm rho_two_form(const SectionFrame& sf);

using FormField = std::function<AltForm(const SectionFrame&)>;

/// Pre-evaluated section frames on a central-difference stencil.
class ChartStencil {
 public:
  ChartStencil(const MetricSpec& spec, const TwistorChartPoint& p, double h,
               const SectionOptions& opts = {});

  const SectionFrame& center() const { return center_; }
  double step() const { return h_; }

  /// Exterior derivative of the field by central differences, O(h^2).
  AltForm d(const FormField& field) const;

 private:
  SectionFrame center_;
  std::array<SectionFrame, 6> plus_, minus_;
  double h_;
};

/// (p,q) component of a chart form in the pulled-back complex co-frame.
AltForm type_project(const AltForm& chart_form, const SectionFrame& sf,
                     JSign sign, int p, int q);

struct DkComparison {
  double residual = 0.0;       // max |numeric - predicted| coefficient
  double numeric_scale = 0.0;  // max |numeric| coefficient
};

/// Numerical d of the Kaehler form against its coefficient-table
/// prediction from the lambda set at the same section frame.
DkComparison compare_dk(const MetricSpec& spec, const TwistorChartPoint& p,
                        double t, JSign sign, double h,
                        const SectionOptions& opts = {});

struct StructureReport {
  double dtheta_residual = 0.0;     // d theta^a + omega^a_b ^ theta^b
  double dphi3_residual = 0.0;      // d phi3 - i(omega12+omega34)^phi3 - rho
  double c1_trace_residual = 0.0;   // d(omega12+omega34) - 4 th5^th6 - Om12 - Om34
  double gram_residual = 0.0;       // co-frame Gram matrix vs identity
};

StructureReport verify_structure_equations(const MetricSpec& spec,
                                           const TwistorChartPoint& p,
                                           double t, double h,
                                           const SectionOptions& opts = {});

struct DdbarMeasurement {
  AltForm measured{4};   // (2,2) part of d of the (1,2) part of dK+
  AltForm predicted{4};  // coefficient table from the blocks
  double residual = 0.0;
};

/// Fully numerical first-Gauduchon kernel: nested stencils, no use of the
/// printed ddbar formulas on the measurement side.
DdbarMeasurement measure_ddbar_k_plus(const MetricSpec& spec,
                                      const TwistorChartPoint& p, double t,
                                      double h);

/// theta1^..^theta4 coefficient of the wedge square of the traced
/// curvature, computed with chart forms (cross-check of the algebraic
/// formula).
double wedge_square_chart(const SectionFrame& sf);

}  // namespace twistorlab

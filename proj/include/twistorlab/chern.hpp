#pragma once

#include "twistorlab/lambda2.hpp"

#include <Eigen/Dense>

namespace twistorlab {

enum class DefinitenessClass {
  PositiveDefinite,
  NegativeDefinite,
  Semidefinite,
  Indefinite
};

struct DefinitenessResult {
  DefinitenessClass cls = DefinitenessClass::Semidefinite;
  Eigen::Vector3d eigenvalues = Eigen::Vector3d::Zero();  // sorted ascending
};

const char* to_string(DefinitenessClass cls);

/// (W+ + (s/12) Id)^2 - Ric0* Ric0 on the self-dual forms, i.e. A A - B^T B
/// in the standard bases.
Eigen::Matrix3d fine_panov_operator(const CurvatureBlocks& blocks);

/// Eigenvalue classification with tolerance tau = tol * max(1, |lambda_max|).
DefinitenessResult classify_definiteness(const Eigen::Matrix3d& d,
                                         double tol = 1e-8);

/// sqrt(A12^2 + A13^2) = |Lambda3| / t^2; zero per frame iff the Chern form
/// has no (2,0)+(0,2) part at that frame.
double one_one_defect(const CurvatureBlocks& blocks);

/// With F_cd = R_12cd + R_34cd: the theta1^..^theta4 coefficient of the
/// wedge square of the traced curvature, 2 (F12 F34 - F13 F24 + F14 F23).
double wedge_square_coeff(const Riemann4& frame_curv);

/// Coefficient tables for the first Chern forms of the vertical and
/// horizontal bundles: c1(V) = (1/2pi)(4 theta5^theta6 + (1/2) F_cd
/// theta^c ^ theta^d), c1(Z, J+) = 2 c1(V), c1(Z, J-) = 0 with
/// c1(H, J-) = -c1(V, J-).
struct ChernTraceTable {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();  // horizontal coefficients
  double fiber_coeff = 0.0;                     // 4/(2pi)
  double horizontal_scale = 0.0;                // 1/(2pi)
  int c1_z_plus_multiple = 2;                   // c1(Z,J+) = 2 c1(V)
  double c1_z_minus = 0.0;
  int c1_h_minus_sign = -1;                     // c1(H,J-) = -c1(V,J-)
};

ChernTraceTable connection_curvature_trace(const Riemann4& frame_curv);

/// Everything the report needs from this module at one point.
struct ChernData {
  Eigen::Matrix3d d_operator;
  DefinitenessResult definiteness;
  double one_one_defect = 0.0;
  double wedge_square_coeff = 0.0;
  double c1_fiber_coeff = 0.0;
};

ChernData chern_data(const CurvatureBlocks& blocks,
                     const Riemann4& frame_curv, double tol = 1e-8);

}  // namespace twistorlab

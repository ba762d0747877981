#pragma once

#include "twistorlab/curvature.hpp"

#include <Eigen/Dense>

#include <array>
#include <random>

namespace twistorlab {

/// 2-forms are antisymmetric 4x4 coefficient arrays; the inner product is
/// <f,g> = (1/2) f_ab g_ab.
using Form2 = Eigen::Matrix4d;

double form2_inner(const Form2& f, const Form2& g);

/// Standard orthonormal bases of the self-dual / anti-self-dual 2-forms,
/// with the 1/sqrt(2) normalization. Hodge star is +1 on the first triple
/// and -1 on the second.
const std::array<Form2, 3>& eplus_basis();
const std::array<Form2, 3>& eminus_basis();

/// Curvature operator applied to a 2-form: (Rf)_ab = (1/2) R_abcd f_cd.
Form2 rhat_apply(const Riemann4& r, const Form2& f);

/// Action of a in SO(4) on a 2-form: (a.f)_ab = a_ac a_bd f_cd.
Form2 rotate_form2(const Eigen::Matrix4d& a, const Form2& f);

/// Blocks of the curvature operator on self-dual + anti-self-dual forms:
///   [ A  B^T ]
///   [ B  C   ]
/// with A = W+ + (s/12) Id, C = W- + (s/12) Id, B the trace-free Ricci part.
struct CurvatureBlocks {
  Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d B = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d C = Eigen::Matrix3d::Zero();

  double s() const { return 4.0 * A.trace(); }
  Eigen::Matrix3d wplus() const {
    return A - (s() / 12.0) * Eigen::Matrix3d::Identity();
  }
  Eigen::Matrix3d wminus() const {
    return C - (s() / 12.0) * Eigen::Matrix3d::Identity();
  }
};

/// Extract A, B, C by inner products against the explicit bases. Throws if
/// the input violates the curvature symmetries beyond tolerance (relative
/// to its norm), which signals an upstream bug.
CurvatureBlocks blocks_from_frame_curvature(const Riemann4& frame_curv);

/// Reconstruct the 4-index frame curvature with the given blocks. Requires
/// trace A == trace C for the result to satisfy the first Bianchi identity.
Riemann4 frame_curvature_from_blocks(const CurvatureBlocks& blocks);

/// Reversing the orientation swaps the self-dual and anti-self-dual sides:
/// (A,B,C) -> (C, B^T, A).
CurvatureBlocks orientation_flip(const CurvatureBlocks& blocks);

/// The 2:1 homomorphism SO(4) -> SO(3) x SO(3): matrix elements of the
/// 2-form action on the self-dual / anti-self-dual bases.
struct So4Split {
  Eigen::Matrix3d plus;
  Eigen::Matrix3d minus;
};

So4Split so4_split(const Eigen::Matrix4d& a);

/// Frame covariance: (A,B,C) -> (a+^-1 A a+, a-^-1 B a+, a-^-1 C a-).
CurvatureBlocks rotate_blocks(const CurvatureBlocks& blocks,
                              const Eigen::Matrix4d& a);

/// Uniform-ish random SO(4) element (QR of a Gaussian matrix, determinant
/// fixed up); deterministic given the engine state.
Eigen::Matrix4d random_so4(std::mt19937_64& rng);

/// ||W+||_F: zero exactly when the manifold is anti-self-dual.
double asd_defect(const CurvatureBlocks& blocks);

/// ||B||_F: zero exactly when the manifold is Einstein.
double einstein_defect(const CurvatureBlocks& blocks);

/// Relative-tolerance zero test for defect values: d counts as zero when
/// d < tol * max(1, scale).
bool is_zero_defect(double defect, double scale, double tol = 1e-8);

}  // namespace twistorlab

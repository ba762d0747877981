#pragma once

#include "twistorlab/metric.hpp"

#include <Eigen/Dense>

#include <array>

namespace twistorlab {

/// Christoffel symbols G[k][i][j] = Gamma^k_{ij} and their coordinate
/// derivatives dG[l][k][i][j] = d_l Gamma^k_{ij}, assembled analytically
/// from metric jets (never by differencing).
struct Christoffels {
  std::array<std::array<std::array<double, 4>, 4>, 4> G{};
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> dG{};
};

/// Fully lowered 4-index curvature tensor, either in coordinate or in
/// orthonormal-frame indices depending on provenance.
struct Riemann4 {
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> c{};

  double operator()(int i, int j, int k, int l) const { return c[i][j][k][l]; }
  double& at(int i, int j, int k, int l) { return c[i][j][k][l]; }

  double frobenius_norm() const;
};

Christoffels christoffel(const MetricJets& jets);

/// Coordinate curvature with all four standard symmetries; sign convention
/// calibrated so the unit round 4-sphere has scalar curvature +12.
Riemann4 riemann_coord(const Christoffels& ch, const MetricJets& jets);

/// s = g^{ik} g^{jl} R_{ijkl}.
double scalar_curvature_coord(const Riemann4& r, const Eigen::Matrix4d& g);

/// Oriented orthonormal frame by Gram-Schmidt of the coordinate basis in
/// index order; column a holds the components of frame vector e_a. For
/// reversed orientation the fourth column is negated.
Eigen::Matrix4d build_frame(const Eigen::Matrix4d& g, Orientation orientation);

struct FrameWithDerivatives {
  Eigen::Matrix4d e;
  std::array<Eigen::Matrix4d, 4> de;  // de[k] = d_k e
};

/// Frame plus its exact first derivatives, propagated through the
/// Gram-Schmidt with first-order duals seeded from the metric jets.
FrameWithDerivatives build_frame_with_derivatives(const MetricJets& jets,
                                                  Orientation orientation);

/// R_{abcd} = R_{ijkl} e^i_a e^j_b e^k_c e^l_d.
Riemann4 frame_curvature(const Riemann4& coord, const Eigen::Matrix4d& frame);

/// Sum over alpha<beta of 2 R_{abab} (orthonormal indices).
double scalar_curvature_frame(const Riemann4& frame);

/// Max violation of the antisymmetry/pair symmetries and the first Bianchi
/// identity, for sanity checks on computed curvature.
double curvature_symmetry_defect(const Riemann4& r);

/// Convenience bundle: everything the downstream modules need at a point.
struct PointCurvature {
  Eigen::Vector4d x;
  Eigen::Matrix4d g;
  Eigen::Matrix4d frame;
  Riemann4 coord;
  Riemann4 in_frame;
  double s = 0.0;
};

PointCurvature curvature_at(const MetricSpec& spec, const Eigen::Vector4d& x);

}  // namespace twistorlab

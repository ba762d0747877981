#pragma once

#include "twistorlab/curvature.hpp"
#include "twistorlab/metric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistorlab {

struct CatalogFlags {
  bool asd = false;
  bool einstein = false;
  bool constant_s = false;
};

/// Built-in metric with its closed-form ground truth, when one exists. The
/// oracle holds the constant frame components of the curvature tensor in an
/// adapted orthonormal frame; engine output is compared through
/// frame-invariant data (eigenvalues, singular values, norms).
struct CatalogEntry {
  std::string name;
  MetricSpec spec;
  CatalogFlags flags;
  std::optional<double> expected_s;
  std::optional<Riemann4> oracle;
};

/// Names: flat, sphere4 (param r), s2xs2 (params r1, r2), cp2_fs,
/// perturbed_flat (param eps). Unknown names or invalid parameters throw.
CatalogEntry catalog_get(const std::string& name,
                         const std::map<std::string, double>& params = {},
                         Orientation orientation = Orientation::Standard);

std::vector<std::string> catalog_names();

/// Space-form curvature R_abcd = K (delta_ac delta_bd - delta_ad delta_bc).
Riemann4 constant_curvature_oracle(double k);

/// Product of two surfaces of Gauss curvatures K1, K2 in a product-adapted
/// frame (e1, e2 on the first factor): only R_1212 = K1 and R_3434 = K2 up
/// to index symmetries.
Riemann4 product_sphere_oracle(double k1, double k2);

}  // namespace twistorlab

#include "twistorlab/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace twistorlab {

Riemann4 constant_curvature_oracle(double k) {
  Riemann4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          r.c[a][b][c][d] =
              k * ((a == c && b == d ? 1.0 : 0.0) -
                   (a == d && b == c ? 1.0 : 0.0));
  return r;
}

Riemann4 product_sphere_oracle(double k1, double k2) {
  Riemann4 r;
  auto set_plane = [&r](int a, int b, double k) {
    r.c[a][b][a][b] = k;
    r.c[b][a][b][a] = k;
    r.c[a][b][b][a] = -k;
    r.c[b][a][a][b] = -k;
  };
  set_plane(0, 1, k1);
  set_plane(2, 3, k2);
  return r;
}

namespace {

double param_or(const std::map<std::string, double>& params,
                const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void require_positive(const std::string& entry, const std::string& name,
                      double value) {
  if (!(value > 0.0))
    throw std::invalid_argument(entry + ": parameter " + name +
                                " must be positive");
}

void reject_unknown(const std::string& entry,
                    const std::map<std::string, double>& params,
                    std::initializer_list<const char*> known) {
  for (const auto& [name, value] : params) {
    bool ok = false;
    for (const char* k : known) ok = ok || name == k;
    if (!ok)
      throw std::invalid_argument(entry + ": unknown parameter " + name);
  }
}

std::array<Interval, 4> box(double lo, double hi) {
  return {Interval{lo, hi}, Interval{lo, hi}, Interval{lo, hi},
          Interval{lo, hi}};
}

}  // namespace

CatalogEntry catalog_get(const std::string& name,
                         const std::map<std::string, double>& params,
                         Orientation orientation) {
  CatalogEntry entry;
  entry.name = name;

  if (name == "flat") {
    reject_unknown(name, params, {});
    entry.spec = parse_metric("g11 = 1\ng22 = 1\ng33 = 1\ng44 = 1\n");
    entry.spec.domain = box(-1.0, 1.0);
    entry.flags = {true, true, true};
    entry.expected_s = 0.0;
    entry.oracle = constant_curvature_oracle(0.0);
  } else if (name == "sphere4") {
    reject_unknown(name, params, {"r"});
    const double r = param_or(params, "r", 1.0);
    require_positive(name, "r", r);
    std::ostringstream os;
    os << "param r = " << r << "\n";
    const char* conf =
        "(2*r^2/(r^2 + x1^2 + x2^2 + x3^2 + x4^2))^2";
    for (int i = 1; i <= 4; ++i) os << "g" << i << i << " = " << conf << "\n";
    entry.spec = parse_metric(os.str());
    entry.spec.domain = box(-0.9, 0.9);
    entry.flags = {true, true, true};
    const double k = 1.0 / (r * r);
    entry.expected_s = 12.0 * k;
    entry.oracle = constant_curvature_oracle(k);
  } else if (name == "s2xs2") {
    reject_unknown(name, params, {"r1", "r2"});
    const double r1 = param_or(params, "r1", 1.0);
    const double r2 = param_or(params, "r2", 1.0);
    require_positive(name, "r1", r1);
    require_positive(name, "r2", r2);
    std::ostringstream os;
    os << "param r1 = " << r1 << "\nparam r2 = " << r2 << "\n"
       << "g11 = r1^2\n"
       << "g22 = r1^2*sin(x1)^2\n"
       << "g33 = r2^2\n"
       << "g44 = r2^2*sin(x3)^2\n";
    entry.spec = parse_metric(os.str());
    // Polar coordinate per factor; keep away from the poles.
    entry.spec.domain = {Interval{0.3, M_PI - 0.3}, Interval{0.3, 6.0},
                         Interval{0.3, M_PI - 0.3}, Interval{0.3, 6.0}};
    const double k1 = 1.0 / (r1 * r1), k2 = 1.0 / (r2 * r2);
    entry.flags = {false, k1 == k2, true};
    entry.expected_s = 2.0 * k1 + 2.0 * k2;
    entry.oracle = product_sphere_oracle(k1, k2);
  } else if (name == "cp2_fs") {
    reject_unknown(name, params, {});
    // Fubini-Study on the affine chart, z1 = x1 + i x2, z2 = x3 + i x4,
    // real form of 2 dd^c log(1 + |z|^2).
    const std::string text =
        "g11 = 2*(1 + x3^2 + x4^2)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g22 = 2*(1 + x3^2 + x4^2)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g33 = 2*(1 + x1^2 + x2^2)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g44 = 2*(1 + x1^2 + x2^2)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g13 = -2*(x1*x3 + x2*x4)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g24 = -2*(x1*x3 + x2*x4)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g14 = -2*(x1*x4 - x2*x3)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n"
        "g23 = 2*(x1*x4 - x2*x3)/(1 + x1^2 + x2^2 + x3^2 + x4^2)^2\n";
    entry.spec = parse_metric(text);
    entry.spec.domain = box(-0.7, 0.7);
    // Self-dual with the complex orientation; anti-self-dual reversed.
    entry.flags = {orientation == Orientation::Reversed, true, true};
    // Regression value measured with this normalization (not taken from
    // the literature); see the catalog tests.
    entry.expected_s = 12.0;
  } else if (name == "perturbed_flat") {
    reject_unknown(name, params, {"eps"});
    const double eps = param_or(params, "eps", 0.01);
    if (!(std::abs(eps) < 0.2))
      throw std::invalid_argument(
          "perturbed_flat: |eps| must be below 0.2 to keep the metric "
          "positive definite on the chart");
    std::ostringstream os;
    os << "param eps = " << eps << "\n"
       << "g11 = 1 + eps*x2^2\n"
       << "g12 = eps*x1*x3\n"
       << "g34 = eps*x2*x4\n"
       << "g22 = 1\ng33 = 1\ng44 = 1\n";
    entry.spec = parse_metric(os.str());
    entry.spec.domain = box(-0.9, 0.9);
    entry.flags = {false, false, false};
  } else {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }

  entry.spec.orientation = orientation;
  if (orientation == Orientation::Reversed && entry.oracle) {
    // An orientation flip reverses the fourth frame leg; the space-form and
    // product oracles are invariant under that, so keep them as-is.
  }
  return entry;
}

std::vector<std::string> catalog_names() {
  return {"flat", "sphere4", "s2xs2", "cp2_fs", "perturbed_flat"};
}

}  // namespace twistorlab

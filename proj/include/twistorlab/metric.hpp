#pragma once

#include "twistorlab/expr.hpp"
#include "twistorlab/jets.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistorlab {

enum class Orientation { Standard, Reversed };

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
};

/// Metric chart: a symmetric 4x4 field of expressions over x1..x4 closed
/// over concrete parameter values, with a sampling domain box and an
/// orientation flag. Immutable after construction; evaluation is pure.
struct MetricSpec {
  std::array<std::array<ExprPtr, 4>, 4> comp{};  // upper triangle authoritative
  std::map<std::string, double> params;
  std::array<Interval, 4> domain{};
  Orientation orientation = Orientation::Standard;

  const ExprPtr& entry(int i, int j) const {
    return i <= j ? comp[i][j] : comp[j][i];
  }

  MetricSpec with_parameter(const std::string& name, double value) const {
    MetricSpec s = *this;
    s.params[name] = value;
    return s;
  }

  MetricSpec with_orientation(Orientation o) const {
    MetricSpec s = *this;
    s.orientation = o;
    return s;
  }
};

/// 4x4 field of second-order jets of the metric components at one point.
struct MetricJets {
  std::array<std::array<Jet2, 4>, 4> g;

  Eigen::Matrix4d value() const {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j].value();
    return m;
  }
  /// Matrix of partial derivatives d_k g_ij.
  Eigen::Matrix4d d(int k) const {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j].grad()[k];
    return m;
  }
  /// Matrix of second partials d_k d_l g_ij.
  Eigen::Matrix4d dd(int k, int l) const {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j].hess(k, l);
    return m;
  }
};

/// Parse a metric DSL file. All four diagonal entries are required;
/// missing off-diagonal entries are zero. Giving both gij and gji with
/// structurally different expressions is an error, as is referencing an
/// identifier that is neither a coordinate nor a declared parameter.
MetricSpec parse_metric(const std::string& text);

/// Serialize back to DSL text (param bindings first, then components).
std::string metric_to_string(const MetricSpec& spec);

/// Exact value/gradient/Hessian of every component at a point.
MetricJets eval_jet2(const MetricSpec& spec, const Eigen::Vector4d& point);

Eigen::Matrix4d eval_value(const MetricSpec& spec, const Eigen::Vector4d& point);

struct SampleDiagnostic {
  Eigen::Vector4d point;
  bool evaluable = false;
  std::string error;
  double min_eigenvalue = 0.0;
  bool positive_definite = false;
};

struct ValidationReport {
  std::vector<SampleDiagnostic> samples;
  bool pass = false;
  double min_eigenvalue = 0.0;  // over all evaluable samples
};

/// Positive-definiteness threshold on the smallest metric eigenvalue.
inline constexpr double kMetricEigenvalueFloor = 1e-8;

ValidationReport validate(const MetricSpec& spec,
                          const std::vector<Eigen::Vector4d>& samples);

}  // namespace twistorlab

#pragma once

#include "twistorlab/catalog.hpp"
#include "twistorlab/chern.hpp"
#include "twistorlab/conditions.hpp"
#include "twistorlab/metric.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistorlab {

inline constexpr const char* kSchemaVersion = "twistorlab/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
  std::string manifold;  // catalog name; empty when a file is given
  std::map<std::string, double> manifold_params;
  std::string metric_file;
  Orientation orientation = Orientation::Standard;

  std::vector<double> t_values = {1.0};
  int points = 10;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double h = 1e-3;
  int rotations = 200;

  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout

  bool analysis_blocks = true;
  bool analysis_twistor = true;
  bool analysis_chern = true;
  bool corrupt_frame = false;  // negative control for the oracle
};

/// Failure with the CLI exit code contract: 2 = validation, 3 = numerical.
class RunError : public std::runtime_error {
 public:
  RunError(int exit_code, std::string message,
           std::vector<double> point = {})
      : std::runtime_error(std::move(message)),
        exit_code_(exit_code),
        point_(std::move(point)) {}
  int exit_code() const { return exit_code_; }
  const std::vector<double>& point() const { return point_; }
  std::string to_json() const;

 private:
  int exit_code_;
  std::vector<double> point_;
};

struct TwistorDefectRecord {
  double t = 1.0;
  double balanced_defect = 0.0;
  double kahler_plus_defect = 0.0;
  double kahler_minus_defect = 0.0;
  double gauduchon1_plus = 0.0;
  double gauduchon1_minus = 0.0;
  bool gauduchon_applicable = false;
  std::string symplectic12_class;
};

struct PointRecord {
  int index = 0;
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  double s = 0.0;
  double wplus_norm = 0.0, wminus_norm = 0.0, b_norm = 0.0;
  Eigen::Matrix3d A, B, C;
  std::complex<double> l12, l1b2b, l11b, l22b, l1b2, l12b;
  double sup_balanced_defect = 0.0;
  double sup_one_one_defect = 0.0;
  std::vector<TwistorDefectRecord> twistor;
  Eigen::Matrix3d d_operator;
  Eigen::Vector3d d_eigenvalues;
  std::string definiteness;
  double one_one_defect = 0.0;
  double wedge_square_coeff = 0.0;
  double c1_fiber_coeff = 0.0;
};

struct DefectStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;

  void absorb(double v, int index) {
    if (index == 0) {
      min = max = mean = v;
      return;
    }
    min = std::min(min, v);
    max = std::max(max, v);
    mean += (v - mean) / (index + 1);
  }
};

struct Aggregates {
  DefectStats s;
  DefectStats asd_defect;
  DefectStats einstein_defect;
  DefectStats balanced_defect;  // supremum over rotations, per point
  DefectStats one_one_defect;   // supremum over rotations, per point
  double kahler_plus_defect_min = 0.0;
  double kahler_minus_defect_min = 0.0;
  double gauduchon1_plus_max_abs = 0.0;
  double gauduchon1_minus_max_abs = 0.0;
  bool asd = false;
  bool einstein = false;
  bool constant_s = false;
  std::map<std::string, int> definiteness_counts;
};

struct OracleRecord {
  int index = 0;
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  Eigen::Vector2d y = Eigen::Vector2d::Zero();
  double t = 1.0;
  double dk_plus_residual = 0.0;
  double dk_minus_residual = 0.0;
  double refinement_ratio = 0.0;  // residual(h) / residual(h/2); <0 if noise
  double dtheta_residual = 0.0;
  double dphi3_residual = 0.0;
  double c1_trace_residual = 0.0;
  double gram_residual = 0.0;
  double wedge_square_chart = 0.0;
  double wedge_square_algebraic = 0.0;
  bool pass = false;
};

struct Report {
  RunConfig config;
  std::string manifold_description;
  std::vector<PointRecord> points;
  Aggregates aggregates;
  std::vector<OracleRecord> oracle;
};

struct ScanRow {
  double t = 0.0;
  double gauduchon1_plus = 0.0;
  double gauduchon1_minus = 0.0;
  double kahler_plus_defect = 0.0;
  double kahler_minus_defect = 0.0;
};

struct ScanReport {
  RunConfig config;
  std::vector<ScanRow> rows;
};

/// Resolve the metric source of the config (catalog entry or DSL file).
MetricSpec spec_from_config(const RunConfig& config);

/// Seeded uniform samples over the domain box of the spec.
std::vector<Eigen::Vector4d> sample_points(const MetricSpec& spec, int count,
                                           std::uint64_t seed);

Report run_analyze(const RunConfig& config);
ScanReport run_scan_t(const RunConfig& config);
Report run_oracle(const RunConfig& config);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);
std::string scan_to_json(const ScanReport& report);
std::string scan_to_csv(const ScanReport& report);

}  // namespace twistorlab

#include "twistorlab/report.hpp"

#include "twistorlab/chart.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace twistorlab {

using json = nlohmann::ordered_json;

namespace {

json complex_json(const std::complex<double>& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json matrix3_json(const Eigen::Matrix3d& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json config_json(const RunConfig& c) {
  json j;
  j["manifold"] = c.manifold;
  j["manifold_params"] = c.manifold_params;
  j["metric_file"] = c.metric_file;
  j["orientation"] =
      c.orientation == Orientation::Standard ? "standard" : "reversed";
  j["t_values"] = c.t_values;
  j["points"] = c.points;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["h"] = c.h;
  j["rotations"] = c.rotations;
  j["format"] = c.format;
  j["analysis"] = json{{"blocks", c.analysis_blocks},
                       {"twistor", c.analysis_twistor},
                       {"chern", c.analysis_chern}};
  return j;
}

const char* symplectic_name(Symplectic12Class cls) {
  switch (cls) {
    case Symplectic12Class::PlusAndMinus:
      return "plus_and_minus";
    case Symplectic12Class::MinusOnly:
      return "minus_only";
    case Symplectic12Class::Neither:
      return "neither";
  }
  return "?";
}

}  // namespace

std::string RunError::to_json() const {
  json j;
  j["error"] = json{{"code", exit_code_}, {"message", what()}};
  if (!point_.empty()) j["error"]["point"] = point_;
  return j.dump();
}

MetricSpec spec_from_config(const RunConfig& config) {
  if (!config.metric_file.empty()) {
    std::ifstream in(config.metric_file);
    if (!in)
      throw RunError(2, "cannot open metric file " + config.metric_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      MetricSpec spec = parse_metric(buffer.str());
      spec.orientation = config.orientation;
      return spec;
    } catch (const DslError& e) {
      throw RunError(2, std::string("metric file: ") + e.what());
    }
  }
  try {
    return catalog_get(config.manifold, config.manifold_params,
                       config.orientation)
        .spec;
  } catch (const std::invalid_argument& e) {
    throw RunError(2, e.what());
  }
}

std::vector<Eigen::Vector4d> sample_points(const MetricSpec& spec, int count,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::Vector4d> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::Vector4d x;
    for (int k = 0; k < 4; ++k) {
      const Interval& iv = spec.domain[k];
      x[k] = iv.lo + unit(rng) * iv.width();
    }
    points.push_back(x);
  }
  return points;
}

namespace {

void require_valid(const MetricSpec& spec,
                   const std::vector<Eigen::Vector4d>& samples) {
  const ValidationReport v = validate(spec, samples);
  if (v.pass) return;
  for (const auto& s : v.samples) {
    if (s.evaluable && s.positive_definite) continue;
    std::vector<double> pt(s.point.data(), s.point.data() + 4);
    if (!s.evaluable)
      throw RunError(2, "metric not evaluable at sample: " + s.error, pt);
    throw RunError(2,
                   "metric not positive definite at sample (min eigenvalue " +
                       format_double(s.min_eigenvalue) + ")",
                   pt);
  }
  throw RunError(2, "metric validation failed");
}

PointRecord analyze_point(const MetricSpec& spec, const Eigen::Vector4d& x,
                          int index, const RunConfig& config) {
  PointRecord rec;
  rec.index = index;
  rec.x = x;

  PointCurvature pc;
  try {
    pc = curvature_at(spec, x);
  } catch (const DslError& e) {
    throw RunError(3, std::string("evaluation failed: ") + e.what(),
                   {x[0], x[1], x[2], x[3]});
  } catch (const std::domain_error& e) {
    throw RunError(3, std::string("numerical failure: ") + e.what(),
                   {x[0], x[1], x[2], x[3]});
  }

  const CurvatureBlocks blocks = blocks_from_frame_curvature(pc.in_frame);
  rec.s = blocks.s();
  rec.wplus_norm = asd_defect(blocks);
  rec.wminus_norm = blocks.wminus().norm();
  rec.b_norm = einstein_defect(blocks);
  rec.A = blocks.A;
  rec.B = blocks.B;
  rec.C = blocks.C;

  const LambdaSet lambda = lambda_from_blocks(blocks, config.t_values.front());
  rec.l12 = lambda.l12;
  rec.l1b2b = lambda.l1b2b;
  rec.l11b = lambda.l11b;
  rec.l22b = lambda.l22b;
  rec.l1b2 = lambda.l1b2;
  rec.l12b = lambda.l12b;

  std::mt19937_64 rot_rng(config.seed * 1000003ULL +
                          static_cast<std::uint64_t>(index) + 1);
  rec.sup_balanced_defect = sup_over_rotations(
      blocks,
      [&](const CurvatureBlocks& b) {
        return balanced_defect(lambda_from_blocks(b, 1.0));
      },
      config.rotations, rot_rng);
  std::mt19937_64 rot_rng2(config.seed * 1000003ULL +
                           static_cast<std::uint64_t>(index) + 7777);
  rec.sup_one_one_defect = sup_over_rotations(
      blocks, [](const CurvatureBlocks& b) { return one_one_defect(b); },
      config.rotations, rot_rng2);

  if (config.analysis_twistor) {
    for (double t : config.t_values) {
      const LambdaSet lt = lambda_from_blocks(blocks, t);
      TwistorDefectRecord td;
      td.t = t;
      td.balanced_defect = balanced_defect(lt);
      td.kahler_plus_defect = kahler_defect(lt, JSign::Plus);
      td.kahler_minus_defect = kahler_defect(lt, JSign::Minus);
      td.gauduchon1_plus = gauduchon1_plus(blocks, lt, t);
      td.gauduchon1_minus = gauduchon1_minus(blocks, lt, t);
      td.symplectic12_class =
          symplectic_name(classify_12_symplectic(blocks, t, config.tol));
      rec.twistor.push_back(td);
    }
  }

  if (config.analysis_chern) {
    const ChernData cd = chern_data(blocks, pc.in_frame, config.tol);
    rec.d_operator = cd.d_operator;
    rec.d_eigenvalues = cd.definiteness.eigenvalues;
    rec.definiteness = to_string(cd.definiteness.cls);
    rec.one_one_defect = cd.one_one_defect;
    rec.wedge_square_coeff = cd.wedge_square_coeff;
    rec.c1_fiber_coeff = cd.c1_fiber_coeff;
  }

  return rec;
}

Aggregates aggregate(std::vector<PointRecord>& points, const RunConfig& config) {
  Aggregates agg;
  if (points.empty()) return agg;
  agg.kahler_plus_defect_min = std::numeric_limits<double>::infinity();
  agg.kahler_minus_defect_min = std::numeric_limits<double>::infinity();
  double block_scale = 0.0;
  int index = 0;
  for (const auto& p : points) {
    agg.s.absorb(p.s, index);
    agg.asd_defect.absorb(p.wplus_norm, index);
    agg.einstein_defect.absorb(p.b_norm, index);
    agg.balanced_defect.absorb(p.sup_balanced_defect, index);
    agg.one_one_defect.absorb(p.sup_one_one_defect, index);
    ++index;
    block_scale = std::max(block_scale,
                           p.A.norm() + p.B.norm() + p.C.norm());
    for (const auto& td : p.twistor) {
      agg.kahler_plus_defect_min =
          std::min(agg.kahler_plus_defect_min, td.kahler_plus_defect);
      agg.kahler_minus_defect_min =
          std::min(agg.kahler_minus_defect_min, td.kahler_minus_defect);
      agg.gauduchon1_plus_max_abs =
          std::max(agg.gauduchon1_plus_max_abs, std::abs(td.gauduchon1_plus));
      agg.gauduchon1_minus_max_abs =
          std::max(agg.gauduchon1_minus_max_abs, std::abs(td.gauduchon1_minus));
    }
    if (!p.definiteness.empty()) agg.definiteness_counts[p.definiteness] += 1;
  }
  if (!std::isfinite(agg.kahler_plus_defect_min))
    agg.kahler_plus_defect_min = 0.0;
  if (!std::isfinite(agg.kahler_minus_defect_min))
    agg.kahler_minus_defect_min = 0.0;
  agg.asd = is_zero_defect(agg.asd_defect.max, block_scale, config.tol);
  agg.einstein =
      is_zero_defect(agg.einstein_defect.max, block_scale, config.tol);
  agg.constant_s = (agg.s.max - agg.s.min) <
                   1e-6 * std::max(1.0, std::abs(agg.s.max));

  // The printed first-Gauduchon expressions are derived under the
  // anti-self-dual constant-s hypotheses; flag applicability accordingly.
  const bool applicable = agg.asd && agg.constant_s;
  for (auto& p : points)
    for (auto& td : p.twistor) td.gauduchon_applicable = applicable;
  return agg;
}

// Parallel map over sample indices with slot-per-index writes; the output
// order (and therefore the report bytes) is independent of scheduling.
// Exceptions are rethrown for the lowest failing index.
template <typename Fn>
void parallel_index_map(int count, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      std::max(1, std::min<int>(count, hw == 0 ? 1 : static_cast<int>(hw)));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (int i = 0; i < count; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

}  // namespace

Report run_analyze(const RunConfig& config) {
  for (double t : config.t_values)
    if (!(t > 0.0)) throw RunError(2, "t values must be positive");
  if (config.points < 1) throw RunError(2, "need at least one sample point");

  Report report;
  report.config = config;
  const MetricSpec spec = spec_from_config(config);
  report.manifold_description =
      config.metric_file.empty() ? config.manifold : config.metric_file;

  const auto samples = sample_points(spec, config.points, config.seed);
  require_valid(spec, samples);

  report.points.resize(samples.size());
  parallel_index_map(static_cast<int>(samples.size()), [&](int i) {
    report.points[i] = analyze_point(spec, samples[i], i, config);
  });
  report.aggregates = aggregate(report.points, config);
  return report;
}

ScanReport run_scan_t(const RunConfig& config) {
  ScanReport scan;
  scan.config = config;
  RunConfig analyze_config = config;
  const Report report = run_analyze(analyze_config);

  for (size_t ti = 0; ti < config.t_values.size(); ++ti) {
    ScanRow row;
    row.t = config.t_values[ti];
    double g1p = 0.0, g1m = 0.0, kp = 0.0, km = 0.0;
    bool first = true;
    for (const auto& p : report.points) {
      const auto& td = p.twistor[ti];
      if (first || std::abs(td.gauduchon1_plus) > std::abs(g1p))
        g1p = td.gauduchon1_plus;
      if (first || std::abs(td.gauduchon1_minus) > std::abs(g1m))
        g1m = td.gauduchon1_minus;
      kp = std::max(kp, td.kahler_plus_defect);
      km = std::max(km, td.kahler_minus_defect);
      first = false;
    }
    row.gauduchon1_plus = g1p;
    row.gauduchon1_minus = g1m;
    row.kahler_plus_defect = kp;
    row.kahler_minus_defect = km;
    scan.rows.push_back(row);
  }
  return scan;
}

Report run_oracle(const RunConfig& config) {
  for (double t : config.t_values)
    if (!(t > 0.0)) throw RunError(2, "t values must be positive");
  if (config.points < 1) throw RunError(2, "need at least one sample point");
  if (!(config.h > 0.0)) throw RunError(2, "stencil step h must be positive");

  Report report;
  report.config = config;
  const MetricSpec spec = spec_from_config(config);
  report.manifold_description =
      config.metric_file.empty() ? config.manifold : config.metric_file;

  // 6-dimensional samples: base points from the (slightly shrunk) domain
  // box plus fiber coordinates in (-0.5, 0.5)^2.
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TwistorChartPoint> points;
  for (int i = 0; i < config.points; ++i) {
    TwistorChartPoint p;
    for (int k = 0; k < 4; ++k) {
      const Interval& iv = spec.domain[k];
      const double margin = 0.05 * iv.width();
      p.x[k] = iv.lo + margin + unit(rng) * (iv.width() - 2.0 * margin);
    }
    p.y[0] = -0.5 + unit(rng);
    p.y[1] = -0.5 + unit(rng);
    points.push_back(p);
  }

  {
    std::vector<Eigen::Vector4d> base;
    for (const auto& p : points) base.push_back(p.x);
    require_valid(spec, base);
  }

  const SectionOptions opts{config.corrupt_frame};
  const double h = config.h;
  const double threshold = 10.0 * h * h;

  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    const TwistorChartPoint& p = points[i];
    for (double t : config.t_values) {
      OracleRecord rec;
      rec.index = i;
      rec.x = p.x;
      rec.y = p.y;
      rec.t = t;
      double dk_plus_scale = 1.0, dk_minus_scale = 1.0;
      try {
        const DkComparison plus = compare_dk(spec, p, t, JSign::Plus, h, opts);
        const DkComparison minus =
            compare_dk(spec, p, t, JSign::Minus, h, opts);
        rec.dk_plus_residual = plus.residual;
        rec.dk_minus_residual = minus.residual;
        dk_plus_scale = std::max(1.0, plus.numeric_scale);
        dk_minus_scale = std::max(1.0, minus.numeric_scale);

        const double coarse = std::max(plus.residual, minus.residual);
        const DkComparison plus_fine =
            compare_dk(spec, p, t, JSign::Plus, h / 2.0, opts);
        const DkComparison minus_fine =
            compare_dk(spec, p, t, JSign::Minus, h / 2.0, opts);
        const double fine = std::max(plus_fine.residual, minus_fine.residual);
        rec.refinement_ratio = fine > 1e-12 ? coarse / fine : -1.0;

        const StructureReport sr =
            verify_structure_equations(spec, p, t, h, opts);
        rec.dtheta_residual = sr.dtheta_residual;
        rec.dphi3_residual = sr.dphi3_residual;
        rec.c1_trace_residual = sr.c1_trace_residual;
        rec.gram_residual = sr.gram_residual;

        const SectionFrame sf = section_frame(spec, p, opts);
        rec.wedge_square_chart = wedge_square_chart(sf);
        rec.wedge_square_algebraic = wedge_square_coeff(sf.curvature);
      } catch (const std::exception& e) {
        throw RunError(3, std::string("oracle failure: ") + e.what(),
                       {p.x[0], p.x[1], p.x[2], p.x[3]});
      }

      // The dK thresholds scale with the numeric coefficient magnitude;
      // the truncation constant grows with the size of the dK entries.
      rec.pass = rec.dk_plus_residual < threshold * dk_plus_scale &&
                 rec.dk_minus_residual < threshold * dk_minus_scale &&
                 rec.dtheta_residual < threshold &&
                 rec.dphi3_residual < threshold &&
                 rec.c1_trace_residual < threshold &&
                 rec.gram_residual < 1e-9 &&
                 std::abs(rec.wedge_square_chart -
                          rec.wedge_square_algebraic) <
                     1e-9 * std::max(1.0, std::abs(rec.wedge_square_algebraic));
      report.oracle.push_back(rec);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string report_to_json(const Report& report) {
  json j;
  j["schema"] = kSchemaVersion;
  j["version"] = kToolVersion;
  j["config"] = config_json(report.config);
  j["manifold"] = report.manifold_description;

  json points = json::array();
  for (const auto& p : report.points) {
    json pj;
    pj["index"] = p.index;
    pj["x"] = vector_json(p.x);
    pj["s"] = p.s;
    pj["wplus_norm"] = p.wplus_norm;
    pj["wminus_norm"] = p.wminus_norm;
    pj["b_norm"] = p.b_norm;
    pj["A"] = matrix3_json(p.A);
    pj["B"] = matrix3_json(p.B);
    pj["C"] = matrix3_json(p.C);
    pj["lambda"] = json{{"l12", complex_json(p.l12)},
                        {"l1b2b", complex_json(p.l1b2b)},
                        {"l11b", complex_json(p.l11b)},
                        {"l22b", complex_json(p.l22b)},
                        {"l1b2", complex_json(p.l1b2)},
                        {"l12b", complex_json(p.l12b)}};
    pj["sup_balanced_defect"] = p.sup_balanced_defect;
    pj["sup_one_one_defect"] = p.sup_one_one_defect;
    json tw = json::array();
    for (const auto& td : p.twistor) {
      tw.push_back(json{{"t", td.t},
                        {"balanced_defect", td.balanced_defect},
                        {"kahler_plus_defect", td.kahler_plus_defect},
                        {"kahler_minus_defect", td.kahler_minus_defect},
                        {"gauduchon1_plus", td.gauduchon1_plus},
                        {"gauduchon1_minus", td.gauduchon1_minus},
                        {"gauduchon_applicable", td.gauduchon_applicable},
                        {"symplectic12_class", td.symplectic12_class}});
    }
    pj["twistor"] = tw;
    if (!p.definiteness.empty()) {
      pj["chern"] = json{{"D", matrix3_json(p.d_operator)},
                         {"eigenvalues", vector_json(p.d_eigenvalues)},
                         {"class", p.definiteness},
                         {"one_one_defect", p.one_one_defect},
                         {"wedge_square_coeff", p.wedge_square_coeff},
                         {"c1_fiber_coeff", p.c1_fiber_coeff}};
    }
    points.push_back(pj);
  }
  j["points"] = points;

  const Aggregates& a = report.aggregates;
  auto stats_json = [](const DefectStats& st) {
    return json{{"min", st.min}, {"max", st.max}, {"mean", st.mean}};
  };
  j["aggregates"] = json{{"s", stats_json(a.s)},
                         {"asd_defect", stats_json(a.asd_defect)},
                         {"einstein_defect", stats_json(a.einstein_defect)},
                         {"balanced_defect", stats_json(a.balanced_defect)},
                         {"one_one_defect", stats_json(a.one_one_defect)},
                         {"kahler_plus_defect_min", a.kahler_plus_defect_min},
                         {"kahler_minus_defect_min", a.kahler_minus_defect_min},
                         {"gauduchon1_plus_max_abs", a.gauduchon1_plus_max_abs},
                         {"gauduchon1_minus_max_abs", a.gauduchon1_minus_max_abs},
                         {"asd", a.asd},
                         {"einstein", a.einstein},
                         {"constant_s", a.constant_s},
                         {"definiteness_counts", a.definiteness_counts}};

  if (!report.oracle.empty()) {
    json rows = json::array();
    for (const auto& o : report.oracle) {
      rows.push_back(json{{"index", o.index},
                          {"x", vector_json(o.x)},
                          {"y", vector_json(o.y)},
                          {"t", o.t},
                          {"dk_plus_residual", o.dk_plus_residual},
                          {"dk_minus_residual", o.dk_minus_residual},
                          {"refinement_ratio", o.refinement_ratio},
                          {"dtheta_residual", o.dtheta_residual},
                          {"dphi3_residual", o.dphi3_residual},
                          {"c1_trace_residual", o.c1_trace_residual},
                          {"gram_residual", o.gram_residual},
                          {"wedge_square_chart", o.wedge_square_chart},
                          {"wedge_square_algebraic", o.wedge_square_algebraic},
                          {"pass", o.pass}});
    }
    j["oracle"] = rows;
  }
  return j.dump(2) + "\n";
}

namespace {

void csv_field(std::ostream& os, double v, bool leading_comma = true) {
  if (leading_comma) os << ",";
  os << format_double(v);
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  if (!report.oracle.empty()) {
    os << "index,x1,x2,x3,x4,y1,y2,t,dk_plus_residual,dk_minus_residual,"
          "refinement_ratio,dtheta_residual,dphi3_residual,c1_trace_residual,"
          "gram_residual,wedge_square_chart,wedge_square_algebraic,pass\n";
    for (const auto& o : report.oracle) {
      os << o.index;
      for (int k = 0; k < 4; ++k) csv_field(os, o.x[k]);
      csv_field(os, o.y[0]);
      csv_field(os, o.y[1]);
      csv_field(os, o.t);
      csv_field(os, o.dk_plus_residual);
      csv_field(os, o.dk_minus_residual);
      csv_field(os, o.refinement_ratio);
      csv_field(os, o.dtheta_residual);
      csv_field(os, o.dphi3_residual);
      csv_field(os, o.c1_trace_residual);
      csv_field(os, o.gram_residual);
      csv_field(os, o.wedge_square_chart);
      csv_field(os, o.wedge_square_algebraic);
      os << "," << (o.pass ? 1 : 0) << "\n";
    }
    return os.str();
  }

  os << "index,x1,x2,x3,x4,s,wplus_norm,wminus_norm,b_norm";
  const char* names[3] = {"a", "b", "c"};
  for (const char* n : names)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) os << "," << n << i << j;
  os << ",l12_re,l12_im,l1b2b_re,l1b2b_im,l11b_re,l11b_im,l22b_re,l22b_im,"
        "l1b2_re,l1b2_im,l12b_re,l12b_im,sup_balanced_defect,"
        "sup_one_one_defect,t,balanced_defect,kahler_plus_defect,"
        "kahler_minus_defect,gauduchon1_plus,gauduchon1_minus,"
        "gauduchon_applicable,symplectic12_class";
  os << ",d11,d12,d13,d21,d22,d23,d31,d32,d33,d_eig1,d_eig2,d_eig3,"
        "definiteness,one_one_defect,wedge_square_coeff,c1_fiber_coeff\n";

  for (const auto& p : report.points) {
    const size_t nt = std::max<size_t>(1, p.twistor.size());
    for (size_t ti = 0; ti < nt; ++ti) {
      os << p.index;
      for (int k = 0; k < 4; ++k) csv_field(os, p.x[k]);
      csv_field(os, p.s);
      csv_field(os, p.wplus_norm);
      csv_field(os, p.wminus_norm);
      csv_field(os, p.b_norm);
      for (const auto* m : {&p.A, &p.B, &p.C})
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) csv_field(os, (*m)(i, j));
      for (const auto* z : {&p.l12, &p.l1b2b, &p.l11b, &p.l22b, &p.l1b2,
                            &p.l12b}) {
        csv_field(os, z->real());
        csv_field(os, z->imag());
      }
      csv_field(os, p.sup_balanced_defect);
      csv_field(os, p.sup_one_one_defect);
      if (ti < p.twistor.size()) {
        const auto& td = p.twistor[ti];
        csv_field(os, td.t);
        csv_field(os, td.balanced_defect);
        csv_field(os, td.kahler_plus_defect);
        csv_field(os, td.kahler_minus_defect);
        csv_field(os, td.gauduchon1_plus);
        csv_field(os, td.gauduchon1_minus);
        os << "," << (td.gauduchon_applicable ? 1 : 0) << ","
           << td.symplectic12_class;
      } else {
        os << ",,,,,,,,";
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) csv_field(os, p.d_operator(i, j));
      for (int i = 0; i < 3; ++i) csv_field(os, p.d_eigenvalues[i]);
      os << "," << p.definiteness;
      csv_field(os, p.one_one_defect);
      csv_field(os, p.wedge_square_coeff);
      csv_field(os, p.c1_fiber_coeff);
      os << "\n";
    }
  }
  return os.str();
}

std::string scan_to_json(const ScanReport& report) {
  json j;
  j["schema"] = kSchemaVersion;
  j["version"] = kToolVersion;
  j["config"] = config_json(report.config);
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back(json{{"t", r.t},
                        {"gauduchon1_plus", r.gauduchon1_plus},
                        {"gauduchon1_minus", r.gauduchon1_minus},
                        {"kahler_plus_defect", r.kahler_plus_defect},
                        {"kahler_minus_defect", r.kahler_minus_defect}});
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string scan_to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "t,gauduchon1_plus,gauduchon1_minus,kahler_plus_defect,"
        "kahler_minus_defect\n";
  for (const auto& r : report.rows) {
    os << format_double(r.t);
    csv_field(os, r.gauduchon1_plus);
    csv_field(os, r.gauduchon1_minus);
    csv_field(os, r.kahler_plus_defect);
    csv_field(os, r.kahler_minus_defect);
    os << "\n";
  }
  return os.str();
}

}  // namespace twistorlab

#include "twistorlab/report.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

using namespace twistorlab;
using json = nlohmann::json;

namespace {

RunConfig sphere_config() {
  RunConfig c;
  c.manifold = "sphere4";
  c.manifold_params = {{"r", 1.0}};
  c.t_values = {1.0};
  c.points = 5;
  c.seed = 7;
  return c;
}

void collect_numbers(const json& j, std::multiset<double>& out) {
  if (j.is_number()) {
    out.insert(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (const auto& item : j) collect_numbers(item, out);
  }
}

}  // namespace

TEST_CASE("analyze on the unit sphere") {
  const Report report = run_analyze(sphere_config());
  REQUIRE(report.points.size() == 5);
  CHECK(report.aggregates.asd);
  CHECK(report.aggregates.einstein);
  CHECK(report.aggregates.constant_s);
  CHECK(report.aggregates.s.max == doctest::Approx(12.0).epsilon(1e-8));
  for (const auto& p : report.points) {
    CHECK(p.twistor.size() == 1);
    CHECK(p.twistor[0].kahler_plus_defect < 1e-8);
    CHECK(p.twistor[0].gauduchon_applicable);
    CHECK(p.twistor[0].symplectic12_class == "plus_and_minus");
    CHECK(p.definiteness == "positive_definite");
  }
}

TEST_CASE("analyze on flat space") {
  RunConfig c = sphere_config();
  c.manifold = "flat";
  c.manifold_params = {};
  const Report report = run_analyze(c);
  for (const auto& p : report.points) {
    CHECK(p.s == 0.0);
    CHECK(p.wplus_norm == 0.0);
    CHECK(p.twistor[0].balanced_defect == 0.0);
    CHECK(p.definiteness == "semidefinite");
    CHECK(p.d_operator.norm() == 0.0);
  }
}

TEST_CASE("aggregates are consistent with the per-point records") {
  RunConfig c;
  c.manifold = "s2xs2";
  c.manifold_params = {{"r1", 1.0}, {"r2", 2.0}};
  c.t_values = {0.5, 1.5};
  c.points = 6;
  c.seed = 13;
  const Report report = run_analyze(c);
  double s_min = 1e300, s_max = -1e300, s_sum = 0.0;
  double kp_min = 1e300;
  for (const auto& p : report.points) {
    s_min = std::min(s_min, p.s);
    s_max = std::max(s_max, p.s);
    s_sum += p.s;
    for (const auto& td : p.twistor)
      kp_min = std::min(kp_min, td.kahler_plus_defect);
  }
  CHECK(report.aggregates.s.min == s_min);
  CHECK(report.aggregates.s.max == s_max);
  CHECK(report.aggregates.s.mean ==
        doctest::Approx(s_sum / report.points.size()).epsilon(1e-14));
  CHECK(report.aggregates.kahler_plus_defect_min == kp_min);
  CHECK_FALSE(report.aggregates.asd);
  CHECK_FALSE(report.aggregates.einstein);
  CHECK(report.aggregates.constant_s);
}

TEST_CASE("reports are byte stable across runs") {
  const Report a = run_analyze(sphere_config());
  const Report b = run_analyze(sphere_config());
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_csv(a) == report_to_csv(b));

  RunConfig other = sphere_config();
  other.seed = 8;
  const Report c = run_analyze(other);
  CHECK(report_to_json(a) != report_to_json(c));
}

TEST_CASE("JSON and CSV encode identical numeric content") {
  const Report report = run_analyze(sphere_config());
  const std::string csv = report_to_csv(report);
  const json j = json::parse(report_to_json(report));

  std::multiset<double> json_numbers;
  collect_numbers(j["points"], json_numbers);

  // Every numeric CSV field must appear among the JSON point numbers
  // (modulo the flags/enums columns that are not numbers).
  std::istringstream lines(csv);
  std::string header, line;
  std::getline(lines, header);
  int checked = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (field.empty()) continue;
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str() + field.size()) {
        if (json_numbers.count(v) > 0) ++checked;
        else if (field.find('.') != std::string::npos ||
                 field.find('e') != std::string::npos) {
          CAPTURE(field);
          CHECK(json_numbers.count(v) > 0);
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("scan-t on the sphere finds the Kaehler point") {
  RunConfig c = sphere_config();
  c.points = 3;
  c.t_values.clear();
  for (int i = 0; i < 16; ++i) c.t_values.push_back(0.5 + 1.5 * i / 15.0);
  const ScanReport scan = run_scan_t(c);
  REQUIRE(scan.rows.size() == 16);
  int zeros = 0;
  for (const auto& row : scan.rows) {
    CHECK(std::abs(row.gauduchon1_minus) < 1e-10);
    CHECK(row.gauduchon1_plus ==
          doctest::Approx(2.0 * std::pow(1.0 - row.t * row.t, 2))
              .epsilon(1e-8));
    if (row.kahler_plus_defect < 1e-8) {
      ++zeros;
      CHECK(row.t == doctest::Approx(1.0));
    }
  }
  CHECK(zeros == 1);
  // Monotone grid.
  for (size_t i = 1; i < scan.rows.size(); ++i)
    CHECK(scan.rows[i].t > scan.rows[i - 1].t);

  const std::string csv = scan_to_csv(scan);
  CHECK(csv.rfind("t,gauduchon1_plus,gauduchon1_minus,kahler_plus_defect,"
                  "kahler_minus_defect\n", 0) == 0);
}

TEST_CASE("scan-t on flat space: gauduchon1_plus is the constant 2") {
  RunConfig c;
  c.manifold = "flat";
  c.points = 2;
  c.seed = 3;
  for (int i = 0; i < 8; ++i) c.t_values.push_back(0.25 * (i + 1));
  const ScanReport scan = run_scan_t(c);
  for (const auto& row : scan.rows)
    CHECK(row.gauduchon1_plus == doctest::Approx(2.0));
}

TEST_CASE("validation failures carry exit code 2 and the offending point") {
  RunConfig c;
  c.manifold = "";
  c.metric_file = "/tmp/twistorlab_bad_metric.g";
  {
    std::ofstream out(c.metric_file);
    out << "g11 = -1 g22 = 1 g33 = 1 g44 = 1\n";
  }
  c.points = 3;
  try {
    run_analyze(c);
    FAIL("expected RunError");
  } catch (const RunError& e) {
    CHECK(e.exit_code() == 2);
    CHECK(e.point().size() == 4);
    const std::string js = e.to_json();
    CHECK(js.find("\"code\":2") != std::string::npos);
  }
}

TEST_CASE("syntax errors in metric files carry exit code 2") {
  RunConfig c;
  c.metric_file = "/tmp/twistorlab_syntax.g";
  {
    std::ofstream out(c.metric_file);
    out << "g11 = sin(q\n";
  }
  try {
    run_analyze(c);
    FAIL("expected RunError");
  } catch (const RunError& e) {
    CHECK(e.exit_code() == 2);
  }
}

TEST_CASE("valid metric files run end to end") {
  RunConfig c;
  c.metric_file = "/tmp/twistorlab_ok.g";
  {
    std::ofstream out(c.metric_file);
    out << "# conformally flat test metric\n"
           "param a = 0.05\n"
           "g11 = 1 + a*x2^2\ng22 = 1\ng33 = 1\ng44 = 1 + a*x1^2\n";
  }
  c.points = 4;
  c.t_values = {0.5};
  const Report report = run_analyze(c);
  CHECK(report.points.size() == 4);
  CHECK_FALSE(report.aggregates.asd);
}

TEST_CASE("scan CSV and JSON encode identical numeric content") {
  RunConfig c = sphere_config();
  c.points = 2;
  c.t_values = {0.5, 1.0, 1.5};
  const ScanReport scan = run_scan_t(c);
  const json j = json::parse(scan_to_json(scan));
  std::multiset<double> json_numbers;
  collect_numbers(j["rows"], json_numbers);

  std::istringstream lines(scan_to_csv(scan));
  std::string header, line;
  std::getline(lines, header);
  int checked = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const double v = std::strtod(field.c_str(), nullptr);
      CAPTURE(field);
      CHECK(json_numbers.count(v) > 0);
      ++checked;
    }
  }
  CHECK(checked == 15);
}

TEST_CASE("invalid run configurations are rejected with exit code 2") {
  RunConfig c = sphere_config();
  c.t_values = {0.0};
  CHECK_THROWS_AS(run_analyze(c), RunError);
  CHECK_THROWS_AS(run_oracle(c), RunError);
  c = sphere_config();
  c.points = 0;
  CHECK_THROWS_AS(run_analyze(c), RunError);
  CHECK_THROWS_AS(run_oracle(c), RunError);
  c = sphere_config();
  c.h = 0.0;
  CHECK_THROWS_AS(run_oracle(c), RunError);
}

TEST_CASE("oracle run on the sphere passes everywhere") {
  RunConfig c = sphere_config();
  c.points = 2;
  c.t_values = {1.0};
  const Report report = run_oracle(c);
  REQUIRE_FALSE(report.oracle.empty());
  for (const auto& rec : report.oracle) {
    CHECK(rec.pass);
    CHECK(rec.dk_plus_residual < 10.0 * c.h * c.h);
    CHECK(rec.refinement_ratio > 3.0);
    CHECK(rec.refinement_ratio < 5.0);
    CHECK(rec.wedge_square_algebraic == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("oracle run detects a corrupted frame") {
  RunConfig c = sphere_config();
  c.points = 1;
  c.corrupt_frame = true;
  const Report report = run_oracle(c);
  bool any_fail = false;
  for (const auto& rec : report.oracle) any_fail = any_fail || !rec.pass;
  CHECK(any_fail);
}

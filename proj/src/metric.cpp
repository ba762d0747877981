#include "twistorlab/metric.hpp"

#include "dsl_parser.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace twistorlab {

namespace {

void collect_params(const ExprPtr& e,
                    std::vector<const ExprNode*>& refs) {
  if (!e) return;
  if (e->kind == ExprNode::Kind::Param) refs.push_back(e.get());
  collect_params(e->lhs, refs);
  collect_params(e->rhs, refs);
}

}  // namespace

MetricSpec parse_metric(const std::string& text) {
  detail::Parser p(detail::lex(text));
  MetricSpec spec;

  while (!p.at_end()) {
    const detail::Token head = p.take();
    if (head.kind != detail::Tok::Ident)
      p.fail("expected a component binding 'gij = ...' or 'param name = ...'",
             head);

    if (head.text == "param") {
      const detail::Token name = p.take();
      if (name.kind != detail::Tok::Ident)
        p.fail("expected parameter name after 'param'", name);
      p.expect(detail::Tok::Equals, "'='");
      double sign = 1.0;
      if (p.peek().kind == detail::Tok::Minus) {
        p.take();
        sign = -1.0;
      }
      if (p.peek().kind != detail::Tok::Number)
        p.fail("expected a numeric parameter value", p.peek());
      const detail::Token value = p.take();
      if (spec.params.count(name.text) &&
          spec.params[name.text] != sign * value.number)
        p.fail("parameter '" + name.text + "' bound twice with different values",
               name);
      spec.params[name.text] = sign * value.number;
      continue;
    }

    if (head.text.size() == 3 && head.text[0] == 'g' &&
        head.text[1] >= '1' && head.text[1] <= '4' && head.text[2] >= '1' &&
        head.text[2] <= '4') {
      const int i = head.text[1] - '1';
      const int j = head.text[2] - '1';
      p.expect(detail::Tok::Equals, "'='");
      ExprPtr e = p.parse_expr();
      const int lo = std::min(i, j), hi = std::max(i, j);
      if (spec.comp[lo][hi] && !expr_equal(spec.comp[lo][hi], e))
        p.fail("components g" + std::to_string(lo + 1) + std::to_string(hi + 1) +
                   " and g" + std::to_string(hi + 1) + std::to_string(lo + 1) +
                   " are bound to different expressions",
               head);
      spec.comp[lo][hi] = std::move(e);
      continue;
    }

    p.fail("unknown binding '" + head.text +
               "' (expected g11..g44 or 'param')",
           head);
  }

  for (int i = 0; i < 4; ++i)
    if (!spec.comp[i][i])
      throw DslError("missing diagonal component g" + std::to_string(i + 1) +
                         std::to_string(i + 1),
                     1, 1);

  // Every referenced identifier must be a declared parameter.
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<const ExprNode*> refs;
      collect_params(spec.comp[i][j], refs);
      for (const ExprNode* r : refs)
        if (!spec.params.count(r->param))
          throw DslError("unknown identifier '" + r->param + "'", r->line,
                         r->col);
    }

  return spec;
}

std::string metric_to_string(const MetricSpec& spec) {
  std::ostringstream os;
  for (const auto& [name, value] : spec.params) {
    os.precision(17);
    os << "param " << name << " = " << value << "\n";
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (spec.comp[i][j])
        os << "g" << i + 1 << j + 1 << " = " << expr_to_string(spec.comp[i][j])
           << "\n";
  return os.str();
}

MetricJets eval_jet2(const MetricSpec& spec, const Eigen::Vector4d& point) {
  Jet2 coords[4];
  for (int k = 0; k < 4; ++k) coords[k] = Jet2::coordinate(k, point[k]);
  MetricJets out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Jet2 value =
          spec.comp[i][j] ? eval_expr(*spec.comp[i][j], coords, spec.params)
                          : Jet2(0.0);
      out.g[i][j] = value;
      out.g[j][i] = value;
    }
  return out;
}

Eigen::Matrix4d eval_value(const MetricSpec& spec,
                           const Eigen::Vector4d& point) {
  double coords[4] = {point[0], point[1], point[2], point[3]};
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const double v =
          spec.comp[i][j] ? eval_expr(*spec.comp[i][j], coords, spec.params)
                          : 0.0;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

ValidationReport validate(const MetricSpec& spec,
                          const std::vector<Eigen::Vector4d>& samples) {
  ValidationReport report;
  report.pass = true;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& x : samples) {
    SampleDiagnostic d;
    d.point = x;
    try {
      const Eigen::Matrix4d g = eval_value(spec, x);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
      d.evaluable = true;
      d.min_eigenvalue = es.eigenvalues().minCoeff();
      d.positive_definite = d.min_eigenvalue > kMetricEigenvalueFloor;
      report.min_eigenvalue = std::min(report.min_eigenvalue, d.min_eigenvalue);
    } catch (const DslError& e) {
      d.evaluable = false;
      d.error = e.what();
    }
    report.pass = report.pass && d.evaluable && d.positive_definite;
    report.samples.push_back(std::move(d));
  }
  if (samples.empty()) report.min_eigenvalue = 0.0;
  return report;
}

}  // namespace twistorlab

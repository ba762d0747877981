#include "twistorlab/conditions.hpp"

#include <cmath>

namespace twistorlab {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

AltForm LambdaSet::rho() const {
  AltForm f(2);
  f += l12 * AltForm::basis({0, 1});    // phi1 ^ phi2
  f += l1b2b * AltForm::basis({3, 4});  // phib1 ^ phib2
  f += l11b * AltForm::basis({0, 3});   // phi1 ^ phib1
  f += l22b * AltForm::basis({1, 4});   // phi2 ^ phib2
  f += l1b2 * AltForm::basis({3, 1});   // phib1 ^ phi2
  f += l12b * AltForm::basis({0, 4});   // phi1 ^ phib2
  return f;
}

AltForm LambdaSet::capital_lambda() const {
  AltForm f = rho();
  f -= l12 * AltForm::basis({0, 1});
  return f;
}

LambdaSet lambda_from_blocks(const CurvatureBlocks& blocks, double t) {
  const Eigen::Matrix3d& A = blocks.A;
  const Eigen::Matrix3d& B = blocks.B;
  LambdaSet l;
  l.t = t;
  l.l12 = 0.25 * (A(1, 1) + A(2, 2));
  l.l1b2b = 0.25 * Complex(A(1, 1) - A(2, 2), 2.0 * A(1, 2));
  l.l11b = 0.25 * Complex(-(A(0, 2) + B(0, 2)), A(0, 1) + B(0, 1));
  l.l22b = 0.25 * Complex(-(A(0, 2) - B(0, 2)), A(0, 1) - B(0, 1));
  l.l1b2 = 0.25 * Complex(B(1, 1) + B(2, 2), B(1, 2) - B(2, 1));
  l.l12b = 0.25 * Complex(B(1, 1) - B(2, 2), B(1, 2) + B(2, 1));

  const Complex lam1 =
      l.l12 * (1.0 - 2.0 * t * t * l.l12) - 2.0 * t * t * l.sum_sq_mixed();
  l.lambda1 = lam1.real();
  l.lambda1_imag_flag = std::abs(lam1.imag()) > 1e-12;
  l.lambda2 = t * t * Complex(B(1, 0), B(2, 0));
  l.lambda3 = t * t * Complex(A(0, 1), -A(0, 2));
  return l;
}

std::array<double, 11> reconstruct_block_entries(const LambdaSet& l) {
  const Complex sum = l.l11b + l.l22b;
  const Complex dif = l.l11b - l.l22b;
  const Complex mix_sum = l.l1b2 + l.l12b;
  const Complex mix_dif = l.l1b2 - l.l12b;
  return {
      2.0 * sum.imag(),                         // A12
      -2.0 * sum.real(),                        // A13
      2.0 * (l.l12.real() + l.l1b2b.real()),    // A22
      2.0 * l.l1b2b.imag(),                     // A23
      2.0 * (l.l12.real() - l.l1b2b.real()),    // A33
      2.0 * dif.imag(),                         // B12
      -2.0 * dif.real(),                        // B13
      2.0 * mix_sum.real(),                     // B22
      2.0 * mix_sum.imag(),                     // B23
      -2.0 * mix_dif.imag(),                    // B32
      2.0 * mix_dif.real(),                     // B33
  };
}

std::array<double, 11> block_entries_for_reconstruction(
    const CurvatureBlocks& blocks) {
  const Eigen::Matrix3d& A = blocks.A;
  const Eigen::Matrix3d& B = blocks.B;
  return {A(0, 1), A(0, 2), A(1, 1), A(1, 2), A(2, 2), B(0, 1),
          B(0, 2), B(1, 1), B(1, 2), B(2, 1), B(2, 2)};
}

double balanced_defect(const LambdaSet& l) { return std::abs(l.l11b + l.l22b); }

AltForm dk_coefficients(const LambdaSet& l, JSign sign) {
  const double sg = sign == JSign::Plus ? 1.0 : -1.0;
  const double t2 = l.t * l.t;
  const Complex structural = -1.0 + sg * 2.0 * t2 * l.l12;

  const AltForm lambda = l.capital_lambda();
  const AltForm lambda_bar = conj_in_phi_basis(lambda);

  AltForm bracket_bar(2);  // multiplies phi3
  bracket_bar += structural * AltForm::basis({3, 4});
  bracket_bar += (sg * 2.0 * t2) * lambda_bar;

  AltForm bracket(2);  // multiplies conj(phi3)
  bracket += structural * AltForm::basis({0, 1});
  bracket += (sg * 2.0 * t2) * lambda;

  AltForm out(3);
  out += (-kI) * wedge(AltForm::basis({2}), bracket_bar);
  out += kI * wedge(AltForm::basis({5}), bracket);
  return out;
}

AltForm k_form_abstract(double t, JSign sign) {
  const double sg = sign == JSign::Plus ? 1.0 : -1.0;
  AltForm k(2);
  k += AltForm::basis({0, 3});
  k += AltForm::basis({1, 4});
  k += (sg * 4.0 * t * t) * AltForm::basis({2, 5});
  return (kI * 0.5) * k;
}

AltForm k_wedge_dk(const LambdaSet& l, JSign sign) {
  return wedge(k_form_abstract(l.t, sign), dk_coefficients(l, sign));
}

double kahler_defect(const LambdaSet& l, JSign sign) {
  const double sg = sign == JSign::Plus ? 1.0 : -1.0;
  const double t2 = l.t * l.t;
  double d = std::abs(1.0 - sg * 2.0 * t2 * l.l12);
  d = std::max(d, std::abs(l.l1b2b));
  d = std::max(d, std::abs(l.l11b));
  d = std::max(d, std::abs(l.l22b));
  d = std::max(d, std::abs(l.l1b2));
  d = std::max(d, std::abs(l.l12b));
  return d;
}

double gauduchon1_plus(const CurvatureBlocks& blocks, const LambdaSet& l,
                       double t) {
  const double t2 = t * t;
  const double l12 = l.l12.real();
  const double two_a11 = 2.0 * blocks.A(0, 0);  // R1212 + R3434 + 2 R1234
  return 2.0 - 8.0 * t2 * l12 + t2 * two_a11 - 4.0 * t2 * l.lambda1;
}

double gauduchon1_minus(const CurvatureBlocks& blocks, const LambdaSet& l,
                        double t) {
  const double t2 = t * t;
  const double l12 = l.l12.real();
  const double two_a11 = 2.0 * blocks.A(0, 0);
  return -4.0 * t2 * l12 + t2 * two_a11 - 8.0 * t2 * t2 * l.sum_sq_mixed();
}

TypeDecomposition type_decomposition_coeffs(const LambdaSet& l) {
  const double t2 = l.t * l.t;
  TypeDecomposition td{AltForm(4), AltForm(4), AltForm(4), AltForm(4)};

  td.d21_dm12_k_plus += (2.0 * kI * t2 * std::norm(l.l1b2b)) *
                        wedge(AltForm::basis({0, 1}), AltForm::basis({3, 4}));

  td.d21_dbar_k_minus +=
      (2.0 * kI * t2 * std::conj(l.l11b + l.l22b)) *
      wedge(wedge(AltForm::basis({0, 1}), AltForm::basis({5})),
            AltForm::basis({2}));

  const Complex factor = kI * (1.0 + 2.0 * t2 * l.l12);
  AltForm sum(4);
  sum += l.l12 * AltForm::basis({3, 0, 1, 4});  // phib1^phi1^phi2^phib2
  sum += AltForm::basis({4, 1, 5, 2});          // phib2^phi2^phib3^phi3
  sum += AltForm::basis({2, 5, 0, 3});          // phi3^phib3^phi1^phib1
  td.d21_dm12_k_minus += factor * sum;

  return td;
}

AltForm ddbar_k_plus_from_blocks(const CurvatureBlocks& blocks, double t) {
  const LambdaSet l = lambda_from_blocks(blocks, t);
  const double t2 = t * t;
  const double l12 = l.l12.real();
  const double a11 = blocks.A(0, 0);
  const double b11 = blocks.B(0, 0);
  // R3434 + R1234 = A11 - B11 and R1212 + R3412 = A11 + B11.
  AltForm out(4);
  out += (kI * (1.0 - 4.0 * t2 * l12 + t2 * (a11 - b11))) *
         AltForm::basis({1, 4, 2, 5});  // phi2^phib2^phi3^phib3
  out += (kI * (1.0 - 4.0 * t2 * l12 + t2 * (a11 + b11))) *
         AltForm::basis({0, 3, 2, 5});  // phi1^phib1^phi3^phib3
  out += (kI * l.lambda1) * AltForm::basis({0, 1, 3, 4});
  out += l.lambda2 * AltForm::basis({0, 4, 2, 5});             // phi1^phib2^phi3^phib3
  out += std::conj(l.lambda2) * AltForm::basis({3, 1, 2, 5});  // phib1^phi2^...
  return out;
}

AsdEinsteinIdentities asd_einstein_identities(const CurvatureBlocks& blocks, double t,
                             double tol) {
  AsdEinsteinIdentities rep;
  const double scale = blocks.A.norm() + blocks.B.norm() + blocks.C.norm();
  rep.applicable = is_zero_defect(asd_defect(blocks), scale, tol) &&
                   is_zero_defect(einstein_defect(blocks), scale, tol);
  if (!rep.applicable) return rep;

  const LambdaSet l = lambda_from_blocks(blocks, t);
  const AltForm dk_minus = dk_coefficients(l, JSign::Minus);
  rep.dbar_k_minus_max =
      project_type(dk_minus, kOneZeroMinus, 1, 2).max_abs();
  rep.partial_k_minus_max =
      project_type(dk_minus, kOneZeroMinus, 2, 1).max_abs();

  const double s = blocks.s();
  const Complex factor = kI * (1.0 - s * t * t / 12.0);
  AltForm closed(4);
  closed += factor * AltForm::basis({1, 4, 2, 5});
  closed += factor * AltForm::basis({2, 5, 0, 3});
  closed += (-s / 24.0) * factor * AltForm::basis({0, 3, 1, 4});
  rep.ddbar_k_plus = closed;

  rep.consistency_defect =
      (closed - ddbar_k_plus_from_blocks(blocks, t)).max_abs();
  return rep;
}

std::optional<double> t_star(const CurvatureBlocks& blocks) {
  const double s = blocks.s();
  if (s <= 0.0) return std::nullopt;
  return std::sqrt(12.0 / s);
}

Symplectic12Class classify_12_symplectic(const CurvatureBlocks& blocks,
                                         double t, double tol) {
  const double scale = blocks.A.norm() + blocks.B.norm() + blocks.C.norm();
  const bool asd = is_zero_defect(asd_defect(blocks), scale, tol);
  const bool einstein = is_zero_defect(einstein_defect(blocks), scale, tol);
  if (!asd || !einstein) return Symplectic12Class::Neither;
  const double s = blocks.s();
  if (s > 0.0 && std::abs(t * t - 12.0 / s) < tol * std::max(1.0, t * t))
    return Symplectic12Class::PlusAndMinus;
  return Symplectic12Class::MinusOnly;
}

}  // namespace twistorlab

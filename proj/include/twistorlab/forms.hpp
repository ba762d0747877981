#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace twistorlab {

using Complex = std::complex<double>;
using Covector6 = Eigen::Matrix<double, 6, 1>;
using CCovector6 = Eigen::Matrix<Complex, 6, 1>;
using CMatrix6 = Eigen::Matrix<Complex, 6, 6>;

/// Degree-k alternating form over six directions with complex
/// coefficients, stored on strictly increasing multi-indices. Directions
/// are abstract labels: a chart co-basis (dx1..dx4, dy1, dy2) or the
/// complex co-frame (phi1, phi2, phi3, conj phi1, conj phi2, conj phi3),
/// depending on context.
class AltForm {
 public:
  static constexpr int kDims = 6;

  explicit AltForm(int degree);

  static AltForm covector(const CCovector6& components);

  /// Wedge of unit basis covectors e_{i0} ^ e_{i1} ^ ... (0-based labels).
  static AltForm basis(std::initializer_list<int> indices);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Complex& operator[](int rank) { return coeffs_[rank]; }
  const Complex& operator[](int rank) const { return coeffs_[rank]; }

  /// Coefficient of the (not necessarily sorted) multi-index; sign-adjusted.
  Complex coeff(std::initializer_list<int> indices) const;

  AltForm& operator+=(const AltForm& other);
  AltForm& operator-=(const AltForm& other);
  AltForm& operator*=(const Complex& scalar);

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(const Complex& s, AltForm a) { return a *= s; }
  friend AltForm operator*(AltForm a, const Complex& s) { return a *= s; }

  double max_abs() const;

  /// Evaluate on vectors (columns of v, one per degree slot).
  Complex operator()(const Eigen::Matrix<Complex, 6, Eigen::Dynamic>& v) const;

 private:
  int degree_;
  std::vector<Complex> coeffs_;
};

AltForm wedge(const AltForm& a, const AltForm& b);

/// Plain complex conjugation of all coefficients.
AltForm conj_coeffs(const AltForm& f);

/// Conjugation in the complex co-frame basis: swaps labels i <-> i+3 and
/// conjugates coefficients (the image of a form under bar when directions
/// 0..2 are phi and 3..5 are conj phi).
AltForm conj_in_phi_basis(const AltForm& f);

/// Re-express f, given with components in a co-basis eta, in the co-basis
/// xi, where eta^i = sum_a W(i,a) xi^a.
AltForm transform_basis(const AltForm& f, const CMatrix6& w);

/// Components of a chart-basis form in the co-frame whose rows are the six
/// covectors of `frame_rows` (and back).
AltForm to_coframe(const AltForm& chart_form, const CMatrix6& frame_rows);
AltForm from_coframe(const AltForm& coframe_form, const CMatrix6& frame_rows);

/// Keep only components with p indices in the (1,0) set and q in the (0,1)
/// set. `one_zero` lists the three labels forming the (1,0) co-frame.
AltForm project_type(const AltForm& coframe_form, std::array<int, 3> one_zero,
                     int p, int q);

/// Rank <-> sorted multi-index enumeration of k-subsets of {0..5}.
int subset_rank(const std::vector<int>& sorted_indices);
std::vector<int> subset_unrank(int degree, int rank);
int binomial6(int k);

}  // namespace twistorlab

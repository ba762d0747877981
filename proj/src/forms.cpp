#include "twistorlab/forms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace twistorlab {

namespace {

constexpr int kChoose[7] = {1, 6, 15, 20, 15, 6, 1};

int choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  static constexpr int table[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},
      {1, 2, 1, 0, 0, 0, 0},      {1, 3, 3, 1, 0, 0, 0},
      {1, 4, 6, 4, 1, 0, 0},      {1, 5, 10, 10, 5, 1, 0},
      {1, 6, 15, 20, 15, 6, 1}};
  return table[n][k];
}

}  // namespace

int binomial6(int k) { return (k >= 0 && k <= 6) ? kChoose[k] : 0; }

int subset_rank(const std::vector<int>& s) {
  // Lexicographic rank of a sorted k-subset of {0..5}.
  int rank = 0;
  int prev = -1;
  const int k = static_cast<int>(s.size());
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < s[pos]; ++v)
      rank += choose(6 - v - 1, k - pos - 1);
    prev = s[pos];
  }
  return rank;
}

std::vector<int> subset_unrank(int degree, int rank) {
  std::vector<int> out(degree);
  int v = 0;
  for (int pos = 0; pos < degree; ++pos) {
    while (true) {
      const int block = choose(6 - v - 1, degree - pos - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out[pos] = v++;
  }
  return out;
}

AltForm::AltForm(int degree)
    : degree_(degree), coeffs_(binomial6(degree), Complex(0.0, 0.0)) {
  if (degree < 0 || degree > kDims)
    throw std::invalid_argument("form degree out of range");
}

AltForm AltForm::covector(const CCovector6& components) {
  AltForm f(1);
  for (int i = 0; i < kDims; ++i) f.coeffs_[i] = components[i];
  return f;
}

AltForm AltForm::basis(std::initializer_list<int> indices) {
  std::vector<int> idx(indices);
  AltForm f(static_cast<int>(idx.size()));
  // Sort while tracking the permutation sign; repeated labels give zero.
  double sign = 1.0;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return f;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  f.coeffs_[subset_rank(idx)] = Complex(sign, 0.0);
  return f;
}

Complex AltForm::coeff(std::initializer_list<int> indices) const {
  std::vector<int> idx(indices);
  assert(static_cast<int>(idx.size()) == degree_);
  double sign = 1.0;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return Complex(0.0, 0.0);
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign * coeffs_[subset_rank(idx)];
}

AltForm& AltForm::operator+=(const AltForm& other) {
  assert(degree_ == other.degree_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& other) {
  assert(degree_ == other.degree_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AltForm& AltForm::operator*=(const Complex& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

double AltForm::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex AltForm::operator()(
    const Eigen::Matrix<Complex, 6, Eigen::Dynamic>& v) const {
  assert(v.cols() == degree_);
  Complex total(0.0, 0.0);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> minor(degree_,
                                                               degree_);
  for (int rank = 0; rank < size(); ++rank) {
    if (coeffs_[rank] == Complex(0.0, 0.0)) continue;
    const auto idx = subset_unrank(degree_, rank);
    for (int r = 0; r < degree_; ++r)
      for (int c = 0; c < degree_; ++c) minor(r, c) = v(idx[r], c);
    total += coeffs_[rank] * minor.determinant();
  }
  return total;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  AltForm out(a.degree() + b.degree());
  if (out.degree() > AltForm::kDims)
    throw std::invalid_argument("wedge degree exceeds dimension");
  const int ka = a.degree(), kb = b.degree();
  for (int ra = 0; ra < a.size(); ++ra) {
    if (a[ra] == Complex(0.0, 0.0)) continue;
    const auto ia = subset_unrank(ka, ra);
    for (int rb = 0; rb < b.size(); ++rb) {
      if (b[rb] == Complex(0.0, 0.0)) continue;
      const auto ib = subset_unrank(kb, rb);
      // Merge, tracking the shuffle sign; skip overlapping supports.
      std::vector<int> merged;
      merged.reserve(ka + kb);
      merged.insert(merged.end(), ia.begin(), ia.end());
      merged.insert(merged.end(), ib.begin(), ib.end());
      double sign = 1.0;
      bool zero = false;
      for (size_t i = 0; i < merged.size() && !zero; ++i)
        for (size_t j = i + 1; j < merged.size(); ++j) {
          if (merged[i] == merged[j]) {
            zero = true;
            break;
          }
          if (merged[i] > merged[j]) {
            std::swap(merged[i], merged[j]);
            sign = -sign;
          }
        }
      if (zero) continue;
      out[subset_rank(merged)] += sign * a[ra] * b[rb];
    }
  }
  return out;
}

AltForm conj_coeffs(const AltForm& f) {
  AltForm out(f.degree());
  for (int r = 0; r < f.size(); ++r) out[r] = std::conj(f[r]);
  return out;
}

AltForm conj_in_phi_basis(const AltForm& f) {
  AltForm out(f.degree());
  for (int r = 0; r < f.size(); ++r) {
    if (f[r] == Complex(0.0, 0.0)) continue;
    auto idx = subset_unrank(f.degree(), r);
    for (auto& i : idx) i = (i + 3) % 6;
    double sign = 1.0;
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] > idx[j]) {
          std::swap(idx[i], idx[j]);
          sign = -sign;
        }
    out[subset_rank(idx)] += sign * std::conj(f[r]);
  }
  return out;
}

AltForm transform_basis(const AltForm& f, const CMatrix6& w) {
  const int k = f.degree();
  AltForm out(k);
  if (k == 0) {
    out[0] = f[0];
    return out;
  }
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> minor(k, k);
  for (int ri = 0; ri < f.size(); ++ri) {
    if (f[ri] == Complex(0.0, 0.0)) continue;
    const auto I = subset_unrank(k, ri);
    for (int ra = 0; ra < out.size(); ++ra) {
      const auto A = subset_unrank(k, ra);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor(r, c) = w(I[r], A[c]);
      out[ra] += f[ri] * minor.determinant();
    }
  }
  return out;
}

AltForm to_coframe(const AltForm& chart_form, const CMatrix6& frame_rows) {
  // chart co-basis e^i = sum_a (M^-1)(i,a) xi^a when xi^a = M(a,i) e^i.
  const CMatrix6 w = frame_rows.inverse();
  return transform_basis(chart_form, w);
}

AltForm from_coframe(const AltForm& coframe_form, const CMatrix6& frame_rows) {
  return transform_basis(coframe_form, frame_rows);
}

AltForm project_type(const AltForm& coframe_form, std::array<int, 3> one_zero,
                     int p, int q) {
  bool is_holo[6] = {false, false, false, false, false, false};
  for (int i : one_zero) is_holo[i] = true;
  AltForm out(coframe_form.degree());
  for (int r = 0; r < coframe_form.size(); ++r) {
    if (coframe_form[r] == Complex(0.0, 0.0)) continue;
    const auto idx = subset_unrank(coframe_form.degree(), r);
    int np = 0, nq = 0;
    for (int i : idx) (is_holo[i] ? np : nq) += 1;
    if (np == p && nq == q) out[r] = coframe_form[r];
  }
  return out;
}

}  // namespace twistorlab

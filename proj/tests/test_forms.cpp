#include "twistorlab/forms.hpp"

#include <doctest.h>

#include <random>

using namespace twistorlab;

namespace {

AltForm random_form(int degree, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  AltForm f(degree);
  for (int r = 0; r < f.size(); ++r) f[r] = Complex(gauss(rng), gauss(rng));
  return f;
}

CMatrix6 random_invertible(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  while (true) {
    CMatrix6 m;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    if (std::abs(m.determinant()) > 0.1) return m;
  }
}

}  // namespace

TEST_CASE("subset ranking is a bijection") {
  for (int k = 0; k <= 6; ++k) {
    for (int r = 0; r < binomial6(k); ++r) {
      const auto idx = subset_unrank(k, r);
      CHECK(static_cast<int>(idx.size()) == k);
      CHECK(subset_rank(idx) == r);
      for (size_t i = 1; i < idx.size(); ++i) CHECK(idx[i - 1] < idx[i]);
    }
  }
}

TEST_CASE("basis wedges carry permutation signs") {
  CHECK(AltForm::basis({0, 1}).coeff({0, 1}) == Complex(1.0, 0.0));
  CHECK(AltForm::basis({1, 0}).coeff({0, 1}) == Complex(-1.0, 0.0));
  CHECK(AltForm::basis({2, 0, 1}).coeff({0, 1, 2}) == Complex(1.0, 0.0));
  CHECK(AltForm::basis({1, 1}).max_abs() == 0.0);
}

TEST_CASE("wedge is graded anticommutative and associative") {
  std::mt19937_64 rng(2);
  const AltForm a1 = random_form(1, rng);
  const AltForm b1 = random_form(1, rng);
  const AltForm c2 = random_form(2, rng);

  CHECK((wedge(a1, b1) + wedge(b1, a1)).max_abs() < 1e-14);
  CHECK((wedge(a1, c2) - wedge(c2, a1)).max_abs() < 1e-14);

  const AltForm left = wedge(wedge(a1, b1), c2);
  const AltForm right = wedge(a1, wedge(b1, c2));
  CHECK((left - right).max_abs() < 1e-13);

  CHECK(wedge(a1, a1).max_abs() < 1e-14);
}

TEST_CASE("evaluation against vectors matches determinants") {
  std::mt19937_64 rng(4);
  const AltForm a = random_form(1, rng);
  const AltForm b = random_form(1, rng);
  Eigen::Matrix<Complex, 6, Eigen::Dynamic> v(6, 2);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j) v(i, j) = Complex(gauss(rng), gauss(rng));
  const Complex lhs = wedge(a, b)(v);
  Complex av0(0), av1(0), bv0(0), bv1(0);
  for (int i = 0; i < 6; ++i) {
    av0 += a[i] * v(i, 0);
    av1 += a[i] * v(i, 1);
    bv0 += b[i] * v(i, 0);
    bv1 += b[i] * v(i, 1);
  }
  CHECK(std::abs(lhs - (av0 * bv1 - av1 * bv0)) < 1e-12);
}

TEST_CASE("basis change round trip") {
  std::mt19937_64 rng(6);
  const CMatrix6 m = random_invertible(rng);
  for (int k : {1, 2, 3, 4}) {
    const AltForm f = random_form(k, rng);
    const AltForm back = from_coframe(to_coframe(f, m), m);
    CHECK((back - f).max_abs() < 1e-10 * std::max(1.0, f.max_abs()));
  }
}

TEST_CASE("type projection partitions a form") {
  std::mt19937_64 rng(8);
  const CMatrix6 m = random_invertible(rng);
  const std::array<int, 3> holo = {0, 1, 2};
  for (int k : {1, 2, 3}) {
    const AltForm f = random_form(k, rng);
    const AltForm in_frame = to_coframe(f, m);
    AltForm sum(k);
    for (int p = 0; p <= k; ++p) {
      const AltForm part = project_type(in_frame, holo, p, k - p);
      sum += part;
    }
    CHECK((sum - in_frame).max_abs() < 1e-12 * std::max(1.0, f.max_abs()));
  }
}

TEST_CASE("conjugation in the phi basis") {
  // conj(phi1 ^ phib2) = phib1 ^ phi2 = -phi2 ^ phib1.
  AltForm f(2);
  f += Complex(2.0, 1.0) * AltForm::basis({0, 4});
  const AltForm c = conj_in_phi_basis(f);
  CHECK(c.coeff({3, 1}) == Complex(2.0, -1.0));
  // Involution.
  CHECK((conj_in_phi_basis(c) - f).max_abs() == 0.0);
}

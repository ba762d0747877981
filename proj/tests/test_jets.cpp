#include "twistorlab/jets.hpp"
#include <cstring>
#include <cstdint>

#include <doctest.h>

#include <cmath>
#include <random>

using twistorlab::Dual4;
using twistorlab::Jet2;

namespace {

// f(x) = sin(x1 x2) + exp(x3)/(1 + x4^2) + sqrt(2 + cosh(x2)) * log(1 + x1^2)
template <typename S>
S sample_function(const S x[4]) {
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  return sin(x[0] * x[1]) + exp(x[2]) / (1.0 + x[3] * x[3]) +
         sqrt(cosh(x[1]) + 2.0) * log(x[0] * x[0] + 1.0);
}

double eval_at(Eigen::Vector4d p) {
  double x[4] = {p[0], p[1], p[2], p[3]};
  return sample_function(x);
}

}  // namespace

TEST_CASE("second-order jets match central finite differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  const double h1 = 1e-4;  // gradient step
  const double h2 = 1e-3;  // Hessian step

  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector4d p;
    for (int i = 0; i < 4; ++i) p[i] = dist(rng);

    Jet2 x[4];
    for (int i = 0; i < 4; ++i) x[i] = Jet2::coordinate(i, p[i]);
    const Jet2 jet = sample_function(x);

    CHECK(jet.value() == doctest::Approx(eval_at(p)).epsilon(1e-14));

    for (int i = 0; i < 4; ++i) {
      Eigen::Vector4d pp = p, pm = p;
      pp[i] += h1;
      pm[i] -= h1;
      const double fd = (eval_at(pp) - eval_at(pm)) / (2.0 * h1);
      CHECK(std::abs(jet.grad()[i] - fd) <
            1e-5 * std::max(1.0, std::abs(fd)));
    }

    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        Eigen::Vector4d pa = p, pb = p, pc = p, pd = p;
        pa[i] += h2;
        pa[j] += h2;
        pb[i] += h2;
        pb[j] -= h2;
        pc[i] -= h2;
        pc[j] += h2;
        pd[i] -= h2;
        pd[j] -= h2;
        const double fd = (eval_at(pa) - eval_at(pb) - eval_at(pc) +
                           eval_at(pd)) /
                          (4.0 * h2 * h2);
        CHECK(std::abs(jet.hess(i, j) - fd) <
              1e-5 * std::max(1.0, std::abs(fd)));
      }
  }
}

TEST_CASE("jet evaluation is bit-deterministic") {
  Jet2 x[4];
  for (int i = 0; i < 4; ++i) x[i] = Jet2::coordinate(i, 0.37 * (i + 1));
  const Jet2 a = sample_function(x);
  const Jet2 b = sample_function(x);
  auto bits = [](double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, sizeof(u));
    return u;
  };
  CHECK(bits(a.value()) == bits(b.value()));
  for (int i = 0; i < 4; ++i) CHECK(bits(a.grad()[i]) == bits(b.grad()[i]));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) CHECK(bits(a.hess(i, j)) == bits(b.hess(i, j)));
}

TEST_CASE("hessian symmetry is structural") {
  Jet2 x[4];
  for (int i = 0; i < 4; ++i) x[i] = Jet2::coordinate(i, 0.2 + 0.1 * i);
  const Jet2 f = tan(x[0] * x[1]) * sinh(x[2]) + pow_int(x[3], 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(f.hess(i, j) == f.hess(j, i));
}

TEST_CASE("polynomial jets are exact") {
  // g11 = x1^2 at x1 = 3: value 9, d1 = 6, d11 = 2.
  Jet2 x = Jet2::coordinate(0, 3.0);
  const Jet2 f = pow_int(x, 2);
  CHECK(f.value() == 9.0);
  CHECK(f.grad()[0] == 6.0);
  CHECK(f.hess(0, 0) == 2.0);
  CHECK(f.grad()[1] == 0.0);
  CHECK(f.hess(1, 2) == 0.0);
}

TEST_CASE("first-order duals differentiate sqrt and division") {
  Dual4 x(2.0, Eigen::Vector4d::Unit(0));
  Dual4 y(3.0, Eigen::Vector4d::Unit(1));
  const Dual4 f = sqrt(x * y) / (x + y);
  // f = sqrt(xy)/(x+y); df/dx at (2,3): analytic value.
  const double fx = [](double a, double b) {
    const double h = 1e-7;
    auto f = [](double u, double v) { return std::sqrt(u * v) / (u + v); };
    return (f(a + h, b) - f(a - h, b)) / (2.0 * h);
  }(2.0, 3.0);
  CHECK(f.g[0] == doctest::Approx(fx).epsilon(1e-7));
}

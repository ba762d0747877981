#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace twistorlab {

/// Scalar carrying an exact value together with its first and second
/// partial derivatives with respect to the four chart coordinates.
/// The Hessian is stored as the 10 entries of the upper triangle, so
/// symmetry holds by construction.
class Jet2 {
 public:
  Jet2() : v_(0.0), g_(Eigen::Vector4d::Zero()), h_(HessStorage::Zero()) {}
  explicit Jet2(double value)
      : v_(value), g_(Eigen::Vector4d::Zero()), h_(HessStorage::Zero()) {}

  /// Jet of the i-th coordinate function (i in 0..3) at the given value.
  static Jet2 coordinate(int i, double value) {
    Jet2 j(value);
    j.g_[i] = 1.0;
    return j;
  }

  double value() const { return v_; }
  const Eigen::Vector4d& grad() const { return g_; }

  double hess(int i, int j) const { return h_[tri_index(i, j)]; }

  Eigen::Matrix4d hess_matrix() const {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = hess(i, j);
    return m;
  }

  Jet2 operator-() const {
    Jet2 r;
    r.v_ = -v_;
    r.g_ = -g_;
    r.h_ = -h_;
    return r;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v_ = a.v_ + b.v_;
    r.g_ = a.g_ + b.g_;
    r.h_ = a.h_ + b.h_;
    return r;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v_ = a.v_ - b.v_;
    r.g_ = a.g_ - b.g_;
    r.h_ = a.h_ - b.h_;
    return r;
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v_ = a.v_ * b.v_;
    r.g_ = a.g_ * b.v_ + b.g_ * a.v_;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        r.h_[tri_index(i, j)] = a.hess(i, j) * b.v_ + b.hess(i, j) * a.v_ +
                                a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
    return r;
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    return a * reciprocal(b);
  }

  friend Jet2 operator+(const Jet2& a, double c) { return a + Jet2(c); }
  friend Jet2 operator+(double c, const Jet2& a) { return Jet2(c) + a; }
  friend Jet2 operator-(const Jet2& a, double c) { return a - Jet2(c); }
  friend Jet2 operator-(double c, const Jet2& a) { return Jet2(c) - a; }
  friend Jet2 operator*(const Jet2& a, double c) {
    Jet2 r;
    r.v_ = a.v_ * c;
    r.g_ = a.g_ * c;
    r.h_ = a.h_ * c;
    return r;
  }
  friend Jet2 operator*(double c, const Jet2& a) { return a * c; }
  friend Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
  friend Jet2 operator/(double c, const Jet2& a) { return reciprocal(a) * c; }

  /// Chain rule for a smooth f with derivatives f', f'' at this value.
  Jet2 compose(double f, double df, double ddf) const {
    Jet2 r;
    r.v_ = f;
    r.g_ = df * g_;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        r.h_[tri_index(i, j)] = df * hess(i, j) + ddf * g_[i] * g_[j];
    return r;
  }

  friend Jet2 reciprocal(const Jet2& a) {
    const double iv = 1.0 / a.v_;
    return a.compose(iv, -iv * iv, 2.0 * iv * iv * iv);
  }

 private:
  using HessStorage = Eigen::Matrix<double, 10, 1>;

  // Index of (i,j), i<=j, in the packed upper triangle.
  static int tri_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int row_offset[4] = {0, 4, 7, 9};
    return row_offset[i] + (j - i);
  }

  double v_;
  Eigen::Vector4d g_;
  HessStorage h_;
};

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c);
}
inline Jet2 tan(const Jet2& a) {
  const double t = std::tan(a.value());
  const double d = 1.0 + t * t;
  return a.compose(t, d, 2.0 * t * d);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}
inline Jet2 log(const Jet2& a) {
  const double iv = 1.0 / a.value();
  return a.compose(std::log(a.value()), iv, -iv * iv);
}
inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.value());
  return a.compose(s, 0.5 / s, -0.25 / (s * s * s));
}
inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(s, c, s);
}
inline Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(c, s, c);
}

/// Nonnegative integer power by repeated squaring; valid for any jet.
inline Jet2 pow_int(const Jet2& a, int n) {
  Jet2 result(1.0);
  Jet2 base = a;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet2& x) { return x.value(); }

inline double pow_int(double a, int n) {
  double result = 1.0, base = a;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

/// First-order scalar (value plus gradient in the four base directions);
/// used to differentiate the orthonormal frame analytically.
struct Dual4 {
  double v = 0.0;
  Eigen::Vector4d g = Eigen::Vector4d::Zero();

  Dual4() = default;
  explicit Dual4(double value) : v(value) {}
  Dual4(double value, const Eigen::Vector4d& grad) : v(value), g(grad) {}

  Dual4 operator-() const { return {-v, -g}; }
  friend Dual4 operator+(const Dual4& a, const Dual4& b) {
    return {a.v + b.v, a.g + b.g};
  }
  friend Dual4 operator-(const Dual4& a, const Dual4& b) {
    return {a.v - b.v, a.g - b.g};
  }
  friend Dual4 operator*(const Dual4& a, const Dual4& b) {
    return {a.v * b.v, a.g * b.v + b.g * a.v};
  }
  friend Dual4 operator/(const Dual4& a, const Dual4& b) {
    const double iv = 1.0 / b.v;
    return {a.v * iv, (a.g - b.g * (a.v * iv)) * iv};
  }
  friend Dual4 sqrt(const Dual4& a) {
    const double s = std::sqrt(a.v);
    return {s, a.g * (0.5 / s)};
  }
};

inline double scalar_value(const Dual4& x) { return x.v; }

}  // namespace twistorlab

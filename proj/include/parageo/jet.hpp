#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <cmath>

namespace parageo {

/// First-order jet: a value together with its gradient with respect to a
/// fixed set of k seed variables. Arithmetic follows the chain rule exactly,
/// so derivatives of expression trees come out to machine precision.
class Jet1 {
public:
  Jet1() : v_(0.0), d_(Eigen::VectorXd::Zero(0)) {}
  Jet1(double value, Eigen::VectorXd grad) : v_(value), d_(std::move(grad)) {}

  static Jet1 constant(double value, int dim) {
    return Jet1(value, Eigen::VectorXd::Zero(dim));
  }
  static Jet1 variable(double value, int dim, int index) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
    d(index) = 1.0;
    return Jet1(value, std::move(d));
  }

  double value() const { return v_; }
  const Eigen::VectorXd& grad() const { return d_; }
  int dim() const { return static_cast<int>(d_.size()); }

  friend Jet1 operator+(const Jet1& a, const Jet1& b) {
    assert(a.dim() == b.dim());
    return Jet1(a.v_ + b.v_, a.d_ + b.d_);
  }
  friend Jet1 operator-(const Jet1& a, const Jet1& b) {
    assert(a.dim() == b.dim());
    return Jet1(a.v_ - b.v_, a.d_ - b.d_);
  }
  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    assert(a.dim() == b.dim());
    return Jet1(a.v_ * b.v_, a.d_ * b.v_ + b.d_ * a.v_);
  }
  friend Jet1 operator/(const Jet1& a, const Jet1& b) {
    assert(a.dim() == b.dim());
    const double inv = 1.0 / b.v_;
    return Jet1(a.v_ * inv, (a.d_ - b.d_ * (a.v_ * inv)) * inv);
  }
  friend Jet1 operator*(const Jet1& a, double s) { return Jet1(a.v_ * s, a.d_ * s); }
  friend Jet1 operator*(double s, const Jet1& a) { return a * s; }
  friend Jet1 operator-(const Jet1& a) { return Jet1(-a.v_, -a.d_); }

  friend bool operator<(const Jet1& a, const Jet1& b) { return a.v_ < b.v_; }
  friend bool operator>(const Jet1& a, const Jet1& b) { return a.v_ > b.v_; }

private:
  double v_;
  Eigen::VectorXd d_;
};

inline double scalar_part(const Jet1& j) { return j.value(); }
inline Jet1 lift_like(double v, const Jet1& like) {
  return Jet1::constant(v, like.dim());
}

/// f(x) with first derivative fp, applied through the chain rule.
inline Jet1 jet_chain(const Jet1& x, double f, double fp) {
  return Jet1(f, x.grad() * fp);
}

inline Jet1 cosh(const Jet1& x) { return jet_chain(x, std::cosh(x.value()), std::sinh(x.value())); }
inline Jet1 sinh(const Jet1& x) { return jet_chain(x, std::sinh(x.value()), std::cosh(x.value())); }
inline Jet1 cos(const Jet1& x) { return jet_chain(x, std::cos(x.value()), -std::sin(x.value())); }
inline Jet1 sin(const Jet1& x) { return jet_chain(x, std::sin(x.value()), std::cos(x.value())); }
inline Jet1 exp(const Jet1& x) { return jet_chain(x, std::exp(x.value()), std::exp(x.value())); }
inline Jet1 log(const Jet1& x) { return jet_chain(x, std::log(x.value()), 1.0 / x.value()); }
inline Jet1 sqrt(const Jet1& x) {
  const double r = std::sqrt(x.value());
  return jet_chain(x, r, 0.5 / r);
}

/// Second-order jet: value, gradient and Hessian. The Hessian updates are
/// written symmetrically, so the stored matrix is symmetric to the bit.
class Jet2 {
public:
  Jet2() : v_(0.0) {}
  Jet2(double value, Eigen::VectorXd grad, Eigen::MatrixXd hess)
      : v_(value), d_(std::move(grad)), h_(std::move(hess)) {}

  static Jet2 constant(double value, int dim) {
    return Jet2(value, Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim));
  }
  static Jet2 variable(double value, int dim, int index) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
    d(index) = 1.0;
    return Jet2(value, std::move(d), Eigen::MatrixXd::Zero(dim, dim));
  }

  double value() const { return v_; }
  const Eigen::VectorXd& grad() const { return d_; }
  const Eigen::MatrixXd& hess() const { return h_; }
  int dim() const { return static_cast<int>(d_.size()); }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    assert(a.dim() == b.dim());
    return Jet2(a.v_ + b.v_, a.d_ + b.d_, a.h_ + b.h_);
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    assert(a.dim() == b.dim());
    return Jet2(a.v_ - b.v_, a.d_ - b.d_, a.h_ - b.h_);
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    assert(a.dim() == b.dim());
    Eigen::MatrixXd h = a.h_ * b.v_ + b.h_ * a.v_;
    h.noalias() += a.d_ * b.d_.transpose();
    h.noalias() += b.d_ * a.d_.transpose();
    return Jet2(a.v_ * b.v_, a.d_ * b.v_ + b.d_ * a.v_, std::move(h));
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(const Jet2& a, double s) { return Jet2(a.v_ * s, a.d_ * s, a.h_ * s); }
  friend Jet2 operator*(double s, const Jet2& a) { return a * s; }
  friend Jet2 operator-(const Jet2& a) { return Jet2(-a.v_, -a.d_, -a.h_); }

  friend bool operator<(const Jet2& a, const Jet2& b) { return a.v_ < b.v_; }
  friend bool operator>(const Jet2& a, const Jet2& b) { return a.v_ > b.v_; }

private:
  double v_;
  Eigen::VectorXd d_;
  Eigen::MatrixXd h_;
};

inline double scalar_part(const Jet2& j) { return j.value(); }
inline Jet2 lift_like(double v, const Jet2& like) {
  return Jet2::constant(v, like.dim());
}

inline Jet2 jet_chain(const Jet2& x, double f, double fp, double fpp) {
  Eigen::MatrixXd h = x.hess() * fp;
  h.noalias() += (x.grad() * x.grad().transpose()) * fpp;
  return Jet2(f, x.grad() * fp, std::move(h));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double v = b.value();
  return a * jet_chain(b, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline Jet2 cosh(const Jet2& x) {
  const double c = std::cosh(x.value()), s = std::sinh(x.value());
  return jet_chain(x, c, s, c);
}
inline Jet2 sinh(const Jet2& x) {
  const double c = std::cosh(x.value()), s = std::sinh(x.value());
  return jet_chain(x, s, c, s);
}
inline Jet2 cos(const Jet2& x) {
  const double c = std::cos(x.value()), s = std::sin(x.value());
  return jet_chain(x, c, -s, -c);
}
inline Jet2 sin(const Jet2& x) {
  const double c = std::cos(x.value()), s = std::sin(x.value());
  return jet_chain(x, s, c, -s);
}
inline Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.value());
  return jet_chain(x, e, e, e);
}
inline Jet2 log(const Jet2& x) {
  const double inv = 1.0 / x.value();
  return jet_chain(x, std::log(x.value()), inv, -inv * inv);
}
inline Jet2 sqrt(const Jet2& x) {
  const double r = std::sqrt(x.value());
  return jet_chain(x, r, 0.5 / r, -0.25 / (r * x.value()));
}

}  // namespace parageo

#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace aclab {

/// Cubic Hermite interpolant on a strictly increasing abscissa table.
///
/// Slopes may be supplied (when an exact derivative is known) or estimated
/// Fritsch–Carlson style via pchip().  The optional limiter clamps slopes so
/// the interpolant is monotone wherever the data are; exact slopes of
/// genuinely monotone data pass through unchanged.
class HermiteTable {
 public:
  HermiteTable() = default;

  HermiteTable(Eigen::VectorXd x, Eigen::VectorXd y, Eigen::VectorXd d,
               bool monotone_limiter = true)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    const auto n = x_.size();
    if (n < 2 || y_.size() != n || d_.size() != n)
      throw std::invalid_argument("HermiteTable: inconsistent sizes");
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (!(x_[i + 1] > x_[i]))
        throw std::invalid_argument("HermiteTable: abscissae must be strictly increasing");
    if (monotone_limiter) limit_slopes();
  }

  /// Fritsch–Carlson slope estimates from values alone.
  static HermiteTable pchip(Eigen::VectorXd x, Eigen::VectorXd y) {
    const auto n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("pchip: inconsistent sizes");
    Eigen::VectorXd d(n);
    if (n == 2) {
      d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
    } else {
      for (Eigen::Index i = 1; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        const double s0 = (y[i] - y[i - 1]) / h0, s1 = (y[i + 1] - y[i]) / h1;
        if (s0 * s1 <= 0) {
          d[i] = 0;
        } else {
          const double w0 = 2 * h1 + h0, w1 = h1 + 2 * h0;
          d[i] = (w0 + w1) / (w0 / s0 + w1 / s1);
        }
      }
      d[0] = edge_slope(x[1] - x[0], x[2] - x[1], (y[1] - y[0]) / (x[1] - x[0]),
                        (y[2] - y[1]) / (x[2] - x[1]));
      d[n - 1] = edge_slope(x[n - 1] - x[n - 2], x[n - 2] - x[n - 3],
                            (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]),
                            (y[n - 2] - y[n - 3]) / (x[n - 2] - x[n - 3]));
    }
    return HermiteTable(std::move(x), std::move(y), std::move(d), true);
  }

  double x_min() const { return x_[0]; }
  double x_max() const { return x_[x_.size() - 1]; }
  double y_front() const { return y_[0]; }
  double y_back() const { return y_[y_.size() - 1]; }
  bool covers(double x) const { return x >= x_min() && x <= x_max(); }

  double eval(double x) const {
    const auto i = locate(x);
    double t, h;
    basis_arg(x, i, t, h);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * d_[i] +
           (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * d_[i + 1];
  }

  double deriv(double x) const {
    const auto i = locate(x);
    double t, h;
    basis_arg(x, i, t, h);
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * y_[i] + (3 * t2 - 4 * t + 1) * h * d_[i] +
            (-6 * t2 + 6 * t) * y_[i + 1] + (3 * t2 - 2 * t) * h * d_[i + 1]) /
           h;
  }

  /// Inverse lookup for strictly increasing tables.  Throws std::domain_error
  /// when y falls outside the value range.
  double inverse(double y) const {
    const auto n = y_.size();
    if (y < y_[0] || y > y_[n - 1]) throw std::domain_error("HermiteTable::inverse: out of range");
    // Bracketing interval by binary search on node values.
    Eigen::Index lo = 0, hi = n - 1;
    while (hi - lo > 1) {
      const Eigen::Index mid = (lo + hi) / 2;
      (y_[mid] <= y ? lo : hi) = mid;
    }
    double a = x_[lo], b = x_[hi];
    double t = a + (b - a) * (y - y_[lo]) / (y_[hi] - y_[lo] + 1e-300);
    // Safeguarded Newton on the cubic.
    for (int it = 0; it < 100; ++it) {
      const double f = eval(t) - y;
      if (f > 0)
        b = t;
      else
        a = t;
      const double df = deriv(t);
      double step = (df != 0) ? f / df : 0;
      double next = t - step;
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (std::abs(next - t) <= 1e-16 * (1.0 + std::abs(t))) return next;
      t = next;
    }
    return t;
  }

  const Eigen::VectorXd& abscissae() const { return x_; }
  const Eigen::VectorXd& ordinates() const { return y_; }
  const Eigen::VectorXd& slopes() const { return d_; }

 private:
  Eigen::VectorXd x_, y_, d_;

  static double edge_slope(double h0, double h1, double s0, double s1) {
    double d = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (d * s0 <= 0) d = 0;
    else if (s0 * s1 < 0 && std::abs(d) > 3 * std::abs(s0)) d = 3 * s0;
    return d;
  }

  void limit_slopes() {
    for (Eigen::Index i = 0; i + 1 < x_.size(); ++i) {
      const double s = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
      if (s == 0) {
        d_[i] = d_[i + 1] = 0;
        continue;
      }
      const double a = d_[i] / s, b = d_[i + 1] / s;
      if (a < 0) d_[i] = 0;
      if (b < 0) d_[i + 1] = 0;
      const double r = a * a + b * b;
      if (r > 9) {
        const double tau = 3.0 / std::sqrt(r);
        d_[i] = tau * a * s;
        d_[i + 1] = tau * b * s;
      }
    }
  }

  Eigen::Index locate(double x) const {
    if (x < x_min() - 1e-12 * (1 + std::abs(x_min())) ||
        x > x_max() + 1e-12 * (1 + std::abs(x_max())))
      throw std::domain_error("HermiteTable: abscissa out of range");
    Eigen::Index lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
      const Eigen::Index mid = (lo + hi) / 2;
      (x_[mid] <= x ? lo : hi) = mid;
    }
    return lo;
  }

  void basis_arg(double x, Eigen::Index i, double& t, double& h) const {
    h = x_[i + 1] - x_[i];
    t = (x - x_[i]) / h;
    t = std::clamp(t, 0.0, 1.0);
  }
};

}  // namespace aclab

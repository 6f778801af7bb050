// SPDX-License-Identifier: Apache-2.0
#include "legendre/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "legendre/error.hpp"

namespace legendre {

namespace {

auto common_order(const Series& a, const Series& b) -> int { return std::min(a.order(), b.order()); }

auto clamp_order(int order) -> int { return std::clamp(order, 0, Series::kMaxOrder); }

// Coefficients below this fraction of the series magnitude count as zero
// when deciding whether a leading term cancels.
constexpr double kCancelTolerance = 1e-13;

}  // namespace

auto Series::constant(double value, int order) -> Series {
  Series s;
  s.order_ = clamp_order(order);
  s.c_[0] = value;
  return s;
}

auto Series::variable(double t0, int order) -> Series {
  Series s = constant(t0, order);
  if (s.order_ >= 1) s.c_[1] = 1.0;
  return s;
}

auto Series::derivative(int k) const noexcept -> double {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return factorial * (*this)[k];
}

auto Series::differentiated() const -> Series {
  Series d;
  d.order_ = std::max(order_ - 1, 0);
  d.kinked_ = kinked_;
  for (int k = 0; k < order_; ++k) d[k] = (k + 1) * (*this)[k + 1];
  return d;
}

auto Series::truncated(int order) const -> Series {
  Series t = *this;
  t.order_ = std::min(order_, clamp_order(order));
  for (int k = t.order_ + 1; k <= kMaxOrder; ++k) t[k] = 0.0;
  return t;
}

auto Series::magnitude() const noexcept -> double {
  double m = 0.0;
  for (int k = 0; k <= order_; ++k) m = std::max(m, std::abs((*this)[k]));
  return m;
}

auto Series::operator-() const -> Series {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

auto Series::operator+=(const Series& rhs) -> Series& {
  order_ = common_order(*this, rhs);
  kinked_ = kinked_ || rhs.kinked_;
  for (int k = 0; k <= order_; ++k) (*this)[k] += rhs[k];
  return *this;
}

auto Series::operator-=(const Series& rhs) -> Series& {
  order_ = common_order(*this, rhs);
  kinked_ = kinked_ || rhs.kinked_;
  for (int k = 0; k <= order_; ++k) (*this)[k] -= rhs[k];
  return *this;
}

auto Series::operator*=(double s) -> Series& {
  for (auto& c : c_) c *= s;
  return *this;
}

auto Series::operator+=(double s) -> Series& {
  c_[0] += s;
  return *this;
}

auto operator*(const Series& lhs, const Series& rhs) -> Series {
  Series r = Series::constant(0.0, common_order(lhs, rhs));
  if (lhs.kinked() || rhs.kinked()) r.mark_kinked();
  for (int k = 0; k <= r.order(); ++k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += lhs[j] * rhs[k - j];
    r[k] = sum;
  }
  return r;
}

auto operator/(const Series& lhs, const Series& rhs) -> Series {
  if (rhs[0] == 0.0) throw DomainError("division by zero");
  Series r = Series::constant(0.0, common_order(lhs, rhs));
  if (lhs.kinked() || rhs.kinked()) r.mark_kinked();
  for (int k = 0; k <= r.order(); ++k) {
    double sum = lhs[k];
    for (int j = 1; j <= k; ++j) sum -= rhs[j] * r[k - j];
    r[k] = sum / rhs[0];
  }
  return r;
}

auto exp(const Series& a) -> Series {
  Series r = Series::constant(std::exp(a[0]), a.order());
  if (a.kinked()) r.mark_kinked();
  for (int k = 1; k <= a.order(); ++k) {
    double sum = 0.0;
    for (int j = 1; j <= k; ++j) sum += j * a[j] * r[k - j];
    r[k] = sum / k;
  }
  return r;
}

auto log(const Series& a) -> Series {
  if (!(a[0] > 0.0)) throw DomainError("ln of non-positive argument");
  Series r = Series::constant(std::log(a[0]), a.order());
  if (a.kinked()) r.mark_kinked();
  for (int k = 1; k <= a.order(); ++k) {
    double sum = 0.0;
    for (int j = 1; j < k; ++j) sum += j * r[j] * a[k - j];
    r[k] = (a[k] - sum / k) / a[0];
  }
  return r;
}

namespace {

void sin_cos(const Series& a, Series& s, Series& c) {
  s = Series::constant(std::sin(a[0]), a.order());
  c = Series::constant(std::cos(a[0]), a.order());
  if (a.kinked()) {
    s.mark_kinked();
    c.mark_kinked();
  }
  for (int k = 1; k <= a.order(); ++k) {
    double ss = 0.0;
    double cs = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a[j] * c[k - j];
      cs += j * a[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = -cs / k;
  }
}

}  // namespace

auto sin(const Series& a) -> Series {
  Series s;
  Series c;
  sin_cos(a, s, c);
  return s;
}

auto cos(const Series& a) -> Series {
  Series s;
  Series c;
  sin_cos(a, s, c);
  return c;
}

auto tan(const Series& a) -> Series {
  Series s;
  Series c;
  sin_cos(a, s, c);
  if (c[0] == 0.0) throw DomainError("tan at a pole");
  return s / c;
}

auto sqrt(const Series& a) -> Series {
  if (a[0] < 0.0) throw DomainError("sqrt of negative argument");
  if (a[0] == 0.0) {
    if (a.order() == 0) return Series::constant(0.0, 0);
    throw DomainError("sqrt is not differentiable at 0");
  }
  Series r = Series::constant(std::sqrt(a[0]), a.order());
  if (a.kinked()) r.mark_kinked();
  for (int k = 1; k <= a.order(); ++k) {
    double sum = 0.0;
    for (int j = 1; j < k; ++j) sum += r[j] * r[k - j];
    r[k] = (a[k] - sum) / (2.0 * r[0]);
  }
  return r;
}

auto abs(const Series& a) -> Series {
  if (a[0] > 0.0) return a;
  if (a[0] < 0.0) return -a;
  // At a zero of the argument, follow the right-hand branch: the sign of the
  // first non-zero coefficient decides which way |a| leaves zero.
  double sign = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    if (a[k] != 0.0) {
      sign = a[k] > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  Series r = a * sign;
  r[0] = 0.0;
  r.mark_kinked();
  return r;
}

auto pow(const Series& a, double exponent) -> Series {
  const bool integral = std::floor(exponent) == exponent && std::abs(exponent) <= 64.0;
  if (integral) {
    auto n = static_cast<int>(std::abs(exponent));
    Series result = Series::constant(1.0, a.order());
    if (a.kinked()) result.mark_kinked();
    Series base = a;
    while (n > 0) {
      if ((n & 1) != 0) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    if (exponent < 0.0) {
      if (a[0] == 0.0) throw DomainError("division by zero");
      return Series::constant(1.0, a.order()) / result;
    }
    return result;
  }
  if (a[0] < 0.0) throw DomainError("non-integer power of negative argument");
  if (a[0] == 0.0) {
    if (a.order() == 0 && exponent > 0.0) return Series::constant(0.0, 0);
    throw DomainError("non-integer power is not differentiable at 0");
  }
  // a * y' = e * a' * y, solved coefficient by coefficient.
  Series r = Series::constant(std::pow(a[0], exponent), a.order());
  if (a.kinked()) r.mark_kinked();
  for (int k = 1; k <= a.order(); ++k) {
    double sum = 0.0;
    for (int j = 1; j <= k; ++j) sum += ((exponent + 1.0) * j - k) * a[j] * r[k - j];
    r[k] = sum / (k * a[0]);
  }
  return r;
}

auto cancelling_ratio(const Series& num, const Series& den, int max_cancel) -> Series {
  const double num_scale = num.magnitude();
  const double den_scale = den.magnitude();
  const int order = common_order(num, den);
  int shift = 0;
  while (shift < max_cancel && shift < order && std::abs(den[shift]) <= kCancelTolerance * den_scale &&
         std::abs(num[shift]) <= kCancelTolerance * std::max(num_scale, den_scale)) {
    ++shift;
  }
  if (std::abs(den[shift]) <= kCancelTolerance * den_scale || den[shift] == 0.0) {
    throw DomainError("ratio with vanishing denominator");
  }
  Series n = Series::constant(0.0, order - shift);
  Series d = Series::constant(0.0, order - shift);
  for (int k = 0; k <= order - shift; ++k) {
    n[k] = num[k + shift];
    d[k] = den[k + shift];
  }
  if (num.kinked()) n.mark_kinked();
  if (den.kinked()) d.mark_kinked();
  return n / d;
}

auto compose(const Series& outer, const Series& inner) -> Series {
  const int order = common_order(outer, inner);
  Series h = inner.truncated(order);
  h[0] = 0.0;
  // Horner evaluation of sum_k outer[k] * h^k.
  Series r = Series::constant(outer[order], order);
  for (int k = order - 1; k >= 0; --k) {
    r = r * h;
    r[0] += outer[k];
  }
  if (outer.kinked() || inner.kinked()) r.mark_kinked();
  return r;
}

}  // namespace legendre

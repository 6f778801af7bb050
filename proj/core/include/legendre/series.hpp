// SPDX-License-Identifier: Apache-2.0
/*
  Truncated Taylor series in one variable.

  A Series of order K stores the normalized coefficients c[k] = f^(k)(t0) / k!
  for k = 0..K. Arithmetic and the elementary functions propagate all K
  orders at once (forward-mode jet arithmetic), so derived curves such as
  duals and pedals carry exact derivatives of any order up to kMaxOrder.
*/
#pragma once

#include <array>
#include <cstddef>

namespace legendre {

class Series {
 public:
  static constexpr int kMaxOrder = 10;

  Series() = default;

  /// Constant function with the given value.
  static auto constant(double value, int order) -> Series;
  /// The identity t -> t expanded around t0.
  static auto variable(double t0, int order) -> Series;

  auto order() const noexcept -> int { return order_; }
  auto operator[](int k) const noexcept -> double { return c_[static_cast<std::size_t>(k)]; }
  auto operator[](int k) noexcept -> double& { return c_[static_cast<std::size_t>(k)]; }
  auto value() const noexcept -> double { return c_[0]; }

  /// k-th derivative at the expansion point, k! * c[k].
  auto derivative(int k) const noexcept -> double;

  /// Series of the derivative; its order is one less.
  auto differentiated() const -> Series;
  auto truncated(int order) const -> Series;

  /// Set when a non-differentiable operation (abs at 0) was crossed; the
  /// coefficients are then the one-sided right expansion.
  auto kinked() const noexcept -> bool { return kinked_; }
  void mark_kinked() noexcept { kinked_ = true; }

  /// max |c[k]| over k = 0..order.
  auto magnitude() const noexcept -> double;

  auto operator-() const -> Series;
  auto operator+=(const Series& rhs) -> Series&;
  auto operator-=(const Series& rhs) -> Series&;
  auto operator*=(double s) -> Series&;
  auto operator+=(double s) -> Series&;

  friend auto operator+(Series lhs, const Series& rhs) -> Series { return lhs += rhs; }
  friend auto operator-(Series lhs, const Series& rhs) -> Series { return lhs -= rhs; }
  friend auto operator*(const Series& lhs, const Series& rhs) -> Series;
  friend auto operator/(const Series& lhs, const Series& rhs) -> Series;
  friend auto operator+(Series lhs, double rhs) -> Series { return lhs += rhs; }
  friend auto operator+(double lhs, Series rhs) -> Series { return rhs += lhs; }
  friend auto operator-(Series lhs, double rhs) -> Series { return lhs += -rhs; }
  friend auto operator-(double lhs, const Series& rhs) -> Series { return -rhs + lhs; }
  friend auto operator*(Series lhs, double rhs) -> Series { return lhs *= rhs; }
  friend auto operator*(double lhs, Series rhs) -> Series { return rhs *= lhs; }
  friend auto operator/(Series lhs, double rhs) -> Series { return lhs *= 1.0 / rhs; }

 private:
  std::array<double, kMaxOrder + 1> c_{};
  int order_ = 0;
  bool kinked_ = false;
};

auto exp(const Series& a) -> Series;
auto log(const Series& a) -> Series;
auto sin(const Series& a) -> Series;
auto cos(const Series& a) -> Series;
auto tan(const Series& a) -> Series;
auto sqrt(const Series& a) -> Series;
auto abs(const Series& a) -> Series;
auto pow(const Series& a, double exponent) -> Series;

/// Quotient that cancels common leading zero coefficients first, i.e. up to
/// `max_cancel` L'Hopital steps. The result order shrinks by the number of
/// cancelled terms. Throws DomainError when the denominator still vanishes.
auto cancelling_ratio(const Series& num, const Series& den, int max_cancel) -> Series;

/// outer(inner(t)) where `outer` is expanded around inner.value().
auto compose(const Series& outer, const Series& inner) -> Series;

}  // namespace legendre

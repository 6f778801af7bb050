// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace legendre {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr auto operator+(Vec2 a, Vec2 b) -> Vec2 { return {a.x + b.x, a.y + b.y}; }
  friend constexpr auto operator-(Vec2 a, Vec2 b) -> Vec2 { return {a.x - b.x, a.y - b.y}; }
  friend constexpr auto operator-(Vec2 a) -> Vec2 { return {-a.x, -a.y}; }
  friend constexpr auto operator*(double s, Vec2 a) -> Vec2 { return {s * a.x, s * a.y}; }
  friend constexpr auto operator*(Vec2 a, double s) -> Vec2 { return {s * a.x, s * a.y}; }
  friend constexpr auto operator==(Vec2 a, Vec2 b) -> bool = default;
};

constexpr auto dot(Vec2 a, Vec2 b) -> double { return a.x * b.x + a.y * b.y; }
constexpr auto cross(Vec2 a, Vec2 b) -> double { return a.x * b.y - a.y * b.x; }
inline auto norm(Vec2 a) -> double { return std::hypot(a.x, a.y); }
inline auto distance(Vec2 a, Vec2 b) -> double { return norm(a - b); }

}  // namespace legendre

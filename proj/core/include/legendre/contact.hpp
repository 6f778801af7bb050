// SPDX-License-Identifier: Apache-2.0
/*
  Contact transformations of J1.

  A map X = F(x, y, p), Y = G(x, y, p) extends to a contact transformation
  exactly when F_p (G_x + p G_y) = G_p (F_x + p F_y); the third component is
  then P = dY/dX, independent of p' = dp/dx.

  The pedal transformation with pole O sends a contact element to the foot of
  the perpendicular from O onto its tangent line. With (X, Y) the Legendre
  image,  Xbar = X Y / (1 + X^2),  Ybar = -Y / (1 + X^2).

  In polar-contact coordinates (r, phi, psi), psi = phi - arctan p, the pedal
  powers form the one-parameter group
      R = r |sin psi|^n,  Phi = phi - n (psi + pi/2),  Psi = psi.
*/
#pragma once

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"
#include "legendre/jet_space.hpp"

namespace legendre {

/// X = F(x, y, p), Y = G(x, y, p); both expressions use the variable slots
/// x = 0, y = 1, p = 2.
struct ContactMap {
  Expr F;
  Expr G;

  /// Parses F and G as expressions in x, y, p.
  static auto parse(std::string_view F, std::string_view G) -> ContactMap;
};

auto legendre_map() -> ContactMap;
auto identity_map() -> ContactMap;
/// The pedal transformation with pole at the origin, composed from the
/// Legendre map and the foot formula.
auto pedal_map() -> ContactMap;

struct Partials {
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dp = 0.0;
};

auto partials(const Expr& e, double x, double y, double p) -> Partials;

inline constexpr double kContactTolerance = 1e-9;

/// F_p (G_x + p G_y) - G_p (F_x + p F_y).
auto contact_defect(const ContactMap& m, double x, double y, double p) -> double;

/// Spread allowed between the candidate quotients for P = dY/dX.
inline constexpr double kInducedSpread = 1e-8;

/// P = dY/dX for a contact map. Throws DomainError when every quotient is
/// undefined, and Error when the quotient depends on p'.
auto induced_third(const ContactMap& m, double x, double y, double p) -> double;

struct PedalImage {
  J1Point point;
  /// The tangent line passes through the pole; the image is the pole itself
  /// and the slope is NaN when no quotient defines it.
  bool through_pole = false;
};

/// Chart-Q co-slopes at or below this count as a vertical tangent.
inline constexpr double kVerticalCoSlope = 1e-12;

/// Pedal of one contact element. Throws DomainError for a vertical tangent.
auto pedal_point(const J1Point& pt, Vec2 pole) -> PedalImage;

/// Pedal curve of c with respect to `pole`, with exact derivatives. Uses the
/// foot formula in whichever chart keeps the slope bounded, so vertical
/// tangents of c are fine.
auto pedal_curve(const ParamCurve& c, Vec2 pole) -> ParamCurve;

struct LiePoint {
  double r = 0.0;
  double phi = 0.0;  // polar angle in (-pi, pi]
  double psi = 0.0;
};

/// Side of the transformation a point lives on: preimage points use
/// psi = phi - arctan p, image points Psi = arctan P - Phi.
enum class LieSide { Preimage, Image };

/// Throws DomainError at the pole (r = 0).
auto to_lie(const J1Point& pt, LieSide side = LieSide::Preimage) -> LiePoint;
auto from_lie(const LiePoint& lp, LieSide side = LieSide::Preimage) -> J1Point;

/// Angle reduced to (-pi, pi].
auto wrap_angle(double a) -> double;

inline constexpr double kPedalPowerSinTolerance = 1e-12;

/// The n-th pedal power in polar-contact coordinates. Throws DomainError
/// when sin psi = 0 and n != 0.
auto pedal_power(const LiePoint& lp, double n) -> LiePoint;

}  // namespace legendre

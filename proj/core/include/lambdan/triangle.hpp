#pragma once

#include <array>

#include "lambdan/errors.hpp"
#include "lambdan/simplex.hpp"

namespace lambdan {

/// Three side lengths satisfying the strict triangle inequality.
struct Triangle {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Validates sides (Degenerate otherwise).
Triangle make_triangle(double a, double b, double c);

/// a = x2+x3, b = x1+x3, c = x1+x2: every positive triple maps to a valid
/// triangle, so simplex samples double as triangle samples.
Triangle ravi_triangle(const SimplexPoint& p);

struct TriangleDerived {
  double semiperimeter = 0.0;
  double area = 0.0;
  double circumradius = 0.0;
  double inradius = 0.0;
};

/// Semiperimeter, Heron area, r = area/p, R = abc/(4 area).
TriangleDerived derive(const Triangle& t);

/// R/r - 2 - mu * ((a-b)^2 + (b-c)^2 + (c-a)^2) / (a+b+c)^2.
/// Nonnegative on every triangle for mu <= 8; mu = 8 is tight at the
/// triangle (3,3,2) and every equilateral one.
double euler_refined_margin(const Triangle& t, double mu);

/// a^3/(b+c-a) + b^3/(a+c-b) + c^3/(a+b-c) + 7(ab+bc+ca) - 8(a^2+b^2+c^2).
/// Nonnegative, with equality at equilateral triangles and (3,3,2).
double quintic_sides_margin(const Triangle& t);

/// p^2 - 16 R r + 5 r^2, nonnegative on every triangle.
double p2_16Rr_margin(const Triangle& t);

/// |  |IG|^2 - (p^2 + 5 r^2 - 16 R r)/9  |  where I is the incenter and G
/// the vertex centroid of a planar realization; an identity, so the value
/// is rounding noise (<= ~1e-12 * max(1, p^2)).
double ig_identity_residual(const Triangle& t);

/// The nine areas of the cevian-parallel construction: the cevians
/// through the interior point M meet the sides at A0, B0, C0; the three
/// parallels through M to the chords A0C0, B0A0, B0C0 cut the sides at
/// C1/A2, A1/B2, B1/C2.  T_i are the corner triangles at M, S_i the
/// side-facing ones at M, P_i the corner triangles at the vertices.
struct CevianAreas {
  std::array<double, 3> T{};  // [MC1B2], [MA1C2], [MB1A2]
  std::array<double, 3> S{};  // [MA1A2], [MB1B2], [MC1C2]
  std::array<double, 3> P{};  // [AB2C1], [BC2A1], [CA2B1]
};

/// Realizes the triangle with B at the origin and C on the positive
/// horizontal axis, places M at the normalized barycentric coordinates
/// (m1:m2:m3) with respect to (A,B,C), and computes all nine areas from
/// exact line intersections and the shoelace formula.
CevianAreas cevian_areas(const Triangle& t, double m1, double m2, double m3);

/// sum P + 7 sum S - 8 sum T; nonnegative, zero when M is the centroid.
double cevian_margin(const CevianAreas& areas);

}  // namespace lambdan

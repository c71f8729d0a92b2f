#include "lambdan/triangle.hpp"

#include <cmath>

namespace lambdan {
namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }

double cross(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }

// Intersection of the lines p + s*d and q + u*e.
Vec2 line_intersect(Vec2 p, Vec2 d, Vec2 q, Vec2 e) {
  const double det = cross(d, e);
  if (det == 0.0) {
    throw Degenerate("cevian_areas: parallel lines in the construction");
  }
  const double s = cross(q - p, e) / det;
  return p + s * d;
}

double tri_area(Vec2 p, Vec2 q, Vec2 r) {
  return 0.5 * std::abs(cross(q - p, r - p));
}

void validate(const Triangle& t) {
  if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c) ||
      !(t.a > 0.0 && t.b > 0.0 && t.c > 0.0) ||
      !(t.a + t.b > t.c && t.b + t.c > t.a && t.c + t.a > t.b)) {
    throw Degenerate("triangle sides must be positive and satisfy the strict triangle inequality");
  }
}

struct Realization {
  Vec2 A, B, C;
};

// B at the origin, C = (a, 0), A above the axis.
Realization realize(const Triangle& t) {
  validate(t);
  const double ax = (t.a * t.a + t.c * t.c - t.b * t.b) / (2.0 * t.a);
  const double ay_sq = (t.c - ax) * (t.c + ax);
  if (!(ay_sq > 0.0)) {
    throw Degenerate("triangle is flat at floating resolution");
  }
  return {{ax, std::sqrt(ay_sq)}, {0.0, 0.0}, {t.a, 0.0}};
}

}  // namespace

Triangle make_triangle(double a, double b, double c) {
  const Triangle t{a, b, c};
  validate(t);
  return t;
}

Triangle ravi_triangle(const SimplexPoint& p) {
  if (p.n() != 3) throw BadOrder("ravi_triangle: need a 3-coordinate point");
  const auto& x = p.coords;
  return Triangle{x[1] + x[2], x[0] + x[2], x[0] + x[1]};
}

TriangleDerived derive(const Triangle& t) {
  validate(t);
  TriangleDerived d;
  d.semiperimeter = 0.5 * (t.a + t.b + t.c);
  const double p = d.semiperimeter;
  d.area = std::sqrt(p * (p - t.a) * (p - t.b) * (p - t.c));
  if (!(d.area > 0.0)) throw Degenerate("derive: vanishing area");
  d.inradius = d.area / p;
  d.circumradius = t.a * t.b * t.c / (4.0 * d.area);
  return d;
}

double euler_refined_margin(const Triangle& t, double mu) {
  const TriangleDerived d = derive(t);
  const double per = t.a + t.b + t.c;
  const double q = ((t.a - t.b) * (t.a - t.b) + (t.b - t.c) * (t.b - t.c) +
                    (t.c - t.a) * (t.c - t.a)) /
                   (per * per);
  return d.circumradius / d.inradius - 2.0 - mu * q;
}

double quintic_sides_margin(const Triangle& t) {
  validate(t);
  const double a = t.a, b = t.b, c = t.c;
  const double lhs = a * a * a / (b + c - a) + b * b * b / (a + c - b) +
                     c * c * c / (a + b - c) + 7.0 * (a * b + b * c + c * a);
  return lhs - 8.0 * (a * a + b * b + c * c);
}

double p2_16Rr_margin(const Triangle& t) {
  validate(t);
  const double p = 0.5 * (t.a + t.b + t.c);
  // R r = abc/(4p) and r^2 = (p-a)(p-b)(p-c)/p, both free of the Heron
  // square root.
  const double Rr = t.a * t.b * t.c / (4.0 * p);
  const double r2 = (p - t.a) * (p - t.b) * (p - t.c) / p;
  return p * p - 16.0 * Rr + 5.0 * r2;
}

double ig_identity_residual(const Triangle& t) {
  const Realization tri = realize(t);
  const double per = t.a + t.b + t.c;
  // Incenter: vertices weighted by the lengths of the opposite sides.
  const Vec2 I = (1.0 / per) * (t.a * tri.A + t.b * tri.B + t.c * tri.C);
  const Vec2 G = (1.0 / 3.0) * (tri.A + tri.B + tri.C);
  const Vec2 d = I - G;
  const double dist_sq = d.x * d.x + d.y * d.y;

  const double p = 0.5 * per;
  const double Rr = t.a * t.b * t.c / (4.0 * p);
  const double r2 = (p - t.a) * (p - t.b) * (p - t.c) / p;
  const double formula = (p * p + 5.0 * r2 - 16.0 * Rr) / 9.0;
  return std::abs(dist_sq - formula);
}

CevianAreas cevian_areas(const Triangle& t, double m1, double m2, double m3) {
  if (!(m1 > 0.0 && m2 > 0.0 && m3 > 0.0)) {
    throw InteriorRequired("cevian_areas: barycentric weights must be > 0");
  }
  const Realization tri = realize(t);
  const double w = m1 + m2 + m3;
  const Vec2 M = (m1 / w) * tri.A + (m2 / w) * tri.B + (m3 / w) * tri.C;

  const Vec2 ab = tri.B - tri.A;
  const Vec2 bc = tri.C - tri.B;
  const Vec2 ca = tri.A - tri.C;

  // Cevian feet on the opposite sides.
  const Vec2 A0 = line_intersect(tri.A, M - tri.A, tri.B, bc);
  const Vec2 B0 = line_intersect(tri.B, M - tri.B, tri.C, ca);
  const Vec2 C0 = line_intersect(tri.C, M - tri.C, tri.A, ab);

  // Parallels through M to the three chords between the feet.
  const Vec2 C1 = line_intersect(M, C0 - A0, tri.A, ab);  // on AB
  const Vec2 A2 = line_intersect(M, C0 - A0, tri.B, bc);  // on BC
  const Vec2 A1 = line_intersect(M, A0 - B0, tri.B, bc);  // on BC
  const Vec2 B2 = line_intersect(M, A0 - B0, tri.C, ca);  // on CA
  const Vec2 B1 = line_intersect(M, C0 - B0, tri.C, ca);  // on CA
  const Vec2 C2 = line_intersect(M, C0 - B0, tri.A, ab);  // on AB

  CevianAreas out;
  out.T = {tri_area(M, C1, B2), tri_area(M, A1, C2), tri_area(M, B1, A2)};
  out.S = {tri_area(M, A1, A2), tri_area(M, B1, B2), tri_area(M, C1, C2)};
  out.P = {tri_area(tri.A, B2, C1), tri_area(tri.B, C2, A1),
           tri_area(tri.C, A2, B1)};
  return out;
}

double cevian_margin(const CevianAreas& areas) {
  double sum_t = 0.0, sum_s = 0.0, sum_p = 0.0;
  for (int i = 0; i < 3; ++i) {
    sum_t += areas.T[static_cast<std::size_t>(i)];
    sum_s += areas.S[static_cast<std::size_t>(i)];
    sum_p += areas.P[static_cast<std::size_t>(i)];
  }
  return sum_p + 7.0 * sum_s - 8.0 * sum_t;
}

}  // namespace lambdan

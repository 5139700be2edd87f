#pragma once

// Exact planar geometry over Q(zeta_m). Lines always have a root-of-unity
// normal, which is all the dynamics ever produces.

#include <optional>
#include <vector>

#include "pwrot/cyclo.hpp"
#include "pwrot/dynamics.hpp"

namespace pwrot {

/// {w : Im(zeta^unit_exp * w + offset) = 0}. Canonical form: unit_exp in
/// [0, m/2) and offset purely imaginary, so equal lines compare equal.
struct ExactLine {
  int unit_exp = 0;
  CycloNum offset;

  friend bool operator==(const ExactLine& a, const ExactLine& b) {
    return a.unit_exp == b.unit_exp && a.offset == b.offset;
  }
};

/// Open half-plane {w : side * Im(zeta^k w + b) > 0}, side '+' or '-'.
struct HalfPlane {
  ExactLine line;
  char side = '+';
};

ExactLine make_line(long unit_exp, const CycloNum& offset);
HalfPlane make_halfplane(long unit_exp, const CycloNum& offset, char side);
/// Line through a with direction zeta^dir.
ExactLine line_with_direction(const CycloNum& a, long dir);
/// Line through two distinct points; throws DomainError unless b - a is a
/// real multiple of a power of zeta.
ExactLine line_through(const CycloNum& a, const CycloNum& b);

/// Sign of Im(zeta^k w + b).
Sign line_side(const ExactLine& line, const CycloNum& w);
bool strictly_inside(const HalfPlane& h, const CycloNum& w);

/// {w : s * Im(G(w)) > 0}.
HalfPlane halfplane_from_constraint(const AffineMap& g, char s);

/// Unique intersection point, or nullopt for parallel (incl. coincident) lines.
std::optional<CycloNum> line_intersection(const ExactLine& l1, const ExactLine& l2);

/// Counter-clockwise vertex cycle; edges[i] carries vertices[i] -> vertices[i+1].
struct ConvexPolygon {
  std::vector<CycloNum> vertices;
  std::vector<ExactLine> edges;

  std::size_t size() const { return vertices.size(); }
};

enum class IntersectionStatus { Bounded, Empty, Unbounded };

struct HalfPlaneIntersection {
  IntersectionStatus status = IntersectionStatus::Empty;
  ConvexPolygon polygon;  // only meaningful when Bounded
};

HalfPlaneIntersection intersect_halfplanes(const std::vector<HalfPlane>& constraints);

enum class Location { Interior, Boundary, Exterior };

Location contains(const ConvexPolygon& poly, const CycloNum& z);
bool is_strictly_convex(const ConvexPolygon& poly);
bool polygon_is_regular(const ConvexPolygon& poly);
/// Same vertex cycle up to rotation.
bool same_polygon(const ConvexPolygon& a, const ConvexPolygon& b);
CycloNum vertex_centroid(const ConvexPolygon& poly);
/// Rotate so the lexicographically least vertex comes first.
void canonicalize(ConvexPolygon& poly);

/// Twice the signed area: Im(conj(a) * b) summed over edges.
CycloNum twice_area(const ConvexPolygon& poly);

/// Cross product Im(conj(u) * v) of planar vectors.
CycloNum cross(const CycloNum& u, const CycloNum& v);

/// Closed axis-aligned box with rational corners.
struct Box {
  Rational x0, y0, x1, y1;

  bool contains(const CycloNum& z) const;
  Box inflated(const Rational& by) const { return Box{x0 - by, y0 - by, x1 + by, y1 + by}; }
};

struct ExactSegment {
  CycloNum a;
  CycloNum b;
  int depth = 0;
  int direction = -1;  // zeta exponent of b - a up to sign, -1 if unknown
};

/// Exponent k in [0, m/2) with v a real multiple of zeta^k, or -1.
int direction_class(const CycloNum& v);
/// Whether direction zeta^k lies in {2*pi*t/q} modulo pi.
bool direction_in_theta(const FieldContext& f, int k);

std::optional<ExactSegment> clip_segment_to_box(const ExactSegment& seg, const Box& box);
bool point_on_segment(const CycloNum& p, const ExactSegment& seg);
CycloNum midpoint(const ExactSegment& seg);

}  // namespace pwrot

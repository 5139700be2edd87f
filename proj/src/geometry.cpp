#include "pwrot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

CycloNum constant(const FieldPtr& f, const Rational& r) { return CycloNum::constant(f, r); }

bool lex_less(const CycloNum& a, const CycloNum& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// Upper bound on |b| as an integer, from a 32-bit enclosure.
long magnitude_bound(const CycloNum& b) {
  const ComplexInterval box = approx(b, 32);
  const double re = std::max(std::fabs(box.re.lo.to_double()), std::fabs(box.re.hi.to_double()));
  const double im = std::max(std::fabs(box.im.lo.to_double()), std::fabs(box.im.hi.to_double()));
  return static_cast<long>(std::ceil(re + im)) + 1;
}

struct TaggedVertex {
  CycloNum point;
  std::size_t edge;  // line carrying point -> next point
};

}  // namespace

ExactLine make_line(long unit_exp, const CycloNum& offset) {
  const FieldPtr& f = offset.field();
  const long m = f->conductor();
  long k = mod(unit_exp, m);
  CycloNum b = offset;
  if (k >= m / 2) {
    k -= m / 2;
    b = -b;
  }
  b = (b - conj(b)) * Rational(1, 2);
  return ExactLine{static_cast<int>(k), std::move(b)};
}

HalfPlane make_halfplane(long unit_exp, const CycloNum& offset, char side) {
  const long m = offset.field()->conductor();
  const bool flipped = mod(unit_exp, m) >= m / 2;
  char s = side == '-' ? '-' : '+';
  if (flipped) s = s == '+' ? '-' : '+';
  return HalfPlane{make_line(unit_exp, offset), s};
}

ExactLine line_with_direction(const CycloNum& a, long dir) {
  // Im(zeta^-dir (w - a)) = 0
  return make_line(-dir, -mul_zeta_power(a, -dir));
}

ExactLine line_through(const CycloNum& a, const CycloNum& b) {
  const int k = direction_class(b - a);
  if (k < 0) throw DomainError("line_through: direction is not a root-of-unity direction");
  return line_with_direction(a, k);
}

Sign line_side(const ExactLine& line, const CycloNum& w) {
  return sign_of_im(mul_zeta_power(w, line.unit_exp) + line.offset);
}

bool strictly_inside(const HalfPlane& h, const CycloNum& w) {
  const Sign s = line_side(h.line, w);
  return h.side == '+' ? s == Sign::Positive : s == Sign::Negative;
}

HalfPlane halfplane_from_constraint(const AffineMap& g, char s) {
  return make_halfplane(static_cast<long>(g.power) * g.field()->lambda_exponent(), g.offset, s);
}

std::optional<CycloNum> line_intersection(const ExactLine& l1, const ExactLine& l2) {
  if (l1.unit_exp == l2.unit_exp) return std::nullopt;
  const FieldPtr& f = l1.offset.field();
  const long k1 = l1.unit_exp;
  const long k2 = l2.unit_exp;
  const long delta = k2 - k1;
  // u w - conj(u) conj(w) = -2 b for each line; Cramer over (w, conj w).
  const CycloNum numer = (mul_zeta_power(l2.offset, -k1) - mul_zeta_power(l1.offset, -k2)) * Rational(-2);
  const CycloNum inv_det = -mul_zeta_power(CycloNum(f, f->inv_one_minus_zeta(2 * delta)), delta);
  return numer * inv_det;
}

CycloNum cross(const CycloNum& u, const CycloNum& v) { return imag_part(conj(u) * v); }

HalfPlaneIntersection intersect_halfplanes(const std::vector<HalfPlane>& constraints) {
  HalfPlaneIntersection out;
  if (constraints.empty()) throw ParameterError("intersect_halfplanes: no constraints");
  const FieldPtr& f = constraints.front().line.offset.field();

  std::vector<HalfPlane> unique;
  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  for (const HalfPlane& h : constraints) {
    const std::size_t key = h.line.offset.hash() * 31 + static_cast<std::size_t>(h.line.unit_exp);
    bool seen = false;
    auto [first, last] = by_hash.equal_range(key);
    for (auto it = first; it != last; ++it) {
      const HalfPlane& u = unique[it->second];
      if (u.line == h.line) {
        if (u.side != h.side) return out;
        seen = true;
        break;
      }
    }
    if (!seen) {
      by_hash.emplace(key, unique.size());
      unique.push_back(h);
    }
  }

  long radius = 0;
  for (const HalfPlane& h : unique) radius = std::max(radius, magnitude_bound(h.line.offset));
  radius = f->conductor() * radius / 2 + 2;

  std::vector<ExactLine> lines;
  for (const HalfPlane& h : unique) lines.push_back(h.line);
  const std::size_t box_first = lines.size();
  const int quarter = f->i_exponent();
  const CycloNum i_r = i_unit(f) * Rational(radius);
  lines.push_back(make_line(0, i_r));         // y = -R
  lines.push_back(make_line(quarter, -i_r));  // x = R
  lines.push_back(make_line(0, -i_r));        // y = R
  lines.push_back(make_line(quarter, i_r));   // x = -R

  const Rational r(radius);
  std::vector<TaggedVertex> poly{
      {embed_rational_point(f, -r, -r), box_first},
      {embed_rational_point(f, r, -r), box_first + 1},
      {embed_rational_point(f, r, r), box_first + 2},
      {embed_rational_point(f, -r, r), box_first + 3},
  };

  for (std::size_t c = 0; c < unique.size() && !poly.empty(); ++c) {
    const HalfPlane& h = unique[c];
    const int want = h.side == '+' ? 1 : -1;
    std::vector<int> val(poly.size());
    bool any_out = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      val[i] = static_cast<int>(line_side(h.line, poly[i].point)) * want;
      any_out |= val[i] < 0;
    }
    if (!any_out) continue;
    std::vector<TaggedVertex> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const std::size_t j = (i + 1) % poly.size();
      if (val[i] >= 0) next.push_back(poly[i]);
      if ((val[i] > 0 && val[j] < 0) || (val[i] < 0 && val[j] > 0)) {
        auto x = line_intersection(lines[poly[i].edge], h.line);
        if (val[i] > 0)
          next.push_back({std::move(*x), c});
        else
          next.push_back({std::move(*x), poly[i].edge});
      } else if (val[i] == 0 && val[j] < 0) {
        next.back().edge = c;
      }
    }
    poly = std::move(next);
  }

  // Drop repeated and collinear vertices.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size() && poly.size() >= 3; ++i) {
      const std::size_t prev = (i + poly.size() - 1) % poly.size();
      const std::size_t nxt = (i + 1) % poly.size();
      const CycloNum e1 = poly[i].point - poly[prev].point;
      const CycloNum e2 = poly[nxt].point - poly[i].point;
      if (e1.is_zero() || e2.is_zero() || sign_of_real(cross(e1, e2)) == Sign::Zero) {
        if (e1.is_zero()) poly[prev].edge = poly[i].edge;
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) return out;

  for (const TaggedVertex& v : poly) {
    if (v.edge >= box_first) {
      out.status = IntersectionStatus::Unbounded;
      return out;
    }
  }
  out.status = IntersectionStatus::Bounded;
  for (TaggedVertex& v : poly) {
    out.polygon.vertices.push_back(std::move(v.point));
    out.polygon.edges.push_back(lines[v.edge]);
  }
  canonicalize(out.polygon);
  return out;
}

void canonicalize(ConvexPolygon& poly) {
  if (poly.vertices.empty()) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < poly.vertices.size(); ++i)
    if (lex_less(poly.vertices[i], poly.vertices[best])) best = i;
  std::rotate(poly.vertices.begin(), poly.vertices.begin() + static_cast<std::ptrdiff_t>(best), poly.vertices.end());
  if (poly.edges.size() == poly.vertices.size())
    std::rotate(poly.edges.begin(), poly.edges.begin() + static_cast<std::ptrdiff_t>(best), poly.edges.end());
}

Location contains(const ConvexPolygon& poly, const CycloNum& z) {
  const std::size_t n = poly.size();
  bool on_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    const CycloNum& a = poly.vertices[i];
    const CycloNum& b = poly.vertices[(i + 1) % n];
    const Sign s = sign_of_real(cross(b - a, z - a));
    if (s == Sign::Negative) return Location::Exterior;
    if (s == Sign::Zero) on_edge = true;
  }
  return on_edge ? Location::Boundary : Location::Interior;
}

bool is_strictly_convex(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const CycloNum e1 = poly.vertices[(i + 1) % n] - poly.vertices[i];
    const CycloNum e2 = poly.vertices[(i + 2) % n] - poly.vertices[(i + 1) % n];
    if (e1.is_zero() || sign_of_real(cross(e1, e2)) != Sign::Positive) return false;
  }
  return true;
}

bool polygon_is_regular(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  std::vector<CycloNum> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(poly.vertices[(i + 1) % n] - poly.vertices[i]);
  // Equal lengths plus equal turning products conj(e_i) e_{i+1} means equal angles.
  const CycloNum len = edges[0] * conj(edges[0]);
  const CycloNum turn = conj(edges[0]) * edges[1];
  for (std::size_t i = 1; i < n; ++i) {
    if (edges[i] * conj(edges[i]) != len) return false;
    if (conj(edges[i]) * edges[(i + 1) % n] != turn) return false;
  }
  return true;
}

bool same_polygon(const ConvexPolygon& a, const ConvexPolygon& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n == 0) return true;
  for (std::size_t s = 0; s < n; ++s) {
    if (b.vertices[s] != a.vertices[0]) continue;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = a.vertices[i] == b.vertices[(i + s) % n];
    if (ok) return true;
  }
  return false;
}

CycloNum vertex_centroid(const ConvexPolygon& poly) {
  if (poly.vertices.empty()) throw DomainError("vertex_centroid: empty polygon");
  CycloNum sum(poly.vertices.front().field());
  for (const CycloNum& v : poly.vertices) sum += v;
  return sum * Rational(1, static_cast<long>(poly.size()));
}

CycloNum twice_area(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n == 0) throw DomainError("twice_area: empty polygon");
  CycloNum sum(poly.vertices.front().field());
  for (std::size_t i = 0; i < n; ++i) sum += cross(poly.vertices[i], poly.vertices[(i + 1) % n]);
  return sum;
}

bool Box::contains(const CycloNum& z) const {
  const FieldPtr& f = z.field();
  const CycloNum re = real_part(z);
  const CycloNum im = imag_part(z);
  return sign_of_real(re - constant(f, x0)) != Sign::Negative && sign_of_real(constant(f, x1) - re) != Sign::Negative &&
         sign_of_real(im - constant(f, y0)) != Sign::Negative && sign_of_real(constant(f, y1) - im) != Sign::Negative;
}

int direction_class(const CycloNum& v) {
  if (v.is_zero()) return -1;
  const FieldPtr& f = v.field();
  const long half = f->conductor() / 2;
  const std::complex<double> c = to_complex(v);
  const double turns = std::arg(c) / (2 * std::numbers::pi) * f->conductor();
  const long guess = mod(std::lround(turns), half);
  for (long delta : {0L, 1L, -1L}) {
    const long k = mod(guess + delta, half);
    if (sign_of_im(mul_zeta_power(v, -k)) == Sign::Zero) return static_cast<int>(k);
  }
  for (long k = 0; k < half; ++k)
    if (sign_of_im(mul_zeta_power(v, -k)) == Sign::Zero) return static_cast<int>(k);
  return -1;
}

bool direction_in_theta(const FieldContext& f, int k) {
  const int m = f.conductor();
  const int step = std::gcd(m / f.q(), m / 2);
  return k % step == 0;
}

std::optional<ExactSegment> clip_segment_to_box(const ExactSegment& seg, const Box& box) {
  const FieldPtr& f = seg.a.field();
  int dir = seg.direction >= 0 ? seg.direction : direction_class(seg.b - seg.a);
  if (dir < 0) throw DomainError("clip_segment_to_box: segment direction is not a root-of-unity direction");
  const ExactLine carrier = line_with_direction(seg.a, dir);
  const int quarter = f->i_exponent();
  const CycloNum i1 = i_unit(f);

  // (signed value of box constraint at w, boundary line) for x >= x0, x <= x1, y >= y0, y <= y1
  struct Side {
    bool real_axis;
    Rational bound;
    bool lower;
  };
  const Side sides[4] = {{true, box.x0, true}, {true, box.x1, false}, {false, box.y0, true}, {false, box.y1, false}};

  CycloNum lo = seg.a;
  CycloNum hi = seg.b;
  for (const Side& s : sides) {
    auto value = [&](const CycloNum& w) {
      const CycloNum c = constant(f, s.bound);
      const Sign sg = s.real_axis ? sign_of_re(w - c) : sign_of_im(w - i1 * c);
      return s.lower ? sg : -sg;
    };
    const Sign vlo = value(lo);
    const Sign vhi = value(hi);
    if (vlo != Sign::Negative && vhi != Sign::Negative) continue;
    if (vlo != Sign::Positive && vhi != Sign::Positive) return std::nullopt;
    // x = c: Im(i w - i c) = 0; y = c: Im(w - i c) = 0
    const CycloNum c = constant(f, s.bound);
    const ExactLine edge = s.real_axis ? make_line(quarter, -(i1 * c)) : make_line(0, -(i1 * c));
    auto x = line_intersection(carrier, edge);
    if (!x) return std::nullopt;
    if (vlo == Sign::Negative)
      lo = std::move(*x);
    else
      hi = std::move(*x);
  }
  if (lo == hi) return std::nullopt;
  return ExactSegment{std::move(lo), std::move(hi), seg.depth, dir};
}

bool point_on_segment(const CycloNum& p, const ExactSegment& seg) {
  const CycloNum d = seg.b - seg.a;
  const CycloNum rel = p - seg.a;
  if (sign_of_real(cross(d, rel)) != Sign::Zero) return false;
  return sign_of_re(conj(d) * rel) != Sign::Negative && sign_of_re(conj(-d) * (p - seg.b)) != Sign::Negative;
}

CycloNum midpoint(const ExactSegment& seg) { return (seg.a + seg.b) * Rational(1, 2); }

}  // namespace pwrot

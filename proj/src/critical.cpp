#include "pwrot/critical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "pwrot/dynamics.hpp"
#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

long norm_bound(const Box& box) {
  double worst = 0;
  for (const Rational& x : {box.x0, box.x1})
    for (const Rational& y : {box.y0, box.y1}) worst = std::max(worst, std::hypot(x.get_d(), y.get_d()));
  return static_cast<long>(std::ceil(worst)) + 1;
}

// One side of a split piece: the part of [a, b] where the splitting value has
// sign `side` (Zero counts as Positive), mapped by `image`.
template <class Split, class Image>
void push_pieces(const ExactSegment& seg, const ExactLine& split_line, Split&& sign_at, Image&& image,
                 std::vector<ExactSegment>& out) {
  const Sign sa = sign_at(seg.a);
  const Sign sb = sign_at(seg.b);
  const bool a_neg = sa == Sign::Negative;
  const bool b_neg = sb == Sign::Negative;
  if (a_neg == b_neg || sa == Sign::Zero || sb == Sign::Zero) {
    // whole segment on one side; a zero endpoint follows the other endpoint
    const bool neg = a_neg || b_neg;
    out.push_back(image(seg, neg));
    return;
  }
  const ExactLine carrier = line_with_direction(seg.a, seg.direction);
  const CycloNum x = *line_intersection(carrier, split_line);
  out.push_back(image(ExactSegment{seg.a, x, seg.depth, seg.direction}, a_neg));
  out.push_back(image(ExactSegment{x, seg.b, seg.depth, seg.direction}, b_neg));
}

CriticalLayer advance_layer(const CriticalLayer& prev, const Box& box, int total_depth, unsigned threads,
                            LayerKind kind) {
  CriticalLayer next;
  next.depth = prev.depth + 1;
  next.kind = kind;
  if (prev.segments.empty()) return next;
  const FieldPtr& f = prev.segments.front().a.field();
  const long lam = f->lambda_exponent();
  const long half = f->conductor() / 2;
  const Box window = layer_window(box, next.depth, total_depth);
  const CycloNum zero(f);
  const CycloNum one = CycloNum::constant(f, Rational(1));
  const bool pull = kind == LayerKind::Pullback;
  const ExactLine split = pull ? line_with_direction(zero, lam) : make_line(0, zero);

  auto sign_at = [&](const CycloNum& z) { return pull ? sign_of_im(mul_zeta_power(z, -lam)) : sign_of_im(z); };
  auto image = [&](const ExactSegment& s, bool neg) {
    auto map = [&](const CycloNum& z) {
      if (pull) return mul_zeta_power(z, -lam) + (neg ? -one : one);
      return mul_zeta_power(neg ? z + one : z - one, lam);
    };
    const long dir = ((s.direction + (pull ? -lam : lam)) % half + half) % half;
    return ExactSegment{map(s.a), map(s.b), next.depth, static_cast<int>(dir)};
  };

  std::vector<std::vector<ExactSegment>> parts(prev.segments.size());
  detail::parallel_for(prev.segments.size(), threads, [&](std::size_t i) {
    std::vector<ExactSegment> pieces;
    push_pieces(prev.segments[i], split, sign_at, image, pieces);
    for (const ExactSegment& p : pieces)
      if (auto c = clip_segment_to_box(p, window)) parts[i].push_back(std::move(*c));
  });
  for (auto& p : parts)
    for (auto& s : p) next.segments.push_back(std::move(s));
  return next;
}

CriticalLayer clipped(const CriticalLayer& layer, const Box& box) {
  CriticalLayer out;
  out.depth = layer.depth;
  out.kind = layer.kind;
  for (const ExactSegment& s : layer.segments)
    if (auto c = clip_segment_to_box(s, box)) out.segments.push_back(std::move(*c));
  return out;
}

std::string coeff_vector(const CycloNum& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += rational_string(a.coeffs()[i]);
  }
  return out + "]";
}

}  // namespace

Box layer_window(const Box& box, int depth, int total_depth) {
  const long h = norm_bound(box) + std::max(0, total_depth - depth);
  return Box{Rational(-h), Rational(-h), Rational(h), Rational(h)};
}

CriticalLayer base_layer(const FieldPtr& field, const Box& box, int total_depth, LayerKind kind) {
  const Box w = layer_window(box, 0, total_depth);
  CriticalLayer layer;
  layer.kind = kind;
  layer.segments.push_back(
      ExactSegment{embed_rational_point(field, w.x0, 0), embed_rational_point(field, w.x1, 0), 0, 0});
  return layer;
}

CriticalLayer pullback_layer(const CriticalLayer& prev, const Box& box, int total_depth, unsigned threads) {
  if (prev.kind != LayerKind::Pullback) throw ParameterError("pullback_layer: previous layer is a forward layer");
  if (prev.depth >= total_depth) throw ParameterError("pullback_layer: already at total depth");
  return advance_layer(prev, box, total_depth, threads, LayerKind::Pullback);
}

CriticalLayer forward_layer(const CriticalLayer& prev, const Box& box, int total_depth, unsigned threads) {
  if (prev.kind != LayerKind::Forward) throw ParameterError("forward_layer: previous layer is a pullback layer");
  if (prev.depth >= total_depth) throw ParameterError("forward_layer: already at total depth");
  return advance_layer(prev, box, total_depth, threads, LayerKind::Forward);
}

CriticalBundle critical_bundle(const FieldPtr& field, int total_depth, const Box& box, BundleKind kind,
                               std::size_t cap, unsigned threads) {
  if (total_depth < 0) throw ParameterError("critical_bundle: depth must be >= 0");
  if (!(box.x0 < box.x1) || !(box.y0 < box.y1)) throw ParameterError("critical_bundle: degenerate box");
  CriticalBundle out;
  const bool pull = kind != BundleKind::Forward;
  const bool fwd = kind != BundleKind::Pullback;
  CriticalLayer p = base_layer(field, box, total_depth, LayerKind::Pullback);
  CriticalLayer g = base_layer(field, box, total_depth, LayerKind::Forward);

  auto emit = [&](std::vector<CriticalLayer>& dst, const CriticalLayer& layer) {
    CriticalLayer c = clipped(layer, box);
    if (out.segment_count + c.segments.size() > cap) {
      c.segments.resize(cap - out.segment_count);
      out.truncated = true;
    }
    out.segment_count += c.segments.size();
    dst.push_back(std::move(c));
  };

  for (int j = 0; j <= total_depth; ++j) {
    if (j > 0) {
      if (pull) p = pullback_layer(p, box, total_depth, threads);
      if (fwd) g = forward_layer(g, box, total_depth, threads);
    }
    if (pull) emit(out.pullback, p);
    if (fwd && !out.truncated) emit(out.forward, g);
    out.depth_reached = j;
    if (out.truncated) {
      out.note = "segment cap " + std::to_string(cap) + " reached at depth " + std::to_string(j);
      break;
    }
  }
  return out;
}

std::vector<CriticalLayer> pullback_trace(const CycloNum& p, int depth, const Box& box) {
  if (depth < 0) throw ParameterError("pullback_trace: depth must be >= 0");
  const std::vector<CycloNum> path = orbit(p, static_cast<std::size_t>(depth));
  auto keep_through = [](CriticalLayer& layer, const CycloNum& z) {
    std::erase_if(layer.segments, [&](const ExactSegment& s) { return !point_on_segment(z, s); });
  };
  std::vector<CriticalLayer> out;
  CriticalLayer layer = base_layer(p.field(), box, depth, LayerKind::Pullback);
  keep_through(layer, path[static_cast<std::size_t>(depth)]);
  out.push_back(layer);
  for (int j = 1; j <= depth; ++j) {
    layer = pullback_layer(layer, box, depth, 1);
    keep_through(layer, path[static_cast<std::size_t>(depth - j)]);
    out.push_back(layer);
  }
  return out;
}

std::optional<std::uint64_t> first_line_hit(const CycloNum& p, std::uint64_t budget) {
  std::optional<std::uint64_t> hit;
  for_each_iterate(p, budget, [&](std::uint64_t j, const CycloNum&, Address a) {
    if (a != Address::OnLine) return true;
    hit = j;
    return false;
  });
  return hit;
}

std::string layer_dump(const CriticalLayer& layer) {
  std::ostringstream os;
  os.precision(17);
  for (const ExactSegment& s : layer.segments) {
    const auto a = to_complex(s.a);
    const auto b = to_complex(s.b);
    os << s.depth << ' ' << (layer.kind == LayerKind::Pullback ? "pullback" : "forward") << ' ' << coeff_vector(s.a)
       << ' ' << coeff_vector(s.b) << ' ' << a.real() << ' ' << a.imag() << ' ' << b.real() << ' ' << b.imag()
       << '\n';
  }
  return os.str();
}

bool on_some_segment(const std::vector<CriticalLayer>& layers, const CycloNum& p) {
  const auto z = to_complex(p);
  for (const CriticalLayer& l : layers)
    for (const ExactSegment& s : l.segments) {
      const auto a = to_complex(s.a);
      const auto b = to_complex(s.b);
      // cheap reject far from the segment's bounding box
      const double slack = 1e-9 * (1 + std::abs(a) + std::abs(b));
      if (z.real() < std::min(a.real(), b.real()) - slack || z.real() > std::max(a.real(), b.real()) + slack ||
          z.imag() < std::min(a.imag(), b.imag()) - slack || z.imag() > std::max(a.imag(), b.imag()) + slack)
        continue;
      if (point_on_segment(p, s)) return true;
    }
  return false;
}

}  // namespace pwrot

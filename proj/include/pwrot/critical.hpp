#pragma once

// Segment families of the critical set (preimages of the real axis) and of
// the forward images of the real axis, layer by layer, clipped to boxes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwrot/geometry.hpp"

namespace pwrot {

enum class LayerKind { Pullback, Forward };

struct CriticalLayer {
  int depth = 0;
  LayerKind kind = LayerKind::Pullback;
  std::vector<ExactSegment> segments;
};

/// Centered square that holds the relevant part of layer `depth` when the
/// final target is `box` at `total_depth`: half-width rho + (total_depth - depth)
/// with rho an integer bound on |z| over box.
Box layer_window(const Box& box, int depth, int total_depth);

/// The real axis clipped to the layer-0 window.
CriticalLayer base_layer(const FieldPtr& field, const Box& box, int total_depth, LayerKind kind);

/// F^-1 of every segment, split on the line through 0 with direction lambda.
CriticalLayer pullback_layer(const CriticalLayer& prev, const Box& box, int total_depth, unsigned threads = 0);
/// F of every segment, split on the real axis.
CriticalLayer forward_layer(const CriticalLayer& prev, const Box& box, int total_depth, unsigned threads = 0);

enum class BundleKind { Pullback, Forward, Both };

struct CriticalBundle {
  std::vector<CriticalLayer> pullback;
  std::vector<CriticalLayer> forward;
  bool truncated = false;
  int depth_reached = 0;
  std::size_t segment_count = 0;
  std::string note;
};

/// Layers 0..total_depth clipped to box. Layers are produced breadth-first and
/// stop once `cap` segments have been emitted.
CriticalBundle critical_bundle(const FieldPtr& field, int total_depth, const Box& box, BundleKind kind,
                               std::size_t cap = 1000000, unsigned threads = 0);

/// The pullback bundle for `box` at `depth`, pruned to the segments through
/// F^(depth - j)(p) at each layer j. Each layer is a subset of the full layer,
/// so the last layer contains p whenever p is on the full bundle's last layer.
std::vector<CriticalLayer> pullback_trace(const CycloNum& p, int depth, const Box& box);

/// First index j <= budget with Im F^j(p) = 0.
std::optional<std::uint64_t> first_line_hit(const CycloNum& p, std::uint64_t budget);

/// One line per segment: depth, exact endpoints, numeric endpoints.
std::string layer_dump(const CriticalLayer& layer);

/// Whether p lies on some segment of the layers.
bool on_some_segment(const std::vector<CriticalLayer>& layers, const CycloNum& p);

}  // namespace pwrot

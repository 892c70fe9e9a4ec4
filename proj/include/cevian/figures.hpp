#pragma once

#include <string>

#include "cevian/cevians.hpp"

namespace cevian {

struct FigureOptions {
  bool show_cevians = true;
  bool show_labels = true;
  int width = 640;   // pixels
  int height = 480;  // pixels
  int margin = 40;   // pixels
};

// The config need not be transversal: degenerate figures draw the cevians
// and annotate why there is no inner triangle.
struct FigureSpec {
  Triangle triangle;
  RouthConfig config;
  FigureOptions options;
};

// Exact map from math coordinates to pixels: px = ox + scale·x,
// py = oy − scale·y. The flip keeps counterclockwise triangles
// counterclockwise on screen.
struct CanvasTransform {
  Rational scale, ox, oy;

  Vec2 to_pixels(const Vec2& p) const {
    return Vec2{ox + scale * p.x, oy - scale * p.y};
  }
};

/// Transform that fits the host triangle into the canvas with the requested
/// margin, centered along the slack axis.
CanvasTransform canvas_transform(const Triangle& t, const FigureOptions& options);

/// Well-formed standalone SVG. Geometry stays rational until attribute
/// serialization (six decimal digits). The inner triangle carries
/// id="pqr"; degenerate configs replace it with an explanatory note.
std::string emit_svg(const FigureSpec& spec);

}  // namespace cevian

#include "cevian/figures.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace cevian {
namespace {

Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string px(const Rational& value) { return to_decimal(value, 6); }

struct Box {
  Rational x_lo, x_hi, y_lo, y_hi;

  bool contains(const Vec2& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
};

bool lex_less(const Vec2& a, const Vec2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Visible portion of a line inside an axis-aligned box, exact.
std::optional<std::pair<Vec2, Vec2>> clip_line(const HLine& l, const Box& box) {
  const std::pair<HLine, std::pair<Vec2, Vec2>> borders[] = {
      {HLine::from_ratios(1, 0, -box.x_lo),
       {Vec2{box.x_lo, box.y_lo}, Vec2{box.x_lo, box.y_hi}}},
      {HLine::from_ratios(1, 0, -box.x_hi),
       {Vec2{box.x_hi, box.y_lo}, Vec2{box.x_hi, box.y_hi}}},
      {HLine::from_ratios(0, 1, -box.y_lo),
       {Vec2{box.x_lo, box.y_lo}, Vec2{box.x_hi, box.y_lo}}},
      {HLine::from_ratios(0, 1, -box.y_hi),
       {Vec2{box.x_lo, box.y_hi}, Vec2{box.x_hi, box.y_hi}}},
  };
  std::vector<Vec2> hits;
  auto push = [&hits](const Vec2& p) {
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  for (const auto& [border, span] : borders) {
    if (l == border) {
      return std::pair{span.first, span.second};
    }
    HPoint m = meet(l, border);
    if (m.at_infinity()) continue;
    Vec2 p = m.affine();
    if (box.contains(p)) push(p);
  }
  if (hits.size() < 2) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), lex_less);
  if (*lo == *hi) return std::nullopt;
  return std::pair{*lo, *hi};
}

void polygon(std::ostringstream& svg, const std::string& id,
             const std::vector<Vec2>& pts, const std::string& style) {
  svg << "  <polygon";
  if (!id.empty()) svg << " id=\"" << id << "\"";
  svg << " points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) svg << " ";
    svg << px(pts[i].x) << "," << px(pts[i].y);
  }
  svg << "\" " << style << "/>\n";
}

void dot(std::ostringstream& svg, const Vec2& at, const char* fill) {
  svg << "  <circle cx=\"" << px(at.x) << "\" cy=\"" << px(at.y)
      << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
}

void label(std::ostringstream& svg, const Vec2& at, const std::string& text) {
  svg << "  <text x=\"" << px(at.x + 6) << "\" y=\"" << px(at.y - 6)
      << "\" font-family=\"sans-serif\" font-size=\"14\">" << text << "</text>\n";
}

}  // namespace

CanvasTransform canvas_transform(const Triangle& t, const FigureOptions& options) {
  Rational x_lo = rmin(rmin(t.a().x, t.b().x), t.c().x);
  Rational x_hi = rmax(rmax(t.a().x, t.b().x), t.c().x);
  Rational y_lo = rmin(rmin(t.a().y, t.b().y), t.c().y);
  Rational y_hi = rmax(rmax(t.a().y, t.b().y), t.c().y);
  // Non-collinear vertices always span both axes.
  long inner_w = std::max(1, options.width - 2 * options.margin);
  long inner_h = std::max(1, options.height - 2 * options.margin);
  Rational scale = rmin(Rational(inner_w) / (x_hi - x_lo),
                        Rational(inner_h) / (y_hi - y_lo));
  // Center the slack left over on the looser axis.
  Rational pad_x = (Rational(inner_w) - scale * (x_hi - x_lo)) / 2;
  Rational pad_y = (Rational(inner_h) - scale * (y_hi - y_lo)) / 2;
  Rational margin(options.margin);
  Rational ox = margin + pad_x - scale * x_lo;
  Rational oy = Rational(options.height) - margin - pad_y + scale * y_lo;
  return CanvasTransform{scale, ox, oy};
}

std::string emit_svg(const FigureSpec& spec) {
  const Triangle& t = spec.triangle;
  const FigureOptions& opt = spec.options;
  CanvasTransform tf = canvas_transform(t, opt);

  // Math-space preimage of the pixel viewport, for exact cevian clipping.
  Box view{(Rational(0) - tf.ox) / tf.scale, (Rational(opt.width) - tf.ox) / tf.scale,
           (tf.oy - Rational(opt.height)) / tf.scale, tf.oy / tf.scale};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
      << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " "
      << opt.height << "\">\n";
  svg << "  <rect width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" fill=\"white\"/>\n";

  if (opt.show_cevians) {
    const std::pair<Vertex, const Param&> cevians[] = {
        {Vertex::A, spec.config.x}, {Vertex::A, spec.config.u},
        {Vertex::B, spec.config.y}, {Vertex::B, spec.config.v},
        {Vertex::C, spec.config.z}, {Vertex::C, spec.config.w},
    };
    for (const auto& [vertex, s] : cevians) {
      auto segment = clip_line(cevian_line(t, vertex, s), view);
      if (!segment) continue;
      Vec2 p1 = tf.to_pixels(segment->first), p2 = tf.to_pixels(segment->second);
      svg << "  <line x1=\"" << px(p1.x) << "\" y1=\"" << px(p1.y) << "\" x2=\""
          << px(p2.x) << "\" y2=\"" << px(p2.y)
          << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [vertex, s] : cevians) {
      HPoint foot = cevian_point(t, vertex, s);
      if (foot.at_infinity()) continue;
      dot(svg, tf.to_pixels(foot.affine()), "#888888");
    }
  }

  polygon(svg, "host",
          {tf.to_pixels(t.a()), tf.to_pixels(t.b()), tf.to_pixels(t.c())},
          "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");

  std::string note;
  try {
    auto [hp, hq, hr] = generalized_routh_points(t, spec.config);
    std::vector<Vec2> inner{tf.to_pixels(hp.affine()), tf.to_pixels(hq.affine()),
                            tf.to_pixels(hr.affine())};
    polygon(svg, "pqr", inner,
            "fill=\"#c8d8f0\" fill-opacity=\"0.8\" stroke=\"#224488\" stroke-width=\"1.5\"");
    for (const Vec2& corner : inner) dot(svg, corner, "#224488");
    if (opt.show_labels) {
      label(svg, inner[0], "P");
      label(svg, inner[1], "Q");
      label(svg, inner[2], "R");
    }
  } catch (const DegeneratePair& e) {
    note = std::string(e.cls() == PairClass::Coincident ? "coincident" : "parallel") +
           " cevians " + to_string(e.pair()) + ": no inner triangle";
  }

  if (opt.show_labels) {
    label(svg, tf.to_pixels(t.a()), "A");
    label(svg, tf.to_pixels(t.b()), "B");
    label(svg, tf.to_pixels(t.c()), "C");
  }
  if (!note.empty()) {
    svg << "  <text id=\"note\" x=\"" << opt.margin << "\" y=\"20\""
        << " font-family=\"sans-serif\" font-size=\"14\">" << note << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cevian

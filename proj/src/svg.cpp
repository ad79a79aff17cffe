#include "plumb/svg.hpp"

#include <sstream>
#include <vector>

namespace plumb {

namespace {

constexpr int kDigits = 6;
constexpr long kWidth = 512;

// Exact plane-to-canvas map with y flipped.
class Canvas {
 public:
  Canvas(const std::vector<Point>& pts) {
    Rational minx = pts.front().x, maxx = minx, miny = pts.front().y, maxy = miny;
    for (const auto& p : pts) {
      if (p.x < minx) minx = p.x;
      if (p.x > maxx) maxx = p.x;
      if (p.y < miny) miny = p.y;
      if (p.y > maxy) maxy = p.y;
    }
    const Rational pad_x = (maxx - minx) / 10;
    const Rational pad_y = (maxy - miny) / 10;
    left_ = minx - pad_x;
    top_ = maxy + pad_y;
    scale_ = Rational(kWidth) / (maxx - minx + 2 * pad_x);
    height_ = (maxy - miny + 2 * pad_y) * scale_;
  }

  std::string x(const Rational& v) const { return format_fixed((v - left_) * scale_, kDigits); }
  std::string y(const Rational& v) const { return format_fixed((top_ - v) * scale_, kDigits); }
  std::string xy(const Point& p) const { return x(p.x) + " " + y(p.y); }

  std::string header() const {
    const std::string h = format_fixed(height_, kDigits);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(kWidth) + " " + h +
           "\" width=\"" + std::to_string(kWidth) + "\" height=\"" + h + "\">\n";
  }

 private:
  Rational left_;
  Rational top_;
  Rational scale_;
  Rational height_;
};

const char* kind_class(PieceKind k) {
  switch (k) {
    case PieceKind::Axis: return "axis";
    case PieceKind::Clipping: return "clipping";
    case PieceKind::Level: return "level";
  }
  return "axis";
}

void line(std::ostringstream& out, const Canvas& c, const Point& a, const Point& b, const std::string& cls) {
  out << "  <line class=\"" << cls << "\" x1=\"" << c.x(a.x) << "\" y1=\"" << c.y(a.y) << "\" x2=\"" << c.x(b.x)
      << "\" y2=\"" << c.y(b.y) << "\"/>\n";
}

void text(std::ostringstream& out, const Canvas& c, const Point& at, const std::string& body) {
  out << "  <text x=\"" << c.x(at.x) << "\" y=\"" << c.y(at.y) << "\">" << body << "</text>\n";
}

const char* kStyle =
    "  <style>line,path{fill:none;stroke:#000;stroke-width:1.5}"
    ".clipping{stroke-dasharray:6 4}.level,.contour{stroke:#1f5fbf}.band{stroke:#888;stroke-dasharray:4 4}"
    "polygon{fill:#f2c14e;fill-opacity:0.45;stroke:none}text{font:12px sans-serif}</style>\n";

}  // namespace

std::string emit_region_svg(const ToricRegion& region, bool labels) {
  std::vector<Point> pts;
  for (const auto& piece : region.boundary) {
    if (const auto* s = std::get_if<Segment>(&piece)) {
      pts.push_back(s->from);
      pts.push_back(s->to);
    } else {
      const auto& a = std::get<SmoothingArc>(piece);
      pts.push_back(a.from);
      pts.push_back(a.control);
      pts.push_back(a.to);
    }
  }
  const Canvas c(pts);
  std::ostringstream out;
  out << c.header() << kStyle;

  for (const auto* sub : {&region.sub_v, &region.sub_vprime}) {
    const auto& k = sub->corners;
    out << "  <polygon points=\"" << c.x(k[0].x) << ',' << c.y(k[0].y) << ' ' << c.x(k[1].x) << ',' << c.y(k[1].y)
        << ' ' << c.x(k[3].x) << ',' << c.y(k[3].y) << ' ' << c.x(k[2].x) << ',' << c.y(k[2].y) << "\"/>\n";
  }
  for (const auto& piece : region.boundary) {
    if (const auto* s = std::get_if<Segment>(&piece)) {
      line(out, c, s->from, s->to, kind_class(s->kind));
    } else {
      const auto& a = std::get<SmoothingArc>(piece);
      out << "  <path class=\"level\" d=\"M " << c.xy(a.from) << " Q " << c.xy(a.control) << ' ' << c.xy(a.to)
          << "\"/>\n";
    }
  }
  if (labels) {
    const Rational& eps = region.epsilon;
    const Point& o = region.anchor;
    text(out, c, o, "(z_v,z_v')");
    text(out, c, {o.x, o.y + eps}, "(z_v,z_v'+&#949;)");
    text(out, c, {o.x, o.y + 2 * eps}, "(z_v,z_v'+2&#949;)");
    text(out, c, {o.x + eps, o.y}, "(z_v+&#949;,z_v')");
    text(out, c, {o.x + 2 * eps, o.y}, "(z_v+2&#949;,z_v')");
    auto centroid = [](const Parallelogram& p) {
      Rational x = 0, y = 0;
      for (const auto& k : p.corners) {
        x += k.x;
        y += k.y;
      }
      return Point{x / 4, y / 4};
    };
    text(out, c, centroid(region.sub_v), "R_{e,v}");
    text(out, c, centroid(region.sub_vprime), "R_{e,v'}");
    for (const auto& piece : region.boundary) {
      const auto* s = std::get_if<Segment>(&piece);
      if (s && s->kind == PieceKind::Level && s->direction.y == 0) {
        text(out, c, s->from, "g_e^{-1}(&#948;)");
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_profile_svg(const ModelConstants& consts) {
  const Rational& gam = consts.gamma;
  const Rational extent = gam * (kProfileLevels + 2);
  const Canvas c({Point{0, 0}, Point{extent, extent}});
  std::ostringstream out;
  out << c.header() << kStyle;
  line(out, c, {0, 0}, {extent, 0}, "axis");
  line(out, c, {0, 0}, {0, extent}, "axis");
  line(out, c, {0, gam}, {extent - gam, extent}, "band");
  line(out, c, {gam, 0}, {extent, extent - gam}, "band");
  for (int k = 1; k <= kProfileLevels; ++k) {
    const Rational t = gam * k;
    out << "  <path class=\"contour\" d=\"M " << c.xy({extent, t}) << " L " << c.xy({t + gam, t}) << " Q "
        << c.xy({t, t}) << ' ' << c.xy({t, t + gam}) << " L " << c.xy({t, extent}) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace plumb

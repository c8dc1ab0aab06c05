#include "intfn/render.hpp"

#include <set>
#include <sstream>

#include "intfn/error.hpp"

namespace intfn {

namespace {

std::set<IntegerPair> occupied(const IntegerFunction& f, const Viewport& v) {
  std::set<IntegerPair> cells;
  for (const auto& p : f.elements()) {
    if (p.i >= v.i_min && p.i <= v.i_max && p.j >= v.j_min && p.j <= v.j_max) cells.insert(p);
  }
  return cells;
}

template <typename CellFn>
std::string raster(const IntegerFunction& f, const Viewport& v, CellFn cell) {
  const auto cells = occupied(f, v);
  std::string out;
  for (auto j = v.j_max; j >= v.j_min; --j) {
    for (auto i = v.i_min; i <= v.i_max; ++i) out += cell(cells.contains({i, j}));
    out += '\n';
  }
  return out;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Viewport make_viewport(std::int64_t i_min, std::int64_t i_max, std::int64_t j_min,
                       std::int64_t j_max, std::int64_t cell_px) {
  if (i_min > i_max || j_min > j_max) throw PreconditionError("viewport bounds are inverted");
  if (cell_px <= 0) throw PreconditionError("cell size must be positive");
  return Viewport{i_min, i_max, j_min, j_max, cell_px};
}

Viewport bounding_viewport(const IntegerFunction& f, std::int64_t cell_px) {
  Viewport v{f.start().i, f.start().i, f.start().j, f.start().j, cell_px};
  for (const auto& p : f.elements()) {
    v.i_min = std::min(v.i_min, p.i);
    v.i_max = std::max(v.i_max, p.i);
    v.j_min = std::min(v.j_min, p.j);
    v.j_max = std::max(v.j_max, p.j);
  }
  return v;
}

std::string render_ascii(const IntegerFunction& f, const Viewport& v) {
  return raster(f, v, [](bool set) { return set ? '#' : '.'; });
}

std::string render_pbm(const IntegerFunction& f, const Viewport& v) {
  return "P1\n" + std::to_string(v.width()) + " " + std::to_string(v.height()) + "\n" +
         raster(f, v, [](bool set) { return set ? '1' : '0'; });
}

std::string render_svg(const IntegerFunction& f, const Viewport& v,
                       std::optional<std::string_view> scale_label) {
  const auto px = v.cell_px;
  const auto width = v.width() * px;
  const auto grid_height = v.height() * px;
  const auto height = grid_height + (scale_label ? 2 * px : 0);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (const auto& c : occupied(f, v)) {
    // j grows upward
    out << "  <rect x=\"" << (c.i - v.i_min) * px << "\" y=\"" << (v.j_max - c.j) * px
        << "\" width=\"" << px << "\" height=\"" << px
        << "\" fill=\"#4a8f3c\" stroke=\"#1f3d19\" stroke-width=\"1\"/>\n";
  }
  if (scale_label) {
    out << "  <text x=\"2\" y=\"" << grid_height + px + px / 2 << "\" font-family=\"sans-serif\" font-size=\""
        << px << "\">" << xml_escape(*scale_label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace intfn

#include "latscat/figures.hpp"

#include <sstream>

#include "latscat/errors.hpp"

namespace latscat {

namespace {

const char* unit_glyph(int dx, int dj) {
  if (dx == 1 && dj == 0) return ">";
  if (dx == -1 && dj == 0) return "<";
  if (dx == 0 && dj == 1) return "^";
  if (dx == 0 && dj == -1) return "v";
  if (dx == 1 && dj == 1) return "↗";   // up-right
  if (dx == -1 && dj == 1) return "↖";  // up-left
  if (dx == 1 && dj == -1) return "↘";  // down-right
  if (dx == -1 && dj == -1) return "↙"; // down-left
  return nullptr;
}

}  // namespace

std::string render_ascii(const OpTable& table, const DiagramSpec& spec) {
  const int r = spec.radius;
  std::ostringstream out;
  std::vector<std::string> legend;
  for (int j = r; j >= 0; --j) {
    out << (j < 10 ? " " : "") << j << " |";
    for (int x = -r; x <= r; ++x) {
      const Site s(x, j);
      const auto entry = table.lookup(s);
      out << ' ';
      if (!entry) {
        out << '?';
        continue;
      }
      if (!*entry) {
        out << "∅";
        continue;
      }
      const Site t = **entry;
      if (t == s) {
        out << "•";
        continue;
      }
      const char* g = unit_glyph(t.x - s.x, t.j - s.j);
      if (g) {
        out << g;
      } else {
        out << '*';
        legend.push_back("* " + s.str() + " -> " + t.str());
      }
    }
    out << '\n';
  }
  out << "    ";
  for (int x = -r; x <= r; ++x) out << "--";
  out << '\n' << "     ";
  for (int x = -r; x <= r; ++x) {
    const int d = std::abs(x) % 10;
    out << (x < 0 ? "-" : " ") << d;
  }
  out << '\n';
  for (const auto& line : legend) out << line << '\n';
  return out.str();
}

namespace {

// Opening tag with one cell of padding around the lattice so edge marks are
// not clipped; the coordinate system itself stays the plain (x,j) transform.
std::string svg_open(const DiagramSpec& spec) {
  const int c = spec.cell_size;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width() + 2 * c
      << "\" height=\"" << spec.height() + 2 * c << "\" viewBox=\"" << -c << " " << -c << " "
      << spec.width() + 2 * c << " " << spec.height() + 2 * c << "\">\n";
  return out.str();
}

}  // namespace

std::string render_svg(const OpTable& table, const DiagramSpec& spec) {
  const int r = spec.radius;
  std::ostringstream out;
  out << svg_open(spec);
  out << "  <defs>\n"
      << "    <marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker>\n"
      << "  </defs>\n";
  // Grid dots for every site, then the table content, each sorted by (j,x).
  for (int j = 0; j <= r; ++j)
    for (int x = -r; x <= r; ++x)
      out << "  <circle class=\"site\" cx=\"" << spec.px(x) << "\" cy=\"" << spec.py(j)
          << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
  for (int j = 0; j <= r; ++j) {
    for (int x = -r; x <= r; ++x) {
      const Site s(x, j);
      const auto entry = table.lookup(s);
      if (!entry) continue;
      if (!*entry) {
        const int cx = spec.px(x), cy = spec.py(j);
        out << "  <path class=\"zero\" d=\"M" << cx - 5 << "," << cy - 5 << " L" << cx + 5 << ","
            << cy + 5 << " M" << cx - 5 << "," << cy + 5 << " L" << cx + 5 << "," << cy - 5
            << "\" stroke=\"#cc0000\" stroke-width=\"2\"/>\n";
        continue;
      }
      const Site t = **entry;
      if (t == s) {
        out << "  <circle class=\"fixed\" cx=\"" << spec.px(x) << "\" cy=\"" << spec.py(j)
            << "\" r=\"5\" fill=\"#000000\"/>\n";
      } else {
        out << "  <line class=\"arrow\" x1=\"" << spec.px(s.x) << "\" y1=\"" << spec.py(s.j)
            << "\" x2=\"" << spec.px(t.x) << "\" y2=\"" << spec.py(t.j)
            << "\" stroke=\"#000000\" stroke-width=\"1.5\" marker-end=\"url(#head)\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

// Pulls the numeric value of attr out of an element text.
long parse_attr(const std::string& elem, const std::string& attr) {
  const std::string key = attr + "=\"";
  const size_t pos = elem.find(key);
  if (pos == std::string::npos) throw RuleDefinitionError("svg parse: missing " + attr);
  return std::stol(elem.substr(pos + key.size()));
}

Site site_at(long px, long py, const DiagramSpec& spec) {
  const long x = px / spec.cell_size - spec.radius;
  const long j = spec.radius - py / spec.cell_size;
  if (px != spec.px(static_cast<int>(x)) || py != spec.py(static_cast<int>(j)))
    throw RuleDefinitionError("svg parse: point off the lattice grid");
  return Site(static_cast<int>(x), static_cast<int>(j));
}

}  // namespace

OpTable parse_svg(const std::string& svg, const DiagramSpec& spec) {
  OpTable table("parsed", spec.radius);
  size_t pos = 0;
  while (true) {
    const size_t start = svg.find('<', pos);
    if (start == std::string::npos) break;
    const size_t end = svg.find('>', start);
    if (end == std::string::npos) break;
    const std::string elem = svg.substr(start, end - start + 1);
    pos = end + 1;
    if (elem.find("class=\"fixed\"") != std::string::npos) {
      const Site s = site_at(parse_attr(elem, "cx"), parse_attr(elem, "cy"), spec);
      table.set(s, s);
    } else if (elem.find("class=\"arrow\"") != std::string::npos) {
      const Site from = site_at(parse_attr(elem, "x1"), parse_attr(elem, "y1"), spec);
      const Site to = site_at(parse_attr(elem, "x2"), parse_attr(elem, "y2"), spec);
      table.set(from, to);
    } else if (elem.find("class=\"zero\"") != std::string::npos) {
      const std::string key = "d=\"M";
      const size_t dpos = elem.find(key);
      if (dpos == std::string::npos) throw RuleDefinitionError("svg parse: malformed zero mark");
      const std::string rest = elem.substr(dpos + key.size());
      const size_t comma = rest.find(',');
      const long cx = std::stol(rest.substr(0, comma)) + 5;
      const long cy = std::stol(rest.substr(comma + 1)) + 5;
      table.set(site_at(cx, cy, spec), std::nullopt);
    }
  }
  return table;
}

std::string render_wold_svg(const OpTable& table, const WoldReport& report,
                            const DiagramSpec& spec) {
  std::ostringstream out;
  out << svg_open(spec);
  for (const auto& [s, oc] : report.classification) {
    const char* color = "#bbbbbb";
    switch (oc.kind) {
      case OrbitKind::fixed_point: color = "#000000"; break;
      case OrbitKind::cycle_member: color = "#1f77b4"; break;
      case OrbitKind::wandering_generator: color = "#d62728"; break;
      case OrbitKind::shift_ray_member: color = "#2ca02c"; break;
      case OrbitKind::boundary_indeterminate: color = "#999999"; break;
    }
    out << "  <circle class=\"" << orbit_kind_str(oc.kind) << "\" cx=\"" << spec.px(s.x)
        << "\" cy=\"" << spec.py(s.j) << "\" r=\"5\" fill=\"" << color << "\"/>\n";
  }
  // Overlay the arrows of the underlying table for orientation.
  for (const auto& [s, img] : table.entries()) {
    if (!img || *img == s) continue;
    if (std::abs(s.x) > spec.radius || s.j > spec.radius) continue;
    out << "  <line class=\"arrow\" x1=\"" << spec.px(s.x) << "\" y1=\"" << spec.py(s.j)
        << "\" x2=\"" << spec.px(img->x) << "\" y2=\"" << spec.py(img->j)
        << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace latscat

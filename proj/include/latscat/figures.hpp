#pragma once

#include <map>
#include <string>

#include "latscat/table.hpp"
#include "latscat/wold.hpp"

namespace latscat {

/// Arrow-diagram rendering of an operator table: an arrow from (x,j) to
/// (y,k) means the operator sends delta_(x,j) to delta_(y,k), a filled
/// dot means it acts as the identity there.
struct DiagramSpec {
  int radius;          // window radius; the diagram shows |x| <= R, 0 <= j <= R
  int cell_size = 40;  // SVG pixels per lattice step

  // Lattice (x,j) -> canvas position; j grows upward as in the figures.
  int px(int x) const { return (x + radius) * cell_size; }
  int py(int j) const { return (radius - j) * cell_size; }
  int width() const { return 2 * radius * cell_size; }
  int height() const { return radius * cell_size; }
};

/// One character per site: '•' fixed, directional glyphs for unit steps,
/// '*' for longer jumps (with a legend), '∅' annihilated, '?' for sites
/// the table does not cover.
std::string render_ascii(const OpTable& table, const DiagramSpec& spec);

/// Deterministic SVG arrow diagram; element order is sorted by (j,x) so
/// identical inputs give byte-identical output.
std::string render_svg(const OpTable& table, const DiagramSpec& spec);

/// Reconstructs the table from a rendered SVG (exact round trip on the
/// diagram window).
OpTable parse_svg(const std::string& svg, const DiagramSpec& spec);

/// Wold report rendering: orbit classes are color-coded.
std::string render_wold_svg(const OpTable& table, const WoldReport& report,
                            const DiagramSpec& spec);

}  // namespace latscat

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace latscat {

/// A lattice point (x, j) on the half-space Z x N. j is never negative.
struct Site {
  int x{0};
  int j{0};

  Site() = default;
  Site(int x_, int j_) : x(x_), j(j_) {
    if (j < 0) throw std::invalid_argument("Site: j must be non-negative");
  }

  friend bool operator==(const Site&, const Site&) = default;

  // Deterministic ordering by (j, x); all serialized output uses it.
  friend bool operator<(const Site& a, const Site& b) {
    if (a.j != b.j) return a.j < b.j;
    return a.x < b.x;
  }

  std::string str() const {
    return "(" + std::to_string(x) + "," + std::to_string(j) + ")";
  }
};

/// Finite window {(x,j) : -R <= x <= R, 0 <= j <= R} plus a guard margin
/// for orbit excursions. All exact-on-window claims refer to sites whose
/// orbits stay inside radius R + guard.
struct Window {
  int radius;
  int guard;

  explicit Window(int radius_, int guard_ = 4) : radius(radius_), guard(guard_) {
    if (radius < 1) throw std::invalid_argument("Window: radius must be positive");
    // 2 is the maximum single-step displacement of any cataloged operator.
    if (guard < 2) throw std::invalid_argument("Window: guard must be >= 2");
  }

  int extended_radius() const { return radius + guard; }

  bool contains(const Site& s) const {
    return s.x >= -radius && s.x <= radius && s.j >= 0 && s.j <= radius;
  }

  bool contains_extended(const Site& s) const {
    const int r = extended_radius();
    return s.x >= -r && s.x <= r && s.j >= 0 && s.j <= r;
  }

  std::vector<Site> sites() const { return sites_of_radius(radius); }
  std::vector<Site> extended_sites() const { return sites_of_radius(extended_radius()); }

  static std::vector<Site> sites_of_radius(int r) {
    std::vector<Site> out;
    out.reserve(static_cast<size_t>(2 * r + 1) * (r + 1));
    for (int j = 0; j <= r; ++j)
      for (int x = -r; x <= r; ++x) out.emplace_back(x, j);
    return out;
  }
};

}  // namespace latscat

#pragma once

#include <json.hpp>
#include <map>
#include <vector>

#include "latscat/table.hpp"

namespace latscat {

enum class OrbitKind {
  fixed_point,
  cycle_member,
  wandering_generator,
  shift_ray_member,
  boundary_indeterminate,
};

const char* orbit_kind_str(OrbitKind k);

struct OrbitClass {
  OrbitKind kind{OrbitKind::boundary_indeterminate};
  int cycle_id{-1};   // cycle members only
  int length{0};      // cycle length (1 for fixed points)
  Site generator{};   // ray members and generators
  int depth{0};       // steps from the generator, ray members only
};

struct Cycle {
  int id;
  int length;
  std::vector<Site> members;  // in forward-orbit order from the smallest member
};

struct Ray {
  Site generator;
  std::vector<Site> members;  // window members in depth order, generator first
};

/// Wold decomposition of an isometric basis map on a window: the unitary
/// part shows up as fixed points and finite cycles, each shift copy as a
/// wandering generator with its forward ray. alpha counts the shift
/// copies visible in the window.
struct WoldReport {
  int window_radius;
  int alpha_on_window;
  std::map<Site, OrbitClass> classification;  // one entry per window site
  std::vector<Site> fixed_points;
  std::vector<Cycle> cycles;
  std::vector<Ray> rays;
  std::vector<Site> indeterminate;

  nlohmann::json to_json() const;
};

/// Classifies every window site by orbit tracing over the table (which
/// covers the extended window). Orbits that leave the table before
/// resolving are reported indeterminate, never guessed.
/// Throws NotIsometry when the table is not an isometry on the window.
WoldReport wold_decompose(const OpTable& table, const Window& w);

/// Fixed points and finite cycles of an evolution operator inside the
/// window: the orbits that never escape, i.e. the bound states.
struct BoundOrbits {
  std::vector<Site> fixed_points;
  std::vector<Cycle> cycles;
};

BoundOrbits bound_states(const SiteMap& u, const Window& w);

}  // namespace latscat

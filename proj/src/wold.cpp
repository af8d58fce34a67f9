#include "latscat/wold.hpp"

#include <algorithm>
#include <set>

#include "latscat/errors.hpp"

namespace latscat {

const char* orbit_kind_str(OrbitKind k) {
  switch (k) {
    case OrbitKind::fixed_point: return "fixed_point";
    case OrbitKind::cycle_member: return "cycle_member";
    case OrbitKind::wandering_generator: return "wandering_generator";
    case OrbitKind::shift_ray_member: return "shift_ray_member";
    case OrbitKind::boundary_indeterminate: return "boundary_indeterminate";
  }
  return "?";
}

namespace {

nlohmann::json site_json(const Site& s) { return nlohmann::json::array({s.x, s.j}); }

nlohmann::json sites_json(const std::vector<Site>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Site& s : v) out.push_back(site_json(s));
  return out;
}

}  // namespace

nlohmann::json WoldReport::to_json() const {
  nlohmann::json out;
  out["alpha"] = alpha_on_window;
  out["fixed_points"] = sites_json(fixed_points);
  nlohmann::json cyc = nlohmann::json::array();
  for (const auto& c : cycles)
    cyc.push_back({{"length", c.length}, {"members", sites_json(c.members)}});
  out["cycles"] = cyc;
  nlohmann::json ray_arr = nlohmann::json::array();
  for (const auto& r : rays)
    ray_arr.push_back({{"generator", site_json(r.generator)}, {"members", sites_json(r.members)}});
  out["rays"] = ray_arr;
  out["indeterminate"] = sites_json(indeterminate);
  return out;
}

WoldReport wold_decompose(const OpTable& table, const Window& w) {
  // Isometry precondition: no annihilation on the window, injectivity on
  // the whole table (equivalently adjoint o self = identity there).
  std::map<Site, Site> preimage;
  for (const auto& [from, img] : table.entries()) {
    if (!img) {
      if (w.contains(from))
        throw NotIsometry(table.name() + " annihilates " + from.str());
      continue;
    }
    auto [it, inserted] = preimage.emplace(*img, from);
    if (!inserted)
      throw NotIsometry(table.name() + ": " + it->second.str() + " and " + from.str() +
                        " share the image " + img->str());
  }

  // A missing preimage in the table only certifies a wandering generator
  // when every conceivable source site lies inside the table.
  const int safe = table.radius() - 2;
  const auto generator_certain = [&](const Site& s) {
    return std::abs(s.x) <= safe && s.j <= safe;
  };

  WoldReport rep;
  rep.window_radius = w.radius;
  rep.alpha_on_window = 0;

  std::map<Site, int> cycle_ids;  // smallest member -> id, assigned later
  std::vector<std::vector<Site>> cycle_members;

  for (const Site& start : w.sites()) {
    OrbitClass oc;
    // Backward trace: either we reach a site with no preimage (the
    // generator of a shift ray), come back to the start (a cycle), or
    // fall off the table (indeterminate).
    Site cur = start;
    int depth = 0;
    const int max_steps = static_cast<int>(table.entries().size()) + 1;
    while (true) {
      auto it = preimage.find(cur);
      if (it == preimage.end()) {
        if (!table.covers(cur) || !generator_certain(cur)) {
          oc.kind = OrbitKind::boundary_indeterminate;
        } else if (depth == 0) {
          oc.kind = OrbitKind::wandering_generator;
          oc.generator = cur;
        } else {
          oc.kind = OrbitKind::shift_ray_member;
          oc.generator = cur;
          oc.depth = depth;
        }
        break;
      }
      cur = it->second;
      ++depth;
      if (cur == start) {
        oc.kind = depth == 1 ? OrbitKind::fixed_point : OrbitKind::cycle_member;
        oc.length = depth;
        if (depth == 1) break;  // fixed points are reported separately
        // Forward-trace the cycle to record its members in orbit order.
        std::vector<Site> members{start};
        Site c = start;
        for (int k = 1; k < depth; ++k) {
          const auto img = table.lookup(c);
          c = **img;
          members.push_back(c);
        }
        const Site smallest = *std::min_element(members.begin(), members.end());
        if (!cycle_ids.count(smallest)) {
          // Canonical member order starts at the smallest site.
          std::vector<Site> canon;
          auto pos = std::find(members.begin(), members.end(), smallest);
          canon.insert(canon.end(), pos, members.end());
          canon.insert(canon.end(), members.begin(), pos);
          cycle_ids.emplace(smallest, static_cast<int>(cycle_members.size()));
          cycle_members.push_back(std::move(canon));
        }
        oc.cycle_id = cycle_ids.at(smallest);
        break;
      }
      if (!table.covers(cur) || depth > max_steps) {
        oc.kind = OrbitKind::boundary_indeterminate;
        break;
      }
    }
    rep.classification.emplace(start, oc);

    switch (oc.kind) {
      case OrbitKind::fixed_point: rep.fixed_points.push_back(start); break;
      case OrbitKind::wandering_generator: rep.alpha_on_window += 1; break;
      case OrbitKind::boundary_indeterminate: rep.indeterminate.push_back(start); break;
      default: break;
    }
  }

  // Cycles, id'ed deterministically by their smallest member.
  std::vector<std::pair<Site, int>> ordered(cycle_ids.begin(), cycle_ids.end());
  std::sort(ordered.begin(), ordered.end());
  std::map<int, int> renumber;
  for (size_t i = 0; i < ordered.size(); ++i) renumber[ordered[i].second] = static_cast<int>(i);
  for (auto& [site, oc] : rep.classification)
    if (oc.cycle_id >= 0) oc.cycle_id = renumber.at(oc.cycle_id);
  rep.cycles.resize(ordered.size());
  for (const auto& [smallest, old_id] : ordered) {
    const int id = renumber.at(old_id);
    rep.cycles[id] = Cycle{id, static_cast<int>(cycle_members[old_id].size()),
                           cycle_members[old_id]};
  }

  // Rays: forward orbit of each window generator, window members only.
  for (const auto& [site, oc] : rep.classification) {
    if (oc.kind != OrbitKind::wandering_generator) continue;
    Ray ray{site, {site}};
    Site cur = site;
    while (true) {
      const auto img = table.lookup(cur);
      if (!img || !*img || !w.contains(**img)) break;
      cur = **img;
      ray.members.push_back(cur);
    }
    rep.rays.push_back(std::move(ray));
  }
  return rep;
}

BoundOrbits bound_states(const SiteMap& u, const Window& w) {
  const int rext = w.extended_radius();
  BoundOrbits out;
  std::set<Site> cycle_seen;
  for (const Site& start : w.sites()) {
    std::vector<Site> orbit{start};
    std::set<Site> visited{start};
    Site cur = start;
    bool cyclic = false;
    while (true) {
      const SiteImage img = u.image(cur);
      if (!img || std::abs(img->x) > rext || img->j > rext) break;  // escapes
      cur = *img;
      if (cur == start) {
        cyclic = true;
        break;
      }
      if (visited.count(cur)) break;  // joined a cycle not through start
      visited.insert(cur);
      orbit.push_back(cur);
    }
    if (!cyclic || cycle_seen.count(start)) continue;
    for (const Site& s : orbit) cycle_seen.insert(s);
    if (orbit.size() == 1) {
      out.fixed_points.push_back(start);
    } else {
      const Site smallest = *std::min_element(orbit.begin(), orbit.end());
      auto pos = std::find(orbit.begin(), orbit.end(), smallest);
      std::vector<Site> canon(pos, orbit.end());
      canon.insert(canon.end(), orbit.begin(), pos);
      out.cycles.push_back(Cycle{static_cast<int>(out.cycles.size()),
                                 static_cast<int>(canon.size()), std::move(canon)});
    }
  }
  return out;
}

}  // namespace latscat

#include "latscat/wave.hpp"

#include <algorithm>

namespace latscat {

nlohmann::json OpTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [from, img] : entries_) {
    nlohmann::json row;
    row["from"] = {from.x, from.j};
    if (img)
      row["to"] = {img->x, img->j};
    else
      row["to"] = nullptr;
    out.push_back(row);
  }
  return out;
}

OpTable OpTable::materialize(const SiteMap& m, int radius, std::string name) {
  OpTable t(name.empty() ? m.name() : std::move(name), radius);
  for (const Site& s : Window::sites_of_radius(radius)) t.set(s, m.image(s));
  return t;
}

EvolutionPair make_evolution_pair(const Catalog& cat, const std::string& u,
                                  const std::string& u0) {
  return EvolutionPair{cat.at(u), cat.at(u + "^-1"), cat.at(u0), cat.at(u0 + "^-1"),
                       "(" + u + "," + u0 + ")"};
}

namespace {

Site require_site(const SiteImage& img, const char* what) {
  if (!img) throw NoStabilization(std::string(what) + " produced zero; not a basis map");
  return *img;
}

// Default cap scales with the extended window: tables are evaluated out
// to radius R + guard and the minus-direction frontier may have to cross
// the whole diagonal before escaping.
int effective_cap(const WaveOptions& opts, const Window& w) {
  return opts.cap > 0 ? opts.cap : 4 * w.extended_radius();
}

}  // namespace

InteractionSupport interaction_support(const EvolutionPair& pair, Direction dir,
                                       const Window& w) {
  const int rext = w.extended_radius();
  const int rs = 2 * rext + 2;  // scan strictly beyond any kept row's extent

  // When the free evolution preserves rows, frontiers stay in the row of
  // their starting site, so only rows 0..rext matter.
  bool row_preserving = true;
  for (const Site& s : w.extended_sites()) {
    const SiteImage f = pair.u0->image(s);
    if (!f || f->j != s.j) {
      row_preserving = false;
      break;
    }
  }

  InteractionSupport sup;
  sup.dir = dir;
  sup.max_row = row_preserving ? rext : rs;
  for (const Site& s : Window::sites_of_radius(rs)) {
    if (s.j > sup.max_row) continue;
    // Plus: does U^-1 U0 move delta_s? Minus: does U U0^-1?
    SiteImage step = dir == Direction::plus ? pair.u0->image(s) : pair.u0_inv->image(s);
    SiteImage back;
    if (step) back = dir == Direction::plus ? pair.u_inv->image(*step) : pair.u->image(*step);
    if (back != SiteImage(s)) {
      if (std::abs(s.x) >= rs - 1)
        throw RuleDefinitionError("interaction support of " + pair.name +
                                  " reaches the scan boundary; enlarge the window");
      sup.sites.push_back(s);
    }
  }
  if (sup.sites.empty()) return sup;
  auto [mn, mx] = std::minmax_element(
      sup.sites.begin(), sup.sites.end(),
      [](const Site& a, const Site& b) { return a.x < b.x; });
  sup.min_x = mn->x;
  sup.max_x = mx->x;
  return sup;
}

namespace {

/// psi_n = U^-n U0^n delta_s (plus) or U^n U0^-n delta_s (minus),
/// recomputed from the frontier.
Site iterate_value(const EvolutionPair& pair, Direction dir, const Site& frontier, int n) {
  Site cur = frontier;
  const SiteMap& back = dir == Direction::plus ? *pair.u_inv : *pair.u;
  for (int k = 0; k < n; ++k) cur = require_site(back.image(cur), "pullback step");
  return cur;
}

}  // namespace

WaveResult wave_operator(const EvolutionPair& pair, Direction dir, const Site& s,
                         const InteractionSupport& support, const Window& w,
                         const WaveOptions& opts) {
  const int cap = effective_cap(opts, w);
  const SiteMap& forward = dir == Direction::plus ? *pair.u0 : *pair.u0_inv;

  Site frontier = s;
  int n = 0;
  while (!support.escaped(frontier)) {
    if (n >= cap)
      throw NoStabilization("wave operator W" + std::string(direction_str(dir)) + pair.name +
                            " did not stabilize at " + s.str() + " within cap " +
                            std::to_string(cap));
    frontier = require_site(forward.image(frontier), "free evolution");
    ++n;
  }
  // Past the support the iterates are provably constant; the margin rule
  // still verifies it empirically.
  Site value = iterate_value(pair, dir, frontier, n);
  int unchanged = 0;
  while (unchanged < opts.margin) {
    if (n >= cap)
      throw NoStabilization("wave operator W" + std::string(direction_str(dir)) + pair.name +
                            " did not stabilize at " + s.str() + " within cap " +
                            std::to_string(cap));
    frontier = require_site(forward.image(frontier), "free evolution");
    ++n;
    const Site next = iterate_value(pair, dir, frontier, n);
    unchanged = (next == value) ? unchanged + 1 : 0;
    value = next;
  }
  return {value, n};
}

WaveResult wave_operator(const EvolutionPair& pair, Direction dir, const Site& s,
                         const Window& w, const WaveOptions& opts) {
  return wave_operator(pair, dir, s, interaction_support(pair, dir, w), w, opts);
}

OpTable wave_operator_table(const EvolutionPair& pair, Direction dir, const Window& w,
                            const WaveOptions& opts) {
  const InteractionSupport sup = interaction_support(pair, dir, w);
  OpTable t("W" + std::string(direction_str(dir)) + pair.name, w.extended_radius());
  for (const Site& s : w.extended_sites())
    t.set(s, wave_operator(pair, dir, s, sup, w, opts).value);
  return t;
}

WaveOperatorMap::WaveOperatorMap(EvolutionPair pair, Direction dir, const Window& w,
                                 WaveOptions opts)
    : pair_(std::move(pair)),
      dir_(dir),
      window_(w),
      opts_(opts),
      support_(interaction_support(pair_, dir, w)),
      name_("W" + std::string(direction_str(dir)) + pair_.name) {}

SiteImage WaveOperatorMap::image(const Site& s) const {
  auto it = memo_.find(s);
  if (it != memo_.end()) return it->second;
  if (s.j > support_.max_row)
    throw RuleDefinitionError(name_ + ": site " + s.str() +
                              " is above the rows covered by the support scan");
  const Site v = wave_operator(pair_, dir_, s, support_, window_, opts_).value;
  memo_.emplace(s, v);
  return v;
}

OpTable scattering_operator(const EvolutionPair& pair, const Window& w,
                            const WaveOptions& opts) {
  const OpTable wp = wave_operator_table(pair, Direction::plus, w, opts);
  const OpTable wm = wave_operator_table(pair, Direction::minus, w, opts);
  std::map<Site, Site> preimage;
  for (const auto& [from, img] : wp.entries())
    if (img) preimage.emplace(*img, from);

  // The product is materialized over the extended window too, so cokernel
  // searches over the plain window never leave the table.
  const int rext = w.extended_radius();
  OpTable s_table("S" + pair.name, rext);
  for (const Site& s : Window::sites_of_radius(rext)) {
    const auto mid = wm.lookup(s);
    if (!mid || !*mid) {
      s_table.set(s, std::nullopt);
      continue;
    }
    auto it = preimage.find(**mid);
    if (it != preimage.end()) {
      s_table.set(s, it->second);
    } else if (std::abs((*mid)->x) <= rext - 2 && (*mid)->j <= rext - 2) {
      // Every candidate preimage lies inside the scanned table, so the
      // adjoint genuinely annihilates this value.
      s_table.set(s, std::nullopt);
    }
    // Otherwise the site stays uncovered: the preimage search would leave
    // the table, and truncation must not manufacture annihilation.
  }
  return s_table;
}

RangeCokernel range_and_cokernel(const OpTable& table, const Window& w) {
  std::set<Site> images;
  for (const auto& [from, img] : table.entries())
    if (img) images.insert(*img);

  RangeCokernel out;
  // Preimages under the cataloged maps move at most 2 columns, and any
  // long vertical jump originates lower in the same columns; a site is
  // only decidable when those candidate columns lie inside the table.
  const int safe = table.radius() - 2;
  for (const Site& s : w.sites()) {
    if (images.count(s)) {
      out.range.push_back(s);
    } else if (std::abs(s.x) <= safe && s.j <= safe) {
      out.cokernel.push_back(s);
    } else {
      out.indeterminate.push_back(s);
    }
  }
  return out;
}

}  // namespace latscat

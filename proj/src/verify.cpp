#include "latscat/verify.hpp"

#include <set>

namespace latscat {

const char* check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  out["radius"] = radius;
  out["status"] = check_status_str(status);
  nlohmann::json cex = nlohmann::json::array();
  for (const auto& c : counterexamples)
    cex.push_back({{"site", {c.site.x, c.site.j}}, {"expected", c.expected}, {"actual", c.actual}});
  out["counterexamples"] = cex;
  if (!note.empty()) out["note"] = note;
  return out;
}

namespace {

std::string image_str(const SiteImage& img) { return img ? img->str() : "0"; }

void record(CheckResult& r, const Site& s, const SiteImage& expected, const SiteImage& actual,
            int max_cex) {
  r.status = CheckStatus::fail;
  if (static_cast<int>(r.counterexamples.size()) < max_cex)
    r.counterexamples.push_back({s, image_str(expected), image_str(actual)});
}

SiteImage power(const SiteMap& fwd, const SiteMap& bwd, int m, const Site& s) {
  SiteImage cur = s;
  const SiteMap& op = m >= 0 ? fwd : bwd;
  for (int k = 0; k < std::abs(m) && cur; ++k) cur = op.image(*cur);
  return cur;
}

}  // namespace

CheckResult check_intertwining(const SiteMap& wave, const EvolutionPair& pair, int m_lo,
                               int m_hi, const Window& w, int max_cex) {
  CheckResult r{"intertwining " + wave.name() + " with " + pair.name, w.radius};
  for (int m = m_lo; m <= m_hi; ++m) {
    for (const Site& s : w.sites()) {
      SiteImage lhs = power(*pair.u0, *pair.u0_inv, m, s);
      if (lhs) lhs = wave.image(*lhs);
      SiteImage rhs = wave.image(s);
      if (rhs) rhs = power(*pair.u, *pair.u_inv, m, *rhs);
      if (lhs != rhs) record(r, s, lhs, rhs, max_cex);
    }
  }
  return r;
}

CheckResult check_subspace_invariance(const SiteMap& u, const std::function<bool(Site)>& member,
                                      const std::string& subspace_name, const Window& w,
                                      int max_cex) {
  CheckResult r{"invariance of " + subspace_name + " under " + u.name(), w.radius};
  for (const Site& s : w.sites()) {
    const SiteImage img = u.image(s);
    if (!img) {
      record(r, s, s, img, max_cex);
      continue;
    }
    if (member(s) != member(*img)) {
      r.status = CheckStatus::fail;
      if (static_cast<int>(r.counterexamples.size()) < max_cex)
        r.counterexamples.push_back(
            {s, member(s) ? "image inside " + subspace_name : "image outside " + subspace_name,
             img->str()});
    }
  }
  return r;
}

CheckResult check_commutation(const OpTable& s_table, const SiteMap& u0, const Window& w,
                              int max_cex) {
  CheckResult r{"commutation [" + s_table.name() + ", " + u0.name() + "]", w.radius};
  for (const Site& s : w.sites()) {
    const SiteImage shifted = u0.image(s);
    if (!shifted) continue;
    const auto lhs_in = s_table.lookup(*shifted);
    const auto rhs_in = s_table.lookup(s);
    if (!lhs_in || !rhs_in) continue;  // outside the table
    const SiteImage rhs = *rhs_in ? u0.image(**rhs_in) : SiteImage{};
    if (*lhs_in != rhs) record(r, s, *lhs_in, rhs, max_cex);
  }
  // Structural consequence: displacement must not depend on x.
  std::map<int, std::pair<int, int>> row_disp;
  for (const auto& [from, img] : s_table.entries()) {
    if (!img) continue;
    const std::pair<int, int> d{img->x - from.x, img->j - from.j};
    auto [it, inserted] = row_disp.emplace(from.j, d);
    if (!inserted && it->second != d) {
      r.status = CheckStatus::fail;
      if (static_cast<int>(r.counterexamples.size()) < max_cex)
        r.counterexamples.push_back({from,
                                     "row displacement (" + std::to_string(it->second.first) +
                                         "," + std::to_string(it->second.second) + ")",
                                     "(" + std::to_string(d.first) + "," +
                                         std::to_string(d.second) + ")"});
    }
  }
  return r;
}

CheckResult check_chain_rule(const Catalog& cat, const Window& w, const WaveOptions& opts,
                             int max_cex) {
  CheckResult r{"chain rule W(U2,U1) W(U1,U0) = W(U2,U0)", w.radius};
  const ModelParams& p = cat.params();
  const int needed = std::max(std::abs(p.z) + 2, p.l + 2);
  if (w.radius < needed) {
    r.status = CheckStatus::indeterminate;
    r.note = "window radius " + std::to_string(w.radius) +
             " cannot contain the interaction region (needs >= " + std::to_string(needed) + ")";
    return r;
  }
  for (const Direction dir : {Direction::plus, Direction::minus}) {
    const WaveOperatorMap w10(make_evolution_pair(cat, "U1", "U0"), dir, w, opts);
    const WaveOperatorMap w21(make_evolution_pair(cat, "U2", "U1"), dir, w, opts);
    const WaveOperatorMap w20(make_evolution_pair(cat, "U2", "U0"), dir, w, opts);
    for (const Site& s : w.sites()) {
      SiteImage lhs = w10.image(s);
      if (lhs) lhs = w21.image(*lhs);
      const SiteImage rhs = w20.image(s);
      if (lhs != rhs) record(r, s, rhs, lhs, max_cex);
    }
  }
  return r;
}

CheckResult check_scattering_difference(const OpTable& sa, const OpTable& sb,
                                        std::optional<int> expected_row, const Window& w,
                                        int max_cex) {
  CheckResult r{"scattering difference " + sa.name() + " vs " + sb.name(), w.radius};
  int disagreements = 0;
  for (const Site& s : w.sites()) {
    const auto a = sa.lookup(s);
    const auto b = sb.lookup(s);
    if (!a || !b) continue;
    const bool differ = *a != *b;
    const bool should_differ = expected_row && s.j == *expected_row;
    if (differ) ++disagreements;
    if (differ != should_differ) {
      r.status = CheckStatus::fail;
      if (static_cast<int>(r.counterexamples.size()) < max_cex)
        r.counterexamples.push_back({s, should_differ ? "tables differ" : "tables agree",
                                     image_str(*a) + " vs " + image_str(*b)});
    }
  }
  if (expected_row) {
    const int expected_count = 2 * w.radius + 1;
    r.note = "disagreement sites: " + std::to_string(disagreements) + " (row j=" +
             std::to_string(*expected_row) + ", expected " + std::to_string(expected_count) +
             "; non-compactness proxy: count grows linearly with R)";
    if (disagreements != expected_count) r.status = CheckStatus::fail;
  } else {
    r.note = "disagreement sites: " + std::to_string(disagreements) + " (expected none)";
  }
  return r;
}

CheckResult check_oracle_equivalence(const EvolutionPair& pair, Direction dir,
                                     const SiteMap& oracle, const Window& w,
                                     const WaveOptions& opts, int max_cex) {
  CheckResult r{"oracle equivalence W" + std::string(direction_str(dir)) + pair.name, w.radius};
  const InteractionSupport sup = interaction_support(pair, dir, w);
  for (const Site& s : w.sites()) {
    const SiteImage iterative = wave_operator(pair, dir, s, sup, w, opts).value;
    const SiteImage expected = oracle.image(s);
    if (iterative != expected) record(r, s, expected, iterative, max_cex);
  }
  return r;
}

CheckResult check_isometry(const OpTable& table, const Window& w, int max_cex) {
  CheckResult r{"isometry of " + table.name(), w.radius};
  std::map<Site, Site> preimage;
  for (const auto& [from, img] : table.entries()) {
    if (!img) {
      if (w.contains(from)) record(r, from, from, img, max_cex);
      continue;
    }
    auto [it, inserted] = preimage.emplace(*img, from);
    if (!inserted) {
      r.status = CheckStatus::fail;
      if (static_cast<int>(r.counterexamples.size()) < max_cex)
        r.counterexamples.push_back({from, "distinct image (injectivity)",
                                     "collides with " + it->second.str() + " at " + img->str()});
    }
  }
  return r;
}

CheckResult check_cokernel(const OpTable& table, const std::function<bool(Site)>& expected,
                           const std::string& what, const Window& w, int max_cex) {
  CheckResult r{"cokernel of " + table.name() + " = " + what, w.radius};
  const RangeCokernel rc = range_and_cokernel(table, w);
  std::set<Site> coker(rc.cokernel.begin(), rc.cokernel.end());
  std::set<Site> indet(rc.indeterminate.begin(), rc.indeterminate.end());
  for (const Site& s : w.sites()) {
    if (indet.count(s)) continue;
    const bool actual = coker.count(s) != 0;
    if (actual != expected(s)) {
      r.status = CheckStatus::fail;
      if (static_cast<int>(r.counterexamples.size()) < max_cex)
        r.counterexamples.push_back(
            {s, expected(s) ? "in cokernel" : "in range", actual ? "in cokernel" : "in range"});
    }
  }
  if (!rc.indeterminate.empty() && r.status == CheckStatus::pass) {
    r.note = std::to_string(rc.indeterminate.size()) + " boundary-indeterminate sites skipped";
  }
  return r;
}

std::vector<CheckResult> run_all_checks(const Catalog& cat, const Window& w,
                                        const WaveOptions& opts) {
  const ModelParams& p = cat.params();
  std::vector<CheckResult> out;

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"U1", "U0"}, {"U2", "U0"}, {"U3", "U0"}, {"U2", "U1"}};

  std::map<std::string, OpTable> wave_tables;
  for (const auto& [u, u0] : pairs) {
    const EvolutionPair pair = make_evolution_pair(cat, u, u0);
    for (const Direction dir : {Direction::plus, Direction::minus}) {
      const std::string wname = "W" + std::string(direction_str(dir)) + pair.name;
      out.push_back(check_oracle_equivalence(pair, dir, *cat.at(wname), w, opts));
      OpTable t = wave_operator_table(pair, dir, w, opts);
      out.push_back(check_isometry(t, w));
      wave_tables.emplace(wname, std::move(t));
    }
    out.push_back(
        check_intertwining(WaveOperatorMap(pair, Direction::plus, w, opts), pair, -5, 5, w));
    out.push_back(
        check_intertwining(WaveOperatorMap(pair, Direction::minus, w, opts), pair, -5, 5, w));
  }

  std::map<std::string, OpTable> s_tables;
  for (const std::string u : {"U1", "U2", "U3"}) {
    const EvolutionPair pair = make_evolution_pair(cat, u, "U0");
    OpTable s_table = scattering_operator(pair, w, opts);
    out.push_back(check_commutation(s_table, *cat.at("U0"), w));
    out.push_back(check_isometry(s_table, w));
    // The scattering table must equal its closed form.
    CheckResult oracle{"scattering closed form S(" + u + ",U0)", w.radius};
    const auto s_oracle = cat.at("S(" + u + ",U0)");
    for (const Site& s : w.sites()) {
      const auto got = s_table.lookup(s);
      const SiteImage expected = s_oracle->image(s);
      if (!got || *got != expected) record(oracle, s, expected, got ? *got : SiteImage{}, 10);
    }
    out.push_back(std::move(oracle));
    // Cokernel of every scattering operator is the bottom row.
    out.push_back(check_cokernel(
        OpTable::materialize(*s_oracle, w.extended_radius(), "S(" + u + ",U0)"),
        [](const Site& s) { return s.j == 0; }, "row j=0", w));
    s_tables.emplace(u, std::move(s_table));
  }

  // Cokernels of the wave operators (paper identities).
  const int z = p.z, l = p.l;
  out.push_back(check_cokernel(wave_tables.at("W+(U1,U0)"),
                               [](const Site&) { return false; }, "empty", w));
  out.push_back(check_cokernel(wave_tables.at("W-(U1,U0)"),
                               [](const Site& s) { return in_omega(s); }, "Omega", w));
  out.push_back(check_cokernel(wave_tables.at("W+(U2,U0)"),
                               [=](const Site& s) { return s == Site(z, l); }, "{(z,l)}", w));
  out.push_back(check_cokernel(
      wave_tables.at("W-(U2,U0)"),
      [=](const Site& s) { return in_omega(s) || s == Site(z, l); }, "Omega + {(z,l)}", w));
  out.push_back(check_cokernel(wave_tables.at("W+(U3,U0)"),
                               [=](const Site& s) { return s == Site(-l, l); }, "{(-l,l)}", w));
  out.push_back(check_cokernel(wave_tables.at("W-(U3,U0)"),
                               [](const Site& s) { return in_omega(s); }, "Omega", w));

  // Subspace invariances.
  out.push_back(check_subspace_invariance(*cat.at("U1"), in_omega, "Omega", w));
  out.push_back(check_subspace_invariance(*cat.at("U2"), in_omega, "Omega", w));
  out.push_back(check_subspace_invariance(*cat.at("U3"), in_omega, "Omega", w));
  out.push_back(check_subspace_invariance(
      *cat.at("U3"), [=](const Site& s) { return in_omega_prime(s, l); }, "Omega'", w));
  out.push_back(check_subspace_invariance(
      *cat.at("U2"), [=](const Site& s) { return s == Site(z, l); }, "{(z,l)}", w));
  out.push_back(check_subspace_invariance(
      *cat.at("U3"), [=](const Site& s) { return s == Site(-l, l); }, "{(-l,l)}", w));

  // Cokernel invariance under the perturbed evolution itself.
  out.push_back(check_subspace_invariance(*cat.at("U1"), in_omega, "Coker W-(U1,U0)", w));
  out.push_back(check_subspace_invariance(
      *cat.at("U2"), [=](const Site& s) { return in_omega(s) || s == Site(z, l); },
      "Coker W-(U2,U0)", w));

  out.push_back(check_chain_rule(cat, w, opts));

  // Scattering differences: (U2,U0) vs (U1,U0) differ exactly on row l-1;
  // (U3,U0) equals (U1,U0) everywhere.
  out.push_back(
      check_scattering_difference(s_tables.at("U2"), s_tables.at("U1"), l - 1, w));
  out.push_back(check_scattering_difference(s_tables.at("U3"), s_tables.at("U1"),
                                            std::nullopt, w));
  return out;
}

}  // namespace latscat

// Acceptance gate: one exact, self-contained criterion per line of output.
// Exit status is zero only if every criterion holds.
#include <functional>
#include <iostream>
#include <set>

#include "latscat/figures.hpp"
#include "latscat/verify.hpp"
#include "latscat/wave.hpp"
#include "latscat/wold.hpp"

using namespace latscat;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << what << note << "\n";
  if (!ok) ++g_failures;
}

bool tables_equal_oracle(const Catalog& cat, const std::string& u, const std::string& u0,
                         Direction dir, const std::string& oracle, const Window& w) {
  const OpTable t = wave_operator_table(make_evolution_pair(cat, u, u0), dir, w);
  const auto o = cat.at(oracle);
  for (const Site& s : w.sites())
    if (*t.lookup(s) != o->image(s)) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "iterative wave operators equal the closed forms, R=40, all pairs", [] {
    const Window w(40);
    const Catalog c23(ModelParams{2, 3});
    const Catalog c22(ModelParams{2, 2});
    return tables_equal_oracle(c23, "U1", "U0", Direction::plus, "W+(U1,U0)", w) &&
           tables_equal_oracle(c23, "U1", "U0", Direction::minus, "W-(U1,U0)", w) &&
           tables_equal_oracle(c23, "U2", "U0", Direction::plus, "W+(U2,U0)", w) &&
           tables_equal_oracle(c23, "U2", "U0", Direction::minus, "W-(U2,U0)", w) &&
           tables_equal_oracle(c22, "U3", "U0", Direction::plus, "W+(U3,U0)", w) &&
           tables_equal_oracle(c22, "U3", "U0", Direction::minus, "W-(U3,U0)", w) &&
           tables_equal_oracle(c23, "U2", "U1", Direction::plus, "W+(U2,U1)", w) &&
           tables_equal_oracle(c23, "U2", "U1", Direction::minus, "W-(U2,U1)", w);
  });

  criterion(2, "scattering identities, R=30", [] {
    const Window w(30);
    const Catalog cat(ModelParams{2, 3});
    const OpTable s10 = scattering_operator(make_evolution_pair(cat, "U1", "U0"), w);
    const OpTable s20 = scattering_operator(make_evolution_pair(cat, "U2", "U0"), w);
    const OpTable s30 = scattering_operator(make_evolution_pair(cat, "U3", "U0"), w);
    for (const Site& s : w.sites()) {
      if (*s10.lookup(s) != SiteImage(Site(s.x, s.j + 1))) return false;
      const Site expect20 = s.j == 2 ? Site(s.x + 1, s.j + 1) : Site(s.x, s.j + 1);
      if (*s20.lookup(s) != SiteImage(expect20)) return false;
    }
    return s30.entries() == s10.entries();
  });

  criterion(3, "cokernels of the six wave operators and of S(U1,U0), R=20", [] {
    const Window w(20);
    const Catalog cat(ModelParams{2, 3});
    const auto cokernel = [&](const std::string& u, const std::string& u0, Direction dir) {
      const OpTable t = wave_operator_table(make_evolution_pair(cat, u, u0), dir, w);
      const RangeCokernel rc = range_and_cokernel(t, w);
      if (!rc.indeterminate.empty()) throw std::runtime_error("indeterminate cokernel site");
      return std::set<Site>(rc.cokernel.begin(), rc.cokernel.end());
    };
    std::set<Site> omega, row0;
    for (const Site& s : w.sites()) {
      if (in_omega(s)) omega.insert(s);
      if (s.j == 0) row0.insert(s);
    }
    if (omega.size() != 2 * 20 + 1) return false;
    std::set<Site> omega_z = omega;
    omega_z.insert(Site(2, 3));

    const OpTable s10 = scattering_operator(make_evolution_pair(cat, "U1", "U0"), w);
    const RangeCokernel rc_s = range_and_cokernel(s10, w);

    return cokernel("U1", "U0", Direction::plus).empty() &&
           cokernel("U1", "U0", Direction::minus) == omega &&
           cokernel("U2", "U0", Direction::plus) == std::set<Site>{Site(2, 3)} &&
           cokernel("U2", "U0", Direction::minus) == omega_z &&
           cokernel("U3", "U0", Direction::plus) == std::set<Site>{Site(-3, 3)} &&
           cokernel("U3", "U0", Direction::minus) == omega &&
           std::set<Site>(rc_s.cokernel.begin(), rc_s.cokernel.end()) == row0;
  });

  criterion(4, "intertwining W U0^m = U^m W for |m| <= 10, six wave operators, R=25", [] {
    const Window w(25);
    const Catalog cat(ModelParams{2, 3});
    for (const auto& [u, u0] : std::vector<std::pair<std::string, std::string>>{
             {"U1", "U0"}, {"U2", "U0"}, {"U3", "U0"}}) {
      const auto pair = make_evolution_pair(cat, u, u0);
      for (const Direction dir : {Direction::plus, Direction::minus}) {
        const WaveOperatorMap wave(pair, dir, w);
        if (check_intertwining(wave, pair, -10, 10, w).status != CheckStatus::pass) return false;
      }
    }
    return true;
  });

  criterion(5, "chain rule W(U2,U1) W(U1,U0) = W(U2,U0) at (2,3) and (5,2), R=20", [] {
    for (const ModelParams params : {ModelParams{2, 3}, ModelParams{5, 2}}) {
      const Catalog cat(params);
      if (check_chain_rule(cat, Window(20)).status != CheckStatus::pass) return false;
    }
    return true;
  });

  criterion(6, "invariance suite: U1 Omega, U2 Omega, U3 Omega', pinned points, R=15", [] {
    const Window w(15);
    const Catalog cat(ModelParams{2, 3});
    const int l = 3;
    return check_subspace_invariance(*cat.at("U1"), in_omega, "Omega", w).passed() &&
           check_subspace_invariance(*cat.at("U2"), in_omega, "Omega", w).passed() &&
           check_subspace_invariance(
               *cat.at("U3"), [l](Site s) { return in_omega_prime(s, l); }, "Omega'", w)
               .passed() &&
           cat.at("U2")->image(Site(2, 3)) == SiteImage(Site(2, 3)) &&
           cat.at("U3")->image(Site(-3, 3)) == SiteImage(Site(-3, 3));
  });

  criterion(7, "Wold reports: cycle structure and shift multiplicity, R=12", [] {
    const Catalog cat(ModelParams{2, 3});
    const auto report = [&](const std::string& name, const Window& w) {
      return wold_decompose(OpTable::materialize(*cat.at(name), w.extended_radius(), name), w);
    };
    {
      const Window w(12);
      const WoldReport rep = report("W+(U1,U0)", w);
      if (rep.alpha_on_window != 0 || rep.cycles.size() != 12) return false;
      // One cycle per column -k, of length k + 1.
      std::set<std::pair<int, int>> seen;
      for (const Cycle& c : rep.cycles) seen.insert({c.members.front().x, c.length});
      for (int k = 1; k <= 12; ++k)
        if (!seen.count({-k, k + 1})) return false;
    }
    {
      int prev = -1;
      for (const int r : {3, 6, 12}) {
        const WoldReport rep = report("W-(U1,U0)", Window(r));
        if (rep.alpha_on_window != 2 * r + 1 || rep.alpha_on_window <= prev) return false;
        prev = rep.alpha_on_window;
      }
    }
    {
      const WoldReport rep = report("W+(U2,U0)", Window(12));
      if (rep.alpha_on_window != 1 || rep.rays.size() != 1 ||
          rep.rays.front().generator != Site(2, 3) || rep.cycles.size() != 2)
        return false;
    }
    {
      const WoldReport rep = report("W+(U3,U0)", Window(12));
      if (rep.alpha_on_window != 1 || rep.rays.size() != 1 ||
          rep.rays.front().generator != Site(-3, 3) || rep.cycles.size() != 2)
        return false;
    }
    return true;
  });

  criterion(8, "symbolic adjoints equal brute-force window inverses, R=20", [] {
    const Window w(20);
    const Catalog cat(ModelParams{2, 3});
    for (const std::string name :
         {"U0", "U0^-1", "U1", "U1^-1", "U2", "U3", "W+(U1,U0)", "W-(U1,U0)", "W+(U2,U0)",
          "W-(U2,U0)", "W+(U3,U0)", "W-(U3,U0)", "W+(U2,U1)", "W-(U2,U1)", "S(U1,U0)",
          "S(U2,U0)", "S(U3,U0)"}) {
      // adjoint_of cross-checks the symbolic inversion against the
      // brute-force preimage scan and throws on any disagreement.
      adjoint_of(cat.rule(name), w);
    }
    // The annihilation rows of the displayed adjoint tables.
    const auto adj2 = adjoint_of(cat.rule("W+(U2,U0)"), w);
    const auto adj3 = adjoint_of(cat.rule("W+(U3,U0)"), w);
    for (const Site& s : Window(16).sites()) {
      if (adj2->image(s) != cat.at("W+(U2,U0)*")->image(s)) return false;
      if (adj3->image(s) != cat.at("W+(U3,U0)*")->image(s)) return false;
    }
    return adj2->image(Site(2, 3)) == std::nullopt && adj3->image(Site(-3, 3)) == std::nullopt;
  });

  criterion(9, "figure round-trip and byte determinism for the model figures, R=6", [] {
    const Catalog cat(ModelParams{2, 3});
    const DiagramSpec spec{6};
    for (const char* name :
         {"U0", "U1", "U2", "U3", "W+(U1,U0)", "W-(U1,U0)", "S(U1,U0)", "W+(U2,U0)",
          "W-(U2,U0)", "S(U2,U0)", "W+(U3,U0)", "W-(U3,U0)", "W+(U2,U1)", "W-(U2,U1)"}) {
      const OpTable t = OpTable::materialize(*cat.at(name), 6, name);
      const std::string svg = render_svg(t, spec);
      if (svg != render_svg(t, spec)) return false;
      if (parse_svg(svg, spec).entries() != t.entries()) return false;
    }
    return true;
  });

  criterion(10, "negative controls: mismatched intertwining and corrupted catalog fail", [] {
    const Window w(10);
    const Catalog cat(ModelParams{2, 3});
    const auto pair10 = make_evolution_pair(cat, "U1", "U0");
    const auto pair20 = make_evolution_pair(cat, "U2", "U0");
    const WaveOperatorMap wave(pair10, Direction::plus, w);
    const CheckResult mismatch = check_intertwining(wave, pair20, 1, 1, w);
    if (mismatch.status != CheckStatus::fail || mismatch.counterexamples.empty()) return false;

    Catalog corrupted(ModelParams{2, 3});
    corrupted.corrupt("W+(U1,U0)");
    int failed = 0;
    for (const CheckResult& r : run_all_checks(corrupted, Window(8)))
      failed += (r.status == CheckStatus::fail);
    return failed > 0;
  });

  if (g_failures == 0) {
    std::cout << "all criteria satisfied\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}

#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "latscat/wave.hpp"

namespace latscat {

enum class CheckStatus { pass, fail, indeterminate };

const char* check_status_str(CheckStatus s);

struct Counterexample {
  Site site;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  int radius;
  CheckStatus status{CheckStatus::pass};
  std::vector<Counterexample> counterexamples;
  std::string note;

  bool passed() const { return status == CheckStatus::pass; }
  nlohmann::json to_json() const;
};

inline constexpr int kDefaultMaxCounterexamples = 10;

/// W U0^m = U^m W on every window site, for each m in [m_lo, m_hi].
CheckResult check_intertwining(const SiteMap& wave, const EvolutionPair& pair, int m_lo,
                               int m_hi, const Window& w,
                               int max_cex = kDefaultMaxCounterexamples);

/// U maps subspace sites into the subspace and non-subspace sites outside
/// it (set invariance both ways). The predicate must be decidable on the
/// whole lattice.
CheckResult check_subspace_invariance(const SiteMap& u, const std::function<bool(Site)>& member,
                                      const std::string& subspace_name, const Window& w,
                                      int max_cex = kDefaultMaxCounterexamples);

/// S U0 = U0 S on window sites, plus the structural consequence: the
/// action on a site is independent of x (uniform displacement per row).
CheckResult check_commutation(const OpTable& s_table, const SiteMap& u0, const Window& w,
                              int max_cex = kDefaultMaxCounterexamples);

/// W(U2,U1) W(U1,U0) = W(U2,U0) for both directions, all three wave
/// operators computed independently by the iterative engine.
/// Indeterminate when the window cannot contain the interaction region.
CheckResult check_chain_rule(const Catalog& cat, const Window& w, const WaveOptions& opts = {},
                             int max_cex = kDefaultMaxCounterexamples);

/// Desk-scale proxy for a non-compact difference of scattering operators:
/// the two tables must disagree exactly on the expected row (2R+1 sites,
/// growing linearly with the window), or nowhere when no row is expected.
CheckResult check_scattering_difference(const OpTable& sa, const OpTable& sb,
                                        std::optional<int> expected_row, const Window& w,
                                        int max_cex = kDefaultMaxCounterexamples);

/// Iterative wave-operator table equals the closed-form oracle on every
/// window site.
CheckResult check_oracle_equivalence(const EvolutionPair& pair, Direction dir,
                                     const SiteMap& oracle, const Window& w,
                                     const WaveOptions& opts = {},
                                     int max_cex = kDefaultMaxCounterexamples);

/// adjoint o self = identity on window sites of a materialized table
/// (isometry), checked through the brute-force window inverse.
CheckResult check_isometry(const OpTable& table, const Window& w,
                           int max_cex = kDefaultMaxCounterexamples);

/// Expected cokernel of a table, compared site-for-site on the window.
CheckResult check_cokernel(const OpTable& table, const std::function<bool(Site)>& expected,
                           const std::string& what, const Window& w,
                           int max_cex = kDefaultMaxCounterexamples);

/// The full verification manifest run by the CLI: oracle equivalence for
/// all pairs and directions, isometries, scattering identities,
/// commutation, cokernels, invariances, chain rule and the non-compact
/// difference proxy.
std::vector<CheckResult> run_all_checks(const Catalog& cat, const Window& w,
                                        const WaveOptions& opts = {});

}  // namespace latscat

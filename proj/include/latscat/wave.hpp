#pragma once

#include <memory>
#include <set>
#include <vector>

#include "latscat/catalog.hpp"
#include "latscat/table.hpp"

namespace latscat {

enum class Direction { plus, minus };

inline const char* direction_str(Direction d) { return d == Direction::plus ? "+" : "-"; }

/// A (perturbed, free) pair of evolutions with their inverses.
struct EvolutionPair {
  std::shared_ptr<const SiteMap> u, u_inv, u0, u0_inv;
  std::string name;  // e.g. "(U2,U0)"
};

/// Builds the pair from catalog names, e.g. make_pair(cat, "U2", "U0").
EvolutionPair make_evolution_pair(const Catalog& cat, const std::string& u,
                                  const std::string& u0);

struct WaveOptions {
  int margin = 2;  // consecutive unchanged steps required after escape
  int cap = 0;     // 0 means 4 * radius
};

/// The set of sites where one step of the perturbed evolution fails to
/// cancel one step of the free one. Once the frontier of an orbit has
/// passed it in the traversal direction the iterates of the strong limit
/// are constant, which is why the limits stabilize in finitely many steps.
struct InteractionSupport {
  Direction dir = Direction::plus;
  std::vector<Site> sites;  // restricted to rows a frontier can occupy
  int min_x = 0;
  int max_x = 0;
  int max_row = 0;  // rows covered by the scan
  bool escaped(const Site& frontier) const {
    if (sites.empty()) return true;
    return dir == Direction::plus ? frontier.x > max_x : frontier.x < min_x;
  }
};

/// Scan for the support over a region larger than the extended window;
/// throws RuleDefinitionError when the scan cannot certify the support's
/// extent in the traversal direction.
InteractionSupport interaction_support(const EvolutionPair& pair, Direction dir,
                                       const Window& w);

struct WaveResult {
  Site value;
  int steps;  // iteration count at which the stopping rule fired
};

/// Stabilized value of U^-n U0^n delta_s (n -> +inf for plus, -inf for
/// minus). Throws NoStabilization when the cap is exceeded.
WaveResult wave_operator(const EvolutionPair& pair, Direction dir, const Site& s,
                         const InteractionSupport& support, const Window& w,
                         const WaveOptions& opts = {});

/// Convenience overload computing the support itself.
WaveResult wave_operator(const EvolutionPair& pair, Direction dir, const Site& s,
                         const Window& w, const WaveOptions& opts = {});

/// Full iterative table over the extended window.
OpTable wave_operator_table(const EvolutionPair& pair, Direction dir, const Window& w,
                            const WaveOptions& opts = {});

/// Lazy per-site wave operator with memoization; usable wherever a SiteMap
/// is expected (identity checks, compositions).
class WaveOperatorMap final : public SiteMap {
 public:
  WaveOperatorMap(EvolutionPair pair, Direction dir, const Window& w, WaveOptions opts = {});
  SiteImage image(const Site& s) const override;
  const std::string& name() const override { return name_; }

 private:
  EvolutionPair pair_;
  Direction dir_;
  Window window_;
  WaveOptions opts_;
  InteractionSupport support_;
  std::string name_;
  mutable std::map<Site, Site> memo_;
};

/// S = adjoint(W+) o W-, computed from the two iterative tables: W- on the
/// window, preimages under W+ found by scanning its extended table.
OpTable scattering_operator(const EvolutionPair& pair, const Window& w,
                            const WaveOptions& opts = {});

struct RangeCokernel {
  std::vector<Site> range;          // window sites hit by the table
  std::vector<Site> cokernel;       // window sites with no preimage
  std::vector<Site> indeterminate;  // preimage search would leave the table
};

/// Range and cokernel of a materialized table, restricted to the window.
/// A site is only declared cokernel when every conceivable preimage lies
/// inside the table; otherwise it is flagged indeterminate rather than
/// guessed.
RangeCokernel range_and_cokernel(const OpTable& table, const Window& w);

}  // namespace latscat

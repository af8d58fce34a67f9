#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latscat/errors.hpp"
#include "latscat/region.hpp"
#include "latscat/site.hpp"
#include <json.hpp>

namespace latscat {

/// Image of a basis vector under a basis map: a single site, or zero.
using SiteImage = std::optional<Site>;

/// What a matched rule does with a site: send it through an affine
/// coordinate map, or annihilate it.
struct SiteAction {
  enum class Kind { map, zero };
  Kind kind{Kind::map};
  Lin ex{1, 0, 0};  // target x as affine form in (x, j)
  Lin ej{0, 1, 0};  // target j

  static SiteAction zero() { return {Kind::zero, {}, {}}; }
  static SiteAction map_to(const Lin& ex, const Lin& ej) { return {Kind::map, ex, ej}; }
  static SiteAction shift(int dx, int dj) {
    return map_to(Lin{1, 0, dx}, Lin{0, 1, dj});
  }
  static SiteAction identity() { return shift(0, 0); }

  SiteImage apply(const Site& s) const {
    if (kind == Kind::zero) return std::nullopt;
    const long long tx = ex.eval(s);
    const long long tj = ej.eval(s);
    if (tj < 0)
      throw RuleDefinitionError("action " + str() + " sends " + s.str() +
                                " below the half-space");
    return Site(static_cast<int>(tx), static_cast<int>(tj));
  }

  friend bool operator==(const SiteAction& x, const SiteAction& y) {
    return x.kind == y.kind && same(x.ex, y.ex) && same(x.ej, y.ej);
  }
  std::string str() const;
};

/// Anything that maps basis sites to basis sites (or zero) on the whole
/// lattice. Rule operators, adjoints and compositions all implement it.
class SiteMap {
 public:
  virtual ~SiteMap() = default;
  virtual SiteImage image(const Site& s) const = 0;
  virtual const std::string& name() const = 0;
};

struct Piece {
  Region when;
  SiteAction send;
  // An exclusive piece deliberately shadows later matches (point overrides
  // produced by collapsing rank-one corrections). The validator only checks
  // overlap consistency among non-exclusive matches.
  bool exclusive{false};
};

/// A basis-to-basis partial isometry given by an ordered case table:
/// first matching piece wins, the fallback applies when nothing matches.
/// The validator turns the implicit disjointness of the written cases
/// into a checked property.
class RuleOperator final : public SiteMap {
 public:
  RuleOperator(std::string name, std::vector<Piece> pieces, SiteAction fallback,
               bool fallback_reachable = true)
      : name_(std::move(name)),
        pieces_(std::move(pieces)),
        fallback_(fallback),
        fallback_reachable_(fallback_reachable) {}

  SiteImage image(const Site& s) const override;
  const std::string& name() const override { return name_; }

  const std::vector<Piece>& pieces() const { return pieces_; }
  const SiteAction& fallback() const { return fallback_; }

  /// Checks, over all extended-window sites: every matching piece agrees on
  /// the image (overlaps must be consistent), images stay in the half-space,
  /// and the fallback is only reached when declared reachable.
  void validate(const Window& w) const;

  nlohmann::json describe() const;

 private:
  std::string name_;
  std::vector<Piece> pieces_;
  SiteAction fallback_;
  bool fallback_reachable_;
};

/// Lazily evaluated product: (after o first)(s) = after(first(s)).
class ComposedMap final : public SiteMap {
 public:
  ComposedMap(std::shared_ptr<const SiteMap> after, std::shared_ptr<const SiteMap> first)
      : after_(std::move(after)),
        first_(std::move(first)),
        name_(after_->name() + "*" + first_->name()) {}

  SiteImage image(const Site& s) const override {
    const SiteImage mid = first_->image(s);
    if (!mid) return std::nullopt;
    return after_->image(*mid);
  }
  const std::string& name() const override { return name_; }

 private:
  std::shared_ptr<const SiteMap> after_, first_;
  std::string name_;
};

inline std::shared_ptr<const SiteMap> compose(std::shared_ptr<const SiteMap> a,
                                              std::shared_ptr<const SiteMap> b) {
  return std::make_shared<ComposedMap>(std::move(a), std::move(b));
}

/// Adjoint of a basis map: each site goes to its unique preimage, or to
/// zero if it has none. Candidate preimages come from inverting each piece
/// symbolically (action equations plus the equality atoms of its region);
/// every candidate is verified through the forward map.
class AdjointMap final : public SiteMap {
 public:
  explicit AdjointMap(std::shared_ptr<const RuleOperator> base);

  SiteImage image(const Site& s) const override;
  const std::string& name() const override { return name_; }

 private:
  std::shared_ptr<const RuleOperator> base_;
  std::vector<Piece> all_pieces_;  // pieces plus fallback-as-piece
  std::string name_;
};

/// Builds the adjoint and cross-checks it on the window against the
/// brute-force inverse. Throws NotInjective if two window sites share an
/// image, RuleDefinitionError if the symbolic inversion misses a preimage.
std::shared_ptr<const AdjointMap> adjoint_of(std::shared_ptr<const RuleOperator> op,
                                             const Window& w);

/// Symbolic inversion only, no window scan (used where no window is at hand).
std::shared_ptr<const AdjointMap> adjoint_unchecked(std::shared_ptr<const RuleOperator> op);

}  // namespace latscat

#include "latscat/catalog.hpp"

namespace latscat {

using namespace dsl;

namespace {

std::shared_ptr<RuleOperator> make_rule(std::string name, std::vector<Piece> pieces,
                                        SiteAction fallback) {
  return std::make_shared<RuleOperator>(std::move(name), std::move(pieces), fallback);
}

// Closed-form case tables: the fallback is unreachable by construction,
// hitting it means a transcription error.
std::shared_ptr<RuleOperator> make_total(std::string name, std::vector<Piece> pieces) {
  return std::make_shared<RuleOperator>(std::move(name), std::move(pieces), SiteAction::zero(),
                                        /*fallback_reachable=*/false);
}

SiteAction to(const Lin& ex, const Lin& ej) { return SiteAction::map_to(ex, ej); }

}  // namespace

bool in_omega(const Site& s) { return (-s.x == s.j) || (s.j == 0 && s.x >= 0); }

bool in_omega_prime(const Site& s, int l) {
  return in_omega(s) && !(s.x == -l && s.j == l);
}

Catalog::Catalog(const ModelParams& params, const Window& w) : params_(params) {
  params_.validate();
  const int z = params_.z;
  const int l = params_.l;

  auto u0 = make_rule("U0", {}, SiteAction::shift(1, 0));
  auto u0_inv = make_rule("U0^-1", {}, SiteAction::shift(-1, 0));

  auto u1 = make_rule("U1",
                      {
                          {region(X == -J - 1), to(X + 1, J + 1)},
                          // The printed condition "n != 0" can only mean j != 0:
                          // the inverse table and the deflection picture both
                          // require the (0,0) case to fall through to the last row.
                          {(X == -J) && (J != 0), to(X + 1, J - 1)},
                          {(X == 0) && (J == 0), to(lit(1), lit(0))},
                      },
                      SiteAction::shift(1, 0));
  auto u1_inv = make_rule("U1^-1",
                          {
                              {(X == -J + 1) && (J != 0), to(X - 1, J - 1)},
                              {region(X == -J), to(X - 1, J + 1)},
                              {(X == 1) && (J == 0), to(lit(0), lit(0))},
                          },
                          SiteAction::shift(-1, 0));

  // U2 = U1 - |d(z,l)><d(z-1,l)| - |d(z+1,l)><d(z,l)|
  //         + |d(z+1,l)><d(z-1,l)| + |d(z,l)><d(z,l)|
  PerturbedOperator u2_pert(u1, {
                                    {-1, Site(z, l), Site(z - 1, l)},
                                    {-1, Site(z + 1, l), Site(z, l)},
                                    {+1, Site(z + 1, l), Site(z - 1, l)},
                                    {+1, Site(z, l), Site(z, l)},
                                });
  auto u2 = u2_pert.to_rule(w, "U2");

  // U3 = U1 - |d(-l,l)><d(-l-1,l+1)| - |d(-l+1,l-1)><d(-l,l)|
  //         + |d(-l+1,l-1)><d(-l-1,l+1)| + |d(-l,l)><d(-l,l)|
  PerturbedOperator u3_pert(u1, {
                                    {-1, Site(-l, l), Site(-l - 1, l + 1)},
                                    {-1, Site(-l + 1, l - 1), Site(-l, l)},
                                    {+1, Site(-l + 1, l - 1), Site(-l - 1, l + 1)},
                                    {+1, Site(-l, l), Site(-l, l)},
                                });
  auto u3 = u3_pert.to_rule(w, "U3");

  // U2 and U3 are unitary, so inverse = adjoint; the paper does not
  // display these tables.
  auto u2_inv = adjoint_of(u2, w);
  auto u3_inv = adjoint_of(u3, w);

  auto wp10 = make_total("W+(U1,U0)", {
                                          {region(X >= -J + 1), SiteAction::identity()},
                                          {(X <= -J) && (J >= 1), to(X, J - 1)},
                                          {(X <= 0) && (J == 0), to(X, -X)},
                                      });
  auto wm10 = make_total("W-(U1,U0)", {
                                          {region(X >= -J), to(X, J + 1)},
                                          {region(X <= -J - 1), SiteAction::identity()},
                                      });
  auto wp10_adj = make_total("W+(U1,U0)*", {
                                               {region(X >= -J + 1), SiteAction::identity()},
                                               {region(X <= -J - 1), to(X, J + 1)},
                                               {region(X == -J), to(X, lit(0))},
                                           });
  auto s10 = make_rule("S(U1,U0)", {}, SiteAction::shift(0, 1));

  auto wp20 = make_total("W+(U2,U0)",
                         {
                             {(J != l) && (X >= -J + 1), SiteAction::identity()},
                             {(J != l) && (X <= -J) && (J >= 1), to(X, J - 1)},
                             {(J == 0) && (X <= 0), to(X, -X)},
                             {(J == l) && (X >= z + 1), SiteAction::identity()},
                             {(J == l) && (X >= -l + 2) && (X <= z), to(X - 1, lit(l))},
                             {(J == l) && (X <= -l + 1), to(X - 1, lit(l - 1))},
                         });
  auto wm20 = make_total("W-(U2,U0)",
                         {
                             {region(X <= -J - 1), SiteAction::identity()},
                             {(J != l - 1) && (X >= -J), to(X, J + 1)},
                             {(J == l - 1) && (X >= -l + 1) && (X <= z - 1), to(X, J + 1)},
                             {(J == l - 1) && (X >= z), to(X + 1, J + 1)},
                         });
  auto wp20_adj =
      make_total("W+(U2,U0)*", {
                                   {(J != l) && (X >= -J + 1), SiteAction::identity()},
                                   {(J != l - 1) && (X <= -J - 1), to(X, J + 1)},
                                   {region(J == -X), to(X, lit(0))},
                                   {(J == l) && (X >= z + 1), SiteAction::identity()},
                                   {(J == l) && (X >= -l + 1) && (X <= z - 1), to(X + 1, lit(l))},
                                   {(J == l - 1) && (X <= -l), to(X + 1, lit(l))},
                                   {(J == l) && (X == z), SiteAction::zero()},
                               });
  auto s20 = make_rule("S(U2,U0)",
                       {
                           {region(J == l - 1), to(X + 1, J + 1)},
                       },
                       SiteAction::shift(0, 1));

  auto wp30 = make_total("W+(U3,U0)",
                         {
                             {region(X >= -J + 1), SiteAction::identity()},
                             {(J != 0) && (X <= -J), to(X, J - 1)},
                             {(J == 0) && (X >= -l + 1) && (X <= 0), to(X, -X)},
                             {(J == 0) && (X <= -l), to(X - 1, -X + 1)},
                         });
  auto wm30 = make_total("W-(U3,U0)", {
                                          {region(X <= -J - 1), SiteAction::identity()},
                                          {region(X >= -J), to(X, J + 1)},
                                      });
  auto wp30_adj =
      make_total("W+(U3,U0)*", {
                                   {region(X >= -J + 1), SiteAction::identity()},
                                   {region(X <= -J - 1), to(X, J + 1)},
                                   {(J == -X) && (X >= -l + 1) && (X <= 0), to(X, lit(0))},
                                   {(J == -X) && (X <= -l - 1), to(X + 1, lit(0))},
                                   {(J == l) && (X == -l), SiteAction::zero()},
                               });
  auto s30 = make_rule("S(U3,U0)", {}, SiteAction::shift(0, 1));

  auto wp21 = make_total("W+(U2,U1)",
                         {
                             {(J != l) && (X >= -J), SiteAction::identity()},
                             {(J != l - 1) && (X <= -J), SiteAction::identity()},
                             {(J == l) && (X >= z + 1), SiteAction::identity()},
                             {(J == l) && (X >= -l + 2) && (X <= z), to(X - 1, lit(l))},
                             {(J == l) && (X == -l + 1), to(X - 1, lit(l - 1))},
                             {(J == l - 1) && (X <= -l), to(X - 1, lit(l - 1))},
                         });
  auto wm21 = make_total("W-(U2,U1)", {
                                          {region(J != l), SiteAction::identity()},
                                          {(J == l) && (X <= z - 1), SiteAction::identity()},
                                          {(J == l) && (X >= z), to(X + 1, lit(l))},
                                      });

  for (const auto& r : {u0, u0_inv, u1, u1_inv, u2, u3, wp10, wm10, wp10_adj, s10, wp20, wm20,
                        wp20_adj, s20, wp30, wm30, wp30_adj, s30, wp21, wm21}) {
    r->validate(w);
    entries_[r->name()] = r;
  }
  entries_["U2^-1"] = u2_inv;
  entries_["U3^-1"] = u3_inv;
}

std::shared_ptr<const SiteMap> Catalog::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownOperator("unknown operator: " + name);
  return it->second;
}

std::shared_ptr<const RuleOperator> Catalog::rule(const std::string& name) const {
  return std::dynamic_pointer_cast<const RuleOperator>(at(name));
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

namespace {

class CorruptedMap final : public SiteMap {
 public:
  explicit CorruptedMap(std::shared_ptr<const SiteMap> base)
      : base_(std::move(base)), name_(base_->name()) {}
  SiteImage image(const Site& s) const override {
    if (s == Site(0, 1)) return base_->image(Site(1, 1));
    return base_->image(s);
  }
  const std::string& name() const override { return name_; }

 private:
  std::shared_ptr<const SiteMap> base_;
  std::string name_;
};

}  // namespace

void Catalog::corrupt(const std::string& name) {
  entries_[name] = std::make_shared<CorruptedMap>(at(name));
}

}  // namespace latscat

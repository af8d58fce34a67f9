#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "latscat/rule_operator.hpp"
#include "latscat/site.hpp"

namespace latscat {

/// A basis map materialized on a finite square of the lattice
/// {(x,j) : |x| <= radius, 0 <= j <= radius}. Entries are ordered by
/// (j, x), so serialization is deterministic.
class OpTable {
 public:
  OpTable(std::string name, int radius) : name_(std::move(name)), radius_(radius) {}

  static OpTable materialize(const SiteMap& m, int radius, std::string name = "");

  const std::string& name() const { return name_; }
  int radius() const { return radius_; }

  bool covers(const Site& s) const {
    return s.x >= -radius_ && s.x <= radius_ && s.j >= 0 && s.j <= radius_;
  }

  void set(const Site& s, SiteImage img) { entries_[s] = img; }

  /// Outer nullopt: site not covered by the table.
  std::optional<SiteImage> lookup(const Site& s) const {
    auto it = entries_.find(s);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<Site, SiteImage>& entries() const { return entries_; }

  /// JSON list of {"from":[x,j], "to":[x,j]|null} sorted by (j,x).
  nlohmann::json to_json() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::string name_;
  int radius_;
  std::map<Site, SiteImage> entries_;
};

}  // namespace latscat

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latscat/wave.hpp"

using namespace latscat;

namespace {

std::set<Site> site_set(const std::vector<Site>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("interaction support of (U1, U0)") {
  const Catalog cat;
  const Window w(6);
  const auto support = interaction_support(make_evolution_pair(cat, "U1", "U0"),
                                           Direction::plus, w);
  // One-step cancellation fails exactly on the two deflection diagonals.
  for (const Site& s : support.sites) CHECK((s.x == -s.j || s.x == -s.j - 1));
  CHECK(support.max_x == -1);
  CHECK_FALSE(support.escaped(Site(-1, 1)));
  CHECK(support.escaped(Site(0, 1)));
}

TEST_CASE("per-site wave operator values and stopping step") {
  const Catalog cat(ModelParams{2, 3});
  const Window w(10);
  const auto pair10 = make_evolution_pair(cat, "U1", "U0");
  CHECK(wave_operator(pair10, Direction::plus, Site(-2, 0), w).value == Site(-2, 2));
  CHECK(wave_operator(pair10, Direction::minus, Site(3, 1), w).value == Site(3, 2));

  const WaveResult r = wave_operator(pair10, Direction::plus, Site(-5, 3), w);
  CHECK(r.value == Site(-5, 2));
  // The frontier leaves the deflection region after n = 2 - x = 5 free
  // steps; the default margin adds two unchanged steps on top.
  CHECK(r.steps == 7);

  const auto pair20 = make_evolution_pair(cat, "U2", "U0");
  CHECK(wave_operator(pair20, Direction::plus, Site(2, 3), w).value == Site(1, 3));
}

TEST_CASE("iteration cap failure is reported") {
  const Catalog cat;
  const Window w(6);
  const auto pair = make_evolution_pair(cat, "U1", "U0");
  WaveOptions opts;
  opts.cap = 1;  // below any possible escape for interior sites
  CHECK_THROWS_AS(wave_operator(pair, Direction::plus, Site(-4, 0), w, opts), NoStabilization);
}

TEST_CASE("iterative tables equal the closed-form transcriptions") {
  const Window w(10);
  struct Case {
    ModelParams params;
    const char* u;
    const char* u0;
    Direction dir;
    const char* oracle;
  };
  const Case cases[] = {
      {{2, 3}, "U1", "U0", Direction::plus, "W+(U1,U0)"},
      {{2, 3}, "U1", "U0", Direction::minus, "W-(U1,U0)"},
      {{2, 2}, "U3", "U0", Direction::minus, "W-(U3,U0)"},
      {{2, 2}, "U3", "U0", Direction::plus, "W+(U3,U0)"},
      {{2, 3}, "U2", "U1", Direction::plus, "W+(U2,U1)"},
      {{2, 3}, "U2", "U1", Direction::minus, "W-(U2,U1)"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.oracle);
    const Catalog cat(c.params);
    const OpTable table = wave_operator_table(make_evolution_pair(cat, c.u, c.u0), c.dir, w);
    const auto oracle = cat.at(c.oracle);
    int checked = 0;
    for (const Site& s : w.sites()) {
      CHECK(*table.lookup(s) == oracle->image(s));
      ++checked;
    }
    CHECK(checked == 231);
  }
}

TEST_CASE("scattering operator products") {
  const Catalog cat23(ModelParams{2, 3});
  const Window w(8);
  const OpTable s10 = scattering_operator(make_evolution_pair(cat23, "U1", "U0"), w);
  for (const Site& s : w.sites()) CHECK(*s10.lookup(s) == Site(s.x, s.j + 1));

  const OpTable s20 = scattering_operator(make_evolution_pair(cat23, "U2", "U0"), w);
  CHECK(*s20.lookup(Site(0, 2)) == Site(1, 3));

  const Catalog cat22(ModelParams{2, 2});
  const OpTable s30 = scattering_operator(make_evolution_pair(cat22, "U3", "U0"), w);
  const OpTable s10b = scattering_operator(make_evolution_pair(cat22, "U1", "U0"), w);
  CHECK(s30.entries() == s10b.entries());
}

TEST_CASE("range and cokernel on windows") {
  const Catalog cat(ModelParams{2, 3});

  {
    const Window w(3);
    const OpTable t = wave_operator_table(make_evolution_pair(cat, "U1", "U0"),
                                          Direction::minus, w);
    const RangeCokernel rc = range_and_cokernel(t, w);
    CHECK(site_set(rc.cokernel) == std::set<Site>{Site(0, 0), Site(1, 0), Site(2, 0), Site(3, 0),
                                                  Site(-1, 1), Site(-2, 2), Site(-3, 3)});
    CHECK(rc.indeterminate.empty());
  }
  {
    const Window w(10);
    const OpTable t = wave_operator_table(make_evolution_pair(cat, "U2", "U0"),
                                          Direction::plus, w);
    const RangeCokernel rc = range_and_cokernel(t, w);
    CHECK(site_set(rc.cokernel) == std::set<Site>{Site(2, 3)});
  }
  {
    const Window w(5);
    const OpTable t = scattering_operator(make_evolution_pair(cat, "U1", "U0"), w);
    const RangeCokernel rc = range_and_cokernel(t, w);
    std::set<Site> row0;
    for (int x = -5; x <= 5; ++x) row0.insert(Site(x, 0));
    CHECK(site_set(rc.cokernel) == row0);
  }
}

TEST_CASE("range of the scattering operators omits row zero") {
  const Window w(6);
  for (const ModelParams params : {ModelParams{2, 3}, ModelParams{2, 2}}) {
    const Catalog cat(params);
    for (const char* u : {"U1", "U2", "U3"}) {
      const OpTable t = scattering_operator(make_evolution_pair(cat, u, "U0"), w);
      const RangeCokernel rc = range_and_cokernel(t, w);
      for (const Site& s : rc.range) CHECK(s.j >= 1);
    }
  }
}

TEST_CASE("table serialization is sorted by (j, x) with null for annihilation") {
  const Catalog cat;
  OpTable t("toy", 1);
  t.set(Site(0, 0), Site(1, 0));
  t.set(Site(-1, 1), std::nullopt);
  t.set(Site(1, 0), Site(1, 1));
  const nlohmann::json j = t.to_json();
  REQUIRE(j.size() == 3);
  CHECK(j[0] == nlohmann::json({{"from", {0, 0}}, {"to", {1, 0}}}));
  CHECK(j[1] == nlohmann::json({{"from", {1, 0}}, {"to", {1, 1}}}));
  CHECK(j[2]["from"] == nlohmann::json({-1, 1}));
  CHECK(j[2]["to"].is_null());

  // Round trip through the serialized form.
  const OpTable big = OpTable::materialize(*cat.at("W+(U1,U0)"), 4, "W+(U1,U0)");
  const nlohmann::json doc = big.to_json();
  OpTable back("W+(U1,U0)", 4);
  for (const auto& e : doc) {
    const Site from(e["from"][0], e["from"][1]);
    if (e["to"].is_null())
      back.set(from, std::nullopt);
    else
      back.set(from, Site(e["to"][0], e["to"][1]));
  }
  CHECK(back == big);
}

TEST_CASE("lazy wave operator map agrees with the table") {
  const Catalog cat(ModelParams{2, 3});
  const Window w(8);
  const auto pair = make_evolution_pair(cat, "U2", "U0");
  const WaveOperatorMap lazy(pair, Direction::plus, w);
  const OpTable table = wave_operator_table(pair, Direction::plus, w);
  for (const Site& s : w.sites()) CHECK(lazy.image(s) == *table.lookup(s));
}

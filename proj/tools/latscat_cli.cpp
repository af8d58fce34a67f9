#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "latscat/catalog.hpp"
#include "latscat/errors.hpp"
#include "latscat/figures.hpp"
#include "latscat/verify.hpp"
#include "latscat/wave.hpp"
#include "latscat/wold.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace latscat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct RunConfig {
  int z = 2;
  int l = 3;
  int radius = 20;
  int guard = 4;
  int margin = 2;
  int cap = 0;  // 0: 4 * (radius + guard)
  std::string out_dir = ".";
  std::vector<std::string> formats{"json"};

  ModelParams params() const { return ModelParams{z, l}; }
  Window window() const { return Window(radius, guard); }
  WaveOptions wave_options() const { return WaveOptions{margin, cap}; }
  bool wants(const std::string& fmt) const {
    return std::find(formats.begin(), formats.end(), fmt) != formats.end();
  }

  // The embedded configuration covers everything that affects the computed
  // bytes; the output directory is deliberately omitted so re-runs into
  // different directories stay byte-identical.
  json to_json() const {
    return json{{"z", z},           {"l", l},     {"R", radius},      {"guard", guard},
                {"margin", margin}, {"cap", cap}, {"formats", formats}};
  }
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-R,--radius", cfg.radius, "window radius");
  cmd->add_option("--guard", cfg.guard, "guard margin around the window");
  cmd->add_option("--margin", cfg.margin, "unchanged steps required after escape");
  cmd->add_option("--cap", cfg.cap, "iteration cap (0: four times the extended radius)");
  cmd->add_option("--z", cfg.z, "model parameter z");
  cmd->add_option("--l", cfg.l, "model parameter l");
  cmd->add_option("-o,--out", cfg.out_dir, "output directory");
  cmd->add_option("--format", cfg.formats, "output formats: json, svg, ascii")
      ->check(CLI::IsMember({"json", "svg", "ascii"}));
}

// File-system-safe operator names: "W+(U2,U0)" -> "Wp_U2_U0".
std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += c;
    } else if (c == '+') {
      out += 'p';
    } else if (c == '-') {
      out += 'm';
    } else if (c == '*') {
      out += 'a';
    } else if ((c == '(' || c == ',') && !out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  std::cout << "wrote " << path.string() << "\n";
}

void write_json(const fs::path& path, const json& doc) { write_file(path, doc.dump(2) + "\n"); }

std::string svg_with_config(const OpTable& table, const DiagramSpec& spec, const RunConfig& cfg) {
  const std::string svg = render_svg(table, spec);
  const size_t pos = svg.find('\n');
  return svg.substr(0, pos + 1) + "  <desc>config " + cfg.to_json().dump() + "</desc>\n" +
         svg.substr(pos + 1);
}

void emit_table(const OpTable& table, const std::string& stem, const RunConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  const DiagramSpec spec{cfg.radius};
  if (cfg.wants("json")) {
    json doc;
    doc["config"] = cfg.to_json();
    doc["operator"] = table.name();
    doc["radius"] = table.radius();
    doc["table"] = table.to_json();
    write_json(dir / (stem + ".json"), doc);
  }
  if (cfg.wants("svg"))
    write_file(dir / ("fig_" + stem + ".svg"), svg_with_config(table, spec, cfg));
  if (cfg.wants("ascii")) std::cout << render_ascii(table, spec);
}

int cmd_apply(const RunConfig& cfg, const std::string& name, int x, int j) {
  const Catalog cat(cfg.params());
  if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
  const SiteImage img = cat.at(name)->image(Site(x, j));
  std::cout << (img ? img->str() : "0") << "\n";
  return kExitOk;
}

int cmd_wave(const RunConfig& cfg, const std::string& u_name, const std::string& u0_name,
             const std::string& dir_str) {
  const Catalog cat(cfg.params());
  const Window w = cfg.window();
  const Direction dir = dir_str == "+" ? Direction::plus : Direction::minus;
  const EvolutionPair pair = make_evolution_pair(cat, u_name, u0_name);
  const OpTable full = wave_operator_table(pair, dir, w, cfg.wave_options());

  // Restrict to the window for output; the extended sites only stabilize
  // the interior values.
  OpTable table("W" + dir_str + "(" + u_name + "," + u0_name + ")", cfg.radius);
  for (const Site& s : w.sites()) table.set(s, *full.lookup(s));

  json diff = json::array();
  const std::string oracle_name = table.name();
  if (cat.has(oracle_name)) {
    const auto oracle = cat.at(oracle_name);
    for (const Site& s : w.sites()) {
      const SiteImage expect = oracle->image(s);
      const SiteImage got = **table.lookup(s);
      if (expect != got)
        diff.push_back({{"site", {s.x, s.j}},
                        {"oracle", expect ? json::array({expect->x, expect->j}) : json()},
                        {"iterative", got ? json::array({got->x, got->j}) : json()}});
    }
  }

  const std::string stem = sanitize(table.name()) + "_R" + std::to_string(cfg.radius);
  const fs::path dir_path(cfg.out_dir);
  if (cfg.wants("json")) {
    json doc;
    doc["config"] = cfg.to_json();
    doc["operator"] = table.name();
    doc["radius"] = cfg.radius;
    doc["table"] = table.to_json();
    doc["oracle_diff"] = diff;
    write_json(dir_path / (stem + ".json"), doc);
  }
  if (cfg.wants("svg"))
    write_file(dir_path / ("fig_" + stem + ".svg"),
               svg_with_config(table, DiagramSpec{cfg.radius}, cfg));
  if (cfg.wants("ascii")) std::cout << render_ascii(table, DiagramSpec{cfg.radius});
  if (!diff.empty()) {
    std::cerr << "iterative table disagrees with the closed form at " << diff.size()
              << " site(s)\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_scatter(const RunConfig& cfg, const std::string& u_name, const std::string& u0_name) {
  const Catalog cat(cfg.params());
  const EvolutionPair pair = make_evolution_pair(cat, u_name, u0_name);
  const OpTable table = scattering_operator(pair, cfg.window(), cfg.wave_options());
  emit_table(table, sanitize(table.name()) + "_R" + std::to_string(cfg.radius), cfg);
  return kExitOk;
}

int cmd_wold(const RunConfig& cfg, const std::string& name) {
  const Catalog cat(cfg.params());
  if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
  const Window w = cfg.window();
  const OpTable table = OpTable::materialize(*cat.at(name), w.extended_radius(), name);
  const WoldReport report = wold_decompose(table, w);

  const std::string stem = "wold_" + sanitize(name) + "_R" + std::to_string(cfg.radius);
  const fs::path dir(cfg.out_dir);
  if (cfg.wants("json")) {
    json doc;
    doc["config"] = cfg.to_json();
    doc["operator"] = name;
    doc["report"] = report.to_json();
    write_json(dir / (stem + ".json"), doc);
  }
  if (cfg.wants("svg"))
    write_file(dir / (stem + ".svg"), render_wold_svg(table, report, DiagramSpec{cfg.radius}));
  std::cout << "alpha " << report.alpha_on_window << ", " << report.fixed_points.size()
            << " fixed point(s), " << report.cycles.size() << " cycle(s), "
            << report.rays.size() << " ray(s), " << report.indeterminate.size()
            << " indeterminate\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& corrupt_name) {
  Catalog cat(cfg.params());
  if (!corrupt_name.empty()) cat.corrupt(corrupt_name);
  const std::vector<CheckResult> results = run_all_checks(cat, cfg.window(), cfg.wave_options());

  json manifest;
  manifest["config"] = cfg.to_json();
  manifest["checks"] = json::array();
  int failed = 0;
  for (const CheckResult& r : results) {
    manifest["checks"].push_back(r.to_json());
    std::cout << check_status_str(r.status) << "  " << r.name;
    if (!r.note.empty()) std::cout << "  (" << r.note << ")";
    std::cout << "\n";
    if (r.status == CheckStatus::fail) ++failed;
  }
  if (cfg.wants("json"))
    write_json(fs::path(cfg.out_dir) / ("verify_R" + std::to_string(cfg.radius) + ".json"),
               manifest);
  std::cout << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_render(const RunConfig& cfg, const std::string& name) {
  const Catalog cat(cfg.params());
  if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
  const OpTable table = OpTable::materialize(*cat.at(name), cfg.radius, name);
  const DiagramSpec spec{cfg.radius};
  const fs::path dir(cfg.out_dir);
  const std::string stem = sanitize(name) + "_" + std::to_string(cfg.radius);
  if (cfg.wants("svg") || !cfg.wants("ascii"))
    write_file(dir / ("fig_" + stem + ".svg"), svg_with_config(table, spec, cfg));
  if (cfg.wants("ascii")) std::cout << render_ascii(table, spec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice scattering models: evolutions, wave operators, "
               "scattering operators, Wold decompositions and figures"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string op_name, u_name, u0_name, dir_str, corrupt_name;
  int site_x = 0, site_j = 0;

  CLI::App* apply = app.add_subcommand("apply", "apply an operator to a basis vector");
  apply->add_option("operator", op_name, "catalog operator name, e.g. U1")->required();
  apply->add_option("x", site_x, "site x coordinate")->required();
  apply->add_option("j", site_j, "site j coordinate (non-negative)")->required();
  add_common_options(apply, cfg);

  CLI::App* wave = app.add_subcommand("wave", "compute a wave operator table iteratively");
  wave->add_option("U", u_name, "perturbed evolution, e.g. U2")->required();
  wave->add_option("U0", u0_name, "free evolution, e.g. U0")->required();
  wave->add_option("direction", dir_str, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
  add_common_options(wave, cfg);

  CLI::App* scatter = app.add_subcommand("scatter", "compute a scattering operator table");
  scatter->add_option("U", u_name, "perturbed evolution")->required();
  scatter->add_option("U0", u0_name, "free evolution")->required();
  add_common_options(scatter, cfg);

  CLI::App* wold = app.add_subcommand("wold", "Wold decomposition of an isometry");
  wold->add_option("operator", op_name, "catalog operator name, e.g. \"W+(U2,U0)\"")->required();
  add_common_options(wold, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run the full verification manifest");
  add_common_options(verify, cfg);
  verify->add_option("--corrupt", corrupt_name, "negative-control hook: corrupt a catalog entry")
      ->group("");  // hidden

  CLI::App* render = app.add_subcommand("render", "render an operator's arrow diagram");
  render->add_option("operator", op_name, "catalog operator name")->required();
  add_common_options(render, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.params().validate();
    if (site_j < 0) throw ParamError("j must be non-negative");
    if (apply->parsed()) return cmd_apply(cfg, op_name, site_x, site_j);
    if (wave->parsed()) return cmd_wave(cfg, u_name, u0_name, dir_str);
    if (scatter->parsed()) return cmd_scatter(cfg, u_name, u0_name);
    if (wold->parsed()) return cmd_wold(cfg, op_name);
    if (verify->parsed()) return cmd_verify(cfg, corrupt_name);
    if (render->parsed()) return cmd_render(cfg, op_name);
  } catch (const UnknownOperator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

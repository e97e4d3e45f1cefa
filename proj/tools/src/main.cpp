// weylcactus: batch frontend for Weyl groups, canonical bases, cells and the
// wall-crossing action. Exit codes: 0 success / all checks pass, 1 failed
// verification or internal invariant violation, 2 usage error.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylcactus/cactus.hpp"
#include "weylcactus/cells.hpp"
#include "weylcactus/coxeter.hpp"
#include "weylcactus/dynkin.hpp"
#include "weylcactus/hecke.hpp"
#include "weylcactus/tableaux.hpp"

namespace {

using namespace weylcactus;

struct CommonOpts {
  std::string group_name;
  std::string cartan_file;
  std::string format = "text";
  std::string out;
  std::string cache_dir;
};

void add_group_opts(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--group", o.group_name, "named type, e.g. A3, B2, G2");
  sub->add_option("--cartan", o.cartan_file, "JSON file holding a Cartan matrix");
}

void add_output_opts(CLI::App* sub, CommonOpts& o,
                     const std::string& formats = "text,json") {
  std::set<std::string> allowed;
  std::stringstream ss(formats);
  for (std::string f; std::getline(ss, f, ',');) allowed.insert(f);
  sub->add_option("--format", o.format, "output format (" + formats + ")")
      ->check(CLI::IsMember(allowed));
  sub->add_option("--out", o.out, "write output to this path instead of stdout");
}

DynkinDiagram load_diagram(const CommonOpts& o) {
  if (o.group_name.empty() == o.cartan_file.empty())
    throw std::invalid_argument("exactly one of --group or --cartan is required");
  if (!o.group_name.empty()) return DynkinDiagram::from_name(o.group_name);
  std::ifstream in(o.cartan_file);
  if (!in) throw std::invalid_argument("cannot open " + o.cartan_file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(o.cartan_file + ": " + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument(o.cartan_file + ": expected an array of arrays");
  CartanMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument(o.cartan_file + ": expected an array of arrays");
    m.emplace_back();
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw std::invalid_argument(o.cartan_file + ": matrix entries must be integers");
      m.back().push_back(entry.get<int>());
    }
  }
  return DynkinDiagram::from_cartan(std::move(m));
}

std::vector<int> parse_word(const std::string& s) {
  if (s.empty() || s == "e") return {};
  std::vector<int> word;
  std::stringstream ss(s);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      word.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + token + "' in word '" + s + "'");
    }
  }
  return word;
}

void write_output(const std::string& text, const std::string& out) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << payload;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const DynkinDiagram& d) {
  std::string serial;
  for (const auto& row : d.cartan()) {
    for (int a : row) serial += std::to_string(a) + ",";
    serial += ";";
  }
  std::string name = d.name().empty() ? "cartan" : d.name();
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serial)));
  return name + "-" + hex;
}

// Builds the full table, or round-trips it through the opt-in cache directory.
KLTable load_or_build_table(const WeylGroup& g, const std::string& cache_dir) {
  if (cache_dir.empty()) {
    KLTable table(g);
    table.build_all();
    return table;
  }
  namespace fs = std::filesystem;
  fs::path file = fs::path(cache_dir) / (cache_key(g.diagram()) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return KLTable::from_cache_json(g, buffer.str());
  }
  KLTable table(g);
  table.build_all();
  fs::create_directories(cache_dir);
  std::ofstream outf(file);
  if (!outf) throw std::runtime_error("cannot write " + file.string());
  outf << table.to_cache_json();
  return table;
}

// Connected components of a node subset, each sorted, ordered by least node.
std::vector<Subdiagram> split_components(const DynkinDiagram& d, std::vector<int> nodes) {
  Subdiagram whole = d.subdiagram(std::move(nodes));
  std::vector<Subdiagram> components;
  std::vector<int> pending = whole.nodes;
  while (!pending.empty()) {
    std::vector<int> comp{pending.front()};
    pending.erase(pending.begin());
    for (bool grew = true; grew;) {
      grew = false;
      for (auto it = pending.begin(); it != pending.end();) {
        bool touches = false;
        for (int a : comp)
          if (d.bonded(a, *it)) touches = true;
        if (touches) {
          comp.push_back(*it);
          it = pending.erase(it);
          grew = true;
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(d.subdiagram(std::move(comp)));
  }
  return components;
}

nlohmann::json word_json(const WeylGroup& g, ElementId w) {
  return nlohmann::json(g.element(w).word);
}

int cmd_group(const CommonOpts& o) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  const WeylElement& w0 = g.element(g.longest());
  if (o.format == "json") {
    nlohmann::json j{{"name", g.diagram().name()},
                     {"rank", g.rank()},
                     {"cartan", g.diagram().cartan()},
                     {"order", g.size()},
                     {"positive_roots", w0.length},
                     {"longest", w0.word}};
    write_output(j.dump(2), o.out);
  } else {
    std::ostringstream text;
    if (!g.diagram().name().empty()) text << "name: " << g.diagram().name() << "\n";
    text << "rank: " << g.rank() << "\n"
         << "order: " << g.size() << "\n"
         << "positive roots: " << w0.length << "\n"
         << "longest element: " << g.word_string(g.longest());
    write_output(text.str(), o.out);
  }
  return 0;
}

int cmd_kl(const CommonOpts& o, const std::string& word_text, bool word_given) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  std::optional<ElementId> only;
  if (word_given) only = g.element_from_word(parse_word(word_text));
  KLTable table = load_or_build_table(g, o.cache_dir);
  if (o.format == "json") {
    if (!only) {
      write_output(table.to_json_string(), o.out);
      return 0;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [y, poly] : table.column(*only))
      j.push_back({{"y", word_json(g, y)},
                   {"w", word_json(g, *only)},
                   {"h", poly.to_string()},
                   {"mu", y == *only ? 0 : static_cast<int>(table.mu(y, *only))}});
    write_output(j.dump(2), o.out);
    return 0;
  }
  std::ostringstream text;
  bool first = true;
  for (ElementId w = 0; w < g.size(); ++w) {
    if (only && w != *only) continue;
    for (const auto& [y, poly] : table.column(w)) {
      if (!first) text << "\n";
      first = false;
      text << "h(" << g.word_string(y) << " ; " << g.word_string(w) << ") = "
           << poly.to_string();
      if (y != w && table.mu(y, w) != 0) text << "  [mu " << table.mu(y, w) << "]";
    }
  }
  write_output(text.str(), o.out);
  return 0;
}

CellKind parse_kind(const std::string& kind) {
  if (kind == "left") return CellKind::Left;
  if (kind == "right") return CellKind::Right;
  if (kind == "two-sided") return CellKind::TwoSided;
  throw std::invalid_argument("unknown cell kind '" + kind + "'");
}

int cmd_cells(const CommonOpts& o, const std::string& kind_text) {
  CellKind kind = parse_kind(kind_text);
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  if (o.format == "json") {
    write_output(cells_to_json_string(cd, kind), o.out);
    return 0;
  }
  if (o.format == "dot") {
    write_output(cells_to_dot(cd, kind), o.out);
    return 0;
  }
  const CellStructure& s = kind == CellKind::Left    ? cd.left
                           : kind == CellKind::Right ? cd.right
                                                     : cd.two_sided;
  std::ostringstream text;
  text << cell_kind_name(kind) << " cells: " << s.count() << "\n";
  for (std::size_t c = 0; c < s.members.size(); ++c) {
    text << "cell " << c << ":";
    for (ElementId w : s.members[c]) text << " " << g.word_string(w);
    text << "\n";
  }
  for (const auto& [below, above] : s.order_edges)
    text << "cell " << below << " < cell " << above << "\n";
  std::string body = text.str();
  body.pop_back();
  write_output(body, o.out);
  return 0;
}

int cmd_wc(const CommonOpts& o, const std::string& subdiagram_text,
           const std::string& word_text, bool word_given) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  std::vector<Subdiagram> components = split_components(g.diagram(), parse_word(subdiagram_text));
  if (components.empty()) throw std::invalid_argument("--subdiagram must be nonempty");
  Subdiagram whole = g.diagram().subdiagram(parse_word(subdiagram_text));

  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  // Disconnected node sets act as the product of their components' generators
  // (the components commute, so the order is immaterial).
  auto apply = [&](ElementId w) {
    for (const Subdiagram& comp : components) w = ctx.wall_crossing(comp, w);
    return w;
  };

  if (word_given) {
    ElementId w = g.element_from_word(parse_word(word_text));
    ElementId image = apply(w);
    if (o.format == "json") {
      nlohmann::json j{{"subdiagram", whole.nodes},
                       {"w", word_json(g, w)},
                       {"image", word_json(g, image)}};
      write_output(j.dump(2), o.out);
    } else {
      write_output(g.word_string(w) + " -> " + g.word_string(image), o.out);
    }
    return 0;
  }

  if (o.format == "json") {
    nlohmann::json permutation = nlohmann::json::array();
    for (ElementId w = 0; w < g.size(); ++w)
      permutation.push_back({word_json(g, w), word_json(g, apply(w))});
    nlohmann::json j{{"subdiagram", whole.nodes}, {"permutation", permutation}};
    if (g.diagram().is_full(whole)) {
      nlohmann::json alpha = nlohmann::json::array();
      for (ElementId w = 0; w < g.size(); ++w) {
        SigmaValue sv = ctx.full_sigma(w);
        alpha.push_back({{"w", word_json(g, w)}, {"sign", sv.sign}, {"k", sv.exponent}});
      }
      j["alpha"] = alpha;
    }
    write_output(j.dump(2), o.out);
    return 0;
  }
  std::ostringstream text;
  for (ElementId w = 0; w < g.size(); ++w) {
    if (w) text << "\n";
    text << g.word_string(w) << " -> " << g.word_string(apply(w));
  }
  write_output(text.str(), o.out);
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  WallCrossingTable wct = build_wall_crossing_table(ctx);
  VerificationReport report = verify_cactus_relations(g, wct);
  VerificationReport theorem = verify_theorem(g, wct, cd);
  report.checks.insert(report.checks.end(), theorem.checks.begin(), theorem.checks.end());
  if (o.format == "json") {
    write_output(report_to_json_string(report), o.out);
  } else {
    std::ostringstream text;
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const CheckResult& c = report.checks[i];
      if (i) text << "\n";
      text << (c.pass ? "PASS " : "FAIL ") << c.relation;
      for (const Subdiagram& d : c.diagrams) {
        text << " {";
        for (std::size_t k = 0; k < d.nodes.size(); ++k)
          text << (k ? "," : "") << d.nodes[k];
        text << "}";
      }
      if (!c.detail.empty()) text << ": " << c.detail;
    }
    write_output(text.str(), o.out);
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_orbits(const CommonOpts& o) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  WallCrossingTable wct = build_wall_crossing_table(ctx);
  auto orbit_list = orbits(g, wct);
  if (o.format == "json") {
    write_output(orbits_to_json_string(g, orbit_list), o.out);
    return 0;
  }
  std::ostringstream text;
  text << "orbits: " << orbit_list.size();
  for (std::size_t i = 0; i < orbit_list.size(); ++i) {
    text << "\norbit " << i << ":";
    for (ElementId w : orbit_list[i]) text << " " << g.word_string(w);
  }
  write_output(text.str(), o.out);
  return 0;
}

int cmd_rsk(const CommonOpts& o, const std::string& word_text) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  ElementId w = g.element_from_word(parse_word(word_text));
  std::vector<int> oneline = weyl_to_oneline(g, w);
  RSKPair pair = rsk(oneline);
  if (o.format == "json") {
    nlohmann::json j{{"w", word_json(g, w)},
                     {"oneline", oneline},
                     {"p", pair.p.rows},
                     {"q", pair.q.rows}};
    write_output(j.dump(2), o.out);
    return 0;
  }
  std::ostringstream text;
  text << "one-line:";
  for (int a : oneline) text << " " << a;
  text << "\nP:\n" << tableau_to_text(pair.p) << "Q:\n" << tableau_to_text(pair.q);
  std::string body = text.str();
  while (!body.empty() && body.back() == '\n') body.pop_back();
  write_output(body, o.out);
  return 0;
}

int cmd_crosscheck(const CommonOpts& o, int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("--n must be between 2 and 7");
  DynkinDiagram diagram = DynkinDiagram::from_name("A" + std::to_string(n - 1));
  WeylGroup g(diagram);
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  bool pass = true;
  nlohmann::json failure;
  for (ElementId w = 0; w < g.size() && pass; ++w) {
    ElementId image = ctx.full_sigma(w).image;
    RSKPair before = rsk(weyl_to_oneline(g, w));
    RSKPair after = rsk(weyl_to_oneline(g, image));
    if (!(after.q == evacuation(before.q)) || !(after.p == before.p)) {
      pass = false;
      failure = {{"w", word_json(g, w)}, {"sigma", word_json(g, image)}};
    }
  }
  if (o.format == "json") {
    nlohmann::json j{{"n", n}, {"checked", g.size()}, {"pass", pass}};
    if (!pass) j["first_failure"] = failure;
    write_output(j.dump(2), o.out);
  } else {
    std::ostringstream text;
    text << (pass ? "PASS" : "FAIL") << ": sigma vs evacuation on S" << n << " ("
         << g.size() << " elements)";
    if (!pass) text << "\nfirst failure at w = " << failure["w"].dump();
    write_output(text.str(), o.out);
  }
  return pass ? 0 : 1;
}

int cmd_probe(const CommonOpts& o, const std::string& subdiagram_text) {
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  Subdiagram d = g.diagram().subdiagram(parse_word(subdiagram_text));
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  WallCrossingTable wct = build_wall_crossing_table(ctx);
  ProbeReport report = probe_parabolic_product(ctx, wct, d);
  if (o.format == "json") {
    write_output(probe_to_json_string(g, report), o.out);
    return 0;
  }
  std::size_t unique = 0, monomial = 0, residual = 0, matches = 0;
  for (const ProbeRow& r : report.rows) {
    unique += r.unique_same_cell;
    monomial += r.monomial;
    residual += r.residuals_below;
    matches += r.matches_wall_crossing;
  }
  std::ostringstream text;
  text << "elements: " << report.rows.size() << "\n"
       << "unique same-cell term: " << unique << "\n"
       << "monomial coefficient: " << monomial << "\n"
       << "residuals strictly below: " << residual << "\n"
       << "matches wall-crossing: " << matches << "\n"
       << "all properties: " << report.all_true_count();
  write_output(text.str(), o.out);
  return 0;
}

int cmd_export(const CommonOpts& o) {
  if (o.out.empty()) throw std::invalid_argument("export requires --out <directory>");
  DynkinDiagram diagram = load_diagram(o);
  WeylGroup g(diagram);
  KLTable table = load_or_build_table(g, o.cache_dir);
  CellData cd = compute_cells(g, table);
  CactusContext ctx(g, table, cd);
  WallCrossingTable wct = build_wall_crossing_table(ctx);

  namespace fs = std::filesystem;
  fs::create_directories(o.out);
  std::vector<std::string> written;
  auto emit = [&](const std::string& file, const std::string& content) {
    std::ofstream f(fs::path(o.out) / file);
    if (!f) throw std::runtime_error("cannot write " + file);
    f << content << "\n";
    written.push_back(file);
  };

  const WeylElement& w0 = g.element(g.longest());
  nlohmann::json group_json{{"name", g.diagram().name()},
                            {"rank", g.rank()},
                            {"cartan", g.diagram().cartan()},
                            {"order", g.size()},
                            {"positive_roots", w0.length},
                            {"longest", w0.word}};
  emit("group.json", group_json.dump(2));
  emit("kl.json", table.to_json_string());
  for (CellKind kind : {CellKind::Left, CellKind::Right, CellKind::TwoSided}) {
    emit("cells-" + cell_kind_name(kind) + ".json", cells_to_json_string(cd, kind));
    emit("cells-" + cell_kind_name(kind) + ".dot", cells_to_dot(cd, kind));
  }
  for (const Subdiagram& d : wct.generators) {
    std::string tag;
    for (int v : d.nodes) tag += (tag.empty() ? "" : "-") + std::to_string(v);
    emit("wc-" + tag + ".json", wall_crossing_to_json_string(wct, d));
  }
  VerificationReport report = verify_cactus_relations(g, wct);
  VerificationReport theorem = verify_theorem(g, wct, cd);
  report.checks.insert(report.checks.end(), theorem.checks.begin(), theorem.checks.end());
  emit("verify.json", report_to_json_string(report));
  emit("orbits.json", orbits_to_json_string(g, orbits(g, wct)));

  std::ostringstream text;
  for (const std::string& file : written) text << file << "\n";
  std::string body = text.str();
  body.pop_back();
  write_output(body, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig bases, cells and wall-crossing for finite Weyl groups"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string word_text, subdiagram_text, kind_text = "two-sided";
  int n = 3;

  CLI::App* group = app.add_subcommand("group", "group order, roots, longest element");
  add_group_opts(group, o);
  add_output_opts(group, o);

  CLI::App* kl = app.add_subcommand("kl", "canonical basis table or a single column");
  add_group_opts(kl, o);
  add_output_opts(kl, o);
  CLI::Option* kl_w = kl->add_option("--w", word_text, "reduced word, e.g. 1,2,1");
  kl->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* cells = app.add_subcommand("cells", "left, right or two-sided cells");
  add_group_opts(cells, o);
  add_output_opts(cells, o, "text,json,dot");
  cells->add_option("--kind", kind_text, "left | right | two-sided");
  cells->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* wc = app.add_subcommand("wc", "wall-crossing permutation of a subdiagram");
  add_group_opts(wc, o);
  add_output_opts(wc, o);
  wc->add_option("--subdiagram", subdiagram_text, "node ids, e.g. 1,2")->required();
  CLI::Option* wc_w = wc->add_option("--w", word_text, "apply to one element only");
  wc->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* verify = app.add_subcommand("verify", "cactus relations and action properties");
  add_group_opts(verify, o);
  add_output_opts(verify, o);
  verify->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbits of the wall-crossing action");
  add_group_opts(orbits_cmd, o);
  add_output_opts(orbits_cmd, o);
  orbits_cmd->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux (type A)");
  add_group_opts(rsk_cmd, o);
  add_output_opts(rsk_cmd, o);
  rsk_cmd->add_option("--w", word_text, "reduced word, e.g. 1,2");

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "sigma vs evacuation on the symmetric group");
  crosscheck->add_option("--n", n, "symmetric group S_n")->required();
  add_output_opts(crosscheck, o);
  crosscheck->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* probe = app.add_subcommand(
      "probe", "big-algebra product against a proper subdiagram, reported not asserted");
  add_group_opts(probe, o);
  add_output_opts(probe, o);
  probe->add_option("--subdiagram", subdiagram_text, "node ids, e.g. 1,2")->required();
  probe->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  CLI::App* export_cmd = app.add_subcommand("export", "write every JSON/DOT artifact");
  add_group_opts(export_cmd, o);
  export_cmd->add_option("--out", o.out, "output directory")->required();
  export_cmd->add_option("--cache", o.cache_dir, "cache directory for computed tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group->parsed()) return cmd_group(o);
    if (kl->parsed()) return cmd_kl(o, word_text, kl_w->count() > 0);
    if (cells->parsed()) return cmd_cells(o, kind_text);
    if (wc->parsed()) return cmd_wc(o, subdiagram_text, word_text, wc_w->count() > 0);
    if (verify->parsed()) return cmd_verify(o);
    if (orbits_cmd->parsed()) return cmd_orbits(o);
    if (rsk_cmd->parsed()) return cmd_rsk(o, word_text);
    if (crosscheck->parsed()) return cmd_crosscheck(o, n);
    if (probe->parsed()) return cmd_probe(o, subdiagram_text);
    if (export_cmd->parsed()) return cmd_export(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "weylcactus/cactus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace weylcactus {

namespace {

nlohmann::json subdiagram_json(const Subdiagram& d) { return nlohmann::json(d.nodes); }

std::string subdiagram_string(const Subdiagram& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.nodes[i]);
  }
  return s + "}";
}

}  // namespace

SigmaValue sigma(const WeylGroup& g, KLTable& table, const CellData& cd, ElementId w) {
  HeckeElement x = table.kl_element(w);
  for (int s : g.element(g.longest()).word) x = t_mul_gen_right(x, s);
  HeckeElement expansion = table.expand_in_c(std::move(x));

  int cell = cd.two_sided.cell_of[w];
  const LaurentPoly* leading = nullptr;
  ElementId image = 0;
  int found = 0;
  for (const auto& [y, c] : expansion.terms) {
    if (cd.two_sided.cell_of[y] == cell) {
      image = y;
      leading = &c;
      ++found;
    }
  }
  auto dump = [&](const char* tag) {
    return std::string(tag) + " for w = " + g.word_string(w) +
           ": C_w T_w0 = " + expansion.to_string();
  };
  if (found != 1) throw std::logic_error(dump("sigma-ambiguity"));
  auto mono = leading->is_monomial();
  if (!mono) throw std::logic_error(dump("sigma-non-monomial"));
  for (const auto& [y, c] : expansion.terms)
    if (y != image && !lr_strictly_below(cd, y, w))
      throw std::logic_error(dump("sigma-residual"));
  return {image, mono->first, mono->second};
}

CactusContext::ParabolicData::ParabolicData(ParabolicGroup p)
    : parabolic(std::move(p)),
      table(parabolic.group),
      cells(compute_cells(parabolic.group, table)) {
  sigma_values.reserve(parabolic.group.size());
  for (ElementId w = 0; w < parabolic.group.size(); ++w)
    sigma_values.push_back(sigma(parabolic.group, table, cells, w));
}

CactusContext::CactusContext(const WeylGroup& g, KLTable& table, const CellData& cells)
    : g_(&g), table_(&table), cells_(&cells), full_sigma_(g.size()) {}

SigmaValue CactusContext::full_sigma(ElementId w) {
  if (!full_sigma_[w]) full_sigma_[w] = sigma(*g_, *table_, *cells_, w);
  return *full_sigma_[w];
}

CactusContext::ParabolicData& CactusContext::parabolic_for(const Subdiagram& d) {
  auto it = parabolics_.find(d.nodes);
  if (it == parabolics_.end())
    it = parabolics_
             .emplace(d.nodes, std::make_unique<ParabolicData>(make_parabolic(*g_, d)))
             .first;
  return *it->second;
}

ElementId CactusContext::wall_crossing(const Subdiagram& d, ElementId w) {
  if (!d.connected)
    throw std::invalid_argument("wall_crossing requires a connected subdiagram");
  if (g_->diagram().is_full(d)) return full_sigma(w).image;
  ParabolicData& pd = parabolic_for(d);
  auto [rep, part] = g_->coset_decompose(w, d);
  ElementId local = pd.parabolic.from_ambient(*g_, part);
  ElementId image = pd.sigma_values[local].image;
  return g_->multiply(rep, pd.parabolic.to_ambient[image]);
}

int WallCrossingTable::index_of(const Subdiagram& d) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].nodes == d.nodes) return static_cast<int>(i);
  return -1;
}

WallCrossingTable build_wall_crossing_table(CactusContext& ctx) {
  const WeylGroup& g = ctx.group();
  WallCrossingTable t;
  t.group = &g;
  t.generators = g.diagram().connected_subdiagrams();
  t.permutation.resize(t.generators.size());
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    t.permutation[i].resize(g.size());
    for (ElementId w = 0; w < g.size(); ++w)
      t.permutation[i][w] = ctx.wall_crossing(t.generators[i], w);
  }
  t.alpha.reserve(g.size());
  for (ElementId w = 0; w < g.size(); ++w) t.alpha.push_back(ctx.full_sigma(w));
  return t;
}

ElementId act(const WallCrossingTable& t, const CactusWord& word, ElementId w) {
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    int idx = t.index_of(it->subdiagram);
    if (idx < 0)
      throw std::invalid_argument("cactus word letter " + subdiagram_string(it->subdiagram) +
                                  " is not a connected subdiagram of this group");
    w = t.permutation[idx][w];
  }
  return w;
}

ElementId act_second_copy(const WallCrossingTable& t, const Subdiagram& d, ElementId w) {
  int idx = t.index_of(d);
  if (idx < 0)
    throw std::invalid_argument("subdiagram " + subdiagram_string(d) +
                                " is not a connected subdiagram of this group");
  const WeylGroup& g = *t.group;
  return g.inverse(t.permutation[idx][g.inverse(w)]);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_cactus_relations(const WeylGroup& g, const WallCrossingTable& t) {
  VerificationReport report;
  const std::size_t n = g.size();

  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    CheckResult r{"involution", {t.generators[i]}, true, ""};
    for (ElementId w = 0; w < n && r.pass; ++w) {
      ElementId im = t.permutation[i][t.permutation[i][w]];
      if (im != w)
        r.pass = false,
        r.detail = "wc^2(" + g.word_string(w) + ") = " + g.word_string(im);
    }
    report.checks.push_back(std::move(r));
  }

  // disconnected unions commute
  for (std::size_t i = 0; i < t.generators.size(); ++i)
    for (std::size_t j = i + 1; j < t.generators.size(); ++j) {
      const Subdiagram& d1 = t.generators[i];
      const Subdiagram& d2 = t.generators[j];
      std::vector<int> joint = d1.nodes;
      joint.insert(joint.end(), d2.nodes.begin(), d2.nodes.end());
      std::sort(joint.begin(), joint.end());
      if (std::adjacent_find(joint.begin(), joint.end()) != joint.end()) continue;
      bool bonded = false;
      for (int a : d1.nodes)
        for (int b : d2.nodes)
          if (g.diagram().bonded(a, b)) bonded = true;
      if (bonded) continue;
      CheckResult r{"commuting", {d1, d2}, true, ""};
      for (ElementId w = 0; w < n && r.pass; ++w) {
        ElementId ab = t.permutation[i][t.permutation[j][w]];
        ElementId ba = t.permutation[j][t.permutation[i][w]];
        if (ab != ba)
          r.pass = false,
          r.detail = "images differ at w = " + g.word_string(w) + ": " + g.word_string(ab) +
                     " vs " + g.word_string(ba);
      }
      report.checks.push_back(std::move(r));
    }

  // nested: wc_D1 wc_D2 = wc_D2 wc_D1* for D1 strictly inside D2
  for (std::size_t i = 0; i < t.generators.size(); ++i)
    for (std::size_t j = 0; j < t.generators.size(); ++j) {
      const Subdiagram& d1 = t.generators[i];
      const Subdiagram& d2 = t.generators[j];
      if (d1.size() >= d2.size()) continue;
      if (!std::includes(d2.nodes.begin(), d2.nodes.end(), d1.nodes.begin(), d1.nodes.end()))
        continue;
      std::map<int, int> invol = g.diagram_involution(d2);
      std::vector<int> starred;
      for (int v : d1.nodes) starred.push_back(invol.at(v));
      Subdiagram d1s = g.diagram().subdiagram(std::move(starred));
      int k = t.index_of(d1s);
      CheckResult r{"nested", {d1, d2, d1s}, true, ""};
      if (k < 0) {
        r.pass = false;
        r.detail = "image subdiagram " + subdiagram_string(d1s) + " is not connected";
      }
      for (ElementId w = 0; k >= 0 && w < n && r.pass; ++w) {
        ElementId lhs = t.permutation[i][t.permutation[j][w]];
        ElementId rhs = t.permutation[j][t.permutation[static_cast<std::size_t>(k)][w]];
        if (lhs != rhs)
          r.pass = false,
          r.detail = "images differ at w = " + g.word_string(w) + ": " + g.word_string(lhs) +
                     " vs " + g.word_string(rhs);
      }
      report.checks.push_back(std::move(r));
    }

  return report;
}

VerificationReport verify_theorem(const WeylGroup& g, const WallCrossingTable& t,
                                  const CellData& cd) {
  VerificationReport report;
  const std::size_t n = g.size();

  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    const Subdiagram& d = t.generators[i];
    const auto& perm = t.permutation[i];

    CheckResult right{"right-cells-fixed", {d}, true, ""};
    for (ElementId w = 0; w < n && right.pass; ++w)
      if (cd.right.cell_of[perm[w]] != cd.right.cell_of[w])
        right.pass = false, right.detail = "right cell moves at w = " + g.word_string(w);
    report.checks.push_back(std::move(right));

    CheckResult left{"left-cells-permuted", {d}, true, ""};
    for (const auto& members : cd.left.members) {
      if (!left.pass) break;
      std::vector<ElementId> image;
      for (ElementId w : members) image.push_back(perm[w]);
      std::sort(image.begin(), image.end());
      int target = cd.left.cell_of[image.front()];
      if (image != cd.left.members[target])
        left.pass = false,
        left.detail = "image of the left cell of " + g.word_string(members.front()) +
                      " is not a left cell";
    }
    report.checks.push_back(std::move(left));

    CheckResult two{"two-sided-cells-fixed", {d}, true, ""};
    for (ElementId w = 0; w < n && two.pass; ++w)
      if (cd.two_sided.cell_of[perm[w]] != cd.two_sided.cell_of[w])
        two.pass = false, two.detail = "two-sided cell moves at w = " + g.word_string(w);
    report.checks.push_back(std::move(two));
  }

  // first copy commutes with the inverse-conjugated second copy
  for (std::size_t i = 0; i < t.generators.size(); ++i)
    for (std::size_t j = 0; j < t.generators.size(); ++j) {
      CheckResult r{"copies-commute", {t.generators[i], t.generators[j]}, true, ""};
      for (ElementId w = 0; w < n && r.pass; ++w) {
        ElementId ab = t.permutation[i][act_second_copy(t, t.generators[j], w)];
        ElementId ba = act_second_copy(t, t.generators[j], t.permutation[i][w]);
        if (ab != ba)
          r.pass = false,
          r.detail = "copies differ at w = " + g.word_string(w) + ": " + g.word_string(ab) +
                     " vs " + g.word_string(ba);
      }
      report.checks.push_back(std::move(r));
    }

  return report;
}

std::vector<std::vector<ElementId>> orbits(const WeylGroup& g, const WallCrossingTable& t) {
  std::vector<ElementId> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<ElementId(ElementId)> find = [&](ElementId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : t.permutation)
    for (ElementId w = 0; w < g.size(); ++w) {
      ElementId a = find(w), b = find(perm[w]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<ElementId, std::vector<ElementId>> buckets;
  for (ElementId w = 0; w < g.size(); ++w) buckets[find(w)].push_back(w);
  std::vector<std::vector<ElementId>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out;
}

std::size_t ProbeReport::all_true_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ProbeRow& r) {
    return r.unique_same_cell && r.monomial && r.residuals_below && r.matches_wall_crossing;
  }));
}

ProbeReport probe_parabolic_product(CactusContext& ctx, const WallCrossingTable& t,
                                    const Subdiagram& d) {
  const WeylGroup& g = ctx.group();
  if (!d.connected || g.diagram().is_full(d))
    throw std::invalid_argument("probe requires a proper connected subdiagram");
  int idx = t.index_of(d);
  if (idx < 0) throw std::invalid_argument("subdiagram is not a generator of this table");
  const CellData& cd = ctx.cells();
  ElementId w0d = g.longest_element(d);

  ProbeReport report;
  report.subdiagram = d;
  for (ElementId w = 0; w < g.size(); ++w) {
    HeckeElement x = ctx.table().kl_element(w);
    for (int s : g.element(w0d).word) x = t_mul_gen_right(x, s);
    HeckeElement expansion = ctx.table().expand_in_c(std::move(x));

    ProbeRow row{w, false, false, true, false};
    int cell = cd.two_sided.cell_of[w];
    ElementId image = 0;
    const LaurentPoly* leading = nullptr;
    int found = 0;
    for (const auto& [y, c] : expansion.terms)
      if (cd.two_sided.cell_of[y] == cell) {
        image = y;
        leading = &c;
        ++found;
      }
    row.unique_same_cell = found == 1;
    if (found == 1) {
      row.monomial = leading->is_monomial().has_value();
      row.matches_wall_crossing = image == t.permutation[idx][w];
      for (const auto& [y, c] : expansion.terms)
        if (y != image && !lr_strictly_below(cd, y, w)) row.residuals_below = false;
    } else {
      row.residuals_below = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string wall_crossing_to_json_string(const WallCrossingTable& t, const Subdiagram& d) {
  int idx = t.index_of(d);
  if (idx < 0)
    throw std::invalid_argument("subdiagram " + subdiagram_string(d) +
                                " is not a generator of this table");
  const WeylGroup& g = *t.group;
  nlohmann::json permutation = nlohmann::json::array();
  for (ElementId w = 0; w < g.size(); ++w)
    permutation.push_back({g.element(w).word, g.element(t.permutation[idx][w]).word});
  nlohmann::json out{{"subdiagram", subdiagram_json(d)}, {"permutation", permutation}};
  if (g.diagram().is_full(d)) {
    nlohmann::json alpha = nlohmann::json::array();
    for (ElementId w = 0; w < g.size(); ++w)
      alpha.push_back({{"w", g.element(w).word},
                       {"sign", t.alpha[w].sign},
                       {"k", t.alpha[w].exponent}});
    out["alpha"] = alpha;
  }
  return out.dump(2);
}

std::string report_to_json_string(const VerificationReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json diagrams = nlohmann::json::array();
    for (const auto& d : check.diagrams) diagrams.push_back(subdiagram_json(d));
    nlohmann::json instance{{"diagrams", diagrams}};
    if (!check.detail.empty()) instance["detail"] = check.detail;
    out.push_back({{"relation", check.relation}, {"instance", instance}, {"pass", check.pass}});
  }
  return out.dump(2);
}

std::string orbits_to_json_string(const WeylGroup& g,
                                  const std::vector<std::vector<ElementId>>& orbit_list) {
  nlohmann::json orbits_json = nlohmann::json::array();
  for (const auto& orbit : orbit_list) {
    nlohmann::json one = nlohmann::json::array();
    for (ElementId w : orbit) one.push_back(g.element(w).word);
    orbits_json.push_back(std::move(one));
  }
  nlohmann::json out{{"count", orbit_list.size()}, {"orbits", orbits_json}};
  return out.dump(2);
}

std::string probe_to_json_string(const WeylGroup& g, const ProbeReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"w", g.element(r.w).word},
                    {"unique_same_cell", r.unique_same_cell},
                    {"monomial", r.monomial},
                    {"residuals_below", r.residuals_below},
                    {"matches_wall_crossing", r.matches_wall_crossing}});
  nlohmann::json out{{"subdiagram", subdiagram_json(report.subdiagram)},
                     {"elements", rows},
                     {"all_properties_hold", report.all_true_count() == report.rows.size()}};
  return out.dump(2);
}

}  // namespace weylcactus

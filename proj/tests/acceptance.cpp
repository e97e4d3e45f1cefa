// Acceptance gate: one line per criterion, exit 0 only if every line passes.
// Budgets are part of the criterion where stated.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"
#include "weylcactus/cactus.hpp"
#include "weylcactus/tableaux.hpp"

using namespace weylcactus;
using weylcactus::testing::run_cli;

namespace {

const std::vector<std::string> kGroupList = {"A1", "A2", "A3", "A4",
                                             "B2", "B3", "G2", "D4"};

struct GroupCtx {
  WeylGroup g;
  KLTable table;
  CellData cells;
  CactusContext ctx;
  WallCrossingTable wct;

  explicit GroupCtx(const std::string& name)
      : g(DynkinDiagram::from_name(name)),
        table(g),
        cells(compute_cells(g, table)),
        ctx(g, table, cells),
        wct(build_wall_crossing_table(ctx)) {}
};

std::map<std::string, std::unique_ptr<GroupCtx>> g_ctx;

GroupCtx& ctx_for(const std::string& name) {
  auto& slot = g_ctx[name];
  if (!slot) slot = std::make_unique<GroupCtx>(name);
  return *slot;
}

struct Criterion {
  std::string name;
  double budget_seconds;  // 0 = untimed
  std::function<bool(std::string&)> run;
};

bool fail(std::string& note, const std::string& why) {
  note = why;
  return false;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// 1. The CLI reports exactly four right cells in A2, sizes 1,2,2,1, with the
//    identity and the longest element alone in theirs.
bool criterion_right_cells_a2(std::string& note) {
  auto r = run_cli({"cells", "--group", "A2", "--kind", "right", "--format", "json"});
  if (r.exit_code != 0) return fail(note, "cli exit " + std::to_string(r.exit_code));
  nlohmann::json parsed = nlohmann::json::parse(r.out);
  const auto& cells = parsed.at("cells");
  if (cells.size() != 4) return fail(note, "expected 4 right cells");
  std::multiset<std::size_t> sizes;
  for (const auto& cell : cells) sizes.insert(cell.size());
  if (sizes != std::multiset<std::size_t>{1, 1, 2, 2}) return fail(note, "sizes off");
  if (cells.front() != nlohmann::json::array({nlohmann::json::array()}))
    return fail(note, "identity cell is not the singleton {e}");
  if (cells.back().size() != 1 || cells.back()[0].size() != 3)
    return fail(note, "longest element cell is not a singleton");
  return true;
}

// 2. Type A cell counts: two-sided cells count partitions of n, right cells
//    count standard Young tableaux, the latter recomputed from insertion.
bool criterion_type_a_counts(std::string& note) {
  const std::map<int, std::pair<std::size_t, std::size_t>> expected = {
      {3, {3, 4}}, {4, {5, 10}}, {5, {7, 26}}};
  for (auto [n, counts] : expected) {
    GroupCtx& c = ctx_for("A" + std::to_string(n - 1));
    std::set<Tableau> recording;
    for (const auto& p : all_permutations(n)) recording.insert(rsk(p).q);
    if (recording.size() != counts.second)
      return fail(note, "tableau count off at n=" + std::to_string(n));
    if (c.cells.two_sided.count() != counts.first)
      return fail(note, "two-sided count off at n=" + std::to_string(n));
    if (c.cells.right.count() != recording.size())
      return fail(note, "right cells != recording tableaux at n=" + std::to_string(n));
  }
  return true;
}

// 3. The defining relations of the action hold in every listed group.
bool criterion_relations(std::string& note) {
  for (const std::string& name : kGroupList) {
    GroupCtx& c = ctx_for(name);
    VerificationReport r = verify_cactus_relations(c.g, c.wct);
    for (const auto& check : r.checks)
      if (!check.pass) return fail(note, name + " " + check.relation + ": " + check.detail);
  }
  return true;
}

// 4. Wall-crossing fixes every right cell pointwise and carries left cells
//    onto left cells.
bool criterion_cells_respected(std::string& note) {
  for (const std::string& name : kGroupList) {
    GroupCtx& c = ctx_for(name);
    for (std::size_t gi = 0; gi < c.wct.generators.size(); ++gi) {
      const auto& perm = c.wct.permutation[gi];
      for (ElementId w = 0; w < c.g.size(); ++w)
        if (c.cells.right.cell_of[perm[w]] != c.cells.right.cell_of[w])
          return fail(note, name + ": right cell moved");
      for (const auto& cell : c.cells.left.members) {
        std::vector<ElementId> image;
        for (ElementId w : cell) image.push_back(perm[w]);
        std::sort(image.begin(), image.end());
        int target = c.cells.left.cell_of[image.front()];
        if (image != c.cells.left.members[target])
          return fail(note, name + ": left cell image is not a left cell");
      }
    }
  }
  return true;
}

// 5. The inversion-conjugated copy commutes with the original, generator by
//    generator, as permutations of the group.
bool criterion_copies_commute(std::string& note) {
  for (const std::string& name : kGroupList) {
    GroupCtx& c = ctx_for(name);
    for (const Subdiagram& d1 : c.wct.generators)
      for (const Subdiagram& d2 : c.wct.generators) {
        int i1 = c.wct.index_of(d1);
        for (ElementId w = 0; w < c.g.size(); ++w) {
          ElementId a = c.wct.permutation[i1][act_second_copy(c.wct, d2, w)];
          ElementId b = act_second_copy(c.wct, d2, c.wct.permutation[i1][w]);
          if (a != b) return fail(note, name + ": copies disagree");
        }
      }
  }
  return true;
}

// 6. The stored permutations agree with a recomputation through the coset
//    decomposition, with the parabolic side rebuilt from scratch here.
bool criterion_coset_recomputation(std::string& note) {
  for (const std::string& name : kGroupList) {
    GroupCtx& c = ctx_for(name);
    for (std::size_t gi = 0; gi < c.wct.generators.size(); ++gi) {
      const Subdiagram& d = c.wct.generators[gi];
      // independent parabolic: own group, own table, own cells, own sigma
      ParabolicGroup par = make_parabolic(c.g, d);
      KLTable ptable(par.group);
      CellData pcells = compute_cells(par.group, ptable);
      for (ElementId w = 0; w < c.g.size(); ++w) {
        auto [rep, part] = c.g.coset_decompose(w, d);
        SigmaValue sv = sigma(par.group, ptable, pcells, par.from_ambient(c.g, part));
        ElementId expected = c.g.multiply(rep, par.to_ambient.at(sv.image));
        if (c.wct.permutation[gi][w] != expected)
          return fail(note, name + ": stored image differs from recomputation");
      }
    }
  }
  return true;
}

// 7. In type A the orbits of the whole family of generators are exactly the
//    right cells.
bool criterion_orbits_match_right_cells(std::string& note) {
  for (int n : {3, 4, 5}) {
    GroupCtx& c = ctx_for("A" + std::to_string(n - 1));
    auto orbit_list = orbits(c.g, c.wct);
    if (orbit_list.size() != c.cells.right.count())
      return fail(note, "orbit count off at n=" + std::to_string(n));
    for (const auto& orbit : orbit_list) {
      int cell = c.cells.right.cell_of[orbit.front()];
      if (orbit != c.cells.right.members[cell])
        return fail(note, "orbit is not a right cell at n=" + std::to_string(n));
    }
  }
  return true;
}

// 8. The Hecke-side involution matches evacuation of the recording tableau
//    and fixes the insertion tableau, on every symmetric group up to S5.
bool criterion_sigma_vs_evacuation(std::string& note) {
  for (int n = 2; n <= 5; ++n) {
    GroupCtx& c = ctx_for("A" + std::to_string(n - 1));
    for (ElementId w = 0; w < c.g.size(); ++w) {
      RSKPair before = rsk(weyl_to_oneline(c.g, w));
      RSKPair after = rsk(weyl_to_oneline(c.g, c.ctx.full_sigma(w).image));
      if (!(after.p == before.p)) return fail(note, "insertion tableau moved");
      if (!(after.q == evacuation(before.q)))
        return fail(note, "recording tableau is not evacuated");
    }
  }
  return true;
}

// 9. Crossing a single bond moves each element by at most one elementary
//    Knuth relation on one-line words.
bool criterion_knuth_moves(std::string& note) {
  for (int n = 3; n <= 5; ++n) {
    GroupCtx& c = ctx_for("A" + std::to_string(n - 1));
    for (int i = 1; i + 1 <= c.g.rank(); ++i) {
      Subdiagram d = c.g.diagram().subdiagram({i, i + 1});
      int gi = c.wct.index_of(d);
      for (ElementId w = 0; w < c.g.size(); ++w) {
        ElementId image = c.wct.permutation[gi][w];
        if (image == w) continue;
        if (!knuth_related(weyl_to_oneline(c.g, w), weyl_to_oneline(c.g, image)))
          return fail(note, "image is more than one Knuth move away");
      }
    }
  }
  return true;
}

// 10. The recursion agrees with an independent triangular solve of the bar
//     fixed-point equations, and the standard shape facts hold.
bool criterion_canonical_basis_oracle(std::string& note) {
  for (const char* name : {"A1", "A2", "A3", "B2"}) {
    WeylGroup g(DynkinDiagram::from_name(name));
    KLTable table(g);
    for (ElementId w = 0; w < g.size(); ++w) {
      HeckeElement c_w = table.kl_element(w);
      if (!(c_w == weylcactus::testing::bar_solve_kl(g, w)))
        return fail(note, std::string(name) + ": oracle mismatch");
      if (!(bar_involution(c_w) == c_w))
        return fail(note, std::string(name) + ": not bar invariant");
      for (const auto& [y, h] : c_w.terms) {
        if (y == w && !(h == LaurentPoly::one()))
          return fail(note, std::string(name) + ": diagonal is not 1");
        if (y != w && h.max_exponent() > -1)
          return fail(note, std::string(name) + ": degree bound violated");
        LaurentPoly shifted =
            h.shifted(1, g.element(w).length - g.element(y).length);
        for (auto [exp, coeff] : shifted.terms())
          if (exp < 0 || coeff <= 0)
            return fail(note, std::string(name) + ": negative normalized entry");
      }
    }
  }
  return true;
}

// 11. Right multiplication by T_{w0} hits exactly one canonical term in the
//     same two-sided cell, with coefficient a signed power whose exponent
//     peaks exactly at the identity and the longest element.
bool criterion_leading_term_structure(std::string& note) {
  for (const std::string& name : kGroupList) {
    GroupCtx& c = ctx_for(name);
    int top = static_cast<int>(c.g.element(c.g.longest()).length);
    int sign_at_identity = top % 2 == 0 ? 1 : -1;
    for (ElementId w = 0; w < c.g.size(); ++w) {
      SigmaValue sv;
      try {
        sv = c.ctx.full_sigma(w);  // throws when the expansion shape breaks
      } catch (const std::logic_error& e) {
        return fail(note, name + ": " + e.what());
      }
      if (sv.sign != 1 && sv.sign != -1) return fail(note, name + ": sign off");
      if (std::abs(sv.exponent) > top) return fail(note, name + ": exponent range");
      if ((w == 0) != (sv.exponent == -top))
        return fail(note, name + ": identity endpoint off");
      if (w == 0 && sv.sign != sign_at_identity)
        return fail(note, name + ": identity sign off");
      if ((w == c.g.longest()) != (sv.exponent == top))
        return fail(note, name + ": longest endpoint off");
      if (w == c.g.longest() && sv.sign != 1)
        return fail(note, name + ": longest sign off");
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"right cells of A2 through the CLI", 1.0, criterion_right_cells_a2},
      {"type A cell counts against tableaux", 30.0, criterion_type_a_counts},
      {"cactus relations in eight groups", 300.0, criterion_relations},
      {"cells respected by wall-crossing", 0.0, criterion_cells_respected},
      {"the two copies commute", 0.0, criterion_copies_commute},
      {"coset recomputation of the action", 0.0, criterion_coset_recomputation},
      {"orbits equal right cells in type A", 60.0, criterion_orbits_match_right_cells},
      {"sigma matches evacuation", 0.0, criterion_sigma_vs_evacuation},
      {"single bonds act by Knuth moves", 0.0, criterion_knuth_moves},
      {"canonical basis equals the bar-solve oracle", 0.0, criterion_canonical_basis_oracle},
      {"leading term structure of T_w0", 0.0, criterion_leading_term_structure},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      ok = false;
      note = "over budget of " + std::to_string(c.budget_seconds) + " s";
    }
    all_pass = all_pass && ok;
    std::printf("%s  %2zu  %-45s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), seconds, note.empty() ? "" : "  ",
                note.c_str());
  }
  return all_pass ? 0 : 1;
}

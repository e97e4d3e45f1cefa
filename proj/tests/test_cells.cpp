#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "weylcactus/cells.hpp"

using namespace weylcactus;

namespace {

// keeps the group and table alive alongside the cells that point at them
struct CellFixture {
  WeylGroup g;
  KLTable table;
  CellData cd;

  explicit CellFixture(const char* name)
      : g(DynkinDiagram::from_name(name)), table(g), cd(compute_cells(g, table)) {}
};

// reachability oracle: y right-below w when C_y appears in some C_w * C_s,
// computed here from scratch with plain matrix closure instead of SCC code
std::vector<std::vector<bool>> right_below_closure(const WeylGroup& g, KLTable& t) {
  std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (ElementId w = 0; w < n; ++w) {
    reach[w][w] = true;
    for (int s = 1; s <= g.rank(); ++s) {
      HeckeElement prod = t.expand_in_c(t_mul_gen_right(t.c_to_t(c_unit(g, w)), s));
      for (const auto& [y, c] : prod.terms)
        if (!c.is_zero()) reach[w][y] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

TEST_CASE("cell counts across the small groups") {
  struct Row {
    const char* name;
    std::size_t left, right, two_sided;
  };
  for (Row r : {Row{"A1", 2, 2, 2}, Row{"A2", 4, 4, 3}, Row{"A3", 10, 10, 5},
                Row{"B2", 4, 4, 3}, Row{"B3", 14, 14, 6}, Row{"G2", 4, 4, 3}}) {
    CAPTURE(r.name);
    CellFixture f(r.name);
    const CellData& cd = f.cd;
    CHECK(cd.left.count() == r.left);
    CHECK(cd.right.count() == r.right);
    CHECK(cd.two_sided.count() == r.two_sided);
  }
}

TEST_CASE("exact cells of the rank two symmetric group") {
  WeylGroup g(DynkinDiagram::from_name("A2"));
  KLTable table(g);
  CellData cd = compute_cells(g, table);

  ElementId s1 = g.generator(1), s2 = g.generator(2);
  ElementId s12 = g.element_from_word({1, 2}), s21 = g.element_from_word({2, 1});

  CHECK(cd.left.cell_of[0] == 0);
  CHECK(cd.left.members[cd.left.cell_of[s1]] == std::vector<ElementId>{s1, s21});
  CHECK(cd.left.members[cd.left.cell_of[s2]] == std::vector<ElementId>{s2, s12});
  CHECK(cd.left.members[cd.left.cell_of[g.longest()]] ==
        std::vector<ElementId>{g.longest()});

  CHECK(cd.right.members[cd.right.cell_of[s1]] == std::vector<ElementId>{s1, s12});
  CHECK(cd.right.members[cd.right.cell_of[s2]] == std::vector<ElementId>{s2, s21});

  CHECK(cd.two_sided.count() == 3);
  CHECK(cd.two_sided.cell_of[s1] == cd.two_sided.cell_of[s12]);
  CHECK(cd.two_sided.cell_of[s1] == cd.two_sided.cell_of[s21]);
  CHECK(cd.two_sided.cell_of[s1] == cd.two_sided.cell_of[s2]);
  CHECK(cd.two_sided.cell_of[0] == 0);
  CHECK(cd.two_sided.cell_of[g.longest()] == 2);

  // frozen condensation edges, (below, above)
  using E = std::pair<int, int>;
  CHECK(cd.left.order_edges == std::vector<E>{{1, 0}, {2, 0}, {3, 1}, {3, 2}});
  CHECK(cd.two_sided.order_edges == std::vector<E>{{1, 0}, {2, 1}});
}

TEST_CASE("identity heads the order and the longest element ends it") {
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    CAPTURE(name);
    CellFixture f(name);
    const CellData& cd = f.cd;
    const WeylGroup& g = f.g;
    for (CellKind kind : {CellKind::Left, CellKind::Right, CellKind::TwoSided}) {
      const CellStructure& cs = cd.of(kind);
      CHECK(cs.cell_of[0] == 0);
      CHECK(cs.members[0] == std::vector<ElementId>{0});
      CHECK(cs.cell_of[g.longest()] == static_cast<int>(cs.count()) - 1);
      CHECK(cs.members.back() == std::vector<ElementId>{g.longest()});
      // ids are consistent with the edge direction: below means larger id
      for (auto [below, above] : cs.order_edges) CHECK(below > above);
    }
  }
}

TEST_CASE("inverse flips left and right cells") {
  for (const char* name : {"A3", "B2"}) {
    CAPTURE(name);
    CellFixture f(name);
    const CellData& cd = f.cd;
    const WeylGroup& g = f.g;
    for (ElementId w = 0; w < g.size(); ++w) {
      ElementId wi = g.inverse(w);
      CHECK(cd.left.cell_of[w] == cd.right.cell_of[wi]);
      CHECK(cd.right.cell_of[w] == cd.left.cell_of[wi]);
      CHECK(cd.two_sided.cell_of[w] == cd.two_sided.cell_of[wi]);
    }
  }
}

TEST_CASE("two-sided cells are unions of one-sided cells") {
  for (const char* name : {"A3", "B3", "G2"}) {
    CAPTURE(name);
    CellFixture f(name);
    const CellData& cd = f.cd;
    const WeylGroup& g = f.g;
    for (ElementId a = 0; a < g.size(); ++a)
      for (ElementId b = 0; b < g.size(); ++b) {
        if (cd.left.cell_of[a] == cd.left.cell_of[b])
          CHECK(cd.two_sided.cell_of[a] == cd.two_sided.cell_of[b]);
        if (cd.right.cell_of[a] == cd.right.cell_of[b])
          CHECK(cd.two_sided.cell_of[a] == cd.two_sided.cell_of[b]);
      }
  }
}

TEST_CASE("right preorder matches an independent closure") {
  for (const char* name : {"A2", "A3", "B2"}) {
    CAPTURE(name);
    WeylGroup g(DynkinDiagram::from_name(name));
    KLTable table(g);
    CellData cd = compute_cells(g, table);
    auto reach = right_below_closure(g, table);
    for (ElementId a = 0; a < g.size(); ++a)
      for (ElementId b = 0; b < g.size(); ++b) {
        bool same_cell = reach[a][b] && reach[b][a];
        CHECK(same_cell == (cd.right.cell_of[a] == cd.right.cell_of[b]));
      }
  }
}

TEST_CASE("strict two-sided comparison") {
  CellFixture f("A2");
  const CellData& cd = f.cd;
  const WeylGroup& g = f.g;
  ElementId s1 = g.generator(1), s2 = g.generator(2);
  for (ElementId w = 0; w < g.size(); ++w) CHECK(!lr_strictly_below(cd, w, w));
  CHECK(lr_strictly_below(cd, g.longest(), 0));
  CHECK(lr_strictly_below(cd, g.longest(), s1));
  CHECK(lr_strictly_below(cd, s1, 0));
  CHECK(!lr_strictly_below(cd, 0, g.longest()));
  CHECK(!lr_strictly_below(cd, s1, s2));  // same cell, not strict

  // strictness is a partial order on cells: irreflexive and transitive
  CellFixture f4("D4");
  const CellData& d4 = f4.cd;
  std::size_t n_cells = d4.two_sided.count();
  for (std::size_t a = 0; a < n_cells; ++a) {
    CHECK(!d4.strictly_below[a][a]);
    for (std::size_t b = 0; b < n_cells; ++b)
      if (d4.strictly_below[a][b])
        for (std::size_t c = 0; c < n_cells; ++c)
          if (d4.strictly_below[b][c]) CHECK(d4.strictly_below[a][c]);
  }
}

TEST_CASE("serialized cells parse back") {
  WeylGroup g(DynkinDiagram::from_name("B2"));
  KLTable table(g);
  CellData cd = compute_cells(g, table);

  auto parsed = nlohmann::json::parse(cells_to_json_string(cd, CellKind::Left));
  CHECK(parsed.at("kind") == "left");
  CHECK(parsed.at("cells").size() == cd.left.count());
  std::size_t total = 0;
  for (const auto& cell : parsed.at("cells")) total += cell.size();
  CHECK(total == g.size());
  CHECK(parsed.at("cells")[0][0] == nlohmann::json::array());  // identity word

  CHECK(parsed.at("order").size() == cd.left.order_edges.size());

  std::string dot = cells_to_dot(cd, CellKind::TwoSided);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

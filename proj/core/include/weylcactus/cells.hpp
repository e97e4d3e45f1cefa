#pragma once

#include <string>
#include <vector>

#include "weylcactus/hecke.hpp"

namespace weylcactus {

enum class CellKind { Left, Right, TwoSided };

// One cell partition plus its condensation DAG. Cell ids follow a
// topological order from the top (the identity's cell is 0), ties broken by
// smallest contained element id. order_edges hold (below, above) pairs of
// distinct cell ids, where "y below w" means C_y appears in the based ideal
// generated by C_w.
struct CellStructure {
  std::vector<int> cell_of;                     // element id -> cell id
  std::vector<std::vector<ElementId>> members;  // cell id -> sorted elements
  std::vector<std::pair<int, int>> order_edges;
  std::size_t count() const { return members.size(); }
};

struct CellData {
  const WeylGroup* group = nullptr;
  CellStructure left, right, two_sided;
  // strictly_below[b][a] = two-sided cell a lies strictly below cell b
  std::vector<std::vector<bool>> strictly_below;

  const CellStructure& of(CellKind kind) const;
};

/*
  Cells from the canonical basis: y is left-below w when C_y has a nonzero
  coefficient in some C_s * C_w; cells are the strongly connected components
  of that relation, right cells come from inverses, and two-sided cells from
  the union of the two edge sets.
*/
CellData compute_cells(const WeylGroup& g, KLTable& table);

bool lr_strictly_below(const CellData& cd, ElementId a, ElementId b);

std::string cells_to_json_string(const CellData& cd, CellKind kind);
std::string cells_to_dot(const CellData& cd, CellKind kind);

std::string cell_kind_name(CellKind kind);

}  // namespace weylcactus

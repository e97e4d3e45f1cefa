#include "weylcactus/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace weylcactus {

namespace {

// Strongly connected components of a digraph given by sorted adjacency
// lists; iterative Tarjan, deterministic component enumeration.
std::vector<int> tarjan_scc(const std::vector<std::vector<ElementId>>& adj, int& n_comps) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n), num(n, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  n_comps = 0;

  struct Frame {
    int v;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (edge < adj[v].size()) {
        int w = static_cast<int>(adj[v][edge++]);
        if (num[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = n_comps;
            if (w == v) break;
          }
          ++n_comps;
        }
        int finished = v;
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().v;
          low[parent] = std::min(low[parent], low[finished]);
        }
      }
    }
  }
  return comp;
}

// Builds the final CellStructure from a downward adjacency (edges w -> y
// meaning y is below w): SCCs, then topological ids from the top.
CellStructure condense(const std::vector<std::vector<ElementId>>& down) {
  const int n = static_cast<int>(down.size());
  int n_comps = 0;
  std::vector<int> raw = tarjan_scc(down, n_comps);

  // distinct downward edges between components; in_deg counts edges from above
  std::vector<std::set<int>> below(n_comps);
  for (int w = 0; w < n; ++w)
    for (ElementId y : down[w])
      if (raw[w] != raw[static_cast<int>(y)]) below[raw[w]].insert(raw[static_cast<int>(y)]);

  std::vector<int> in_deg(n_comps, 0);
  for (int c = 0; c < n_comps; ++c)
    for (int b : below[c]) ++in_deg[b];

  std::vector<ElementId> min_member(n_comps, static_cast<ElementId>(n));
  for (int w = 0; w < n; ++w)
    min_member[raw[w]] = std::min(min_member[raw[w]], static_cast<ElementId>(w));

  // Kahn order starting at the top cells, smallest member id first
  std::vector<int> renumber(n_comps, -1);
  std::set<std::pair<ElementId, int>> ready;
  for (int c = 0; c < n_comps; ++c)
    if (in_deg[c] == 0) ready.insert({min_member[c], c});
  int next_id = 0;
  while (!ready.empty()) {
    int c = ready.begin()->second;
    ready.erase(ready.begin());
    renumber[c] = next_id++;
    for (int b : below[c])
      if (--in_deg[b] == 0) ready.insert({min_member[b], b});
  }
  if (next_id != n_comps) throw std::logic_error("cells: condensation is not acyclic");

  CellStructure out;
  out.cell_of.resize(n);
  out.members.resize(n_comps);
  for (int w = 0; w < n; ++w) {
    out.cell_of[w] = renumber[raw[w]];
    out.members[out.cell_of[w]].push_back(static_cast<ElementId>(w));
  }
  std::set<std::pair<int, int>> edges;
  for (int c = 0; c < n_comps; ++c)
    for (int b : below[c]) edges.insert({renumber[b], renumber[c]});  // (below, above)
  out.order_edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace

const CellStructure& CellData::of(CellKind kind) const {
  switch (kind) {
    case CellKind::Left: return left;
    case CellKind::Right: return right;
    default: return two_sided;
  }
}

std::string cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Left: return "left";
    case CellKind::Right: return "right";
    default: return "two-sided";
  }
}

CellData compute_cells(const WeylGroup& g, KLTable& table) {
  table.build_all();
  const int n = static_cast<int>(g.size());

  // left edges: support of C_s C_w in the canonical basis, w -> y downward
  std::vector<std::vector<ElementId>> left_down(n);
  for (ElementId w = 0; w < g.size(); ++w) {
    std::set<ElementId> targets;
    HeckeElement cw = table.kl_element(w);
    for (int s = 1; s <= g.rank(); ++s) {
      HeckeElement prod =
          hecke_add(t_mul_gen_left(s, cw), hecke_scale(cw, LaurentPoly::v(-1)));
      for (const auto& [y, c] : table.expand_in_c(std::move(prod)).terms)
        if (y != w) targets.insert(y);
    }
    left_down[w].assign(targets.begin(), targets.end());
  }

  std::vector<std::vector<ElementId>> right_down(n), both(n);
  for (ElementId w = 0; w < g.size(); ++w) {
    std::set<ElementId> targets;
    for (ElementId y : left_down[g.inverse(w)]) targets.insert(g.inverse(y));
    right_down[w].assign(targets.begin(), targets.end());
    std::set<ElementId> merged(left_down[w].begin(), left_down[w].end());
    merged.insert(targets.begin(), targets.end());
    both[w].assign(merged.begin(), merged.end());
  }

  CellData cd;
  cd.group = &g;
  cd.left = condense(left_down);
  cd.right = condense(right_down);
  cd.two_sided = condense(both);

  // reachability closure of the two-sided condensation, from the top down
  const std::size_t nc = cd.two_sided.count();
  cd.strictly_below.assign(nc, std::vector<bool>(nc, false));
  std::vector<std::vector<int>> below_adj(nc);
  for (auto [b, a] : cd.two_sided.order_edges) below_adj[a].push_back(b);
  // cell ids are topological from the top, so process in reverse id order
  for (int c = static_cast<int>(nc) - 1; c >= 0; --c)
    for (int b : below_adj[c]) {
      cd.strictly_below[c][b] = true;
      for (std::size_t x = 0; x < nc; ++x)
        if (cd.strictly_below[b][x]) cd.strictly_below[c][x] = true;
    }
  return cd;
}

bool lr_strictly_below(const CellData& cd, ElementId a, ElementId b) {
  int ca = cd.two_sided.cell_of[a];
  int cb = cd.two_sided.cell_of[b];
  return ca != cb && cd.strictly_below[cb][ca];
}

std::string cells_to_json_string(const CellData& cd, CellKind kind) {
  const CellStructure& cs = cd.of(kind);
  const WeylGroup& g = *cd.group;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& members : cs.members) {
    nlohmann::json cell = nlohmann::json::array();
    for (ElementId w : members) cell.push_back(g.element(w).word);
    cells.push_back(std::move(cell));
  }
  nlohmann::json order = nlohmann::json::array();
  for (auto [b, a] : cs.order_edges) order.push_back({b, a});
  nlohmann::json out{{"kind", cell_kind_name(kind)}, {"cells", cells}, {"order", order}};
  return out.dump(2);
}

std::string cells_to_dot(const CellData& cd, CellKind kind) {
  const CellStructure& cs = cd.of(kind);
  const WeylGroup& g = *cd.group;
  std::string out = "digraph \"" + cell_kind_name(kind) + " cells\" {\n";
  out += "  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < cs.count(); ++c) {
    std::string label = "cell " + std::to_string(c) + "\\n";
    for (std::size_t i = 0; i < cs.members[c].size(); ++i) {
      if (i) label += " ";
      label += "[" + g.word_string(cs.members[c][i]) + "]";
    }
    out += "  c" + std::to_string(c) + " [label=\"" + label + "\"];\n";
  }
  // arrows point from a cell to the cells directly below it
  for (auto [b, a] : cs.order_edges)
    out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace weylcactus

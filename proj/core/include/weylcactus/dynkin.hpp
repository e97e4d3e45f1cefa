#pragma once

#include <string>
#include <vector>

namespace weylcactus {

using CartanMatrix = std::vector<std::vector<int>>;

// A set of diagram nodes, sorted and duplicate-free. `connected` refers to
// the induced subgraph of the diagram the set was taken from.
struct Subdiagram {
  std::vector<int> nodes;
  bool connected = false;

  bool empty() const { return nodes.empty(); }
  std::size_t size() const { return nodes.size(); }
  bool contains(int node) const;

  friend bool operator==(const Subdiagram& a, const Subdiagram& b) {
    return a.nodes == b.nodes;
  }
  friend bool operator<(const Subdiagram& a, const Subdiagram& b) {
    return a.nodes < b.nodes;
  }
};

/*
  A finite-type Dynkin diagram, stored as its (integer) Cartan matrix with
  1-based node labels. Construction validates the matrix: 2 on the diagonal,
  nonpositive integers off it, a symmetric zero pattern, and a positive
  definite symmetrization. Rejections name the offending entries or the
  failing principal minor.
*/
class DynkinDiagram {
 public:
  // "A3", "B2", ..., "G2". Supported: A(n>=1), B(n>=2), C(n>=2),
  // D(n>=3), E6, E7, E8, F4, G2.
  static DynkinDiagram from_name(const std::string& name);
  static DynkinDiagram from_cartan(CartanMatrix cartan, std::string name = "");

  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::string& name() const { return name_; }

  int entry(int i, int j) const { return cartan_[i - 1][j - 1]; }  // 1-based
  bool bonded(int i, int j) const { return i != j && entry(i, j) != 0; }

  Subdiagram subdiagram(std::vector<int> nodes) const;  // validates node ids
  Subdiagram full_subdiagram() const;
  bool is_full(const Subdiagram& d) const { return d.size() == static_cast<std::size_t>(rank()); }

  // All nonempty connected node subsets, ordered by size then lexicographic.
  std::vector<Subdiagram> connected_subdiagrams() const;

  // Cartan matrix induced on a node subset, rows/columns in the given order.
  CartanMatrix induced_cartan(const std::vector<int>& nodes) const;

  // True iff the matrix is exactly the simply-laced path on nodes 1..n,
  // the labelling the symmetric-group bridge in tableaux.hpp relies on.
  bool is_type_a() const;

 private:
  DynkinDiagram() = default;
  CartanMatrix cartan_;
  std::string name_;
};

}  // namespace weylcactus

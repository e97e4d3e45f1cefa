#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylcactus/dynkin.hpp"

namespace weylcactus {

using ElementId = std::uint32_t;

// One group element: its action on the full root list (indices into
// WeylGroup::roots()), its length, and one cached reduced word.
struct WeylElement {
  std::vector<std::uint32_t> root_perm;
  int length = 0;
  std::vector<int> word;  // generator node ids
};

struct CosetDecomposition {
  ElementId min_rep;         // shortest representative of w W_D
  ElementId parabolic_part;  // element of W_D; lengths add up to l(w)
};

/*
  A finite Weyl group realized on its root system. Elements are enumerated
  breadth-first from the identity, multiplying by generators in ascending
  node order, so ids are deterministic and sorted by length; id 0 is the
  identity. Words are read left to right: the word {1,2} is s1*s2, the
  element whose action is s1 after s2 (multiply(a,b) composes a's root
  permutation after b's).
*/
class WeylGroup {
 public:
  explicit WeylGroup(DynkinDiagram diagram);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;
  WeylGroup(WeylGroup&&) = default;
  WeylGroup& operator=(WeylGroup&&) = default;

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  std::size_t size() const { return elements_.size(); }
  std::size_t positive_root_count() const { return n_positive_; }
  // simple-root coordinates; index i+positive_root_count() is -roots()[i]
  const std::vector<std::vector<int>>& roots() const { return roots_; }

  const WeylElement& element(ElementId w) const { return elements_[w]; }
  ElementId identity() const { return 0; }
  ElementId generator(int node) const;  // 1-based
  ElementId longest() const { return longest_; }

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  int length(ElementId a) const { return elements_[a].length; }
  ElementId right_mult_gen(ElementId a, int node) const;
  ElementId left_mult_gen(ElementId a, int node) const;

  bool has_left_descent(ElementId a, int node) const;
  bool has_right_descent(ElementId a, int node) const;
  std::vector<int> descents_left(ElementId a) const;
  std::vector<int> descents_right(ElementId a) const;

  bool bruhat_leq(ElementId y, ElementId w) const;

  // Longest element of the standard parabolic subgroup on d (e for empty d).
  ElementId longest_element(const Subdiagram& d) const;

  // w = min_rep * parabolic_part with lengths adding; min_rep has no right
  // descent in d. The pair is unique.
  CosetDecomposition coset_decompose(ElementId w, const Subdiagram& d) const;

  // Conjugation by the longest element of the (connected) subdiagram d maps
  // each generator of d to a generator of d; returns that node involution.
  std::map<int, int> diagram_involution(const Subdiagram& d) const;

  // Folds an arbitrary word over the generators; reduces automatically.
  ElementId element_from_word(const std::vector<int>& word) const;

  std::string word_string(ElementId w) const;  // "1,2,1", "e" for the identity

 private:
  DynkinDiagram diagram_;
  std::vector<std::vector<int>> roots_;
  std::size_t n_positive_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<ElementId> right_mult_;  // |W| x rank
  std::vector<ElementId> left_mult_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> left_desc_, right_desc_;  // bit i = node i+1
  ElementId longest_ = 0;
};

// A standard parabolic subgroup materialized as its own WeylGroup over the
// induced Cartan matrix, with the generator correspondence made explicit.
struct ParabolicGroup {
  WeylGroup group;
  std::vector<int> ambient_nodes;      // local node i (1-based) -> ambient node
  std::vector<ElementId> to_ambient;   // local element id -> ambient element id

  // Ambient element lying in the parabolic subgroup -> local id. Throws if
  // some reduced word letter falls outside the subdiagram.
  ElementId from_ambient(const WeylGroup& ambient, ElementId w) const;
};

ParabolicGroup make_parabolic(const WeylGroup& g, const Subdiagram& d);

}  // namespace weylcactus

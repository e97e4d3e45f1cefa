#pragma once

#include <string>
#include <vector>

#include "weylcactus/coxeter.hpp"

namespace weylcactus {

struct Tableau {
  std::vector<std::vector<int>> rows;

  std::size_t size() const;
  std::vector<int> shape() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

// strictly increasing rows and columns, entries exactly 1..n
bool is_standard(const Tableau& t);

struct RSKPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
};

// Row insertion of a permutation given in one-line notation (values 1..n).
RSKPair rsk(const std::vector<int>& oneline);
std::vector<int> rsk_inverse(const RSKPair& pair);  // validates the pair

// Schutzenberger evacuation of a standard tableau (an involution).
Tableau evacuation(const Tableau& t);

// True iff a and b differ by exactly one elementary Knuth relation:
// x z y <-> z x y  or  y x z <-> y z x, with x < y < z.
bool knuth_related(const std::vector<int>& a, const std::vector<int>& b);

/*
  Bridge between a type A Weyl group on nodes 1..n-1 and one-line
  permutations of 1..n. Generator i maps to the transposition of i, i+1;
  a word maps to the composition with its first letter outermost, matching
  multiply(a, b) = "a after b". Under this convention two elements lie in
  the same left cell exactly when their recording tableaux agree.
*/
enum class OneLineConvention { first_letter_outermost, last_letter_outermost };
inline constexpr OneLineConvention kOneLineConvention =
    OneLineConvention::first_letter_outermost;

std::vector<int> weyl_to_oneline(const WeylGroup& g, ElementId w);
ElementId oneline_to_weyl(const WeylGroup& g, const std::vector<int>& oneline);

std::string tableau_to_text(const Tableau& t);

}  // namespace weylcactus

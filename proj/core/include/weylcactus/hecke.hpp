#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylcactus/coxeter.hpp"
#include "weylcactus/laurent.hpp"

namespace weylcactus {

/*
  Hecke algebra of a Weyl group over Z[v, v^-1], in the normalization

      T_s * T_w = T_{sw}                        if l(sw) > l(w)
      T_s * T_w = (v - v^-1) T_w + T_{sw}       otherwise,

  so (T_s - v)(T_s + v^-1) = 0 and T_s^-1 = T_s - (v - v^-1). The canonical
  basis element C_w is the unique bar-invariant element of
  T_w + sum_{y<w} v^-1 Z[v^-1] T_y; in particular C_s = T_s + v^-1 T_e.
  mu(y, w) is the coefficient of v^-1 in h(y, w), the T_y coordinate of C_w.
*/

enum class HeckeBasis { T, C };

struct HeckeElement {
  const WeylGroup* group = nullptr;
  HeckeBasis basis = HeckeBasis::T;
  std::map<ElementId, LaurentPoly> terms;

  void add_term(ElementId w, const LaurentPoly& p);  // accumulates, drops zeros
  bool is_zero() const { return terms.empty(); }
  LaurentPoly coefficient(ElementId w) const;
  std::string to_string() const;  // e.g. "T(1,2) + v^-1*T(1)" / "C(...)"

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.group == b.group && a.basis == b.basis && a.terms == b.terms;
  }
};

HeckeElement t_unit(const WeylGroup& g, ElementId w);  // T_w
HeckeElement c_unit(const WeylGroup& g, ElementId w);  // C_w as a C-basis tag

HeckeElement t_mul_gen_left(int node, const HeckeElement& x);
HeckeElement t_mul_gen_right(const HeckeElement& x, int node);
HeckeElement t_mul(const HeckeElement& x, const HeckeElement& y);
HeckeElement hecke_add(HeckeElement x, const HeckeElement& y);
HeckeElement hecke_scale(HeckeElement x, const LaurentPoly& p);

// bar: v -> v^-1, T_w -> (T_{w^-1})^-1, extended multiplicatively.
HeckeElement bar_involution(const HeckeElement& x);

// v = 1 specialization: image in the group algebra as element -> integer.
std::map<ElementId, long long> specialize_at_one(const HeckeElement& x);

/*
  Table of canonical basis elements, one column per w holding the
  h(y, w). Columns are computed on demand through the recursion

      C_w = C_s C_{sw} - sum_{y < sw, sy < y} mu(y, sw) C_y

  with s the smallest left descent of w, and validated on the spot:
  support inside the Bruhat interval, h(w,w) = 1, h(y,w) in v^-1 Z[v^-1]
  for y < w, and bar(C_w) = C_w. A failed check throws std::logic_error.
*/
class KLTable {
 public:
  explicit KLTable(const WeylGroup& g);

  const WeylGroup& group() const { return *g_; }
  void ensure(ElementId w);
  void build_all();
  bool complete() const;

  const LaurentPoly& h(ElementId y, ElementId w);  // zero when y is not below w
  long long mu(ElementId y, ElementId w);
  const std::map<ElementId, LaurentPoly>& column(ElementId w);

  HeckeElement kl_element(ElementId w);     // C_w written in the T basis
  HeckeElement expand_in_c(HeckeElement x); // T-basis input -> C-basis output
  HeckeElement c_to_t(const HeckeElement& x);

  // Export of the full table: a JSON array of {y, w, h, mu} records, words
  // as arrays of generator ids, h in the text rendering of LaurentPoly.
  std::string to_json_string();

  // Lossless internal serialization for the CLI cache.
  std::string to_cache_json();
  static KLTable from_cache_json(const WeylGroup& g, const std::string& text);

 private:
  const WeylGroup* g_;
  std::vector<std::optional<std::map<ElementId, LaurentPoly>>> cols_;
  std::vector<std::optional<HeckeElement>> bar_t_;  // memo of bar(T_w)
  const HeckeElement& bar_t(ElementId w);
  void validate_column(ElementId w, bool check_bar = true);
};

}  // namespace weylcactus

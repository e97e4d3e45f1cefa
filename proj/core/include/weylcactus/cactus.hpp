#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylcactus/cells.hpp"

namespace weylcactus {

struct SigmaValue {
  ElementId image;
  int sign;      // +1 or -1
  int exponent;  // k in the leading coefficient sign * v^k
};

/*
  sigma is the based involution read off from right multiplication by T_{w0}:
  C_w T_{w0} expands in the canonical basis with exactly one term in the
  two-sided cell of w, whose coefficient is +-v^k; every other term lies in a
  strictly lower two-sided cell. Violations throw std::logic_error tagged
  sigma-ambiguity / sigma-non-monomial / sigma-residual, with the offending
  expansion in the message.
*/
SigmaValue sigma(const WeylGroup& g, KLTable& table, const CellData& cd, ElementId w);

// A cactus generator is a connected subdiagram; a word acts right to left.
struct CactusGenerator {
  Subdiagram subdiagram;
};

struct CactusWord {
  std::vector<CactusGenerator> letters;
};

/*
  Shared state for wall-crossing computations on one group: the ambient
  canonical basis table and cells plus lazily built parabolic copies, each a
  full WeylGroup over the induced Cartan matrix with its own table, cells and
  sigma. The wall-crossing through a connected subdiagram D sends
  w = w' w'' (minimal coset representative times parabolic part) to
  w' * sigma_D(w''), with sigma_D computed inside the parabolic copy.
*/
class CactusContext {
 public:
  CactusContext(const WeylGroup& g, KLTable& table, const CellData& cells);

  const WeylGroup& group() const { return *g_; }
  const CellData& cells() const { return *cells_; }
  KLTable& table() const { return *table_; }

  SigmaValue full_sigma(ElementId w);
  ElementId wall_crossing(const Subdiagram& d, ElementId w);

 private:
  struct ParabolicData {
    ParabolicGroup parabolic;
    KLTable table;
    CellData cells;
    std::vector<SigmaValue> sigma_values;
    explicit ParabolicData(ParabolicGroup p);
  };

  ParabolicData& parabolic_for(const Subdiagram& d);

  const WeylGroup* g_;
  KLTable* table_;
  const CellData* cells_;
  std::vector<std::optional<SigmaValue>> full_sigma_;
  std::map<std::vector<int>, std::unique_ptr<ParabolicData>> parabolics_;
};

// Wall-crossing permutations for every connected subdiagram, in the
// connected_subdiagrams() order, plus the leading-coefficient data of the
// full-diagram sigma per element.
struct WallCrossingTable {
  const WeylGroup* group = nullptr;
  std::vector<Subdiagram> generators;
  std::vector<std::vector<ElementId>> permutation;  // [generator][element]
  std::vector<SigmaValue> alpha;                    // full diagram, per element

  int index_of(const Subdiagram& d) const;  // -1 when absent
};

WallCrossingTable build_wall_crossing_table(CactusContext& ctx);

ElementId act(const WallCrossingTable& t, const CactusWord& word, ElementId w);
// the commuting second copy: w -> (wc_D(w^-1))^-1
ElementId act_second_copy(const WallCrossingTable& t, const Subdiagram& d, ElementId w);

struct CheckResult {
  std::string relation;
  std::vector<Subdiagram> diagrams;
  bool pass;
  std::string detail;  // counterexample description when failing
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Defining relations of the action: each generator is an involution,
// generators of disconnected unions commute, and nested subdiagrams D1 in D2
// satisfy wc_D1 wc_D2 = wc_D2 wc_D1*, with D1* the image of D1 under the
// diagram involution of D2.
VerificationReport verify_cactus_relations(const WeylGroup& g, const WallCrossingTable& t);

// Structural properties of the action: right cells are preserved pointwise,
// left cells map onto left cells, two-sided cells are preserved, and the two
// commuting copies of the action commute with each other.
VerificationReport verify_theorem(const WeylGroup& g, const WallCrossingTable& t,
                                  const CellData& cd);

std::vector<std::vector<ElementId>> orbits(const WeylGroup& g, const WallCrossingTable& t);

/*
  Empirical probe, asserted nowhere: for a proper connected subdiagram D,
  expands C_w T_{w_D} in the canonical basis and reports per element whether
  the same-two-sided-cell term is unique, whether its coefficient is a
  monomial, whether the residual terms sit strictly below, and whether the
  term matches the wall-crossing image.
*/
struct ProbeRow {
  ElementId w;
  bool unique_same_cell;
  bool monomial;
  bool residuals_below;
  bool matches_wall_crossing;
};

struct ProbeReport {
  Subdiagram subdiagram;
  std::vector<ProbeRow> rows;
  std::size_t all_true_count() const;
};

ProbeReport probe_parabolic_product(CactusContext& ctx, const WallCrossingTable& t,
                                    const Subdiagram& d);

std::string wall_crossing_to_json_string(const WallCrossingTable& t, const Subdiagram& d);
std::string report_to_json_string(const VerificationReport& report);
std::string orbits_to_json_string(const WeylGroup& g,
                                  const std::vector<std::vector<ElementId>>& orbit_list);
std::string probe_to_json_string(const WeylGroup& g, const ProbeReport& report);

}  // namespace weylcactus

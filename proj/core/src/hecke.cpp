#include "weylcactus/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace weylcactus {

namespace {

const LaurentPoly kZero;

LaurentPoly v_minus_v_inv() {
  LaurentPoly p = LaurentPoly::v(1);
  p -= LaurentPoly::v(-1);
  return p;
}

void check_same_group(const HeckeElement& x, const HeckeElement& y) {
  if (x.group != y.group)
    throw std::invalid_argument("hecke: operands belong to different groups");
}

nlohmann::json word_json(const WeylGroup& g, ElementId w) {
  return nlohmann::json(g.element(w).word);
}

}  // namespace

void HeckeElement::add_term(ElementId w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPoly HeckeElement::coefficient(ElementId w) const {
  auto it = terms.find(w);
  return it == terms.end() ? LaurentPoly() : it->second;
}

std::string HeckeElement::to_string() const {
  if (terms.empty()) return "0";
  const char* tag = basis == HeckeBasis::T ? "T" : "C";
  std::string out;
  for (const auto& [w, p] : terms) {
    if (!out.empty()) out += " + ";
    std::string coeff = p.to_string();
    if (coeff == "1") {
      coeff.clear();
    } else {
      bool atomic = p.terms().size() == 1 && coeff.find(' ') == std::string::npos;
      coeff = atomic ? coeff + "*" : "(" + coeff + ")*";
    }
    out += coeff + tag + "(" + group->word_string(w) + ")";
  }
  return out;
}

HeckeElement t_unit(const WeylGroup& g, ElementId w) {
  HeckeElement x{&g, HeckeBasis::T, {}};
  x.terms.emplace(w, LaurentPoly::one());
  return x;
}

HeckeElement c_unit(const WeylGroup& g, ElementId w) {
  HeckeElement x{&g, HeckeBasis::C, {}};
  x.terms.emplace(w, LaurentPoly::one());
  return x;
}

HeckeElement t_mul_gen_left(int node, const HeckeElement& x) {
  if (x.basis != HeckeBasis::T) throw std::invalid_argument("hecke: T-basis operand required");
  const WeylGroup& g = *x.group;
  HeckeElement out{&g, HeckeBasis::T, {}};
  LaurentPoly q = v_minus_v_inv();
  for (const auto& [w, p] : x.terms) {
    ElementId sw = g.left_mult_gen(w, node);
    if (g.length(sw) > g.length(w)) {
      out.add_term(sw, p);
    } else {
      out.add_term(w, p * q);
      out.add_term(sw, p);
    }
  }
  return out;
}

HeckeElement t_mul_gen_right(const HeckeElement& x, int node) {
  if (x.basis != HeckeBasis::T) throw std::invalid_argument("hecke: T-basis operand required");
  const WeylGroup& g = *x.group;
  HeckeElement out{&g, HeckeBasis::T, {}};
  LaurentPoly q = v_minus_v_inv();
  for (const auto& [w, p] : x.terms) {
    ElementId ws = g.right_mult_gen(w, node);
    if (g.length(ws) > g.length(w)) {
      out.add_term(ws, p);
    } else {
      out.add_term(w, p * q);
      out.add_term(ws, p);
    }
  }
  return out;
}

HeckeElement t_mul(const HeckeElement& x, const HeckeElement& y) {
  check_same_group(x, y);
  if (x.basis != HeckeBasis::T || y.basis != HeckeBasis::T)
    throw std::invalid_argument("hecke: T-basis operands required");
  const WeylGroup& g = *x.group;
  HeckeElement out{&g, HeckeBasis::T, {}};
  for (const auto& [u, p] : x.terms) {
    HeckeElement acc = y;
    const auto& word = g.element(u).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = t_mul_gen_left(*it, acc);
    for (const auto& [w, q] : acc.terms) out.add_term(w, p * q);
  }
  return out;
}

HeckeElement hecke_add(HeckeElement x, const HeckeElement& y) {
  check_same_group(x, y);
  if (x.basis != y.basis) throw std::invalid_argument("hecke: basis mismatch in addition");
  for (const auto& [w, p] : y.terms) x.add_term(w, p);
  return x;
}

HeckeElement hecke_scale(HeckeElement x, const LaurentPoly& p) {
  if (p.is_zero()) return HeckeElement{x.group, x.basis, {}};
  for (auto& [w, q] : x.terms) q *= p;
  return x;
}

namespace {

// bar(T_w) = T_s^-1 bar(T_{sw}) for a left descent... ascent s of sw; memo
// holds one entry per element, filled on demand.
const HeckeElement& bar_t_memo(const WeylGroup& g, ElementId w,
                               std::vector<std::optional<HeckeElement>>& memo) {
  if (memo.size() != g.size()) memo.resize(g.size());
  if (memo[w]) return *memo[w];
  if (w == g.identity()) {
    memo[w] = t_unit(g, w);
    return *memo[w];
  }
  int s = g.descents_left(w).front();
  const HeckeElement& rest = bar_t_memo(g, g.left_mult_gen(w, s), memo);
  // T_s^-1 * x = T_s * x - (v - v^-1) x
  HeckeElement out = t_mul_gen_left(s, rest);
  out = hecke_add(out, hecke_scale(rest, -v_minus_v_inv()));
  memo[w] = std::move(out);
  return *memo[w];
}

}  // namespace

HeckeElement bar_involution(const HeckeElement& x) {
  if (x.basis != HeckeBasis::T) throw std::invalid_argument("hecke: T-basis operand required");
  const WeylGroup& g = *x.group;
  std::vector<std::optional<HeckeElement>> memo;
  HeckeElement out{&g, HeckeBasis::T, {}};
  for (const auto& [w, p] : x.terms) {
    const HeckeElement& bt = bar_t_memo(g, w, memo);
    LaurentPoly pb = p.bar();
    for (const auto& [y, q] : bt.terms) out.add_term(y, pb * q);
  }
  return out;
}

std::map<ElementId, long long> specialize_at_one(const HeckeElement& x) {
  std::map<ElementId, long long> out;
  for (const auto& [w, p] : x.terms) {
    long long c = p.eval_at_one();
    if (c != 0) out[w] = c;
  }
  return out;
}

KLTable::KLTable(const WeylGroup& g) : g_(&g), cols_(g.size()), bar_t_(g.size()) {}

const HeckeElement& KLTable::bar_t(ElementId w) { return bar_t_memo(*g_, w, bar_t_); }

void KLTable::ensure(ElementId w) {
  if (cols_[w]) return;
  const WeylGroup& g = *g_;
  if (w == g.identity()) {
    cols_[w] = std::map<ElementId, LaurentPoly>{{w, LaurentPoly::one()}};
    validate_column(w);
    return;
  }
  int s = g.descents_left(w).front();
  ElementId u = g.left_mult_gen(w, s);
  ensure(u);

  // C_s C_u = (T_s + v^-1) C_u
  HeckeElement cu = kl_element(u);
  HeckeElement prod = hecke_add(t_mul_gen_left(s, cu), hecke_scale(cu, LaurentPoly::v(-1)));

  std::vector<std::pair<ElementId, long long>> corrections;
  for (const auto& [y, hy] : *cols_[u]) {
    long long m = hy.coefficient(-1);
    if (m != 0 && g.has_left_descent(y, s)) corrections.push_back({y, m});
  }
  for (const auto& [y, m] : corrections) {
    ensure(y);
    prod = hecke_add(prod, hecke_scale(kl_element(y), LaurentPoly(-m)));
  }

  cols_[w] = std::move(prod.terms);
  validate_column(w);
}

void KLTable::validate_column(ElementId w, bool check_bar) {
  const WeylGroup& g = *g_;
  const auto& col = *cols_[w];
  auto fail = [&](const std::string& what) {
    throw std::logic_error("canonical basis validation failed for w = " + g.word_string(w) +
                           ": " + what);
  };
  auto top = col.find(w);
  if (top == col.end() || !(top->second == LaurentPoly::one())) fail("h(w, w) is not 1");
  for (const auto& [y, hy] : col) {
    if (y == w) continue;
    if (!g.bruhat_leq(y, w))
      fail("support term " + g.word_string(y) + " is not below w in Bruhat order");
    if (hy.max_exponent() > -1)
      fail("h(" + g.word_string(y) + ", w) = " + hy.to_string() +
           " has exponents outside v^-1 Z[v^-1]");
  }
  if (!check_bar) return;

  HeckeElement cw{g_, HeckeBasis::T, {}};
  cw.terms = col;
  HeckeElement barred{g_, HeckeBasis::T, {}};
  for (const auto& [y, hy] : col) {
    const HeckeElement& bt = bar_t(y);
    LaurentPoly hb = hy.bar();
    for (const auto& [z, q] : bt.terms) barred.add_term(z, hb * q);
  }
  if (!(barred == cw)) fail("element is not bar-invariant");
}

void KLTable::build_all() {
  for (ElementId w = 0; w < g_->size(); ++w) ensure(w);
}

bool KLTable::complete() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.has_value(); });
}

const LaurentPoly& KLTable::h(ElementId y, ElementId w) {
  ensure(w);
  const auto& col = *cols_[w];
  auto it = col.find(y);
  return it == col.end() ? kZero : it->second;
}

long long KLTable::mu(ElementId y, ElementId w) { return h(y, w).coefficient(-1); }

const std::map<ElementId, LaurentPoly>& KLTable::column(ElementId w) {
  ensure(w);
  return *cols_[w];
}

HeckeElement KLTable::kl_element(ElementId w) {
  ensure(w);
  HeckeElement x{g_, HeckeBasis::T, {}};
  x.terms = *cols_[w];
  return x;
}

HeckeElement KLTable::expand_in_c(HeckeElement x) {
  if (x.basis != HeckeBasis::T) throw std::invalid_argument("hecke: T-basis operand required");
  const WeylGroup& g = *g_;
  HeckeElement out{g_, HeckeBasis::C, {}};
  while (!x.terms.empty()) {
    // strip the longest remaining term; C_w = T_w + lower ensures progress
    ElementId w = x.terms.begin()->first;
    for (const auto& [y, p] : x.terms)
      if (g.length(y) > g.length(w) || (g.length(y) == g.length(w) && y > w)) w = y;
    LaurentPoly c = x.terms[w];
    out.add_term(w, c);
    ensure(w);
    for (const auto& [y, hy] : *cols_[w]) x.add_term(y, -(hy * c));
    if (x.terms.count(w)) throw std::logic_error("hecke: expansion failed to eliminate top term");
  }
  return out;
}

HeckeElement KLTable::c_to_t(const HeckeElement& x) {
  if (x.basis != HeckeBasis::C) throw std::invalid_argument("hecke: C-basis operand required");
  HeckeElement out{g_, HeckeBasis::T, {}};
  for (const auto& [w, p] : x.terms) {
    ensure(w);
    for (const auto& [y, hy] : *cols_[w]) out.add_term(y, hy * p);
  }
  return out;
}

std::string KLTable::to_json_string() {
  build_all();
  nlohmann::json records = nlohmann::json::array();
  for (ElementId w = 0; w < g_->size(); ++w)
    for (const auto& [y, hy] : *cols_[w])
      records.push_back({{"y", word_json(*g_, y)},
                         {"w", word_json(*g_, w)},
                         {"h", hy.to_string()},
                         {"mu", hy.coefficient(-1)}});
  return records.dump(2);
}

std::string KLTable::to_cache_json() {
  build_all();
  nlohmann::json cols = nlohmann::json::array();
  for (ElementId w = 0; w < g_->size(); ++w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [y, hy] : *cols_[w]) {
      nlohmann::json poly = nlohmann::json::array();
      for (const auto& [e, c] : hy.terms()) poly.push_back({e, c});
      terms.push_back({y, poly});
    }
    cols.push_back(terms);
  }
  nlohmann::json out{{"cartan", g_->diagram().cartan()},
                     {"order", g_->size()},
                     {"columns", cols}};
  return out.dump();
}

KLTable KLTable::from_cache_json(const WeylGroup& g, const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
    if (in.at("cartan").get<CartanMatrix>() != g.diagram().cartan() ||
        in.at("order").get<std::size_t>() != g.size())
      throw std::invalid_argument("cached table does not match this group");
    KLTable table(g);
    const auto& cols = in.at("columns");
    if (cols.size() != g.size())
      throw std::invalid_argument("cached table has the wrong number of columns");
    for (ElementId w = 0; w < g.size(); ++w) {
      std::map<ElementId, LaurentPoly> col;
      for (const auto& term : cols[w]) {
        ElementId y = term.at(0).get<ElementId>();
        LaurentPoly p;
        for (const auto& t : term.at(1))
          p += LaurentPoly::monomial(t.at(1).get<long long>(), t.at(0).get<int>());
        col.emplace(y, std::move(p));
      }
      table.cols_[w] = std::move(col);
      table.validate_column(w, /*check_bar=*/false);
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table cache: ") + e.what());
  }
}

}  // namespace weylcactus

#include "weylcactus/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace weylcactus {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

WeylGroup::WeylGroup(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.rank();
  const CartanMatrix& a = diagram_.cartan();

  // s_i on simple-root coordinates: only coordinate i changes,
  // c_i -> c_i - sum_j a[i][j] c_j.
  auto reflect = [&](int i, const std::vector<int>& c) {
    std::vector<int> r = c;
    long long pairing = 0;
    for (int j = 0; j < n; ++j) pairing += static_cast<long long>(a[i][j]) * c[j];
    r[i] = static_cast<int>(c[i] - pairing);
    return r;
  };

  // close the simple roots under all reflections
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(all.size()));
    all.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> r = reflect(i, all[k]);
      if (seen.emplace(r, static_cast<int>(all.size())).second) all.push_back(std::move(r));
    }
  }

  // canonical root order: positives by (height, coordinates), negatives paired
  std::vector<std::vector<int>> positives;
  for (const auto& r : all) {
    bool pos = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (pos == neg) throw std::logic_error("coxeter: root with mixed signs");
    if (pos) positives.push_back(r);
  }
  if (2 * positives.size() != all.size())
    throw std::logic_error("coxeter: root set is not symmetric");
  std::sort(positives.begin(), positives.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              int hx = std::accumulate(x.begin(), x.end(), 0);
              int hy = std::accumulate(y.begin(), y.end(), 0);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  n_positive_ = positives.size();
  roots_ = positives;
  for (const auto& r : positives) {
    std::vector<int> m(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
    roots_.push_back(std::move(m));
  }

  std::map<std::vector<int>, std::uint32_t> root_index;
  for (std::size_t i = 0; i < roots_.size(); ++i) root_index.emplace(roots_[i], i);

  std::vector<std::vector<std::uint32_t>> gen_perm(n);
  for (int i = 0; i < n; ++i) {
    gen_perm[i].resize(roots_.size());
    for (std::size_t r = 0; r < roots_.size(); ++r)
      gen_perm[i][r] = root_index.at(reflect(i, roots_[r]));
  }

  auto count_length = [&](const std::vector<std::uint32_t>& perm) {
    int len = 0;
    for (std::size_t r = 0; r < n_positive_; ++r)
      if (perm[r] >= n_positive_) ++len;
    return len;
  };

  // breadth-first enumeration; new elements always extend a reduced word
  std::unordered_map<std::vector<std::uint32_t>, ElementId, PermHash> ids;
  WeylElement id_elem;
  id_elem.root_perm.resize(roots_.size());
  std::iota(id_elem.root_perm.begin(), id_elem.root_perm.end(), 0u);
  ids.emplace(id_elem.root_perm, 0);
  elements_.push_back(std::move(id_elem));

  for (ElementId w = 0; w < elements_.size(); ++w) {
    right_mult_.resize((w + 1) * n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint32_t> p(roots_.size());
      for (std::size_t r = 0; r < roots_.size(); ++r)
        p[r] = elements_[w].root_perm[gen_perm[i][r]];
      auto [it, fresh] = ids.emplace(p, static_cast<ElementId>(elements_.size()));
      if (fresh) {
        WeylElement e;
        e.root_perm = std::move(p);
        e.length = count_length(e.root_perm);
        if (e.length != elements_[w].length + 1)
          throw std::logic_error("coxeter: breadth-first search found a non-extending word");
        e.word = elements_[w].word;
        e.word.push_back(i + 1);
        elements_.push_back(std::move(e));
      }
      right_mult_[w * n + i] = it->second;
    }
  }

  inverse_.resize(elements_.size());
  for (ElementId w = 0; w < elements_.size(); ++w) {
    ElementId x = 0;
    const auto& word = elements_[w].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      x = right_mult_[x * n + (*it - 1)];
    inverse_[w] = x;
    if (elements_[x].length != elements_[w].length)
      throw std::logic_error("coxeter: inverse length mismatch");
  }

  left_mult_.resize(elements_.size() * n);
  left_desc_.resize(elements_.size());
  right_desc_.resize(elements_.size());
  for (ElementId w = 0; w < elements_.size(); ++w) {
    for (int i = 0; i < n; ++i) {
      ElementId sw = inverse_[right_mult_[inverse_[w] * n + i]];
      left_mult_[w * n + i] = sw;
      if (elements_[sw].length < elements_[w].length) left_desc_[w] |= 1u << i;
      if (elements_[right_mult_[w * n + i]].length < elements_[w].length)
        right_desc_[w] |= 1u << i;
    }
  }

  ElementId top = 0;
  int found = 0;
  for (ElementId w = 0; w < elements_.size(); ++w)
    if (elements_[w].length == static_cast<int>(n_positive_)) {
      top = w;
      ++found;
    }
  if (found != 1) throw std::logic_error("coxeter: longest element is not unique");
  longest_ = top;
}

ElementId WeylGroup::generator(int node) const {
  if (node < 1 || node > rank())
    throw std::invalid_argument("generator node " + std::to_string(node) + " is outside 1.." +
                                std::to_string(rank()));
  return right_mult_[0 * rank() + (node - 1)];
}

ElementId WeylGroup::right_mult_gen(ElementId a, int node) const {
  return right_mult_[a * rank() + (node - 1)];
}

ElementId WeylGroup::left_mult_gen(ElementId a, int node) const {
  return left_mult_[a * rank() + (node - 1)];
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  ElementId x = a;
  for (int s : elements_[b].word) x = right_mult_[x * rank() + (s - 1)];
  return x;
}

bool WeylGroup::has_left_descent(ElementId a, int node) const {
  return left_desc_[a] & (1u << (node - 1));
}

bool WeylGroup::has_right_descent(ElementId a, int node) const {
  return right_desc_[a] & (1u << (node - 1));
}

std::vector<int> WeylGroup::descents_left(ElementId a) const {
  std::vector<int> out;
  for (int i = 1; i <= rank(); ++i)
    if (has_left_descent(a, i)) out.push_back(i);
  return out;
}

std::vector<int> WeylGroup::descents_right(ElementId a) const {
  std::vector<int> out;
  for (int i = 1; i <= rank(); ++i)
    if (has_right_descent(a, i)) out.push_back(i);
  return out;
}

bool WeylGroup::bruhat_leq(ElementId y, ElementId w) const {
  // peel left descents of w; y <= w iff sy <= sw when sy < y, else y <= sw
  while (true) {
    if (y == 0) return true;
    if (length(y) >= length(w)) return y == w;
    int s = std::countr_zero(left_desc_[w]) + 1;  // smallest left descent
    if (has_left_descent(y, s)) y = left_mult_gen(y, s);
    w = left_mult_gen(w, s);
  }
}

ElementId WeylGroup::longest_element(const Subdiagram& d) const {
  ElementId w = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : d.nodes) {
      if (!has_right_descent(w, s)) {
        w = right_mult_gen(w, s);
        moved = true;
      }
    }
  }
  return w;
}

CosetDecomposition WeylGroup::coset_decompose(ElementId w, const Subdiagram& d) const {
  std::vector<int> peeled;
  ElementId rep = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : d.nodes)
      if (has_right_descent(rep, s)) {
        rep = right_mult_gen(rep, s);
        peeled.push_back(s);
        moved = true;
        break;
      }
  }
  ElementId part = 0;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it)
    part = right_mult_gen(part, *it);
  return {rep, part};
}

std::map<int, int> WeylGroup::diagram_involution(const Subdiagram& d) const {
  if (!d.connected)
    throw std::invalid_argument("diagram_involution requires a connected subdiagram");
  ElementId w0d = longest_element(d);
  std::map<int, int> out;
  for (int i : d.nodes) {
    ElementId conj = multiply(multiply(w0d, generator(i)), w0d);
    int image = 0;
    for (int j : d.nodes)
      if (conj == generator(j)) image = j;
    if (image == 0)
      throw std::logic_error("diagram involution: conjugate of generator " + std::to_string(i) +
                             " is not a generator of the subdiagram");
    out[i] = image;
  }
  return out;
}

ElementId WeylGroup::element_from_word(const std::vector<int>& word) const {
  ElementId x = 0;
  for (int s : word) {
    if (s < 1 || s > rank())
      throw std::invalid_argument("word letter " + std::to_string(s) + " is outside 1.." +
                                  std::to_string(rank()));
    x = right_mult_gen(x, s);
  }
  return x;
}

std::string WeylGroup::word_string(ElementId w) const {
  const auto& word = elements_[w].word;
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word[i]);
  }
  return s;
}

ParabolicGroup make_parabolic(const WeylGroup& g, const Subdiagram& d) {
  if (d.empty()) throw std::invalid_argument("parabolic subgroup of an empty subdiagram");
  ParabolicGroup p{WeylGroup(DynkinDiagram::from_cartan(g.diagram().induced_cartan(d.nodes))),
                   d.nodes,
                   {}};
  p.to_ambient.resize(p.group.size());
  for (ElementId w = 0; w < p.group.size(); ++w) {
    ElementId x = 0;
    for (int s : p.group.element(w).word) x = g.right_mult_gen(x, p.ambient_nodes[s - 1]);
    p.to_ambient[w] = x;
    if (g.length(x) != p.group.length(w))
      throw std::logic_error("parabolic embedding is not length preserving");
  }
  return p;
}

ElementId ParabolicGroup::from_ambient(const WeylGroup& ambient, ElementId w) const {
  ElementId x = 0;
  for (int s : ambient.element(w).word) {
    auto it = std::find(ambient_nodes.begin(), ambient_nodes.end(), s);
    if (it == ambient_nodes.end())
      throw std::invalid_argument("element " + ambient.word_string(w) +
                                  " does not lie in the parabolic subgroup");
    x = group.right_mult_gen(x, static_cast<int>(it - ambient_nodes.begin()) + 1);
  }
  return x;
}

}  // namespace weylcactus

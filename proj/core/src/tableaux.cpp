#include "weylcactus/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylcactus {

namespace {

void require_permutation(const std::vector<int>& oneline) {
  std::vector<bool> seen(oneline.size(), false);
  for (int x : oneline) {
    if (x < 1 || x > static_cast<int>(oneline.size()) || seen[x - 1])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[x - 1] = true;
  }
}

}  // namespace

std::size_t Tableau::size() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

bool is_standard(const Tableau& t) {
  std::size_t n = t.size();
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      int x = row[c];
      if (x < 1 || x > static_cast<int>(n) || seen[x - 1]) return false;
      seen[x - 1] = true;
      if (c > 0 && row[c - 1] >= x) return false;
      if (r > 0 && t.rows[r - 1][c] >= x) return false;
    }
  }
  return true;
}

RSKPair rsk(const std::vector<int>& oneline) {
  require_permutation(oneline);
  Tableau p, q;
  for (std::size_t step = 0; step < oneline.size(); ++step) {
    int x = oneline[step];
    std::size_t r = 0;
    while (true) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);  // bump the smallest entry greater than x
      ++r;
    }
  }
  return {p, q};
}

std::vector<int> rsk_inverse(const RSKPair& pair) {
  if (!is_standard(pair.p) || !is_standard(pair.q) || pair.p.shape() != pair.q.shape())
    throw std::invalid_argument("rsk_inverse requires standard tableaux of equal shape");
  Tableau p = pair.p;
  std::size_t n = p.size();
  std::vector<int> out(n);
  for (int k = static_cast<int>(n); k >= 1; --k) {
    // k sits at an outer corner of q; reverse the insertion from there
    std::size_t r = 0;
    std::size_t c = 0;
    bool found = false;
    for (std::size_t i = 0; i < pair.q.rows.size() && !found; ++i)
      for (std::size_t j = 0; j < pair.q.rows[i].size() && !found; ++j)
        if (pair.q.rows[i][j] == k) {
          r = i;
          c = j;
          found = true;
        }
    int x = p.rows[r][c];
    p.rows[r].pop_back();
    if (p.rows[r].empty()) p.rows.erase(p.rows.begin() + r);
    for (std::size_t i = r; i-- > 0;) {
      // the rightmost entry smaller than x is the one that bumped it
      auto& row = p.rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    out[k - 1] = x;
  }
  return out;
}

Tableau evacuation(const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("evacuation requires a standard tableau");
  std::size_t n = t.size();
  Tableau work = t;
  Tableau out;
  out.rows.resize(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) out.rows[r].resize(t.rows[r].size(), 0);

  for (std::size_t step = 1; step <= n; ++step) {
    // delete the top-left entry, slide the hole to an outer corner
    std::size_t r = 0, c = 0;
    while (true) {
      bool has_right = c + 1 < work.rows[r].size();
      bool has_below = r + 1 < work.rows.size() && c < work.rows[r + 1].size();
      if (!has_right && !has_below) break;
      if (!has_below || (has_right && work.rows[r][c + 1] < work.rows[r + 1][c])) {
        work.rows[r][c] = work.rows[r][c + 1];
        ++c;
      } else {
        work.rows[r][c] = work.rows[r + 1][c];
        ++r;
      }
    }
    out.rows[r][c] = static_cast<int>(n - step + 1);
    work.rows[r].pop_back();
    if (work.rows[r].empty()) work.rows.erase(work.rows.begin() + r);
  }
  return out;
}

bool knuth_related(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) diff.push_back(i);
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return false;
  std::size_t p = diff[0];
  if (a[p] != b[p + 1] || a[p + 1] != b[p]) return false;
  int x = std::min(a[p], a[p + 1]);
  int z = std::max(a[p], a[p + 1]);
  // witness strictly between the swapped values, right of or left of the pair
  bool right = p + 2 < a.size() && x < a[p + 2] && a[p + 2] < z;
  bool left = p >= 1 && x < a[p - 1] && a[p - 1] < z;
  return right || left;
}

std::vector<int> weyl_to_oneline(const WeylGroup& g, ElementId w) {
  if (!g.diagram().is_type_a())
    throw std::invalid_argument("one-line bridge requires the type A path labelling");
  int n = g.rank() + 1;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  const auto& word = g.element(w).word;
  if (kOneLineConvention == OneLineConvention::first_letter_outermost) {
    for (int s : word) std::swap(line[s - 1], line[s]);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) std::swap(line[*it - 1], line[*it]);
  }
  return line;
}

ElementId oneline_to_weyl(const WeylGroup& g, const std::vector<int>& oneline) {
  if (!g.diagram().is_type_a())
    throw std::invalid_argument("one-line bridge requires the type A path labelling");
  if (oneline.size() != static_cast<std::size_t>(g.rank()) + 1)
    throw std::invalid_argument("one-line length does not match the group rank");
  require_permutation(oneline);
  std::vector<int> line = oneline;
  std::vector<int> reversed_word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        reversed_word.push_back(static_cast<int>(i) + 1);
        moved = true;
        break;
      }
  }
  std::vector<int> word(reversed_word.rbegin(), reversed_word.rend());
  if (kOneLineConvention == OneLineConvention::last_letter_outermost)
    std::reverse(word.begin(), word.end());
  return g.element_from_word(word);
}

std::string tableau_to_text(const Tableau& t) {
  int width = 1;
  for (const auto& row : t.rows)
    for (int x : row) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string s = std::to_string(row[c]);
      if (c) out += " ";
      out += std::string(width - s.size(), ' ') + s;
    }
    out += "\n";
  }
  return out;
}

}  // namespace weylcactus

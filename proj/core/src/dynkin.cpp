#include "weylcactus/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylcactus {

namespace {

std::string node_set_string(const std::vector<int>& nodes) {
  std::string s = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i]);
  }
  return s + "}";
}

// Determinant of a small integer matrix by fraction-free elimination.
// Entries stay exact; sizes here are bounded by the diagram rank.
long long int_determinant(std::vector<std::vector<long long>> m) {
  std::size_t n = m.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

// A valid crystallographic Cartan matrix is symmetrizable: there are
// positive weights d_i with d_i a_ij = d_j a_ji. Returns the weights as
// integer numerator/denominator pairs, or throws if no consistent choice
// exists (connected components are scaled independently).
std::vector<std::pair<long long, long long>> symmetrizer(const CartanMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::pair<long long, long long>> d(n, {0, 1});
  for (int start = 0; start < n; ++start) {
    if (d[start].first != 0) continue;
    d[start] = {1, 1};
    std::vector<int> queue = {start};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        // d_j = d_i * a_ij / a_ji, both entries negative here
        long long num = d[i].first * a[i][j];
        long long den = d[i].second * a[j][i];
        if (den < 0) num = -num, den = -den;
        long long g = std::gcd(std::abs(num), den);
        if (g) num /= g, den /= g;
        if (d[j].first == 0) {
          d[j] = {num, den};
          queue.push_back(j);
        } else if (d[j].first * den != num * d[j].second) {
          throw std::invalid_argument(
              "cartan matrix is not symmetrizable (inconsistent bond ratios around a cycle)");
        }
      }
    }
  }
  return d;
}

}  // namespace

bool Subdiagram::contains(int node) const {
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

DynkinDiagram DynkinDiagram::from_cartan(CartanMatrix cartan, std::string name) {
  int n = static_cast<int>(cartan.size());
  if (n == 0) throw std::invalid_argument("cartan matrix is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n)
      throw std::invalid_argument("cartan matrix is not square");
    if (cartan[i][i] != 2)
      throw std::invalid_argument("cartan matrix diagonal entry at node " +
                                  std::to_string(i + 1) + " is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw std::invalid_argument("cartan matrix off-diagonal entry (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is positive");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::invalid_argument("cartan matrix zero pattern is not symmetric at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }

  // Positive definiteness of the symmetrization, checked exactly via leading
  // principal minors. This is what separates finite from affine/indefinite.
  auto d = symmetrizer(cartan);
  long long den_lcm = 1;
  for (auto& [num, den] : d) den_lcm = std::lcm(den_lcm, den);
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<long long>> s(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        s[i][j] = d[i].first * (den_lcm / d[i].second) * cartan[i][j];
    if (int_determinant(std::move(s)) <= 0) {
      std::vector<int> nodes(k);
      std::iota(nodes.begin(), nodes.end(), 1);
      throw std::invalid_argument("cartan matrix is not finite type: principal minor on nodes " +
                                  node_set_string(nodes) + " is not positive");
    }
  }

  DynkinDiagram g;
  g.cartan_ = std::move(cartan);
  g.name_ = std::move(name);
  return g;
}

DynkinDiagram DynkinDiagram::from_name(const std::string& name) {
  if (name.size() < 2 || name[0] < 'A' || name[0] > 'G')
    throw std::invalid_argument("unrecognized group name '" + name + "'");
  char family = name[0];
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw std::invalid_argument("unrecognized group name '" + name + "'");
    n = n * 10 + (name[i] - '0');
    if (n > 64) throw std::invalid_argument("rank out of range in '" + name + "'");
  }
  if (n == 0 || name[1] == '0')
    throw std::invalid_argument("unrecognized group name '" + name + "'");

  auto path = [&](int len) {
    CartanMatrix a(len, std::vector<int>(len, 0));
    for (int i = 0; i < len; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < len; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };

  CartanMatrix a;
  switch (family) {
    case 'A':
      a = path(n);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B requires rank >= 2");
      a = path(n);
      a[n - 1][n - 2] = -2;  // last simple root short
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C requires rank >= 2");
      a = path(n);
      a[n - 2][n - 1] = -2;  // last simple root long
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D requires rank >= 3");
      a = path(n);
      a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;  // fork at node n-2
      break;
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("E requires rank 6, 7 or 8");
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      a = CartanMatrix(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto bond = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw std::invalid_argument("F requires rank 4");
      a = path(4);
      a[2][1] = -2;  // middle double bond
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G requires rank 2");
      a = {{2, -1}, {-3, 2}};
      break;
    default:
      throw std::invalid_argument("unrecognized group name '" + name + "'");
  }
  return from_cartan(std::move(a), name);
}

Subdiagram DynkinDiagram::subdiagram(std::vector<int> nodes) const {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int v : nodes)
    if (v < 1 || v > rank())
      throw std::invalid_argument("subdiagram node " + std::to_string(v) +
                                  " is outside 1.." + std::to_string(rank()));
  Subdiagram d;
  d.nodes = std::move(nodes);

  // connectivity of the induced subgraph
  if (!d.nodes.empty()) {
    std::vector<int> seen = {d.nodes[0]};
    std::vector<int> queue = {d.nodes[0]};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j : d.nodes)
        if (bonded(i, j) && std::find(seen.begin(), seen.end(), j) == seen.end()) {
          seen.push_back(j);
          queue.push_back(j);
        }
    }
    d.connected = seen.size() == d.nodes.size();
  }
  return d;
}

Subdiagram DynkinDiagram::full_subdiagram() const {
  std::vector<int> nodes(rank());
  std::iota(nodes.begin(), nodes.end(), 1);
  return subdiagram(std::move(nodes));
}

std::vector<Subdiagram> DynkinDiagram::connected_subdiagrams() const {
  std::vector<Subdiagram> out;
  int n = rank();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    Subdiagram d = subdiagram(std::move(nodes));
    if (d.connected) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Subdiagram& a, const Subdiagram& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.nodes < b.nodes;
  });
  return out;
}

CartanMatrix DynkinDiagram::induced_cartan(const std::vector<int>& nodes) const {
  CartanMatrix a(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) a[i][j] = entry(nodes[i], nodes[j]);
  return a;
}

bool DynkinDiagram::is_type_a() const {
  int n = rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (entry(i, j) != want) return false;
    }
  return true;
}

}  // namespace weylcactus

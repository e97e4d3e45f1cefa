#include "weylcactus/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weylcactus {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("laurent: coefficient addition overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("laurent: coefficient multiplication overflow");
  return r;
}

int checked_exp_add(int a, int b) {
  long long r = static_cast<long long>(a) + b;
  if (r < INT32_MIN || r > INT32_MAX)
    throw std::overflow_error("laurent: exponent overflow");
  return static_cast<int>(r);
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

long long LaurentPoly::eval_at_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("laurent: min_exponent of zero");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("laurent: max_exponent of zero");
  return terms_.back().first;
}

std::optional<std::pair<int, int>> LaurentPoly::is_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = terms_.front();
  if (c != 1 && c != -1) return std::nullopt;
  return std::make_pair(c > 0 ? 1 : -1, e);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

LaurentPoly LaurentPoly::shifted(long long coeff, int exponent) const {
  LaurentPoly r;
  if (coeff == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    r.terms_.push_back({checked_exp_add(e, exponent), checked_mul(c, coeff)});
  return r;
}

void LaurentPoly::normalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      long long c = checked_add(a->second, b->second);
      if (c != 0) merged.push_back({a->first, c});
      ++a, ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    if (c == INT64_MIN) throw std::overflow_error("laurent: negation overflow");
    r.terms_.push_back({e, -c});
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, long long> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long long& slot = acc[checked_exp_add(ea, eb)];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  LaurentPoly r;
  r.terms_.assign(acc.begin(), acc.end());
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    bool first = out.empty();
    bool neg = c < 0;
    unsigned long long mag =
        neg ? ~static_cast<unsigned long long>(c) + 1ULL : static_cast<unsigned long long>(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string coeff = std::to_string(mag);
    if (e == 0) {
      out += coeff;
    } else {
      if (mag != 1) out += coeff + "*";
      out += (e == 1) ? "v" : "v^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace weylcactus

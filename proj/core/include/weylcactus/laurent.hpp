#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylcactus {

/*
  Integer Laurent polynomials in one variable v.

  Terms are kept sorted by ascending exponent with no zero coefficients, so
  equality is structural. Coefficient arithmetic is checked: an operation that
  would overflow long long throws std::overflow_error instead of wrapping.
*/
class LaurentPoly {
 public:
  using Term = std::pair<int, long long>;  // (exponent, coefficient)

  LaurentPoly() = default;  // zero
  explicit LaurentPoly(long long constant);
  static LaurentPoly monomial(long long coeff, int exponent);
  static LaurentPoly one() { return LaurentPoly(1); }
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int exponent) const;
  long long eval_at_one() const;
  int min_exponent() const;  // pre: nonzero
  int max_exponent() const;  // pre: nonzero

  // (sign, k) iff the polynomial is exactly +v^k or -v^k.
  std::optional<std::pair<int, int>> is_monomial() const;

  LaurentPoly bar() const;  // v -> v^-1

  // this * coeff * v^exponent, cheaper than a general product
  LaurentPoly shifted(long long coeff, int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Terms joined by " + "/" - " in descending exponent order, e.g.
  // "v - v^-1", "1 + v^-2", "2*v^3". Zero renders as "0".
  std::string to_string() const;

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace weylcactus

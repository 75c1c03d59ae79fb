#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "bipknot/int_poly.hpp"

namespace bipknot {

// Exact element of Z[t, t^-1].  Only nonzero coefficients are stored;
// the zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) {  // NOLINT: implicit for ring-generic code
    if (c != 0) c_[0] = c;
  }
  static LaurentPoly constant(const Int& c);
  static LaurentPoly monomial(const Int& c, int exp);
  static LaurentPoly t(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  int lowest_exp() const;   // pre: nonzero
  int highest_exp() const;  // pre: nonzero
  Int coeff(int exp) const;
  const std::map<int, Int>& terms() const { return c_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  bool operator==(const LaurentPoly& q) const { return c_ == q.c_; }
  bool operator!=(const LaurentPoly& q) const { return c_ != q.c_; }
  bool operator<(const LaurentPoly& q) const;  // total order, for map keys

  LaurentPoly shifted(int k) const;  // multiply by t^k

  // p(t) == p(t^-1), i.e. the coefficient map is symmetric under
  // exponent negation.  Zero counts as symmetric.
  bool is_symmetric() const;

  // Exact evaluation at a nonzero rational point.
  Rat eval(const Rat& t0) const;

  // ASCII form like "t^-2 - 3 + 2*t", terms by increasing exponent.
  std::string render() const;
  // Inverse of render; also accepts reasonable spacing variants.
  // Throws std::invalid_argument on malformed input.
  static LaurentPoly parse(const std::string& text);

  void add_term(int exp, const Int& c);  // accumulate, dropping zeros

 private:
  std::map<int, Int> c_;
};

// +-t^m * p normalized so the lowest exponent is 0 and the lowest
// coefficient is positive.  Two Laurent polynomials are associates
// (equal up to a unit +-t^m) iff their canonical forms are equal.
// Throws std::invalid_argument on zero input.
LaurentPoly canonical_unit_form(const LaurentPoly& p);

// p(t + t^-1 - 2): the image of p under x = z^2 = t + t^-1 - 2.
LaurentPoly substitute_z2(const IntPoly& p);

// Exact inverse of substitute_z2 on its image; nullopt when p is not
// of the form q(t + t^-1 - 2).
std::optional<IntPoly> extract_z2(const LaurentPoly& p);

}  // namespace bipknot

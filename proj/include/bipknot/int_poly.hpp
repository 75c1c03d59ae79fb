#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace bipknot {

using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial over Z, lowest degree first.  The leading stored
// coefficient is nonzero unless the polynomial is zero (empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(int c) {  // NOLINT: implicit for ring-generic code
    if (c != 0) c_.push_back(c);
  }
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, int deg);
  static IntPoly x(int deg = 1) { return monomial(1, deg); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& coeff(int d) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  IntPoly& operator+=(const IntPoly& q) { return *this = *this + q; }
  IntPoly& operator-=(const IntPoly& q) { return *this = *this - q; }
  IntPoly& operator*=(const IntPoly& q) { return *this = *this * q; }

  bool operator==(const IntPoly& q) const { return c_ == q.c_; }
  bool operator!=(const IntPoly& q) const { return c_ != q.c_; }
  bool operator<(const IntPoly& q) const;  // total order, for map keys

  Int eval(const Int& x0) const;

  // Quotient and remainder by a divisor with leading coefficient +-1.
  std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& d) const;

  // Exact division; throws std::domain_error if the division is not exact.
  IntPoly divexact(const IntPoly& d) const;

  std::string render(const std::string& var = "x") const;

 private:
  std::vector<Int> c_;
  void trim();
};

}  // namespace bipknot

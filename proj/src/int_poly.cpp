#include "bipknot/int_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bipknot {

namespace {
const Int kZero = 0;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::monomial(const Int& c, int deg) {
  if (deg < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
  IntPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, 0);
    p.c_.back() = c;
  }
  return p;
}

const Int& IntPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(d)];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  IntPoly r;
  r.c_.resize(std::max(p.c_.size(), q.c_.size()), 0);
  for (size_t i = 0; i < p.c_.size(); ++i) r.c_[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) r.c_[i] += q.c_[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  IntPoly r;
  if (p.is_zero() || q.is_zero()) return r;
  r.c_.assign(p.c_.size() + q.c_.size() - 1, 0);
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) r.c_[i + j] += p.c_[i] * q.c_[j];
  r.trim();
  return r;
}

bool IntPoly::operator<(const IntPoly& q) const {
  if (c_.size() != q.c_.size()) return c_.size() < q.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != q.c_[i]) return c_[i] < q.c_[i];
  return false;
}

Int IntPoly::eval(const Int& x0) const {
  Int acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
  return acc;
}

std::pair<IntPoly, IntPoly> IntPoly::divrem_monic(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("IntPoly::divrem_monic: zero divisor");
  const Int& lead = d.c_.back();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("IntPoly::divrem_monic: divisor not monic up to sign");
  IntPoly rem = *this;
  IntPoly quot;
  int dd = d.degree();
  if (rem.degree() >= dd)
    quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, 0);
  while (rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Int q = rem.c_.back() / lead;
    quot.c_[static_cast<size_t>(k)] = q;
    rem -= IntPoly::monomial(q, k) * d;
  }
  quot.trim();
  return {quot, rem};
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly::divexact: zero divisor");
  if (is_zero()) return IntPoly();
  IntPoly rem = *this;
  IntPoly quot;
  int dd = d.degree();
  const Int& lead = d.c_.back();
  if (rem.degree() < dd) throw std::domain_error("IntPoly::divexact: not divisible");
  quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, 0);
  while (!rem.is_zero()) {
    if (rem.degree() < dd || rem.c_.back() % lead != 0)
      throw std::domain_error("IntPoly::divexact: not divisible");
    int k = rem.degree() - dd;
    Int q = rem.c_.back() / lead;
    quot.c_[static_cast<size_t>(k)] = q;
    rem -= IntPoly::monomial(q, k) * d;
  }
  quot.trim();
  return quot;
}

std::string IntPoly::render(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << var;
      if (i != 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace bipknot

#include "bipknot/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bipknot {

LaurentPoly LaurentPoly::constant(const Int& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Int& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

int LaurentPoly::lowest_exp() const {
  if (c_.empty()) throw std::invalid_argument("lowest_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::highest_exp() const {
  if (c_.empty()) throw std::invalid_argument("highest_exp of zero polynomial");
  return c_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  Int& slot = c_[exp];
  slot += c;
  if (slot == 0) c_.erase(exp);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [e, c] : q.c_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [e, c] : q.c_) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.c_)
    for (const auto& [e2, c2] : q.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

bool LaurentPoly::operator<(const LaurentPoly& q) const {
  return c_ < q.c_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : c_)
    if (coeff(-e) != c) return false;
  return true;
}

Rat LaurentPoly::eval(const Rat& t0) const {
  if (t0 == 0) throw std::invalid_argument("LaurentPoly::eval at t = 0");
  Rat acc = 0;
  for (const auto& [e, c] : c_) {
    Rat power = 1;
    Rat base = e >= 0 ? t0 : Rat(1) / t0;
    for (int i = 0; i < std::abs(e); ++i) power *= base;
    acc += Rat(c) * power;
  }
  acc.canonicalize();
  return acc;
}

std::string LaurentPoly::render() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    if (e == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("malformed Laurent polynomial: \"" + text + "\"");
}

int parse_int(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) ++cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == start || (cur.i == start + 1 && !std::isdigit(static_cast<unsigned char>(cur.s[start]))))
    bad(cur.s);
  return std::stoi(cur.s.substr(start, cur.i - start));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor cur{text};
  LaurentPoly result;
  bool any = false;
  while (!cur.done()) {
    int sign = 1;
    cur.skip_ws();
    if (cur.s[cur.i] == '+' || cur.s[cur.i] == '-') {
      if (cur.s[cur.i] == '-') sign = -1;
      ++cur.i;
      cur.skip_ws();
    } else if (any) {
      bad(text);  // terms must be joined by + or -
    }
    if (cur.i >= cur.s.size()) bad(text);

    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
      size_t start = cur.i;
      while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
      coeff = Int(cur.s.substr(start, cur.i - start));
      have_coeff = true;
      cur.skip_ws();
      if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
        ++cur.i;
        cur.skip_ws();
      }
    }
    int exp = 0;
    if (cur.i < cur.s.size() && cur.s[cur.i] == 't') {
      ++cur.i;
      exp = 1;
      if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
        ++cur.i;
        exp = parse_int(cur);
      }
    } else if (!have_coeff) {
      bad(text);
    }
    result.add_term(exp, sign * coeff);
    any = true;
  }
  if (!any) bad(text);
  return result;
}

LaurentPoly canonical_unit_form(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("canonical_unit_form of zero polynomial");
  LaurentPoly r = p.shifted(-p.lowest_exp());
  if (r.coeff(0) < 0) r = -r;
  return r;
}

LaurentPoly substitute_z2(const IntPoly& p) {
  LaurentPoly z2;
  z2.add_term(1, 1);
  z2.add_term(-1, 1);
  z2.add_term(0, -2);
  LaurentPoly acc;
  LaurentPoly power = LaurentPoly::constant(1);
  for (int d = 0; d <= p.degree(); ++d) {
    acc += LaurentPoly::constant(p.coeff(d)) * power;
    power *= z2;
  }
  return acc;
}

std::optional<IntPoly> extract_z2(const LaurentPoly& p) {
  if (!p.is_symmetric()) return std::nullopt;
  // Peel the leading symmetric monomial: subtract c*(t + t^-1 - 2)^d
  // with d the highest exponent, until nothing remains.
  LaurentPoly rest = p;
  std::vector<Int> coeffs;
  while (!rest.is_zero()) {
    int d = rest.highest_exp();
    if (d < 0) return std::nullopt;
    Int c = rest.coeff(d);
    if (static_cast<int>(coeffs.size()) < d + 1) coeffs.resize(static_cast<size_t>(d) + 1, 0);
    coeffs[static_cast<size_t>(d)] = c;
    rest -= LaurentPoly::constant(c) * substitute_z2(IntPoly::x(d));
    if (!rest.is_zero() && rest.highest_exp() >= d) return std::nullopt;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace bipknot
